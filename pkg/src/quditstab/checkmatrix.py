"""Parity-check presentations of qudit stabilizer groups.

A presentation is a k x 2n matrix over Z_D (X exponents left, Z exponents
right, one generator per row) plus a length-k phase vector. Phases are part
of the data and are tracked exactly through every operation; dropping them
changes the group.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import pauli as pl
from . import snf
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InternalError,
    InvalidStabilizer,
    NotAUnit,
    TooManyGenerators,
)
from .modring import check_modulus, is_unit


class StabilizerPresentation:
    """Immutable parity-check matrix plus phase vector.

    Attributes:
        D: qudit dimension.
        n: qudit count.
        k: number of generator rows, 1 <= k <= 2n.
        matrix: k x 2n int64 array, columns [0, n) are X powers, [n, 2n) Z powers.
        phases: length-k int64 array of phase exponents.
    """

    __slots__ = ("D", "n", "k", "matrix", "phases")

    def __init__(self, D: int, n: int, matrix, phases):
        D = check_modulus(D)
        n = int(n)
        if n < 1:
            raise ValueError(f"need at least one qudit, got n={n}")
        matrix = np.asarray(matrix, dtype=np.int64) % D
        phases = np.asarray(phases, dtype=np.int64) % D
        if matrix.ndim != 2 or matrix.shape[1] != 2 * n:
            raise ValueError(f"matrix must be k x {2 * n}")
        k = matrix.shape[0]
        if k < 1:
            raise ValueError("need at least one generator row")
        if k > 2 * n:
            raise TooManyGenerators(f"{k} generators exceed the 2n = {2 * n} bound")
        if phases.shape != (k,):
            raise ValueError(f"phases must have length {k}")
        matrix = np.ascontiguousarray(matrix)
        phases = np.ascontiguousarray(phases)
        matrix.flags.writeable = False
        phases.flags.writeable = False
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "phases", phases)

    def __setattr__(self, name, value):
        raise AttributeError("StabilizerPresentation is immutable")

    @property
    def xblock(self) -> np.ndarray:
        return self.matrix[:, : self.n]

    @property
    def zblock(self) -> np.ndarray:
        return self.matrix[:, self.n :]

    def generator(self, i: int) -> pl.PauliProduct:
        self._check_row(i)
        return pl.PauliProduct(
            self.D, self.n, int(self.phases[i]), self.matrix[i, : self.n], self.matrix[i, self.n :]
        )

    def _check_row(self, i: int) -> None:
        if not 0 <= i < self.k:
            raise IndexOutOfRange(f"row {i} out of range 0..{self.k - 1}")

    def _replace_rows(self, updates: dict[int, pl.PauliProduct]) -> "StabilizerPresentation":
        matrix = self.matrix.copy()
        phases = self.phases.copy()
        for i, p in updates.items():
            matrix[i, : self.n] = p.xvec
            matrix[i, self.n :] = p.zvec
            phases[i] = p.phase
        return StabilizerPresentation(self.D, self.n, matrix, phases)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StabilizerPresentation):
            return NotImplemented
        return (
            self.D == other.D
            and self.n == other.n
            and np.array_equal(self.matrix, other.matrix)
            and np.array_equal(self.phases, other.phases)
        )

    def __hash__(self) -> int:
        return hash((self.D, self.n, self.matrix.tobytes(), self.phases.tobytes()))

    def __repr__(self) -> str:
        gens = ", ".join(pl.format_pauli(self.generator(i)) for i in range(self.k))
        return f"StabilizerPresentation(D={self.D}, n={self.n}, <{gens}>)"


@dataclass
class ValidityReport:
    """Outcome of is_valid with diagnostics.

    offending_pair: indices of the first non-commuting generator pair.
    offending_combo: exponent vector a with prod g_i^{a_i} a nonzero phase
    times identity.
    """

    commuting: bool
    phase_consistent: bool
    offending_pair: tuple[int, int] | None = None
    offending_combo: np.ndarray | None = None

    @property
    def valid(self) -> bool:
        return self.commuting and self.phase_consistent

    def __bool__(self) -> bool:
        return self.valid


def from_generators(gens) -> StabilizerPresentation:
    """Build a presentation from PauliProducts sharing one (D, n)."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    D, n = gens[0].D, gens[0].n
    for g in gens[1:]:
        if (g.D, g.n) != (D, n):
            raise DimensionMismatch((D, n), (g.D, g.n))
    if len(gens) > 2 * n:
        raise TooManyGenerators(f"{len(gens)} generators exceed the 2n = {2 * n} bound")
    matrix = np.zeros((len(gens), 2 * n), dtype=np.int64)
    phases = np.zeros(len(gens), dtype=np.int64)
    for i, g in enumerate(gens):
        matrix[i, :n] = g.xvec
        matrix[i, n:] = g.zvec
        phases[i] = g.phase
    return StabilizerPresentation(D, n, matrix, phases)


def to_generators(S: StabilizerPresentation) -> list[pl.PauliProduct]:
    return [S.generator(i) for i in range(S.k)]


def row_add(S: StabilizerPresentation, i: int, j: int, m: int) -> StabilizerPresentation:
    """Generator i becomes g_i * g_j^m; the group is unchanged."""
    S._check_row(i)
    S._check_row(j)
    if i == j:
        raise ValueError("row_add needs distinct rows")
    gi = pl.multiply(S.generator(i), pl.power(S.generator(j), m % S.D))
    return S._replace_rows({i: gi})


def row_swap(S: StabilizerPresentation, i: int, j: int) -> StabilizerPresentation:
    S._check_row(i)
    S._check_row(j)
    return S._replace_rows({i: S.generator(j), j: S.generator(i)})


def row_scale(S: StabilizerPresentation, i: int, q: int) -> StabilizerPresentation:
    """Generator i becomes g_i^q for a unit q (group-preserving on valid input)."""
    S._check_row(i)
    if not is_unit(q, S.D):
        raise NotAUnit(q, S.D)
    return S._replace_rows({i: pl.power(S.generator(i), q % S.D)})


def apply_row_op(S: StabilizerPresentation, op: snf.ElementaryOp) -> StabilizerPresentation:
    """Apply a row-kind ElementaryOp to the presentation, phases included."""
    if op.kind == "swap_rows":
        return row_swap(S, op.i, op.j)
    if op.kind == "scale_row":
        return row_scale(S, op.i, op.m)
    if op.kind == "add_rows":
        return row_add(S, op.i, op.j, op.m)
    raise ValueError(f"not a row operation: {op.kind}")


def is_valid(S: StabilizerPresentation) -> ValidityReport:
    """Check pairwise commutation and phase consistency.

    Phase consistency means the group contains no w^c I with c != 0. Since
    commuting generators make a -> prod_i g_i^{a_i} a homomorphism on integer
    exponent vectors, the relation lattice {a : a . matrix = 0 mod D} is
    generated by a kernel basis over Z_D together with D*e_i, so it suffices
    that every kernel-basis product and every g_i^D is the exact identity.
    The g_i^D checks are not redundant: for even D an element like X Z has
    (XZ)^2 = w^(D-1) I, a relation with exponent vector 0 mod D.
    """
    X, Z = S.xblock, S.zblock
    C = (X @ Z.T - Z @ X.T) % S.D
    pair = None
    for i in range(S.k):
        for j in range(i + 1, S.k):
            if C[i, j]:
                pair = (i, j)
                break
        if pair:
            break
    if pair is not None:
        return ValidityReport(False, False, offending_pair=pair)
    for i in range(S.k):
        p = pl.power(S.generator(i), S.D)
        if p.xvec.any() or p.zvec.any():
            raise InternalError("g^D has a nonzero exponent vector")
        if p.phase:
            combo = np.zeros(S.k, dtype=np.int64)
            combo[i] = S.D
            return ValidityReport(True, False, offending_combo=combo)
    _, kernel = snf.solve_linear(S.matrix, np.zeros(2 * S.n, dtype=np.int64), S.D)
    for a in kernel:
        prod = pl.PauliProduct.identity(S.D, S.n)
        for i in range(S.k):
            prod = pl.multiply(prod, pl.power(S.generator(i), int(a[i])))
        if prod.xvec.any() or prod.zvec.any():
            raise InternalError("kernel vector does not annihilate the check matrix")
        if prod.phase:
            return ValidityReport(True, False, offending_combo=a)
    return ValidityReport(True, True)


def _require_valid(S: StabilizerPresentation) -> None:
    rep = is_valid(S)
    if not rep:
        raise InvalidStabilizer(
            f"presentation is not a valid stabilizer group: commuting={rep.commuting}, "
            f"phase_consistent={rep.phase_consistent}"
        )


def group_order(S: StabilizerPresentation) -> int:
    """|S| for a valid presentation, from the SNF of the check matrix."""
    _require_valid(S)
    return snf.diagonal_span_order(snf.smith_normal_form(S.matrix, S.D))


def code_dimension(S: StabilizerPresentation) -> int:
    """K = D^n / |S|; exact by construction for valid presentations."""
    size = group_order(S)
    total = S.D**S.n
    if total % size:
        raise InternalError(f"group order {size} does not divide D^n = {total}")
    return total // size


def contains(S: StabilizerPresentation, p: pl.PauliProduct) -> bool:
    """Exact membership test, phase included."""
    if (p.D, p.n) != (S.D, S.n):
        raise DimensionMismatch((S.D, S.n), (p.D, p.n))
    _require_valid(S)
    target = np.concatenate([p.xvec, p.zvec])
    a, _ = snf.solve_linear(S.matrix, target, S.D)
    if a is None:
        return False
    prod = pl.PauliProduct.identity(S.D, S.n)
    for i in range(S.k):
        prod = pl.multiply(prod, pl.power(S.generator(i), int(a[i])))
    return prod == p


def group_equal(S1: StabilizerPresentation, S2: StabilizerPresentation) -> bool:
    """True when both valid presentations generate the same group."""
    if (S1.D, S1.n) != (S2.D, S2.n):
        raise DimensionMismatch((S1.D, S1.n), (S2.D, S2.n))
    if group_order(S1) != group_order(S2):
        return False
    return all(contains(S2, S1.generator(i)) for i in range(S1.k))
