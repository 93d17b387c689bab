"""Dense complex-matrix ground truth for desk-scale verification.

Everything here is deliberately direct: Pauli products become explicit
Kronecker products of clock and shift matrix powers, projectors are plain
group averages, and the gate identities are checked by multiplying dense
unitaries. The exact integer algebra elsewhere in the package is validated
against these matrices, never the other way round.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _accel
from . import clifford as cl
from . import pauli as pl
from ._config import dense_bound
from .checkmatrix import StabilizerPresentation, is_valid
from .errors import GroupTooLarge, InvalidStabilizer, OracleTooLarge
from .modring import check_modulus


def _clock_shift(D: int) -> tuple[np.ndarray, np.ndarray]:
    """Single-qudit X and Z: X|j> = |j-1 mod D>, Z|j> = w^j |j>."""
    j = np.arange(D)
    X = np.zeros((D, D), dtype=complex)
    X[j, (j + 1) % D] = 1.0
    Z = np.diag(np.exp(2j * np.pi * j / D))
    return X, Z


def pauli_to_dense(p: pl.PauliProduct, bound: int | None = None) -> np.ndarray:
    """Dense matrix of a Pauli product, w^phase times per-qudit X^x Z^z factors."""
    dim = p.D**p.n
    limit = dense_bound(bound)
    if dim > limit:
        raise OracleTooLarge(f"D^n = {dim} exceeds the dense bound {limit}")
    X, Z = _clock_shift(p.D)
    op = np.eye(1, dtype=complex)
    for i in range(p.n):
        local = np.linalg.matrix_power(X, int(p.xvec[i])) @ np.linalg.matrix_power(
            Z, int(p.zvec[i])
        )
        op = np.kron(op, local)
    return np.exp(2j * np.pi * p.phase / p.D) * op


def enumerate_group(S: StabilizerPresentation, cap: int = 10_000) -> list[pl.PauliProduct]:
    """All elements generated by the presentation's rows, closed under multiply.

    Works for any generator set, valid or not; raises GroupTooLarge past cap.
    The result is sorted by the (phase, x, z) mixed-radix key, so equal groups
    enumerate identically.
    """
    rows = np.concatenate([S.phases[:, None], S.matrix], axis=1)
    elems, completed = _accel.pauli_closure(rows, S.D, S.n, cap)
    if not completed:
        raise GroupTooLarge(f"closure exceeds {cap} elements")
    return [
        pl.PauliProduct(S.D, S.n, int(r[0]), r[1 : 1 + S.n], r[1 + S.n :]) for r in elems
    ]


def projector(S: StabilizerPresentation, bound: int | None = None) -> np.ndarray:
    """Group-average projector P = (1/|S|) sum of dense elements.

    Requires a valid presentation; for those P is Hermitian, idempotent, and
    has trace D^n / |S|.
    """
    if not is_valid(S):
        raise InvalidStabilizer("projector needs a valid stabilizer presentation")
    dim = S.D**S.n
    limit = dense_bound(bound)
    if dim > limit:
        raise OracleTooLarge(f"D^n = {dim} exceeds the dense bound {limit}")
    elements = enumerate_group(S)
    acc = np.zeros((dim, dim), dtype=complex)
    for p in elements:
        acc += pauli_to_dense(p, bound)
    return acc / len(elements)


def row_span(A, D: int, cap: int = 10_000) -> tuple[np.ndarray, bool]:
    """Brute-force additive row span of A over Z_D.

    Returns (vectors, completed); completed is False when the span exceeds
    cap, in which case the vectors are a partial enumeration larger than cap.
    """
    check_modulus(D)
    return _accel.additive_span(A, D, cap)


def row_span_order(A, D: int, cap: int = 10_000) -> int | None:
    """Size of the additive row span, or None when it exceeds cap."""
    vecs, completed = row_span(A, D, cap)
    return len(vecs) if completed else None


@dataclass
class IdentityCheck:
    name: str
    ok: bool
    deviation: float


@dataclass
class IdentityReport:
    checks: list[IdentityCheck]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self) -> bool:
        return self.ok

    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.ok]


def _dense_xz(D: int, n: int, xa: int, za: int, xb: int, zb: int) -> np.ndarray:
    x = np.zeros(n, dtype=np.int64)
    z = np.zeros(n, dtype=np.int64)
    x[0], z[0] = xa, za
    if n > 1:
        x[1], z[1] = xb, zb
    return pauli_to_dense(pl.PauliProduct(D, n, 0, x, z))


def assert_identities(D: int, tol: float = 1e-9) -> IdentityReport:
    """Dense checks of the gate-calculus identities and conjugation tables.

    Covers the SWAP decomposition, the CNOT inverse identities, the
    CP-to-CNOT change of basis, and every single- and two-qudit conjugation
    rule in the catalog, for one dimension D (kept <= 8, the matrices are
    D^2 x D^2).
    """
    D = check_modulus(D)
    if D > 8:
        raise OracleTooLarge(f"identity suite is defined for D <= 8, got {D}")
    checks: list[IdentityCheck] = []

    def record(name: str, lhs: np.ndarray, rhs: np.ndarray) -> None:
        dev = float(np.abs(lhs - rhs).max())
        checks.append(IdentityCheck(name, dev <= tol, dev))

    F1 = cl.gate_to_dense(cl.fourier(1), D, 2)
    F2 = cl.gate_to_dense(cl.fourier(2), D, 2)
    C12 = cl.gate_to_dense(cl.cnot(1, 2), D, 2)
    C21 = cl.gate_to_dense(cl.cnot(2, 1), D, 2)
    SW = cl.gate_to_dense(cl.swap(1, 2), D, 2)
    CP = cl.gate_to_dense(cl.cphase(1, 2), D, 2)

    record("swap = cnot12 . cnot21^dag . cnot12 . F1^2", SW, C12 @ C21.conj().T @ C12 @ (F1 @ F1))
    record("cnot21^dag = cnot21^(D-1)", C21.conj().T, np.linalg.matrix_power(C21, D - 1))
    record("cnot21^dag = F2^2 . cnot21 . F2^2", C21.conj().T, F2 @ F2 @ C21 @ F2 @ F2)
    record("cnot12 = F2 . cp . F2^dag", C12, F2 @ CP @ F2.conj().T)

    # single-qudit conjugation table
    Fd = cl.gate_to_dense(cl.fourier(1), D, 1)
    X1, Z1 = _clock_shift(D)
    record("F: Z -> X", Fd @ Z1 @ Fd.conj().T, X1)
    record("F: X -> Z^(D-1)", Fd @ X1 @ Fd.conj().T, np.linalg.matrix_power(Z1, D - 1))
    for q in range(1, D):
        if math.gcd(q, D) != 1:
            continue
        Sd = cl.gate_to_dense(cl.mult(q, 1), D, 1)
        qbar = pow(q, -1, D)
        record(f"S_{q}: Z -> Z^{q}", Sd @ Z1 @ Sd.conj().T, np.linalg.matrix_power(Z1, q))
        record(f"S_{q}: X -> X^{qbar}", Sd @ X1 @ Sd.conj().T, np.linalg.matrix_power(X1, qbar))

    # two-qudit conjugation table: (gate, input (xa,za,xb,zb), image (xa,za,xb,zb))
    table = [
        (C12, "cnot", (0, 0, 0, 1), (0, 1, 0, 1)),
        (C12, "cnot", (0, 1, 0, 0), (0, 1, 0, 0)),
        (C12, "cnot", (0, 0, 1, 0), (0, 0, 1, 0)),
        (C12, "cnot", (1, 0, 0, 0), (1, 0, D - 1, 0)),
        (SW, "swap", (1, 0, 0, 0), (0, 0, 1, 0)),
        (SW, "swap", (0, 1, 0, 0), (0, 0, 0, 1)),
        (SW, "swap", (0, 0, 1, 0), (1, 0, 0, 0)),
        (SW, "swap", (0, 0, 0, 1), (0, 1, 0, 0)),
        (CP, "cp", (0, 0, 0, 1), (0, 0, 0, 1)),
        (CP, "cp", (0, 1, 0, 0), (0, 1, 0, 0)),
        (CP, "cp", (0, 0, 1, 0), (0, D - 1, 1, 0)),
        (CP, "cp", (1, 0, 0, 0), (1, 0, 0, D - 1)),
    ]
    for U, name, src, dst in table:
        P = _dense_xz(D, 2, *src)
        Q = _dense_xz(D, 2, *dst)
        record(f"{name}: {src} -> {dst}", U @ P @ U.conj().T, Q)

    return IdentityReport(checks)
