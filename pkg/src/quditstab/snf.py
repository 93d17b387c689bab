"""Smith normal form over Z_D built from logged elementary operations.

The decomposition V A W = diag (mod D) is produced purely by elementary row
and column operations (swap, unit scale, add-multiple), each recorded in
order, so a caller can replay the reduction or translate column operations
into gates. Diagonal entries are canonicalized to divisors of D, with 0 read
as D, and satisfy the divisibility chain d1 | d2 | ... .

The pivot strategy is deterministic: among the active submatrix the entry
with the smallest gcd with D wins, ties broken by lowest (row, col). A pivot
is improved via stabilizing coefficients until it divides everything it must
clear, which also yields the divisibility chain without a fix-up pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NotAUnit
from .modring import associate_unit, check_modulus, divide, inverse, is_unit, stab_coeff

ROW_KINDS = ("swap_rows", "scale_row", "add_rows")
COL_KINDS = ("swap_cols", "scale_col", "add_cols")


@dataclass(frozen=True)
class ElementaryOp:
    """One elementary operation.

    swap_*: exchange lines i and j.
    scale_*: multiply line i by the unit m.
    add_*: add m times line j to line i (i != j).
    Indices are 0-based.
    """

    kind: str
    i: int
    j: int | None = None
    m: int | None = None

    def __post_init__(self):
        if self.kind not in ROW_KINDS + COL_KINDS:
            raise ValueError(f"unknown op kind {self.kind!r}")
        base = self.kind.split("_")[0]
        if base == "swap" and not (self.j is not None and self.m is None):
            raise ValueError("swap takes i and j only")
        if base == "scale" and not (self.j is None and self.m is not None):
            raise ValueError("scale takes i and m only")
        if base == "add" and not (self.j is not None and self.m is not None):
            raise ValueError("add takes i, j and m")
        if self.j is not None and self.i == self.j:
            raise ValueError("line indices must differ")
        if self.i < 0 or (self.j is not None and self.j < 0):
            raise ValueError("line indices must be >= 0")

    def describe(self) -> str:
        axis = "R" if self.kind in ROW_KINDS else "C"
        base = self.kind.split("_")[0]
        if base == "swap":
            return f"swap {axis}{self.i} and {axis}{self.j}"
        if base == "scale":
            return f"{axis}{self.i} *= {self.m}"
        return f"{axis}{self.i} += {self.m}*{axis}{self.j}"


def swap_rows(i: int, j: int) -> ElementaryOp:
    return ElementaryOp("swap_rows", i, j)


def swap_cols(i: int, j: int) -> ElementaryOp:
    return ElementaryOp("swap_cols", i, j)


def scale_row(i: int, m: int) -> ElementaryOp:
    return ElementaryOp("scale_row", i, m=m)


def scale_col(i: int, m: int) -> ElementaryOp:
    return ElementaryOp("scale_col", i, m=m)


def add_rows(i: int, j: int, m: int) -> ElementaryOp:
    return ElementaryOp("add_rows", i, j, m)


def add_cols(i: int, j: int, m: int) -> ElementaryOp:
    return ElementaryOp("add_cols", i, j, m)


def apply_elementary(op: ElementaryOp, M: np.ndarray, D: int) -> np.ndarray:
    """Apply one elementary op to a copy of M over Z_D."""
    D = check_modulus(D)
    out = np.array(M, dtype=np.int64) % D
    if op.kind in ("scale_row", "scale_col") and not is_unit(op.m, D):
        raise NotAUnit(op.m, D)
    if op.kind == "swap_rows":
        out[[op.i, op.j], :] = out[[op.j, op.i], :]
    elif op.kind == "swap_cols":
        out[:, [op.i, op.j]] = out[:, [op.j, op.i]]
    elif op.kind == "scale_row":
        out[op.i, :] = out[op.i, :] * op.m % D
    elif op.kind == "scale_col":
        out[:, op.i] = out[:, op.i] * op.m % D
    elif op.kind == "add_rows":
        out[op.i, :] = (out[op.i, :] + op.m * out[op.j, :]) % D
    else:
        out[:, op.i] = (out[:, op.i] + op.m * out[:, op.j]) % D
    return out


@dataclass
class SnfDecomposition:
    """Result of smith_normal_form: V A W = diag (mod D)."""

    D: int
    diag: np.ndarray
    V: np.ndarray
    W: np.ndarray
    row_log: list = field(default_factory=list)
    col_log: list = field(default_factory=list)

    def diagonal(self) -> list[int]:
        r = min(self.diag.shape)
        return [int(self.diag[i, i]) for i in range(r)]


@dataclass
class SnfCheck:
    ok: bool
    diagnostic: str = ""

    def __bool__(self) -> bool:
        return self.ok


def smith_normal_form(A, D: int) -> SnfDecomposition:
    """Reduce A to Smith normal form over Z_D with logged elementary ops."""
    D = check_modulus(D)
    A = np.asarray(A, dtype=np.int64) % D
    if A.ndim != 2:
        raise ValueError("matrix must be 2-d")
    k, m = A.shape
    work = A.copy()
    V = np.eye(k, dtype=np.int64)
    W = np.eye(m, dtype=np.int64)
    row_log: list[ElementaryOp] = []
    col_log: list[ElementaryOp] = []

    def do_row(op: ElementaryOp) -> None:
        nonlocal work, V
        work = apply_elementary(op, work, D)
        V = apply_elementary(op, V, D)
        row_log.append(op)

    def do_col(op: ElementaryOp) -> None:
        nonlocal work, W
        work = apply_elementary(op, work, D)
        W = apply_elementary(op, W, D)
        col_log.append(op)

    def canonicalize_pivot(t: int) -> None:
        p = int(work[t, t])
        g = math.gcd(p, D)
        if p != g:
            do_row(scale_row(t, associate_unit(p, D)))

    for t in range(min(k, m)):
        # deterministic pivot: smallest gcd with D, ties at lowest (row, col)
        best = None
        for i in range(t, k):
            for j in range(t, m):
                e = int(work[i, j])
                if e:
                    cand = (math.gcd(e, D), i, j)
                    if best is None or cand < best:
                        best = cand
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            do_row(swap_rows(t, bi))
        if bj != t:
            do_col(swap_cols(t, bj))
        canonicalize_pivot(t)

        while True:
            # make the pivot divide its column and row
            while True:
                g = int(work[t, t])
                bad = None
                for i in range(t + 1, k):
                    if work[i, t] % g:
                        bad = ("row", i)
                        break
                if bad is None:
                    for j in range(t + 1, m):
                        if work[t, j] % g:
                            bad = ("col", j)
                            break
                if bad is None:
                    break
                if bad[0] == "row":
                    c = stab_coeff(work[t, t], work[bad[1], t], D)
                    do_row(add_rows(t, bad[1], c))
                else:
                    c = stab_coeff(work[t, t], work[t, bad[1]], D)
                    do_col(add_cols(t, bad[1], c))
                canonicalize_pivot(t)

            g = int(work[t, t])
            for i in range(t + 1, k):
                e = int(work[i, t])
                if e:
                    do_row(add_rows(i, t, (-(e // g)) % D))
            for j in range(t + 1, m):
                e = int(work[t, j])
                if e:
                    do_col(add_cols(j, t, (-(e // g)) % D))

            # pivot must also divide the untouched submatrix (divisibility chain)
            dirty = None
            for i in range(t + 1, k):
                for j in range(t + 1, m):
                    if work[i, j] % g:
                        dirty = i
                        break
                if dirty is not None:
                    break
            if dirty is None:
                break
            do_row(add_rows(t, dirty, 1))

    return SnfDecomposition(D=D, diag=work, V=V, W=W, row_log=row_log, col_log=col_log)


def invert_matrix(M: np.ndarray, D: int) -> np.ndarray | None:
    """Inverse of a square matrix over Z_D, or None when it has none."""
    D = check_modulus(D)
    M = np.asarray(M, dtype=np.int64) % D
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("matrix must be square")
    dec = smith_normal_form(M, D)
    diag = dec.diagonal()
    if any(math.gcd(int(d), D) != 1 for d in diag):
        return None
    inv_diag = np.zeros((M.shape[0], M.shape[0]), dtype=np.int64)
    np.fill_diagonal(inv_diag, [inverse(int(d), D) for d in diag])
    inv = dec.W @ inv_diag @ dec.V % D
    if (M @ inv % D != np.eye(M.shape[0], dtype=np.int64)).any():
        return None
    return inv


def verify_snf(A, dec: SnfDecomposition) -> SnfCheck:
    """Re-check every promise of an SnfDecomposition from raw data."""
    D = dec.D
    A = np.asarray(A, dtype=np.int64) % D
    k, m = A.shape
    if dec.V.shape != (k, k) or dec.W.shape != (m, m) or dec.diag.shape != (k, m):
        return SnfCheck(False, "shape mismatch")
    if (dec.V @ A @ dec.W % D != dec.diag % D).any():
        return SnfCheck(False, "V @ A @ W != diag")
    replayed = np.eye(k, dtype=np.int64)
    for op in dec.row_log:
        if op.kind not in ROW_KINDS:
            return SnfCheck(False, f"non-row op {op.kind} in row_log")
        replayed = apply_elementary(op, replayed, D)
    if (replayed != dec.V % D).any():
        return SnfCheck(False, "row_log does not replay to V")
    replayed = np.eye(m, dtype=np.int64)
    for op in dec.col_log:
        if op.kind not in COL_KINDS:
            return SnfCheck(False, f"non-col op {op.kind} in col_log")
        replayed = apply_elementary(op, replayed, D)
    if (replayed != dec.W % D).any():
        return SnfCheck(False, "col_log does not replay to W")
    if invert_matrix(dec.V, D) is None:
        return SnfCheck(False, "V is not invertible mod D")
    if invert_matrix(dec.W, D) is None:
        return SnfCheck(False, "W is not invertible mod D")
    off = dec.diag.copy()
    r = min(k, m)
    off[np.arange(r), np.arange(r)] = 0
    if off.any():
        return SnfCheck(False, "diag has off-diagonal entries")
    read = [int(d) if d else D for d in dec.diag[np.arange(r), np.arange(r)]]
    for d in read:
        if D % d:
            return SnfCheck(False, f"diagonal entry {d} does not divide D={D}")
    for a, b in zip(read, read[1:]):
        if b % a:
            return SnfCheck(False, f"divisibility chain broken: {a} then {b}")
    return SnfCheck(True)


def diagonal_span_order(dec: SnfDecomposition) -> int:
    """Order of the additive row span of A, from the SNF diagonal.

    Each diagonal entry d contributes D / gcd(d, D) elements; a 0 entry reads
    as D and contributes 1.
    """
    total = 1
    for d in dec.diagonal():
        total *= dec.D // math.gcd(int(d), dec.D)
    return total


def solve_linear(A, b, D: int) -> tuple[np.ndarray | None, list[np.ndarray]]:
    """Solve a . A = b over Z_D for a row vector a.

    A is k x m, b has length m. Returns (particular, kernel_basis): particular
    is None when no solution exists; kernel_basis spans {a : a . A = 0} either
    way. Every solution is particular plus a Z_D-combination of the basis.
    """
    D = check_modulus(D)
    A = np.asarray(A, dtype=np.int64) % D
    b = np.asarray(b, dtype=np.int64) % D
    k, m = A.shape
    if b.shape != (m,):
        raise ValueError(f"b must have length {m}")
    dec = smith_normal_form(A, D)
    c = b @ dec.W % D
    r = min(k, m)
    beta = np.zeros(k, dtype=np.int64)
    solvable = True
    for i in range(r):
        mi = divide(int(c[i]), int(dec.diag[i, i]), D)
        if mi is None:
            solvable = False
            break
        beta[i] = mi
    if solvable and c[r:].any():
        solvable = False
    particular = beta @ dec.V % D if solvable else None
    kernel_basis = []
    for i in range(k):
        d = int(dec.diag[i, i]) if i < r else 0
        g = math.gcd(d, D)
        if g > 1:
            kernel_basis.append((D // g) * dec.V[i] % D)
    return particular, kernel_basis
