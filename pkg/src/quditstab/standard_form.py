"""Reduction of valid stabilizer presentations to standard block form.

The reduced check matrix has the shape

    [ M  0 | Z1 Z3 ]
    [ 0  0 | Z2 Z4 ]

with M an r x r diagonal of nonzero divisors of D and Z4 diagonal with
divisor entries. Row operations act on generators (phases tracked exactly);
column operations are realized as catalog gates via the X/Z pairing rules, so
the emitted gate sequence physically maps the input group to the result.

Phase one runs Smith reduction on the X block; phase two runs it on the Z4
block using gates on the last n-r qudits and row operations on the last k-r
rows only. Commutation of a valid group then forces Z1 M = M Z1^T and
Z2 M = 0 mod D, which standardize re-verifies and refuses to return without.
An all-zero X block yields the r = 0 degenerate layout with empty M.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import checkmatrix as cm
from . import clifford as cl
from . import pauli as pl
from . import snf
from .errors import InternalError, InvalidStabilizer


@dataclass
class FormCheck:
    ok: bool
    problems: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class StandardForm:
    """Outcome of standardize.

    gates and row_ops replay the reduction: conjugating the source by `gates`
    (in order) and then applying `row_ops` (in order) reproduces `result`
    exactly, phases included; the two op families commute, so interleaving
    per `history` gives the same thing.
    """

    D: int
    n: int
    k: int
    r: int
    M: np.ndarray
    Z1: np.ndarray
    Z2: np.ndarray
    Z3: np.ndarray
    Z4: np.ndarray
    gates: list[cl.GateOp]
    row_ops: list[snf.ElementaryOp]
    history: list[tuple[str, object]]
    source: cm.StabilizerPresentation
    result: cm.StabilizerPresentation


def _shift_op(op: snf.ElementaryOp, offset: int) -> snf.ElementaryOp:
    return snf.ElementaryOp(
        op.kind, op.i + offset, None if op.j is None else op.j + offset, op.m
    )


def standardize(S: cm.StabilizerPresentation) -> StandardForm:
    """Reduce a valid presentation to standard form, emitting gates and row ops."""
    if not cm.is_valid(S):
        raise InvalidStabilizer("standardize needs a valid stabilizer presentation")
    D, n, k = S.D, S.n, S.k
    cur = S
    gates: list[cl.GateOp] = []
    row_ops: list[snf.ElementaryOp] = []
    history: list[tuple[str, object]] = []

    def apply_row(op: snf.ElementaryOp) -> None:
        nonlocal cur
        cur = cm.apply_row_op(cur, op)
        row_ops.append(op)
        history.append(("row", op))

    def apply_col(op: snf.ElementaryOp) -> None:
        nonlocal cur
        gate = cl.column_op_to_gates(op, n, D)
        cur = cl.conjugate_presentation([gate], cur)
        gates.append(gate)
        history.append(("gate", (gate, op)))

    dec1 = snf.smith_normal_form(S.xblock, D)
    for op in dec1.row_log:
        apply_row(op)
    for op in dec1.col_log:
        apply_col(op)
    if (cur.xblock != dec1.diag).any():
        raise InternalError("phase-1 replay disagrees with the X-block reduction")
    diag1 = dec1.diagonal()
    r = int(np.count_nonzero(diag1))

    if k - r > 0 and n - r > 0:
        dec2 = snf.smith_normal_form(cur.matrix[r:, n + r :], D)
        for op in dec2.row_log:
            apply_row(_shift_op(op, r))
        for op in dec2.col_log:
            apply_col(_shift_op(op, n + r))
        if (cur.matrix[r:, n + r :] != dec2.diag).any():
            raise InternalError("phase-2 replay disagrees with the Z4 reduction")
    if (cur.xblock != dec1.diag).any():
        raise InternalError("phase 2 disturbed the reduced X block")

    X, Z = cur.xblock, cur.zblock
    sf = StandardForm(
        D=D,
        n=n,
        k=k,
        r=r,
        M=X[:r, :r].copy(),
        Z1=Z[:r, :r].copy(),
        Z2=Z[r:, :r].copy(),
        Z3=Z[:r, r:].copy(),
        Z4=Z[r:, r:].copy(),
        gates=gates,
        row_ops=row_ops,
        history=history,
        source=S,
        result=cur,
    )
    chk = check_standard_invariants(sf)
    if not chk:
        raise InternalError("standard-form invariants failed: " + "; ".join(chk.problems))
    if cm.group_order(cur) != cm.group_order(S):
        raise InternalError("reduction changed the group order")
    return sf


def _is_diagonal_with_divisors(B: np.ndarray, D: int, nonzero: bool) -> str | None:
    r = min(B.shape)
    off = B.copy()
    if r:
        off[np.arange(r), np.arange(r)] = 0
    if off.any():
        return "off-diagonal entries present"
    for d in (int(B[i, i]) for i in range(r)):
        if d == 0:
            if nonzero:
                return "zero diagonal entry"
            continue
        if D % d:
            return f"diagonal entry {d} does not divide D={D}"
    return None


def check_standard_invariants(sf: StandardForm) -> FormCheck:
    """Re-verify the block layout and the commutation identities from raw data."""
    problems: list[str] = []
    D, n, k, r = sf.D, sf.n, sf.k, sf.r
    if not 0 <= r <= min(k, n):
        problems.append(f"r={r} out of range for k={k}, n={n}")
        return FormCheck(False, problems)
    mtx = sf.result.matrix
    X, Z = mtx[:, :n], mtx[:, n:]
    if sf.M.shape != (r, r) or sf.Z1.shape != (r, r):
        problems.append("M/Z1 block shapes wrong")
    if sf.Z2.shape != (k - r, r) or sf.Z3.shape != (r, n - r) or sf.Z4.shape != (k - r, n - r):
        problems.append("Z2/Z3/Z4 block shapes wrong")
    if (
        not np.array_equal(sf.M, X[:r, :r])
        or not np.array_equal(sf.Z1, Z[:r, :r])
        or not np.array_equal(sf.Z2, Z[r:, :r])
        or not np.array_equal(sf.Z3, Z[:r, r:])
        or not np.array_equal(sf.Z4, Z[r:, r:])
    ):
        problems.append("stored blocks disagree with the result matrix")
    if X[:r, r:].any() or X[r:, :].any():
        problems.append("X block is not [[M 0],[0 0]]")
    err = _is_diagonal_with_divisors(X[:r, :r], D, nonzero=True)
    if err:
        problems.append(f"M: {err}")
    err = _is_diagonal_with_divisors(sf.Z4, D, nonzero=False)
    if err:
        problems.append(f"Z4: {err}")
    if ((sf.Z1 @ sf.M - sf.M @ sf.Z1.T) % D).any():
        problems.append("Z1 M != M Z1^T mod D")
    if (sf.Z2 @ sf.M % D).any():
        problems.append("Z2 M != 0 mod D")
    return FormCheck(not problems, problems)


def _matrix_lines(S: cm.StabilizerPresentation) -> list[str]:
    lines = []
    for i in range(S.k):
        x = " ".join(str(int(v)) for v in S.matrix[i, : S.n])
        z = " ".join(str(int(v)) for v in S.matrix[i, S.n :])
        lines.append(f"  row {i}: [{x} | {z}]  phase {int(S.phases[i])}")
    return lines


def _block_text(name: str, B: np.ndarray) -> str:
    if B.size == 0:
        return f"  {name} = (empty {B.shape[0]}x{B.shape[1]})"
    rows = "; ".join(" ".join(str(int(v)) for v in row) for row in B)
    return f"  {name} = [{rows}]"


def transcript(sf: StandardForm) -> str:
    """Human-readable reduction log; the final presentation block re-parses."""
    out = [
        f"standard form reduction over Z_{sf.D}",
        f"input (D={sf.D}, n={sf.n}, k={sf.k}):",
        *_matrix_lines(sf.source),
        "operations:",
    ]
    if not sf.history:
        out.append("  (none: already standard)")
    for kind, payload in sf.history:
        if kind == "row":
            out.append(f"  row op: {payload.describe()}")
        else:
            gate, op = payload
            out.append(f"  gate: {cl.format_gate(gate)} realizing {op.describe()}")
    out.append(f"blocks (r={sf.r}):")
    for name in ("M", "Z1", "Z2", "Z3", "Z4"):
        out.append(_block_text(name, getattr(sf, name)))
    chk = check_standard_invariants(sf)
    out.append("invariant checks:")
    out.append(f"  X block is [[M 0],[0 0]], M diagonal nonzero divisors: {'ok' if chk else 'FAILED'}")
    if chk:
        out.append("  Z4 diagonal with divisor entries: ok")
        out.append("  Z1 M = M Z1^T (mod D): ok")
        out.append("  Z2 M = 0 (mod D): ok")
    else:
        out.extend(f"  problem: {p}" for p in chk.problems)
    out.append("final presentation:")
    out.append(f"D={sf.D} n={sf.n}")
    for i in range(sf.result.k):
        out.append(pl.format_pauli(sf.result.generator(i)))
    return "\n".join(out) + "\n"
