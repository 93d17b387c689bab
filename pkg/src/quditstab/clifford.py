"""Clifford gate catalog for qudits: Fourier, multiplier, CNOT, SWAP, CPHASE.

Provides the exact conjugation action on Pauli products (phases included),
the translation of parity-check column operations into gates, and dense
unitaries for brute-force verification. Gate qudit indices are 1-based, in
both GateOp and the text form; matrix column indices stay 0-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from . import pauli as pl
from ._config import dense_bound
from .checkmatrix import StabilizerPresentation, from_generators, to_generators
from .errors import (
    IndexOutOfRange,
    InternalError,
    NotAUnit,
    OracleTooLarge,
    UnrealizableOp,
)
from .modring import check_modulus, inverse, is_unit
from .snf import ElementaryOp

_KINDS = ("F", "S", "CNOT", "SWAP", "CP")


@dataclass(frozen=True)
class GateOp:
    """One catalog gate; a and b are 1-based qudit indices.

    F(a): Fourier. S(q,a): multiply-by-unit-q. CNOT(a,b)^m: m-fold controlled
    shift, control a, target b. SWAP(a,b). CP(a,b): controlled phase.
    """

    kind: str
    a: int
    b: int | None = None
    q: int | None = None
    m: int = 1

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.a < 1:
            raise IndexOutOfRange(f"qudit index {self.a} must be >= 1")
        two_qudit = self.kind in ("CNOT", "SWAP", "CP")
        if two_qudit:
            if self.b is None or self.b < 1:
                raise IndexOutOfRange(f"{self.kind} needs a second qudit index >= 1")
            if self.b == self.a:
                raise IndexOutOfRange(f"{self.kind} needs two distinct qudits")
        elif self.b is not None:
            raise ValueError(f"{self.kind} acts on one qudit")
        if self.kind == "S":
            if self.q is None:
                raise ValueError("S needs a multiplier q")
        elif self.q is not None:
            raise ValueError(f"{self.kind} takes no multiplier")
        if self.m < 1:
            raise ValueError(f"gate power must be >= 1, got {self.m}")
        if self.kind != "CNOT" and self.m != 1:
            raise ValueError(f"{self.kind} takes no power")


def fourier(a: int) -> GateOp:
    return GateOp("F", a)


def mult(q: int, a: int) -> GateOp:
    return GateOp("S", a, q=q)


def cnot(a: int, b: int, m: int = 1) -> GateOp:
    return GateOp("CNOT", a, b, m=m)


def swap(a: int, b: int) -> GateOp:
    return GateOp("SWAP", a, b)


def cphase(a: int, b: int) -> GateOp:
    return GateOp("CP", a, b)


def format_gate(g: GateOp) -> str:
    if g.kind == "F":
        return f"F({g.a})"
    if g.kind == "S":
        return f"S({g.q},{g.a})"
    if g.kind == "CNOT":
        return f"CNOT({g.a},{g.b})^{g.m}"
    return f"{g.kind}({g.a},{g.b})"


_GATE_RE = re.compile(
    r"^(?:F\((\d+)\)|S\((\d+),(\d+)\)|CNOT\((\d+),(\d+)\)(?:\^(\d+))?"
    r"|SWAP\((\d+),(\d+)\)|CP\((\d+),(\d+)\))$"
)


def parse_gate(line: str) -> GateOp:
    m = _GATE_RE.match(line.strip())
    if m is None:
        raise ValueError(f"cannot parse gate {line!r}")
    if m.group(1):
        return fourier(int(m.group(1)))
    if m.group(2):
        return mult(int(m.group(2)), int(m.group(3)))
    if m.group(4):
        return cnot(int(m.group(4)), int(m.group(5)), int(m.group(6) or 1))
    if m.group(7):
        return swap(int(m.group(7)), int(m.group(8)))
    return cphase(int(m.group(9)), int(m.group(10)))


def format_gates(gates) -> str:
    return "\n".join(format_gate(g) for g in gates)


def parse_gates(text: str) -> list[GateOp]:
    gates = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            gates.append(parse_gate(line))
    return gates


def _check_gate(g: GateOp, D: int, n: int) -> None:
    if g.a > n or (g.b is not None and g.b > n):
        raise IndexOutOfRange(f"{format_gate(g)} does not fit on {n} qudits")
    if g.kind == "S" and not is_unit(g.q, D):
        raise NotAUnit(g.q, D)


def _generator_images(g: GateOp, D: int, n: int) -> dict[int, tuple[pl.PauliProduct, pl.PauliProduct]]:
    """Images (g X_i g^dag, g Z_i g^dag) for each qudit i the gate touches; 0-based keys."""
    a = g.a - 1
    X = pl.PauliProduct.single_x
    Z = pl.PauliProduct.single_z

    def xz(xq, xe, zq, ze) -> pl.PauliProduct:
        x = np.zeros(n, dtype=np.int64)
        z = np.zeros(n, dtype=np.int64)
        x[xq] = xe
        z[zq] = ze
        return pl.PauliProduct(D, n, 0, x, z)

    if g.kind == "F":
        return {a: (Z(D, n, a, D - 1), X(D, n, a, 1))}
    if g.kind == "S":
        return {a: (X(D, n, a, inverse(g.q, D)), Z(D, n, a, g.q))}
    b = g.b - 1
    if g.kind == "SWAP":
        return {a: (X(D, n, b, 1), Z(D, n, b, 1)), b: (X(D, n, a, 1), Z(D, n, a, 1))}
    if g.kind == "CNOT":
        m = g.m % D
        imgs_a = (xz(a, 1, b, 0) if m == 0 else _xx(D, n, a, 1, b, (D - m) % D), Z(D, n, a, 1))
        imgs_b = (X(D, n, b, 1), _zz(D, n, a, m, b, 1))
        return {a: imgs_a, b: imgs_b}
    # CP
    return {a: (xz(a, 1, b, D - 1), Z(D, n, a, 1)), b: (xz(b, 1, a, D - 1), Z(D, n, b, 1))}


def _xx(D, n, q1, e1, q2, e2) -> pl.PauliProduct:
    x = np.zeros(n, dtype=np.int64)
    x[q1] = e1
    x[q2] = (x[q2] + e2) % D
    return pl.PauliProduct(D, n, 0, x, None)


def _zz(D, n, q1, e1, q2, e2) -> pl.PauliProduct:
    z = np.zeros(n, dtype=np.int64)
    z[q1] = e1
    z[q2] = (z[q2] + e2) % D
    return pl.PauliProduct(D, n, 0, None, z)


def conjugate_pauli(g: GateOp, p: pl.PauliProduct) -> pl.PauliProduct:
    """Exact image g p g^dag.

    Conjugation is an automorphism, so the image is the original phase times
    the product of the conjugated per-qudit factors in canonical order; all
    reordering phases fall out of pauli.multiply.
    """
    D, n = p.D, p.n
    _check_gate(g, D, n)
    imgs = _generator_images(g, D, n)
    x0 = np.array(p.xvec)
    z0 = np.array(p.zvec)
    for qi in imgs:
        x0[qi] = 0
        z0[qi] = 0
    result = pl.PauliProduct(D, n, p.phase, x0, z0)
    for qi in sorted(imgs):
        img_x, img_z = imgs[qi]
        xi = int(p.xvec[qi])
        zi = int(p.zvec[qi])
        if xi:
            result = pl.multiply(result, pl.power(img_x, xi))
        if zi:
            result = pl.multiply(result, pl.power(img_z, zi))
    return result


def conjugate_presentation(gates, S: StabilizerPresentation) -> StabilizerPresentation:
    """Conjugate every generator by the gate sequence, first gate first."""
    gens = to_generators(S)
    for g in gates:
        gens = [conjugate_pauli(g, p) for p in gens]
    return from_generators(gens)


def column_op_to_gates(op: ElementaryOp, n: int, D: int) -> GateOp:
    """Translate one column operation on a k x 2n check matrix into a gate.

    An X-side column op drags its Z-side partner along (and vice versa):
    swaps pair (a, b) with (a+n, b+n) under SWAP; scaling X column a by the
    unit u pairs with scaling Z column a+n by u^-1 under S(u^-1, a); adding
    m times X column a to X column b pairs with the CNOT(a,b)^(D-m) Z action.
    Mixed X/Z operations have no catalog gate and raise UnrealizableOp.
    """
    D = check_modulus(D)
    if op.kind == "swap_cols":
        i, j = sorted((op.i, op.j))
        if j < n:
            return swap(i + 1, j + 1)
        if i >= n:
            return swap(i - n + 1, j - n + 1)
        raise UnrealizableOp(f"swap of X column {i} with Z column {j} has no gate")
    if op.kind == "scale_col":
        u = op.m % D
        if not is_unit(u, D):
            raise NotAUnit(u, D)
        if op.i < n:
            return mult(inverse(u, D), op.i + 1)
        return mult(u, op.i - n + 1)
    if op.kind == "add_cols":
        m = op.m % D
        if m == 0:
            raise UnrealizableOp("zero-multiplier column addition is a no-op")
        if op.i < n and op.j < n:
            return cnot(op.j + 1, op.i + 1, (D - m) % D)
        if op.i >= n and op.j >= n:
            return cnot(op.i - n + 1, op.j - n + 1, m)
        raise UnrealizableOp("column addition across the X/Z split has no gate")
    raise UnrealizableOp(f"not a column operation: {op.kind}")


def _embed(U: np.ndarray, slots: list[int], D: int, n: int) -> np.ndarray:
    """Embed a unitary acting on the given qudit slots into the full register.

    Basis index convention: qudit 0 is the most significant digit.
    """
    rest = [q for q in range(n) if q not in slots]
    K = np.kron(U, np.eye(D ** len(rest), dtype=complex))
    digits = np.indices((D,) * n).reshape(n, -1)
    s = np.zeros(D**n, dtype=np.int64)
    for q in slots + rest:
        s = s * D + digits[q]
    return K[np.ix_(s, s)]


def gate_to_dense(g: GateOp, D: int, n: int, bound: int | None = None) -> np.ndarray:
    """Dense unitary for a gate on n qudits of dimension D."""
    D = check_modulus(D)
    _check_gate(g, D, n)
    dim = D**n
    limit = dense_bound(bound)
    if dim > limit:
        raise OracleTooLarge(f"D^n = {dim} exceeds the dense bound {limit}")
    w = np.exp(2j * np.pi / D)
    j = np.arange(D)
    if g.kind == "F":
        U = w ** np.outer(j, j) / np.sqrt(D)
        slots = [g.a - 1]
    elif g.kind == "S":
        U = np.zeros((D, D), dtype=complex)
        U[j, (j * g.q) % D] = 1.0
        slots = [g.a - 1]
    else:
        jj, kk = np.divmod(np.arange(D * D), D)
        U = np.zeros((D * D, D * D), dtype=complex)
        if g.kind == "CNOT":
            U[jj * D + (kk - g.m * jj) % D, jj * D + kk] = 1.0
        elif g.kind == "SWAP":
            U[kk * D + jj, jj * D + kk] = 1.0
        else:
            U[jj * D + kk, jj * D + kk] = w ** ((jj * kk) % D)
        slots = [g.a - 1, g.b - 1]
    full = _embed(U, slots, D, n)
    if np.abs(full @ full.conj().T - np.eye(dim)).max() > 1e-12:
        raise InternalError(f"{format_gate(g)} produced a non-unitary matrix")
    return full
