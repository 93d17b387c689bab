"""Generalized Pauli products on n qudits of dimension D.

An element is stored in canonical form: a phase exponent lambda together with
per-qudit X and Z powers, read as w^lambda * prod_i X_i^{x[i]} Z_i^{z[i]}
where w = exp(2*pi*1j/D) and the X factor sits left of the Z factor on every
qudit. The defining relation X Z = w Z X makes composition exact integer
arithmetic mod D.
"""

from __future__ import annotations

import re

import numpy as np

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InternalError,
    PauliSyntaxError,
)
from .modring import check_modulus


class PauliProduct:
    """Immutable canonical-form Pauli product.

    Attributes:
        D: qudit dimension, >= 2.
        n: number of qudits, >= 1.
        phase: phase exponent lambda in [0, D).
        xvec, zvec: length-n int64 arrays of X and Z powers in [0, D).
    """

    __slots__ = ("D", "n", "phase", "xvec", "zvec")

    def __init__(self, D: int, n: int, phase: int = 0, xvec=None, zvec=None):
        D = check_modulus(D)
        n = int(n)
        if n < 1:
            raise ValueError(f"need at least one qudit, got n={n}")
        x = np.zeros(n, dtype=np.int64) if xvec is None else np.asarray(xvec, dtype=np.int64) % D
        z = np.zeros(n, dtype=np.int64) if zvec is None else np.asarray(zvec, dtype=np.int64) % D
        if x.shape != (n,) or z.shape != (n,):
            raise ValueError(f"exponent vectors must have shape ({n},)")
        x = np.ascontiguousarray(x)
        z = np.ascontiguousarray(z)
        x.flags.writeable = False
        z.flags.writeable = False
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "phase", int(phase) % D)
        object.__setattr__(self, "xvec", x)
        object.__setattr__(self, "zvec", z)

    def __setattr__(self, name, value):
        raise AttributeError("PauliProduct is immutable")

    @classmethod
    def identity(cls, D: int, n: int) -> "PauliProduct":
        return cls(D, n)

    @classmethod
    def single_x(cls, D: int, n: int, qudit: int, e: int = 1) -> "PauliProduct":
        """X_qudit^e on an n-qudit register; qudit is 0-based here."""
        if not 0 <= qudit < n:
            raise IndexOutOfRange(f"qudit {qudit} not in 0..{n - 1}")
        x = np.zeros(n, dtype=np.int64)
        x[qudit] = e % D
        return cls(D, n, 0, x, None)

    @classmethod
    def single_z(cls, D: int, n: int, qudit: int, e: int = 1) -> "PauliProduct":
        """Z_qudit^e on an n-qudit register; qudit is 0-based here."""
        if not 0 <= qudit < n:
            raise IndexOutOfRange(f"qudit {qudit} not in 0..{n - 1}")
        z = np.zeros(n, dtype=np.int64)
        z[qudit] = e % D
        return cls(D, n, 0, None, z)

    def is_identity(self) -> bool:
        return self.phase == 0 and not self.xvec.any() and not self.zvec.any()

    def _key(self) -> tuple:
        return (self.D, self.n, self.phase, self.xvec.tobytes(), self.zvec.tobytes())

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliProduct):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"PauliProduct(D={self.D}, n={self.n}, {format_pauli(self)!r})"


def _check_same_space(p1: PauliProduct, p2: PauliProduct) -> None:
    if p1.D != p2.D or p1.n != p2.n:
        raise DimensionMismatch((p1.D, p1.n), (p2.D, p2.n))


def multiply(p1: PauliProduct, p2: PauliProduct) -> PauliProduct:
    """Canonical-form product p1 * p2.

    Moving p2's X block left past p1's Z block costs one w^-1 per (Z, X)
    crossing, so the product phase is phase1 + phase2 - z1.x2 mod D while the
    exponent vectors add componentwise.
    """
    _check_same_space(p1, p2)
    D = p1.D
    phase = (p1.phase + p2.phase - int(p1.zvec @ p2.xvec)) % D
    return PauliProduct(D, p1.n, phase, (p1.xvec + p2.xvec) % D, (p1.zvec + p2.zvec) % D)


def commutation_phase(p1: PauliProduct, p2: PauliProduct) -> int:
    """Exponent lambda12 with p1 p2 = w^lambda12 p2 p1, i.e. x1.z2 - z1.x2 mod D."""
    _check_same_space(p1, p2)
    return (int(p1.xvec @ p2.zvec) - int(p1.zvec @ p2.xvec)) % p1.D


def commutes(p1: PauliProduct, p2: PauliProduct) -> bool:
    return commutation_phase(p1, p2) == 0


def power(p: PauliProduct, m: int) -> PauliProduct:
    """p^m for m >= 0, by repeated exact multiplication."""
    m = int(m)
    if m < 0:
        raise ValueError(f"exponent must be >= 0, got {m}")
    result = PauliProduct.identity(p.D, p.n)
    base = p
    while m:
        if m & 1:
            result = multiply(result, base)
        base = multiply(base, base)
        m >>= 1
    return result


def order(p: PauliProduct) -> int:
    """Smallest t >= 1 with p^t = identity.

    The exponent vectors have additive order dividing D and the residual phase
    has order dividing D, so t <= D^2; the cap 2*D^2 only guards against bugs.
    """
    cap = 2 * p.D * p.D
    q = p
    for t in range(1, cap + 1):
        if q.is_identity():
            return t
        q = multiply(q, p)
    raise InternalError(f"order of {format_pauli(p)} not found within cap {cap}")


_PHASE_RE = re.compile(r"w(\^(-?\d+))?$")
_FACTOR_RE = re.compile(r"([XZ])(\d+)(\^(-?\d+))?$")


def parse_pauli(text: str, D: int, n: int) -> PauliProduct:
    """Parse text like "w^2 X1^3 Z2^2" or "I" into a PauliProduct.

    Factors multiply left to right, so non-canonical orderings such as
    "Z1 X1" pick up the exact reordering phase. Qudit labels are 1-based.
    Raises PauliSyntaxError (with offset) or IndexOutOfRange.
    """
    D = check_modulus(D)
    tokens = list(re.finditer(r"\S+", text))
    if not tokens:
        raise PauliSyntaxError("empty Pauli expression", 0)
    result = PauliProduct.identity(D, n)
    for ti, tok in enumerate(tokens):
        word, pos = tok.group(0), tok.start()
        if word == "I":
            continue
        m = _PHASE_RE.match(word)
        if m:
            if ti != 0:
                raise PauliSyntaxError("phase token only allowed first", pos)
            lam = 1 if m.group(2) is None else int(m.group(2))
            result = multiply(result, PauliProduct(D, n, lam))
            continue
        m = _FACTOR_RE.match(word)
        if m is None:
            raise PauliSyntaxError(f"unrecognized token {word!r}", pos)
        kind, qudit = m.group(1), int(m.group(2))
        e = 1 if m.group(4) is None else int(m.group(4))
        if not 1 <= qudit <= n:
            raise IndexOutOfRange(f"qudit {qudit} out of range 1..{n} in {word!r}")
        if kind == "X":
            factor = PauliProduct.single_x(D, n, qudit - 1, e)
        else:
            factor = PauliProduct.single_z(D, n, qudit - 1, e)
        result = multiply(result, factor)
    return result


def format_pauli(p: PauliProduct) -> str:
    """Canonical text form; parse_pauli(format_pauli(p), p.D, p.n) == p."""
    parts = []
    if p.phase:
        parts.append(f"w^{p.phase}")
    body = []
    for i in range(p.n):
        if p.xvec[i]:
            e = int(p.xvec[i])
            body.append(f"X{i + 1}" + (f"^{e}" if e != 1 else ""))
        if p.zvec[i]:
            e = int(p.zvec[i])
            body.append(f"Z{i + 1}" + (f"^{e}" if e != 1 else ""))
    parts.extend(body if body else ["I"])
    return " ".join(parts)


identity = PauliProduct.identity
single_x = PauliProduct.single_x
single_z = PauliProduct.single_z
