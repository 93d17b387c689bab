"""Exact arithmetic helpers for the ring of integers mod D.

All residues are canonical, i.e. reduced into [0, D). Plain Python ints keep
every intermediate exact; nothing here ever factors D.
"""

from __future__ import annotations

import math

from .errors import NotAUnit


def check_modulus(D: int) -> int:
    """Validate a modulus and return it as a plain int."""
    if int(D) != D:
        raise TypeError(f"modulus must be an integer, got {D!r}")
    D = int(D)
    if D < 2:
        raise ValueError(f"modulus must be >= 2, got {D}")
    return D


def gcd_ext(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, u, v) with g = gcd(a, b) >= 0 and u*a + v*b == g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def is_unit(q: int, D: int) -> bool:
    """True when q is invertible mod D."""
    D = check_modulus(D)
    return math.gcd(int(q), D) == 1


def inverse(q: int, D: int) -> int:
    """Multiplicative inverse of q mod D, in [0, D).  Raises NotAUnit otherwise."""
    D = check_modulus(D)
    q = int(q) % D
    g, u, _ = gcd_ext(q, D)
    if g != 1:
        raise NotAUnit(q, D)
    return u % D


def stab_coeff(a: int, b: int, D: int) -> int:
    """Smallest c in [0, D) with gcd(a + c*b, D) == gcd(a, b, D).

    Such a c always exists (CRT over the prime factors of D), so the ascending
    scan terminates; no factorization of D is needed.  The c = 0 case covers
    b == 0 and every a already carrying the full gcd.
    """
    D = check_modulus(D)
    a = int(a) % D
    b = int(b) % D
    target = math.gcd(math.gcd(a, b), D)
    for c in range(D):
        if math.gcd(a + c * b, D) == target:
            return c
    raise AssertionError(f"no stabilizing coefficient for ({a}, {b}) mod {D}")


def associate_unit(d: int, D: int) -> int:
    """Unit u mod D with u*d == gcd(d, D) mod D.

    Every residue is associate to its gcd with D: write d = g*(d/g) with
    g = gcd(d, D); then d/g is invertible mod D/g and its inverse lifts to a
    unit of Z_D via stab_coeff.
    """
    D = check_modulus(D)
    d = int(d) % D
    if d == 0:
        return 1
    g = math.gcd(d, D)
    Dg = D // g
    if Dg == 1:
        return 1
    u0 = inverse(d // g, Dg)
    c = stab_coeff(u0, Dg, D)
    return (u0 + c * Dg) % D


def divide(e: int, d: int, D: int) -> int | None:
    """Smallest m in [0, D) with m*d == e mod D, or None when no m exists."""
    D = check_modulus(D)
    e = int(e) % D
    d = int(d) % D
    g = math.gcd(d, D)
    if e % g != 0:
        return None
    Dg = D // g
    if Dg == 1:
        return 0
    return (e // g) * inverse(d // g, Dg) % Dg
