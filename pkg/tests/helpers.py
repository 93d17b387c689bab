"""Shared test utilities: seeded random Pauli products and valid presentations."""

from __future__ import annotations

import math

import numpy as np

from quditstab import (
    PauliProduct,
    cnot,
    conjugate_presentation,
    cphase,
    fourier,
    from_generators,
    is_valid,
    mult,
    row_add,
    row_scale,
    row_swap,
    single_z,
    swap,
    to_generators,
)


def random_pauli(rng, D, n):
    phase = int(rng.integers(D))
    x = rng.integers(0, D, size=n)
    z = rng.integers(0, D, size=n)
    return PauliProduct(D, n, phase, x, z)


def random_unit(rng, D):
    units = [q for q in range(1, D) if math.gcd(q, D) == 1]
    return int(units[rng.integers(len(units))])


def random_gate(rng, D, n):
    kinds = ["F", "S"] + (["CNOT", "SWAP", "CP"] if n >= 2 else [])
    kind = kinds[rng.integers(len(kinds))]
    a = int(rng.integers(1, n + 1))
    if kind == "F":
        return fourier(a)
    if kind == "S":
        return mult(random_unit(rng, D), a)
    b = int(rng.integers(1, n + 1))
    while b == a:
        b = int(rng.integers(1, n + 1))
    if kind == "CNOT":
        return cnot(a, b, int(rng.integers(1, D)))
    if kind == "SWAP":
        return swap(a, b)
    return cphase(a, b)


def random_valid_presentation(rng, D, n, rounds=6):
    # seed rows X_i^c, Z_i^d with c*d = 0 mod D: commuting, all phases zero
    gens = []
    for i in range(n):
        c = int(rng.integers(D))
        g = math.gcd(c, D)
        d = (D // g) * int(rng.integers(g))
        if c:
            x = np.zeros(n, dtype=np.int64)
            x[i] = c
            gens.append(PauliProduct(D, n, 0, x, None))
        if d:
            z = np.zeros(n, dtype=np.int64)
            z[i] = d
            gens.append(PauliProduct(D, n, 0, None, z))
    if not gens:
        gens.append(single_z(D, n, 0, int(rng.integers(1, D))))
    # keep a random nonempty subset
    keep = [g for g in gens if rng.random() < 0.8]
    S = from_generators(keep if keep else gens[:1])
    # enrich with rejection-sampled extra generators to get X-Z coupled groups
    for _ in range(2):
        if S.k >= 2 * n or rng.random() < 0.5:
            continue
        for _ in range(8):
            cand = random_pauli(rng, D, n)
            trial = from_generators(to_generators(S) + [cand])
            if is_valid(trial):
                S = trial
                break
    # scramble with group-preserving row ops and group-order-preserving gates
    for _ in range(rounds):
        pick = rng.integers(4)
        if pick == 0 and S.k >= 2:
            i, j = rng.choice(S.k, size=2, replace=False)
            S = row_add(S, int(i), int(j), int(rng.integers(1, D)))
        elif pick == 1 and S.k >= 2:
            i, j = rng.choice(S.k, size=2, replace=False)
            S = row_swap(S, int(i), int(j))
        elif pick == 2:
            S = row_scale(S, int(rng.integers(S.k)), random_unit(rng, D))
        else:
            S = conjugate_presentation([random_gate(rng, D, n)], S)
    return S
