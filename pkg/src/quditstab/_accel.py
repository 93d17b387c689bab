"""Brute-force enumeration kernels with numba and pure-numpy backends.

Two enumerations dominate the runtime of the verification suites: the additive
row span of a matrix over Z_D and the multiplicative closure of a Pauli
generator set. Both are provided as numba @njit kernels with a pure-numpy
fallback. `QUDITSTAB_BACKEND` selects the path: "numba", "numpy", or "auto"
(default, numba when importable).

Vectors are encoded as mixed-radix int64 keys (base D), which bounds the
usable width to D**width < 2**62; that covers every desk-scale workload the
package targets.

Kernels return (array, completed). `completed` is False when the enumeration
would exceed `cap`; callers translate that into their own error types.
"""

from __future__ import annotations

import math
import os

import numpy as np

_ENV_FLAG = "QUDITSTAB_BACKEND"


def _check_encodable(D: int, width: int) -> None:
    if D**width >= 2**62:
        raise ValueError(
            f"cannot encode width-{width} vectors over Z_{D} in 64-bit keys"
        )


def _radix(D: int, width: int) -> np.ndarray:
    return D ** np.arange(width - 1, -1, -1, dtype=np.int64)


# ---------------------------------------------------------------------------
# pure-numpy backend


def _span_numpy(rows: np.ndarray, D: int, cap: int) -> tuple[np.ndarray, bool]:
    k, m = rows.shape
    radix = _radix(D, m)
    vecs = np.zeros((1, m), dtype=np.int64)
    for r in range(k):
        row = rows[r]
        g = math.gcd(D, int(np.gcd.reduce(row))) if m else D
        order = D // g
        if order == 1:
            continue
        mults = np.arange(order, dtype=np.int64)
        cand = (vecs[:, None, :] + mults[None, :, None] * row[None, None, :]) % D
        cand = cand.reshape(-1, m)
        _, idx = np.unique(cand @ radix, return_index=True)
        vecs = cand[idx]
        if vecs.shape[0] > cap:
            return vecs, False
    return vecs, True


def _closure_numpy(gens: np.ndarray, D: int, n: int, cap: int) -> tuple[np.ndarray, bool]:
    w = 2 * n + 1
    radix = _radix(D, w)
    elems = np.zeros((1, w), dtype=np.int64)
    visited = np.zeros(1, dtype=np.int64)
    frontier = elems
    while frontier.shape[0]:
        F = frontier
        lam = (F[:, 0:1] + gens[None, :, 0] - F[:, 1 + n :] @ gens[:, 1 : 1 + n].T) % D
        x = (F[:, None, 1 : 1 + n] + gens[None, :, 1 : 1 + n]) % D
        z = (F[:, None, 1 + n :] + gens[None, :, 1 + n :]) % D
        cand = np.concatenate([lam[:, :, None], x, z], axis=2).reshape(-1, w)
        enc_u, idx = np.unique(cand @ radix, return_index=True)
        fresh = ~np.isin(enc_u, visited, assume_unique=False)
        new = cand[idx][fresh]
        if not new.shape[0]:
            break
        if elems.shape[0] + new.shape[0] > cap:
            return np.concatenate([elems, new]), False
        visited = np.union1d(visited, enc_u[fresh])
        elems = np.concatenate([elems, new])
        frontier = new
    order = np.argsort(elems @ radix)
    return elems[order], True


# ---------------------------------------------------------------------------
# numba backend (compiled lazily at import when selected)


def _build_numba_kernels():
    from numba import njit

    @njit(cache=True)
    def span_kernel(rows, D, cap):  # pragma: no cover - exercised via dispatch
        k, m = rows.shape
        vecs = np.zeros((1, m), dtype=np.int64)
        for r in range(k):
            g = D
            for c in range(m):
                a, b = g, rows[r, c]
                while b:
                    a, b = b, a % b
                g = a
            order = D // g
            if order == 1:
                continue
            S = vecs.shape[0]
            total = S * order
            cand = np.empty((total, m), dtype=np.int64)
            enc = np.empty(total, dtype=np.int64)
            for s in range(S):
                for mu in range(order):
                    e = 0
                    base = s * order + mu
                    for c in range(m):
                        v = (vecs[s, c] + mu * rows[r, c]) % D
                        cand[base, c] = v
                        e = e * D + v
                    enc[base] = e
            pos = np.argsort(enc)
            count = 0
            prev = np.int64(-1)
            keep = np.empty(total, dtype=np.int64)
            for t in range(total):
                e = enc[pos[t]]
                if e != prev:
                    keep[count] = pos[t]
                    count += 1
                    prev = e
            vecs = cand[keep[:count]]
            if count > cap:
                return vecs, False
        return vecs, True

    @njit(cache=True)
    def closure_kernel(gens, D, n, cap):  # pragma: no cover - exercised via dispatch
        k = gens.shape[0]
        w = 2 * n + 1
        # grow geometrically; an upfront cap-sized block would memset the
        # whole safety bound on every call
        elems = np.zeros((min(cap, 1024), w), dtype=np.int64)
        seen = dict()
        seen[np.int64(0)] = True
        tail = 1
        head = 0
        while head < tail:
            for gi in range(k):
                dot = 0
                for c in range(n):
                    dot += elems[head, 1 + n + c] * gens[gi, 1 + c]
                lam = (elems[head, 0] + gens[gi, 0] - dot) % D
                e = lam
                for c in range(n):
                    v = (elems[head, 1 + c] + gens[gi, 1 + c]) % D
                    e = e * D + v
                for c in range(n):
                    v = (elems[head, 1 + n + c] + gens[gi, 1 + n + c]) % D
                    e = e * D + v
                if e not in seen:
                    if tail >= cap:
                        return elems[:tail], False
                    if tail >= elems.shape[0]:
                        grown = np.empty((min(2 * elems.shape[0], cap), w), dtype=np.int64)
                        grown[:tail] = elems
                        elems = grown
                    seen[e] = True
                    elems[tail, 0] = lam
                    for c in range(n):
                        elems[tail, 1 + c] = (elems[head, 1 + c] + gens[gi, 1 + c]) % D
                        elems[tail, 1 + n + c] = (
                            elems[head, 1 + n + c] + gens[gi, 1 + n + c]
                        ) % D
                    tail += 1
            head += 1
        enc = np.empty(tail, dtype=np.int64)
        for t in range(tail):
            e = np.int64(0)
            for c in range(w):
                e = e * D + elems[t, c]
            enc[t] = e
        order = np.argsort(enc)
        return elems[:tail][order], True

    return span_kernel, closure_kernel


def _resolve_backend() -> tuple[str, object, object]:
    choice = os.environ.get(_ENV_FLAG, "auto").strip().lower()
    if choice not in {"auto", "numba", "numpy"}:
        raise ValueError(f"{_ENV_FLAG} must be auto, numba, or numpy; got {choice!r}")
    if choice == "numpy":
        return "numpy", _span_numpy, _closure_numpy
    try:
        span_kernel, closure_kernel = _build_numba_kernels()
        return "numba", span_kernel, closure_kernel
    except ImportError:
        if choice == "numba":
            raise
        return "numpy", _span_numpy, _closure_numpy


BACKEND, _span_impl, _closure_impl = _resolve_backend()


# ---------------------------------------------------------------------------
# public dispatchers


def additive_span(rows, D: int, cap: int) -> tuple[np.ndarray, bool]:
    """Enumerate the additive span of `rows` over Z_D.

    Returns (vectors sorted by mixed-radix encoding, completed). `completed`
    is False when the span exceeds `cap` elements; the array then holds a
    partial result whose only guarantee is len > cap.
    """
    rows = np.asarray(rows, dtype=np.int64) % D
    if rows.ndim != 2:
        raise ValueError("rows must be a 2-d array")
    _check_encodable(D, rows.shape[1])
    if rows.shape[1] == 0:
        return np.zeros((1, 0), dtype=np.int64), True
    return _span_impl(np.ascontiguousarray(rows), D, cap)


def pauli_closure(gens, D: int, n: int, cap: int) -> tuple[np.ndarray, bool]:
    """Close a set of (phase | x | z) rows under Pauli composition over Z_D.

    Each row has width 2n+1. Composition follows the canonical-form product
    rule: phases add minus the z.x cross term, exponent vectors add. Returns
    (rows sorted by mixed-radix encoding, completed); the identity row is
    always included.
    """
    gens = np.asarray(gens, dtype=np.int64) % D
    if gens.ndim != 2 or gens.shape[1] != 2 * n + 1:
        raise ValueError(f"generator rows must have width {2 * n + 1}")
    _check_encodable(D, 2 * n + 1)
    return _closure_impl(np.ascontiguousarray(gens), D, n, max(int(cap), 1))


# both implementations, for the benchmark and the agreement tests
IMPLEMENTATIONS: dict[str, tuple[object, object]] = {"numpy": (_span_numpy, _closure_numpy)}
if BACKEND == "numba":
    IMPLEMENTATIONS["numba"] = (_span_impl, _closure_impl)
else:
    try:
        IMPLEMENTATIONS["numba"] = _build_numba_kernels()
    except ImportError:
        pass
