"""Benchmark the enumeration kernels: pure numpy vs numba.

Times additive_span and pauli_closure workloads against both entries of
quditstab._accel.IMPLEMENTATIONS and prints key=value lines. The numba
kernels are warmed up before timing so JIT compilation is not measured.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from quditstab import IMPLEMENTATIONS


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--span-d", type=int, default=4)
    ap.add_argument("--span-rows", type=int, default=9)
    ap.add_argument("--span-width", type=int, default=20)
    ap.add_argument("--closure-d", type=int, default=4)
    ap.add_argument("--closure-n", type=int, default=6)
    ap.add_argument("--closure-gens", type=int, default=8)
    ap.add_argument("--cap", type=int, default=2_000_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    span_rows = np.ascontiguousarray(
        rng.integers(0, args.span_d, size=(args.span_rows, args.span_width)), dtype=np.int64
    )
    closure_gens = np.ascontiguousarray(
        rng.integers(0, args.closure_d, size=(args.closure_gens, 2 * args.closure_n + 1)),
        dtype=np.int64,
    )

    print(f"backends={','.join(sorted(IMPLEMENTATIONS))}")
    results = {}
    for name, (span_impl, closure_impl) in sorted(IMPLEMENTATIONS.items()):
        span_impl(span_rows[:1], args.span_d, args.cap)  # warmup / JIT
        closure_impl(closure_gens[:1], args.closure_d, args.closure_n, args.cap)
        t, (vecs, completed) = best_of(
            lambda: span_impl(span_rows, args.span_d, args.cap), args.repeats
        )
        assert completed, "raise --cap: span workload was truncated"
        results[f"span_{name}"] = t
        print(f"span_{name}_best_s={t:.6f}")
        print(f"span_{name}_elems={vecs.shape[0]}")
        t, (rows, completed) = best_of(
            lambda: closure_impl(closure_gens, args.closure_d, args.closure_n, args.cap),
            args.repeats,
        )
        assert completed, "raise --cap: closure workload was truncated"
        results[f"closure_{name}"] = t
        print(f"closure_{name}_best_s={t:.6f}")
        print(f"closure_{name}_elems={rows.shape[0]}")
    if "span_numba" in results:
        print(f"span_speedup={results['span_numpy'] / results['span_numba']:.2f}")
        print(f"closure_speedup={results['closure_numpy'] / results['closure_numba']:.2f}")


if __name__ == "__main__":
    main()
