"""Shared configuration for dense (brute-force) computations."""

from __future__ import annotations

import os

DEFAULT_DENSE_BOUND = 256
_ENV_BOUND = "QUDITSTAB_ORACLE_BOUND"


def dense_bound(bound: int | None = None) -> int:
    """Resolve the dense-dimension bound: explicit arg, else env var, else 256."""
    if bound is not None:
        return int(bound)
    raw = os.environ.get(_ENV_BOUND, "").strip()
    return int(raw) if raw else DEFAULT_DENSE_BOUND
