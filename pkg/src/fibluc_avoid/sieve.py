"""Sieve of Eratosthenes as a numpy boolean table."""
from __future__ import annotations

import math

import numpy as np


def prime_table(limit: int) -> np.ndarray:
    """Boolean array ``t`` of length ``limit`` with ``t[n]`` true iff n is prime."""
    table = np.ones(max(limit, 2), dtype=bool)
    table[:2] = False
    table[4::2] = False
    for p in range(3, math.isqrt(limit - 1) + 1 if limit > 1 else 0, 2):
        if table[p]:
            table[p * p :: 2 * p] = False
    return table[:limit]


def primes_below(limit: int) -> np.ndarray:
    return np.flatnonzero(prime_table(limit))
