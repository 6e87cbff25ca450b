"""Primality testing.

Below ``deterministic_bound`` (default 2**64) a Miller-Rabin test on the first
twelve prime bases is exact.  Above it the verdict is Baillie-PSW (strong base-2
probable prime plus strong Lucas probable prime with Selfridge parameters),
optionally followed by extra random Miller-Rabin rounds.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)
# Exact for every n < 3.18e23 (Sorenson-Webster), which includes all 64-bit n.
DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class PrimalityPolicy:
    deterministic_bound: int = 2**64
    extra_rounds: int = 0
    seed: int = 0

    def describe(self) -> dict:
        return {
            "deterministic_below": str(self.deterministic_bound),
            "above": "strong base-2 + strong Lucas (Selfridge)",
            "extra_random_rounds": self.extra_rounds,
        }


DEFAULT_POLICY = PrimalityPolicy()


def _strong_probable_prime(n: int, base: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    """Strong Lucas test for odd n > 2 that is not a perfect square."""
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4

    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def half(x: int) -> int:
        return (x if x % 2 == 0 else x + n) // 2 % n

    # U_k, V_k, Q^k for k = d by left-to-right binary ladder
    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half(P * U + V), half(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int, policy: PrimalityPolicy = DEFAULT_POLICY) -> bool:
    if n < 2:
        return False
    for p in SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 97 * 97:
        return True
    if n < policy.deterministic_bound:
        return all(_strong_probable_prime(n, b) for b in DETERMINISTIC_BASES)
    if not _strong_probable_prime(n, 2):
        return False
    if math.isqrt(n) ** 2 == n:
        return False
    if not _strong_lucas_probable_prime(n):
        return False
    rng = random.Random(policy.seed ^ n)
    return all(_strong_probable_prime(n, rng.randrange(2, n - 1)) for _ in range(policy.extra_rounds))
