"""Slow, obviously-correct reference implementations used as test oracles."""
import math


def iterate_terms(seeds, count):
    a, b = seeds
    out = []
    for _ in range(count):
        out.append(a)
        a, b = b, a + b
    return out


def iterate_mod(seeds, index, modulus):
    a, b = seeds[0] % modulus, seeds[1] % modulus
    for _ in range(index):
        a, b = b, (a + b) % modulus
    return a


def brute_period(seeds, d):
    s0, s1 = seeds[0] % d, seeds[1] % d
    k, a, b = 0, s0, s1
    while True:
        a, b = b, (a + b) % d
        k += 1
        if (a, b) == (s0, s1):
            return k


def trial_division_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def brute_rep_count(seeds, n):
    count, idx = 0, 0
    a, b = seeds
    while a <= n or idx < 2:
        if a <= n and trial_division_prime(n - a):
            count += 1
        a, b = b, a + b
        idx += 1
    return count
