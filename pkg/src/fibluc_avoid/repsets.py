"""Representation counts ``n = p + t(m)`` and the avoider sets B, B_f, B_l.

``r_f(n)`` counts pairs (prime p, index m) with ``n = p + F(m)``; the two
indices 1 and 2 both give ``F = 1`` and are counted separately.  ``r_l`` is the
same with Lucas numbers.  B holds the n > 1 with both counts zero; B_f and B_l
only require the Fibonacci or the Lucas count to vanish.
"""
from __future__ import annotations

import enum
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from .errors import ResourceLimitError
from .primality import DEFAULT_POLICY, PrimalityPolicy, is_prime
from .sequences import FIB, LUCAS, SequenceKind

ENUMERATION_CAP = 10**9
SEGMENT = 1 << 22


class AvoiderSet(enum.Enum):
    B = "B"
    B_F = "B_f"
    B_L = "B_l"

    @property
    def kinds(self) -> tuple[SequenceKind, ...]:
        return {AvoiderSet.B: (FIB, LUCAS), AvoiderSet.B_F: (FIB,), AvoiderSet.B_L: (LUCAS,)}[self]

    @classmethod
    def parse(cls, value: "str | AvoiderSet") -> "AvoiderSet":
        if isinstance(value, cls):
            return value
        for member in cls:
            if member.value.lower() == str(value).strip().lower():
                return member
        raise ValueError(f"unknown avoider set {value!r}")


@dataclass(frozen=True)
class RepCounts:
    r_f: int
    r_l: int


def terms_up_to(kind: SequenceKind, bound: int) -> list[int]:
    """Terms ``t(0), t(1), ...`` that are ``<= bound``, one entry per index.

    Lucas starts 2, 1, 3, ... so the scan stops at the first term past the
    bound after index 1.
    """
    kind = SequenceKind.parse(kind)
    out = []
    a, b = kind.seeds
    idx = 0
    while a <= bound or idx < 2:
        if a <= bound:
            out.append(a)
        a, b = b, a + b
        idx += 1
    return out


def rep_count(kind: SequenceKind, n: int, policy: PrimalityPolicy = DEFAULT_POLICY) -> int:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return sum(1 for t in terms_up_to(kind, n - 2) if is_prime(n - t, policy))


def rep_counts(n: int, policy: PrimalityPolicy = DEFAULT_POLICY) -> RepCounts:
    return RepCounts(rep_count(FIB, n, policy), rep_count(LUCAS, n, policy))


def is_avoider(which: "AvoiderSet | str", n: int, policy: PrimalityPolicy = DEFAULT_POLICY) -> bool:
    which = AvoiderSet.parse(which)
    if n < 2:
        return False
    # any() short-circuits on the first prime n - t
    return not any(is_prime(n - t, policy) for kind in which.kinds for t in terms_up_to(kind, n - 2))


def _segment_mask(lo: int, hi: int, shifts: list[int], primes: np.ndarray) -> np.ndarray:
    # True where n in [lo, hi) has no prime n - t for any shift t.
    hit = np.zeros(hi - lo, dtype=bool)
    for t in shifts:
        if t >= hi - 2:
            continue
        start = max(lo, t + 2)
        hit[start - lo :] |= primes[start - t : hi - t]
    return ~hit


def avoider_mask(which: "AvoiderSet | str", limit: int, threads: int = 1) -> np.ndarray:
    """Boolean array ``a`` of length ``limit``; ``a[n]`` is membership of n.

    Built from one prime table plus the handful of sequence terms below the
    limit; no per-n primality tests.
    """
    which = AvoiderSet.parse(which)
    if limit > ENUMERATION_CAP:
        raise ResourceLimitError(f"limit {limit} exceeds cap {ENUMERATION_CAP}")
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    from .sieve import prime_table

    primes = prime_table(limit)
    shifts = sorted({t for kind in which.kinds for t in terms_up_to(kind, limit)})
    bounds = [(lo, min(lo + SEGMENT, limit)) for lo in range(0, limit, SEGMENT)]
    out = np.empty(limit, dtype=bool)

    def work(span):
        lo, hi = span
        out[lo:hi] = _segment_mask(lo, hi, shifts, primes)

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            list(pool.map(work, bounds))
    else:
        for span in bounds:
            work(span)
    out[:2] = False
    return out


def enumerate_avoiders(
    which: "AvoiderSet | str",
    limit: int,
    sink: Callable[[int], None] | None = None,
    threads: int = 1,
) -> int:
    """Count members of the avoider set in ``(1, limit)``, streaming each to ``sink`` in order."""
    members = np.flatnonzero(avoider_mask(which, limit, threads))
    if sink is not None:
        for n in members.tolist():
            sink(n)
    return int(members.size)


def iter_avoiders(which: "AvoiderSet | str", limit: int) -> Iterator[int]:
    yield from np.flatnonzero(avoider_mask(which, limit)).tolist()


@dataclass
class ProgressionCheck:
    ok: bool
    checked: int
    first_failure: int | None = None
    reason: str = ""
    seconds: float = 0.0
    policy: dict = field(default_factory=dict)

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "ok": self.ok,
            "checked": self.checked,
            "first_failure": self.first_failure,
            "reason": self.reason,
            "policy": self.policy,
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def check_progression(
    step: int,
    offset: int,
    which: "AvoiderSet | str",
    k_max: int,
    policy: PrimalityPolicy = DEFAULT_POLICY,
    progress: Callable[[int, int], None] | None = None,
) -> ProgressionCheck:
    """Test ``step*k + offset`` for membership for every ``0 <= k <= k_max``.

    Each value is tested directly through the primality routine, independent of
    any covering argument.  Stops at the first failing k.
    """
    which = AvoiderSet.parse(which)
    start = time.perf_counter()
    for k in range(k_max + 1):
        n = step * k + offset
        if n < 2:
            return ProgressionCheck(False, k, k, f"value {n} is below 2", time.perf_counter() - start, policy.describe())
        for kind in which.kinds:
            for t in terms_up_to(kind, n - 2):
                if is_prime(n - t, policy):
                    reason = f"{n} - {t} is prime ({kind.value})"
                    return ProgressionCheck(False, k, k, reason, time.perf_counter() - start, policy.describe())
        if progress is not None:
            progress(k, n)
    return ProgressionCheck(True, k_max + 1, None, "", time.perf_counter() - start, policy.describe())
