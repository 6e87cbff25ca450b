"""Fibonacci and Lucas numbers: exact terms, residues, periods and residue tables.

Both sequences obey ``t(n) = t(n-1) + t(n-2)``; they differ only in the seeds
``(0, 1)`` for Fibonacci and ``(2, 1)`` for Lucas.  Terms are evaluated by fast
doubling on the Fibonacci pair ``(F(n), F(n+1))`` and the Lucas value is read
off with ``L(n) = 2 F(n+1) - F(n)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import InvalidModulusError, ResourceLimitError

MAX_INDEX = 2**64 - 1
CHI_SCAN_CAP = 10**8


class SequenceKind(enum.Enum):
    FIBONACCI = "fib"
    LUCAS = "lucas"

    @property
    def seeds(self) -> tuple[int, int]:
        return (0, 1) if self is SequenceKind.FIBONACCI else (2, 1)

    @classmethod
    def parse(cls, value: "str | SequenceKind") -> "SequenceKind":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        if key in ("fib", "f", "fibonacci"):
            return cls.FIBONACCI
        if key in ("lucas", "luc", "l"):
            return cls.LUCAS
        raise ValueError(f"unknown sequence kind {value!r}")


FIB = SequenceKind.FIBONACCI
LUCAS = SequenceKind.LUCAS


@dataclass(frozen=True)
class IndexProgression:
    """The index set ``{step*k + offset : k >= 0}``."""

    offset: int
    step: int

    def __post_init__(self):
        if self.step < 1:
            raise ValueError(f"step must be positive, got {self.step}")
        if not 0 <= self.offset < self.step:
            raise ValueError(f"offset {self.offset} not in [0, {self.step})")


def _check_index(index: int) -> None:
    if index < 0 or index > MAX_INDEX:
        raise ValueError(f"index {index} outside [0, 2**64)")


def _check_modulus(modulus: int) -> None:
    if modulus < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {modulus}")


def _fib_pair(n: int, modulus: int | None = None) -> tuple[int, int]:
    # (F(n), F(n+1)), optionally reduced; walks the bits of n from the top.
    a, b = 0, 1
    for bit in bin(n)[2:]:
        c = a * (2 * b - a)
        d = a * a + b * b
        if modulus is not None:
            c %= modulus
            d %= modulus
        if bit == "1":
            a, b = d, c + d
            if modulus is not None:
                b %= modulus
        else:
            a, b = c, d
    return a, b


def _from_pair(kind: SequenceKind, f0: int, f1: int) -> int:
    if kind is FIB:
        return f0
    return 2 * f1 - f0


def term(kind: SequenceKind, index: int) -> int:
    """Exact ``index``-th Fibonacci or Lucas number."""
    kind = SequenceKind.parse(kind)
    _check_index(index)
    return _from_pair(kind, *_fib_pair(index))


def term_mod(kind: SequenceKind, index: int, modulus: int) -> int:
    """``term(kind, index) % modulus`` without forming the exact term."""
    kind = SequenceKind.parse(kind)
    _check_modulus(modulus)
    _check_index(index)
    return _from_pair(kind, *_fib_pair(index, modulus)) % modulus


def chi(kind: SequenceKind, d: int, scan_cap: int = CHI_SCAN_CAP) -> int:
    """Least ``k > 0`` with ``t(k) = t(0)`` and ``t(k+1) = t(1)`` modulo ``d``.

    This is the exact period of the sequence mod ``d``.  Found by stepping the
    recurrence; raises ResourceLimitError after ``scan_cap`` steps.
    """
    kind = SequenceKind.parse(kind)
    _check_modulus(d)
    s0, s1 = (x % d for x in kind.seeds)
    x, y = s0, s1
    for k in range(1, scan_cap + 1):
        x, y = y, (x + y) % d
        if x == s0 and y == s1:
            return k
    raise ResourceLimitError(f"period of {kind.value} mod {d} exceeds {scan_cap}")


def residue_table(kind: SequenceKind, aux_modulus: int) -> list[int]:
    """Residues of terms 1 .. chi(kind, aux_modulus), in index order.

    Laid out the same way as the printed tables: entry ``i - 1`` holds
    ``t(i) mod aux_modulus`` and the last entry is ``t(period) = t(0)``.
    """
    kind = SequenceKind.parse(kind)
    period = chi(kind, aux_modulus)
    s0, s1 = (x % aux_modulus for x in kind.seeds)
    out = []
    x, y = s0, s1
    for _ in range(period):
        x, y = y, (x + y) % aux_modulus
        out.append(x)
    return out


def residue_class_set(kind: SequenceKind, aux_modulus: int, prog: IndexProgression) -> frozenset[int]:
    """All residues mod ``aux_modulus`` taken by terms with index in ``prog``."""
    kind = SequenceKind.parse(kind)
    period = chi(kind, aux_modulus)
    orbit = math.lcm(prog.step, period) // prog.step
    cycle = [kind.seeds[0] % aux_modulus] + residue_table(kind, aux_modulus)[:-1]
    return frozenset(cycle[(prog.offset + prog.step * k) % period] for k in range(orbit))


def attained_residues(kind: SequenceKind, modulus: int) -> frozenset[int]:
    """Every residue the sequence reaches modulo ``modulus``."""
    return residue_class_set(kind, modulus, IndexProgression(0, 1))
