"""Residue classes and covering systems.

A system covers the integers iff it covers every residue modulo the lcm of its
moduli, so the check is a boolean sweep over ``[0, lcm)``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import ResourceLimitError

DEFAULT_LCM_CAP = 10**9


@dataclass(frozen=True)
class CongruenceClass:
    """The class ``a (mod m)``; ``a`` is reduced into ``[0, m)`` on construction."""

    a: int
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"modulus must be positive, got {self.m}")
        object.__setattr__(self, "a", self.a % self.m)

    def contains(self, n: int) -> bool:
        return n % self.m == self.a

    def __str__(self):
        return f"{self.a} (mod {self.m})"


@dataclass(frozen=True)
class CoveringSystem:
    classes: tuple[CongruenceClass, ...]
    name: str = ""

    def __post_init__(self):
        classes = tuple(c if isinstance(c, CongruenceClass) else CongruenceClass(*c) for c in self.classes)
        if not classes:
            raise ValueError("a system needs at least one class")
        object.__setattr__(self, "classes", classes)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], name: str = "") -> "CoveringSystem":
        return cls(tuple(CongruenceClass(a, m) for a, m in pairs), name)

    @classmethod
    def from_json(cls, data: "str | dict") -> "CoveringSystem":
        if isinstance(data, str):
            data = json.loads(data)
        classes = data["classes"]
        return cls(tuple(CongruenceClass(int(c["a"]), int(c["m"])) for c in classes), data.get("name", ""))

    def to_json(self) -> dict:
        return {"classes": [{"a": c.a, "m": c.m} for c in self.classes]}

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)


@dataclass
class CoverReport:
    covers: bool
    lcm: int
    uncovered_witness: int | None
    multiplicity_min: int
    multiplicity_max: int
    duplicates: list[CongruenceClass] = field(default_factory=list)
    has_trivial_class: bool = False

    def to_json(self) -> dict:
        return {
            "covers": self.covers,
            "lcm": str(self.lcm),
            "uncovered_witness": None if self.uncovered_witness is None else str(self.uncovered_witness),
            "multiplicity_min": self.multiplicity_min,
            "multiplicity_max": self.multiplicity_max,
            "duplicates": [{"a": c.a, "m": c.m} for c in self.duplicates],
            "has_trivial_class": self.has_trivial_class,
        }


def lcm_moduli(system: CoveringSystem) -> int:
    return math.lcm(*(c.m for c in system.classes))


def is_covering(system: CoveringSystem, lcm_cap: int = DEFAULT_LCM_CAP) -> CoverReport:
    """Decide whether ``system`` covers every integer.

    Counts, for each residue mod the lcm, how many classes contain it.  The
    least uncovered residue is reported as a witness when coverage fails.
    """
    period = lcm_moduli(system)
    if period > lcm_cap:
        raise ResourceLimitError(f"lcm {period} exceeds cap {lcm_cap}")
    counts = np.zeros(period, dtype=np.int32)
    for c in system.classes:
        counts[c.a :: c.m] += 1
    lo, hi = int(counts.min()), int(counts.max())
    witness = None
    if lo == 0:
        witness = int(np.flatnonzero(counts == 0)[0])
    seen, dups = set(), []
    for c in system.classes:
        if c in seen:
            dups.append(c)
        seen.add(c)
    return CoverReport(
        covers=lo > 0,
        lcm=period,
        uncovered_witness=witness,
        multiplicity_min=lo,
        multiplicity_max=hi,
        duplicates=dups,
        has_trivial_class=any(c.m == 1 for c in system.classes),
    )


def uncovered_residues(system: CoveringSystem) -> list[int]:
    """Residues mod the lcm that no class contains (plain loop, no numpy)."""
    period = lcm_moduli(system)
    return [n for n in range(period) if not any(c.contains(n) for c in system.classes)]
