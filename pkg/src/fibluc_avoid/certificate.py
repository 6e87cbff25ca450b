"""Avoidance certificates: clause lists, their verification and the CRT progression.

A clause ``(a, m, r, p)`` for a sequence t states that ``t(mk + a) = r (mod p)``
for every k, where m is the period of t modulo p.  If the index classes
``a (mod m)`` cover the integers and x = r (mod p) for every clause, then any
representation ``x = prime + t(j)`` forces the prime to be a clause prime p
(it is divisible by p).  An auxiliary prime q then rules that out: the residue
``(x - p) mod q`` is never reached by t on the index class of the clause.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .covering import CongruenceClass, CoverReport, CoveringSystem, is_covering
from .errors import InconsistencyError
from .primality import DEFAULT_POLICY, PrimalityPolicy, is_prime
from .sequences import FIB, LUCAS, IndexProgression, SequenceKind, chi, residue_class_set, term_mod


@dataclass(frozen=True)
class Clause:
    kind: SequenceKind
    a: int
    m: int
    r: int
    p: int

    @property
    def index_class(self) -> CongruenceClass:
        return CongruenceClass(self.a, self.m)

    def label(self) -> str:
        suffix = "f" if self.kind is FIB else "l"
        return f"({self.a},{self.m},{self.r},{self.p})_{suffix}"

    def to_json(self) -> dict:
        return {"a": self.a, "m": self.m, "r": str(self.r), "p": str(self.p)}

    @classmethod
    def from_json(cls, kind: SequenceKind, data: dict) -> "Clause":
        return cls(kind, int(data["a"]), int(data["m"]), int(data["r"]), int(data["p"]))


def fib_clauses(quads: Iterable[tuple[int, int, int, int]]) -> list[Clause]:
    return [Clause(FIB, *q) for q in quads]


def lucas_clauses(quads: Iterable[tuple[int, int, int, int]]) -> list[Clause]:
    return [Clause(LUCAS, *q) for q in quads]


@dataclass
class AvoidanceCertificate:
    fib_clauses: list[Clause] = field(default_factory=list)
    lucas_clauses: list[Clause] = field(default_factory=list)
    aux_fib: list[int] = field(default_factory=list)
    aux_lucas: list[int] = field(default_factory=list)
    scale: int = 1
    label: str = ""

    @property
    def clauses(self) -> list[Clause]:
        return list(self.fib_clauses) + list(self.lucas_clauses)

    def aux_for(self, kind: SequenceKind) -> list[int]:
        return self.aux_fib if kind is FIB else self.aux_lucas

    def target_set(self) -> str:
        if self.fib_clauses and self.lucas_clauses:
            return "B"
        return "B_f" if self.fib_clauses else "B_l"

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "scale": str(self.scale),
            "fib_clauses": [c.to_json() for c in self.fib_clauses],
            "lucas_clauses": [c.to_json() for c in self.lucas_clauses],
            "aux_fib": [str(q) for q in self.aux_fib],
            "aux_lucas": [str(q) for q in self.aux_lucas],
        }

    @classmethod
    def from_json(cls, data: "str | dict") -> "AvoidanceCertificate":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            fib_clauses=[Clause.from_json(FIB, c) for c in data.get("fib_clauses", [])],
            lucas_clauses=[Clause.from_json(LUCAS, c) for c in data.get("lucas_clauses", [])],
            aux_fib=[int(q) for q in data.get("aux_fib", [])],
            aux_lucas=[int(q) for q in data.get("aux_lucas", [])],
            scale=int(data.get("scale", 1)),
            label=data.get("label", ""),
        )


@dataclass(frozen=True)
class Progression:
    step: int
    offset: int

    def __post_init__(self):
        if self.step < 1:
            raise ValueError("step must be positive")
        if not 0 <= self.offset < self.step:
            raise ValueError("offset must lie in [0, step)")

    def __getitem__(self, k: int) -> int:
        return self.step * k + self.offset

    def to_json(self) -> dict:
        return {"S": str(self.step), "T": str(self.offset)}


@dataclass(frozen=True)
class ContradictionWitness:
    clause_index: int
    clause: Clause
    aux_prime: int
    needed: int
    attained: frozenset[int]

    def to_json(self) -> dict:
        return {
            "clause_index": self.clause_index,
            "clause": self.clause.label(),
            "aux_prime": str(self.aux_prime),
            "needed_residue": self.needed,
            "attained": sorted(self.attained),
        }


@dataclass(frozen=True)
class Failure:
    stage: int
    subject: str
    message: str

    def to_json(self) -> dict:
        return {"stage": self.stage, "subject": self.subject, "message": self.message}


@dataclass
class VerificationReport:
    label: str
    target: str
    progression: Progression | None = None
    base: Progression | None = None
    covering_reports: dict[str, CoverReport] = field(default_factory=dict)
    period_checks: list[tuple[str, int, bool]] = field(default_factory=list)
    residue_checks: list[tuple[str, int, bool]] = field(default_factory=list)
    primality_checks: list[tuple[int, bool]] = field(default_factory=list)
    consolidated: list[tuple[int, int]] = field(default_factory=list)
    witnesses: list[ContradictionWitness] = field(default_factory=list)
    alternative_witnesses: list[ContradictionWitness] = field(default_factory=list)
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.progression is not None

    def failed_stages(self) -> list[int]:
        return sorted({f.stage for f in self.failures})

    def to_json(self, verbose: bool = False) -> dict:
        out = {
            "label": self.label,
            "target": self.target,
            "ok": self.ok,
            "progression": None if self.progression is None else self.progression.to_json(),
            "base_progression": None if self.base is None else self.base.to_json(),
            "covering": {k: v.to_json() for k, v in self.covering_reports.items()},
            "consolidated": [{"r": str(r), "p": str(p)} for r, p in self.consolidated],
            "period_checks": [{"clause": c, "chi": str(v), "ok": ok} for c, v, ok in self.period_checks],
            "residue_checks": [{"clause": c, "residue": str(v), "ok": ok} for c, v, ok in self.residue_checks],
            "primality_checks": [{"p": str(p), "prime": ok} for p, ok in self.primality_checks],
            "witnesses": [w.to_json() for w in self.witnesses],
            "failures": [f.to_json() for f in self.failures],
        }
        if verbose:
            out["alternative_witnesses"] = [w.to_json() for w in self.alternative_witnesses]
        return out

    def to_text(self, verbose: bool = False) -> str:
        lines = [f"certificate {self.label or '<unnamed>'} (target {self.target})"]
        for name, rep in self.covering_reports.items():
            status = "covers" if rep.covers else f"NOT covering, witness {rep.uncovered_witness}"
            lines.append(f"  {name} index classes: lcm {rep.lcm}, {status}")
        n_per = sum(ok for _, _, ok in self.period_checks)
        n_res = sum(ok for _, _, ok in self.residue_checks)
        lines.append(f"  periods: {n_per}/{len(self.period_checks)} ok; residues: {n_res}/{len(self.residue_checks)} ok")
        lines.append(f"  distinct primes: {len(self.consolidated)}")
        if self.progression is not None:
            lines.append(f"  S = {self.progression.step}")
            lines.append(f"  T = {self.progression.offset}")
        for w in self.witnesses:
            lines.append(f"  {w.clause.label():>60}  needs {w.needed} mod {w.aux_prime}, attained {sorted(w.attained)}")
        if verbose:
            for w in self.alternative_witnesses:
                lines.append(f"  (also) {w.clause.label()} via {w.aux_prime}: needs {w.needed}")
        for f in self.failures:
            lines.append(f"  FAIL stage {f.stage} [{f.subject}]: {f.message}")
        lines.append("  VERIFIED" if self.ok else "  NOT VERIFIED")
        return "\n".join(lines)


def crt_solve(pairs: Sequence[tuple[int, int]]) -> Progression:
    """Solve ``x = r (mod n)`` for every ``(r, n)`` in ``pairs``.

    Pairs with non-coprime moduli are merged when they agree on the common
    factor; otherwise InconsistencyError names the clash.
    """
    x, mod = 0, 1
    seen: list[tuple[int, int]] = []
    for r, n in pairs:
        if n < 1:
            raise ValueError(f"modulus must be positive, got {n}")
        r %= n
        g = math.gcd(mod, n)
        if (r - x) % g:
            # pairwise consistency suffices for solvability, so some earlier pair clashes
            other = next(s for s in seen if (s[0] - r) % math.gcd(s[1], n))
            raise InconsistencyError(f"{r} (mod {n}) clashes with {other[0]} (mod {other[1]})")
        # x + mod*t = r (mod n)  =>  t = (r - x)/g * inv(mod/g) (mod n/g)
        n_g = n // g
        t = (r - x) // g * pow(mod // g, -1, n_g) % n_g if n_g > 1 else 0
        x += mod * t
        mod *= n_g
        x %= mod
        seen.append((r, n))
    return Progression(mod, x)


def consolidate_residues(cert: AvoidanceCertificate) -> list[tuple[int, int]]:
    """One ``(residue, prime)`` pair per distinct clause prime, in first-seen order."""
    found: dict[int, tuple[int, Clause]] = {}
    for c in cert.clauses:
        if c.p in found and found[c.p][0] != c.r % c.p:
            prev = found[c.p][1]
            raise InconsistencyError(f"prime {c.p}: residue {c.r} in {c.label()} but {prev.r} in {prev.label()}")
        found.setdefault(c.p, (c.r % c.p, c))
    return [(r, p) for p, (r, _) in found.items()]


def _base_pairs(consolidated: list[tuple[int, int]], scale: int) -> list[tuple[int, int]]:
    # x = scale * y; congruences on x become congruences on y for primes not dividing scale
    pairs = []
    for r, p in consolidated:
        if scale % p == 0:
            continue
        pairs.append((r * pow(scale, -1, p) % p, p))
    return pairs


def find_witnesses(
    cert: AvoidanceCertificate, offset: int, index: int, clause: Clause
) -> list[ContradictionWitness]:
    """Every auxiliary prime that kills a representation through ``clause``."""
    found = []
    prog = IndexProgression(clause.a, clause.m)
    for q in cert.aux_for(clause.kind):
        needed = (offset - clause.p) % q
        attained = residue_class_set(clause.kind, q, prog)
        if needed not in attained:
            found.append(ContradictionWitness(index, clause, q, needed, attained))
    return found


def verify_certificate(cert: AvoidanceCertificate, policy: PrimalityPolicy = DEFAULT_POLICY) -> VerificationReport:
    """Check every step of the certificate and derive its progression.

    Stages: 1 covering of index classes, 2 clause periods/residues/primality,
    3 residue consolidation, 4 CRT, 5 clause congruences on the progression,
    6 a contradiction witness per clause.  Failures are collected, not raised.
    """
    rep = VerificationReport(cert.label, cert.target_set())
    fail = rep.failures.append

    if not cert.clauses:
        fail(Failure(1, "certificate", "no clauses"))
        return rep
    if cert.scale < 1:
        fail(Failure(4, "scale", f"scale must be positive, got {cert.scale}"))
        return rep

    for name, family in (("fib", cert.fib_clauses), ("lucas", cert.lucas_clauses)):
        if not family:
            continue
        cover = is_covering(CoveringSystem(tuple(c.index_class for c in family), name))
        rep.covering_reports[name] = cover
        if not cover.covers:
            fail(Failure(1, name, f"index classes miss residue {cover.uncovered_witness} (mod {cover.lcm})"))

    prime_cache: dict[int, bool] = {}
    for c in cert.clauses:
        label = c.label()
        if c.p not in prime_cache:
            prime_cache[c.p] = is_prime(c.p, policy)
            rep.primality_checks.append((c.p, prime_cache[c.p]))
        if not prime_cache[c.p]:
            fail(Failure(2, label, f"{c.p} is not prime"))
            continue
        if not (0 <= c.a < c.m and 0 <= c.r < c.p):
            fail(Failure(2, label, "clause fields out of range"))
            continue
        period = chi(c.kind, c.p)
        rep.period_checks.append((label, period, period == c.m))
        if period != c.m:
            fail(Failure(2, label, f"period of {c.kind.value} mod {c.p} is {period}, not {c.m}"))
        got = term_mod(c.kind, c.a, c.p)
        rep.residue_checks.append((label, got, got == c.r))
        if got != c.r:
            fail(Failure(2, label, f"{c.kind.value}({c.a}) mod {c.p} is {got}, not {c.r}"))

    for kind, family in ((FIB, cert.aux_fib), (LUCAS, cert.aux_lucas)):
        primes = {c.p for c in cert.clauses if c.kind is kind}
        for q in family:
            if q not in primes:
                fail(Failure(6, f"aux {q}", f"auxiliary prime {q} is not a {kind.value} clause prime"))

    try:
        rep.consolidated = consolidate_residues(cert)
    except InconsistencyError as exc:
        fail(Failure(3, "consolidation", str(exc)))
        return rep

    try:
        base = crt_solve(_base_pairs(rep.consolidated, cert.scale))
    except (InconsistencyError, ValueError) as exc:
        fail(Failure(4, "crt", str(exc)))
        return rep
    rep.base = base
    step = cert.scale * base.step
    rep.progression = Progression(step, cert.scale * base.offset % step)
    S, T = rep.progression.step, rep.progression.offset

    for c in cert.clauses:
        if S % c.p or T % c.p != c.r:
            fail(Failure(5, c.label(), f"progression is not {c.r} (mod {c.p})"))

    for i, c in enumerate(cert.clauses):
        found = find_witnesses(cert, T, i, c)
        if not found:
            fail(Failure(6, c.label(), "no auxiliary prime yields a contradiction"))
            continue
        rep.witnesses.append(found[0])
        rep.alternative_witnesses.extend(found[1:])
    return rep
