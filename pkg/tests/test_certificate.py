import dataclasses
import math

import pytest
from hypothesis import given, settings, strategies as st

from fibluc_avoid.builtins import (
    CERTIFICATES, EXPECTED_PROGRESSIONS, FIB_QUADS, LUCAS_QUADS, builtin_certificate, builtin_certificates,
)
from fibluc_avoid.certificate import (
    AvoidanceCertificate, Clause, Progression, consolidate_residues, crt_solve, fib_clauses, lucas_clauses,
    verify_certificate,
)
from fibluc_avoid.errors import InconsistencyError
from fibluc_avoid.sequences import FIB, LUCAS, term_mod
from oracles import brute_period, iterate_mod


@pytest.fixture(scope="module")
def reports():
    return {c.label: verify_certificate(c) for c in builtin_certificates()}


def test_crt_small():
    assert crt_solve([(1, 2), (2, 3)]) == Progression(6, 5)
    assert crt_solve([(0, 1)]) == Progression(1, 0)
    assert crt_solve([]) == Progression(1, 0)


def test_crt_merges_consistent_non_coprime():
    assert crt_solve([(1, 4), (3, 6)]) == Progression(12, 9)


def test_crt_inconsistent_names_pair():
    with pytest.raises(InconsistencyError, match=r"2 \(mod 6\).*1 \(mod 4\)"):
        crt_solve([(1, 4), (2, 6)])


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 10**6), st.sampled_from([1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 18, 20, 21, 24, 28, 30, 36])),
                min_size=1, max_size=6))
def test_crt_against_brute_force(pairs):
    mod = math.lcm(*(n for _, n in pairs))
    solutions = [x for x in range(mod) if all(x % n == r % n for r, n in pairs)]
    if solutions:
        assert crt_solve(pairs) == Progression(mod, solutions[0])
    else:
        with pytest.raises(InconsistencyError):
            crt_solve(pairs)


def test_consolidate_theorem1():
    pairs = consolidate_residues(builtin_certificate("theorem1"))
    assert len(pairs) == 22
    for pair in [(2, 3), (6, 7), (9, 17), (15, 19), (0, 23), (46, 47)]:
        assert pair in pairs


def test_consolidate_clash():
    cert = AvoidanceCertificate(fib_clauses([(3, 8, 1, 3)]), lucas_clauses([(0, 8, 2, 3)]))
    with pytest.raises(InconsistencyError, match="prime 3"):
        consolidate_residues(cert)


def test_consolidate_single():
    assert consolidate_residues(AvoidanceCertificate(fib_clauses([(1, 3, 1, 2)]))) == [(1, 2)]


def test_clause_invariants_independently():
    for kind, quads in ((FIB, FIB_QUADS), (LUCAS, LUCAS_QUADS)):
        for a, m, r, p in quads:
            if p < 10**6:
                assert brute_period(kind.seeds, p) == m
                assert iterate_mod(kind.seeds, a, p) == r
            for k in range(4):
                assert term_mod(kind, m * k + a, p) == r


@pytest.mark.parametrize("name", sorted(CERTIFICATES))
def test_builtins_verify(reports, name):
    report = reports[name]
    assert report.ok, report.failures
    assert (report.progression.step, report.progression.offset) == EXPECTED_PROGRESSIONS[name]
    assert len(report.witnesses) == len(builtin_certificate(name).clauses)


@pytest.mark.parametrize("name", sorted(CERTIFICATES))
def test_crt_round_trip(reports, name):
    report = reports[name]
    S, T = report.progression.step, report.progression.offset
    for r, p in report.consolidated:
        assert S % p == 0
        for k in range(3):
            assert (S * k + T) % p == r


def test_theorem1_step_is_product_of_primes(reports):
    primes = {q[3] for q in FIB_QUADS + LUCAS_QUADS}
    assert len(primes) == 22
    assert reports["theorem1"].progression.step == math.prod(primes)


@pytest.mark.parametrize("name", sorted(CERTIFICATES))
def test_witnesses_recheck_naively(reports, name):
    for w in reports[name].witnesses:
        c = w.clause
        period = brute_period(c.kind.seeds, w.aux_prime)
        orbit = math.lcm(c.m, period) // c.m
        naive = {iterate_mod(c.kind.seeds, c.a + c.m * k, w.aux_prime) for k in range(orbit)}
        assert naive == w.attained
        assert w.needed not in naive
        assert w.needed == (reports[name].progression.offset - c.p) % w.aux_prime


def test_first_clause_witness(reports):
    w = reports["theorem1"].witnesses[0]
    assert w.clause.label() == "(1,3,1,2)_f"
    assert (w.aux_prime, w.needed) == (17, 7)


def test_clause_103681_witness(reports):
    w = next(w for w in reports["theorem1"].witnesses if w.clause.p == 103681)
    assert (w.aux_prime, w.needed, w.attained) == (17, 11, frozenset({8}))


def test_corollary2_base_progression(reports):
    base = reports["corollary2"].base
    assert (base.step, base.offset) == (578938092213810, 85206628521871)


def test_missing_class_fails_stage1():
    cert = builtin_certificate("theorem1")
    cert.fib_clauses = cert.fib_clauses[1:]
    report = verify_certificate(cert)
    assert not report.ok
    assert 1 in report.failed_stages()
    assert report.covering_reports["fib"].uncovered_witness == 4


def test_tampered_residue_fails_stage2():
    cert = builtin_certificate("theorem1")
    cert.fib_clauses[0] = dataclasses.replace(cert.fib_clauses[0], r=0)
    report = verify_certificate(cert)
    assert not report.ok
    assert 2 in report.failed_stages()


def test_wrong_period_fails_stage2():
    cert = AvoidanceCertificate(fib_clauses([(1, 6, 1, 2)]), aux_fib=[])
    report = verify_certificate(cert)
    assert any(f.stage == 2 and "period" in f.message for f in report.failures)


def test_composite_prime_rejected():
    cert = AvoidanceCertificate(fib_clauses([(1, 24, 1, 9)]))
    report = verify_certificate(cert)
    assert any(f.stage == 2 and "not prime" in f.message for f in report.failures)


def test_no_aux_primes_fails_stage6():
    cert = builtin_certificate("corollary3")
    cert.aux_lucas = []
    report = verify_certificate(cert)
    assert report.failed_stages() == [6]
    assert report.progression is not None


def test_aux_prime_must_be_clause_prime():
    cert = builtin_certificate("corollary3")
    cert.aux_lucas = [19, 47, 29]
    report = verify_certificate(cert)
    assert any(f.stage == 6 and "29" in f.subject for f in report.failures)


def test_json_round_trip():
    cert = builtin_certificate("corollary2")
    data = cert.to_json()
    assert data["scale"] == "23"
    assert all(isinstance(c["p"], str) for c in data["lucas_clauses"])
    again = AvoidanceCertificate.from_json(data)
    assert again == cert
    assert verify_certificate(again).ok


def test_determinism(reports):
    assert verify_certificate(builtin_certificate("theorem1")).to_json() == reports["theorem1"].to_json()
