"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import io
import json
import math
import time
from contextlib import contextmanager

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from _oracles import group, sym
from indepgen import cli
from indepgen.catalog import bundled_catalog
from indepgen.invariants import (GroupAnalysis, frattini_rank, frattini_subgroup, is_soluble,
                                 max_independent_generating_set, min_generators, sylow_subgroup)
from indepgen.lattice import subgroup_lattice
from indepgen.perm import Permutation, group_closure
from indepgen.primes import shared_sieve, verify_pk_bounds, verify_rs_bounds
from indepgen.symdelta import (classify_range, d_p_sym, delta_range, verify_dm2_identity,
                               verify_stop_bounds)
from indepgen.wreath import (alternating_group, cyclic_group, standard_rank_matrix,
                             standard_sylow_instances, sylow_sum_check, verify_wreath_rank)
from indepgen.zsigmondy import pi_star, zsigmondy_sweep

LISTS = {
    0: [1, 2, 3, 4, 5, 8, 10, 11, 16, 17, 18, 19, 25, 30, 31],
    1: [6, 7, 12, 13, 20, 26, 42, 43, 48],
    2: [14, 21, 44, 45],
    3: [15, 22, 23, 24, 46, 47],
}


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, title):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            with capsys.disabled():
                print(f"\nFAIL criterion {number}: {title} ({time.perf_counter() - start:.2f}s)")
            raise
        with capsys.disabled():
            print(f"\nPASS criterion {number}: {title} ({time.perf_counter() - start:.2f}s)")
    return run


@pytest.fixture(scope="module")
def catalog_analyses():
    return [GroupAnalysis(e.group, e.label) for e in bundled_catalog()]


def cli_run(*argv):
    buf = io.StringIO()
    code = cli.main(list(argv), stream=buf)
    return code, buf.getvalue()


def test_criterion_01_classification_lists(criterion):
    with criterion(1, "offset lists up to 50"):
        start = time.perf_counter()
        code, out = cli_run("sym", "classify", "--max", "50")
        elapsed = time.perf_counter() - start
        doc = json.loads(out)
        assert code == 0
        assert {k: doc[f"offset_{k}"] for k in range(4)} == LISTS
        assert elapsed < 1.0, elapsed


def test_criterion_02_residual_negativity(criterion):
    with criterion(2, "offset < 0 for every other n <= 10^6"):
        start = time.perf_counter()
        n_max = 10**6
        cls = classify_range(n_max, shared_sieve(n_max))
        d = delta_range(n_max, shared_sieve(n_max))
        listed = np.zeros(n_max + 1, dtype=bool)
        listed[[n for ns in LISTS.values() for n in ns]] = True
        n = np.arange(n_max + 1)
        others = (~listed) & (n >= 1)
        violations = np.flatnonzero(others & (d >= n - 1))
        elapsed = time.perf_counter() - start
        assert violations.size == 0, violations[:10]
        assert cls.lists == LISTS and cls.anomalies == []
        assert cls.residual_count == n_max - sum(map(len, LISTS.values()))
        assert elapsed < 60.0, elapsed


def test_criterion_03_stop_bounds(criterion):
    with criterion(3, "lower, tight and loose bounds on d(n) for 2 <= n <= 10^6"):
        rep = verify_stop_bounds(2, 10**6, shared_sieve(10**6))
        assert rep.violations == []
        assert set(rep.parts) == {"lower", "tight", "chain"}
        assert all(v == (2, 10**6) for v in rep.parts.values())


def test_criterion_04_dm2_identity(criterion):
    with criterion(4, "exact large-prime identity for 2 <= n <= 10^4"):
        sieve = shared_sieve(10**6)
        bad = [n for n in range(2, 10**4 + 1) if not verify_dm2_identity(n, sieve)]
        assert bad == []


def test_criterion_05_prime_bounds(criterion):
    with criterion(5, "prime counting and k-th prime bounds"):
        sieve = shared_sieve(10**6)
        rs = verify_rs_bounds(10**6, sieve)
        assert rs.violations == []
        assert rs.parts == {"rs-upper": (2, 10**6), "rs-lower": (67, 10**6)}
        pk = verify_pk_bounds(10**4, sieve)
        assert pk.violations == []
        assert pk.parts["pk-lower"] == (1, 10**4) and pk.parts["pk-upper"] == (6, 10**4)
        assert pk.parts["eq5"] == pk.parts["eq7"] == (2, 10**4)


def test_criterion_06_zsigmondy_sweep(criterion):
    with criterion(6, "primitive primes for 2 <= a <= 30, 2 <= n <= 16"):
        rep = zsigmondy_sweep(30, 16)
        expected = {(a, 2) for a in range(2, 31) if a + 1 >= 4 and (a + 1) & a == 0} | {(2, 6)}
        assert set(rep.exceptions) == expected
        assert rep.missing == [] and rep.unexpected == [] and rep.residue_failures == []
        assert rep.checked == 29 * 15 and rep.passed


def _sylow_rank_both_ways(P, p):
    lat = subgroup_lattice(P)
    phi = lat[frattini_subgroup(P, lat)].order
    via_lattice = round(math.log(P.order // phi, p))
    assert via_lattice == frattini_rank(P) == min_generators(P, lat)
    return via_lattice


def test_criterion_07_sylow_ranks_of_symmetric_groups(criterion):
    with criterion(7, "Sylow ranks of Sym(n), n <= 7, against the digit formula"):
        checked = 0
        for n in range(2, 8):
            # Sym(7) is above the lattice budget; Sym(6) fixing 7 has index 7,
            # so its Sylow p-subgroups are Sylow in Sym(7) for p < 7
            host = sym(n) if n < 7 else group(7, "(1 2 3 4 5 6)", "(1 2)")
            lat = subgroup_lattice(host)
            for p in (q for q in (2, 3, 5, 7) if q <= n):
                full = math.gcd(math.factorial(n), p**10)
                if p == 7:
                    P = cyclic_group(7)
                else:
                    P = sylow_subgroup(host, p, lat)
                assert P.order == full, (n, p)
                assert _sylow_rank_both_ways(P, p) == d_p_sym(n, p), (n, p)
                checked += 1
        assert checked == 1 + 2 + 2 + 3 + 3 + 4


def test_criterion_08_m_of_symmetric_groups(criterion):
    with criterion(8, "m(Sym(n)) = n - 1 for 2 <= n <= 5 by exhaustive search"):
        start = time.perf_counter()
        for n in range(2, 6):
            g = sym(n)
            m, witness = max_independent_generating_set(g)
            assert m == n - 1 and len(witness) == m
        assert time.perf_counter() - start < 300


def test_criterion_09_soluble_catalog(criterion, catalog_analyses):
    with criterion(9, "m = sum of alpha_p and m <= delta on soluble catalog groups"):
        soluble = [a for a in catalog_analyses if a.soluble]
        assert len(soluble) >= 30
        compared = 0
        for a in soluble:
            rep = a.dennis()
            assert rep.m_le_delta, a.label
            assert rep.m_eq_alpha_sum, (a.label, rep)
            first, last = a.chief[0].series, a.chief_last[0].series
            assert a.chief_last[1] == a.alpha_p, a.label
            compared += first != last
        assert compared >= 5  # distinct chief series actually exercised


def test_criterion_10_wreath_rank_matrix(criterion):
    with criterion(10, "rank formula for the 6 x 3 wreath matrix"):
        reports = [verify_wreath_rank(spec) for spec in standard_rank_matrix()]
        assert len(reports) == 18
        assert [(r.q_label, r.p_label) for r in reports if not r.ok] == []


def test_criterion_11_sylow_sum_instances(criterion):
    with criterion(11, "Sylow rank sum beats t(K) for S = Alt(5)"):
        S = alternating_group(5)
        primes = pi_star(S.order, 2, "Alt(5)").pi_star
        assert primes == {3, 5}
        direct = 0
        for K in standard_sylow_instances():
            rep = sylow_sum_check(S, primes, K)
            assert rep.strict and rep.ok
            direct += sum(t.brute_force is not None for t in rep.terms)
        assert direct == 8  # every Sylow wreath product fits the table budget


def test_criterion_12_quotient_lemmas(criterion, catalog_analyses):
    with criterion(12, "delta quotient inequality and the Frattini dichotomy"):
        outside = abelian = 0
        for a in catalog_analyses:
            for rec in a.quotient_lemmas():
                if not rec.in_frattini:
                    outside += 1
                    assert rec.delta_ok, (a.label, rec)
                if rec.abelian:
                    abelian += 1
                    assert rec.m_relative in (0, 1) and rec.dichotomy_ok, (a.label, rec)
        assert outside > 0 and abelian > 0


soluble_groups = st.lists(st.permutations(range(1, 6)), min_size=1, max_size=3).map(
    lambda gs: group_closure([Permutation(tuple(p)) for p in gs], 5)).filter(is_soluble)


@given(soluble_groups)
@settings(max_examples=40, deadline=None)
def _random_soluble_m_le_delta(g):
    a = GroupAnalysis(g)
    assert a.m <= a.delta


def test_criterion_13_ratio_sweep(criterion):
    with criterion(13, "catalog sweep reports max m/delta and m/delta^2; exit 4 only on soluble m > delta"):
        code, out = cli_run("group", "sweep", "--eta", "2")
        summary = json.loads(out)["summary"]
        assert code == 0 and summary["skipped"] == []
        ratios = summary["max_ratios"]
        assert ratios["m_over_delta"] <= 1.0 and ratios["m_over_delta_sq"] <= 1.0
        _random_soluble_m_le_delta()
