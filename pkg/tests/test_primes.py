import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from indepgen.errors import BudgetExceeded, InvalidInput, OutOfRange
from indepgen.primes import (nth_prime, prime_count, sieve_primes, stup_constant, verify_pk_bounds,
                             verify_rs_bounds)


@pytest.mark.parametrize("limit, expected", [(10, [2, 3, 5, 7]), (1, []), (2, [2])])
def test_sieve_small(limit, expected):
    assert sieve_primes(limit).primes.tolist() == expected


def test_sieve_matches_trial_division_to_10_000():
    def trial(x):
        return x >= 2 and all(x % d for d in range(2, math.isqrt(x) + 1))
    s = sieve_primes(10**4)
    assert s.primes.tolist() == [x for x in range(10**4 + 1) if trial(x)]


def test_cumulative_count_steps(sieve_1e6):
    steps = np.diff(sieve_1e6.cumulative_count)
    assert set(np.unique(steps).tolist()) <= {0, 1}
    assert np.array_equal(steps.astype(bool), sieve_1e6.is_prime[1:])


def test_sieve_rejects_bad_limits():
    with pytest.raises(InvalidInput):
        sieve_primes(0)
    with pytest.raises(BudgetExceeded):
        sieve_primes(10**9)


@pytest.mark.parametrize("x, expected", [(10, 4), (1.9, 0), (96.5, 24), (0, 0), (2, 1)])
def test_prime_count(x, expected):
    assert prime_count(x, sieve_primes(200)) == expected


def test_prime_count_out_of_range():
    with pytest.raises(OutOfRange):
        prime_count(201, sieve_primes(200))


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=200, deadline=None)
def test_prime_count_matches_sympy(x):
    from indepgen.primes import shared_sieve
    assert prime_count(x, shared_sieve(10**6)) == sympy.primepi(x)


@pytest.mark.parametrize("k, expected", [(1, 2), (6, 13), (25, 97)])
def test_nth_prime(k, expected):
    assert nth_prime(k, sieve_primes(100)) == expected


def test_nth_prime_exhausted():
    with pytest.raises(OutOfRange):
        nth_prime(26, sieve_primes(100))


def test_rs_bounds_at_100():
    rep = verify_rs_bounds(100, sieve_primes(100))
    assert rep.passed
    assert 25 <= 100 / math.log(100) * (1 + 1.5 / math.log(100))
    assert math.isclose(100 / math.log(100) * (1 + 1.5 / math.log(100)), 28.79, abs_tol=0.01)


def test_rs_lower_range_empty_below_67():
    rep = verify_rs_bounds(66, sieve_primes(66))
    assert rep.passed and rep.parts["rs-lower"] == (67, 66)


def test_rs_bounds_detects_a_planted_violation():
    good = sieve_primes(1000)
    counts = good.cumulative_count.copy()
    counts[500:] += 200  # pi(x) far above the upper bound
    from indepgen.primes import PrimeSieve
    bad = PrimeSieve(good.limit, good.is_prime, good.primes, counts)
    rep = verify_rs_bounds(1000, bad)
    assert not rep.passed and {v.check for v in rep.violations} == {"rs-upper"}


def test_pk_examples():
    s = sieve_primes(100)
    assert 6 * math.log(6) < 13 < 6 * (math.log(6) + math.log(math.log(6)))
    assert math.isclose(6 * math.log(6), 10.75, abs_tol=0.01)
    assert math.isclose(6 * (math.log(6) + math.log(math.log(6))), 14.25, abs_tol=0.01)
    assert 2 / math.log(3) <= 2
    assert verify_pk_bounds(6, s).passed
    rep = verify_pk_bounds(5, s)
    assert rep.passed and rep.parts["pk-upper"] == (6, 5)


def test_pk_bounds_to_10_000(sieve_1e6):
    assert verify_pk_bounds(10**4, sieve_1e6).passed


@pytest.mark.parametrize("eta, n_max", [(2, 2), (2, 10)])
def test_stup_small(eta, n_max):
    assert stup_constant(eta, n_max, sieve_primes(100)) == (2.0, 2)


def test_stup_full_scan():
    s = sieve_primes(100)
    value, where = stup_constant(1.5, 100, s)
    scan = max((n / sympy.primepi(n) ** 1.5, n) for n in range(2, 101))
    assert where <= 100 and math.isclose(value, float(scan[0])) and where == scan[1]


def test_stup_rejects_eta():
    with pytest.raises(InvalidInput):
        stup_constant(1.0, 10, sieve_primes(10))
