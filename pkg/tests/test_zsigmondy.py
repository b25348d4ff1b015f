import pytest
import sympy
from hypothesis import given, settings, strategies as st

from indepgen.errors import FactorizationBudgetExceeded, InvalidInput
from indepgen.zsigmondy import (BINARY_SIX_CASE, MERSENNE_CASE, cyclotomic_eval, factorize,
                                is_probable_prime, load_simple_groups, parse_simple_groups, pi_star,
                                primitive_prime_divisors, verify_residue, zsigmondy_exception,
                                zsigmondy_sweep)


@pytest.mark.parametrize("a, n, primes, tag", [
    (2, 6, set(), BINARY_SIX_CASE),
    (2, 4, {5}, None),
    (3, 2, set(), MERSENNE_CASE),
    (2, 11, {23, 89}, None),
])
def test_primitive_prime_divisors(a, n, primes, tag):
    res = primitive_prime_divisors(a, n)
    assert set(res.primitive_primes) == primes and res.exception == tag
    assert res.value == a**n - 1


def test_mersenne_tag_is_literal():
    # 15 = 2^4 - 1 is not prime but still matches a = 2^s - 1
    assert zsigmondy_exception(15, 2) == MERSENNE_CASE
    assert zsigmondy_exception(5, 2) is None
    assert zsigmondy_exception(1, 2) is None


@pytest.mark.parametrize("a, n", [(2, 11), (2, 6), (2, 4)])
def test_verify_residue(a, n):
    assert verify_residue(a, n)


@given(st.integers(2, 40), st.integers(2, 20))
@settings(max_examples=150, deadline=None)
def test_primitive_primes_have_exact_order(a, n):
    res = primitive_prime_divisors(a, n)
    expected = {p for p in sympy.factorint(a**n - 1) if sympy.n_order(a, p) == n}
    assert set(res.primitive_primes) == expected


@given(st.integers(2, 10**30))
@settings(max_examples=200, deadline=None)
def test_factorize_matches_sympy(n):
    assert factorize(n) == sympy.factorint(n)


@given(st.integers(2, 10**12))
@settings(max_examples=300)
def test_primality_matches_sympy(n):
    assert is_probable_prime(n) == sympy.isprime(n)


def test_factorize_semiprime_beyond_trial_division():
    p, q = 1_000_003, 998_244_353
    assert factorize(p * q) == {p: 1, q: 1}


def test_budget_errors():
    with pytest.raises(FactorizationBudgetExceeded):
        primitive_prime_divisors(2, 200)
    with pytest.raises(FactorizationBudgetExceeded):
        factorize(1_000_003 * 998_244_353, rho_iterations=1)
    with pytest.raises(InvalidInput):
        primitive_prime_divisors(1, 5)


@pytest.mark.parametrize("m, q, value", [(1, 7, 6), (6, 2, 3), (4, 3, 10)])
def test_cyclotomic_examples(m, q, value):
    assert cyclotomic_eval(m, q) == value


def test_cyclotomic_product_identity():
    for q in range(2, 10):
        for n in range(1, 25):
            prod = 1
            for d in sympy.divisors(n):
                prod *= cyclotomic_eval(d, q)
            assert prod == q**n - 1
            assert cyclotomic_eval(n, q) == sympy.cyclotomic_poly(n, q)


def test_sweep_small_grid():
    rep = zsigmondy_sweep(30, 16)
    assert rep.passed
    assert set(rep.exceptions) == {(2, 6), (3, 2), (7, 2), (15, 2)}
    assert rep.checked == 29 * 15


@pytest.mark.parametrize("order, out, label, must", [
    (20160, 12, "PSL(3,4)", {5, 7}),
    (1_056_706_560, 6, "Sp(4,8)", {5, 7}),
    (60, 2, "PSL(2,5)", {3, 5}),
])
def test_pi_star_examples(order, out, label, must):
    datum = pi_star(order, out, label)
    assert must <= datum.pi_star and datum.has_two_primes
    assert datum.pi_star <= datum.pi


def test_pi_star_exact_for_psl25():
    assert pi_star(60, 2).pi_star == {3, 5}


def test_lie_orders_from_formulas():
    q = 4
    assert q**3 * (q**3 - 1) * (q**2 - 1) // 3 == 20160
    q = 8
    assert q**4 * (q**2 - 1) * (q**4 - 1) == 1_056_706_560


def test_bundled_table():
    rows = load_simple_groups()
    assert len({r.label for r in rows}) == len(rows) >= 10
    for r in rows:
        assert r.pi == set(sympy.factorint(r.order))
        assert all(r.out_order % p for p in r.pi_star)
        assert r.has_two_primes, r.label


def test_parse_simple_groups_errors():
    with pytest.raises(InvalidInput):
        parse_simple_groups("A5 60\n")
    assert parse_simple_groups("# c\n\nA5 60 2  # alt\n")[0].pi_star == {3, 5}
