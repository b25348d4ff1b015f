import math

import pytest
from hypothesis import given, settings, strategies as st

from _oracles import group, naive_closure, naive_elements, perms, sym, to_sympy
from indepgen.errors import Budget, BudgetExceeded, InvalidInput
from indepgen.perm import (NotNormal, Permutation, PermGroup, group_closure, is_transitive, orbits,
                           parse_permutation, point_stabilizer, quotient_group)


@pytest.mark.parametrize("text, degree, images", [
    ("(1 2 3)", 4, (2, 3, 1, 4)),
    ("()", 3, (1, 2, 3)),
    ("(1 2)(3 4)", 4, (2, 1, 4, 3)),
])
def test_parse_permutation(text, degree, images):
    assert parse_permutation(text, degree).images == images


@pytest.mark.parametrize("text", ["(1 2", "(1 2)(2 3)", "(1 5)", "1 2", "(1 x)", "(0 1)", "(1 2) junk"])
def test_parse_permutation_errors(text):
    with pytest.raises(InvalidInput):
        parse_permutation(text, 4)


perm_strategy = st.integers(1, 9).flatmap(
    lambda n: st.permutations(range(1, n + 1)).map(lambda p: Permutation(tuple(p))))


@given(perm_strategy)
def test_cycle_notation_round_trip(p):
    assert parse_permutation(str(p), p.degree) == p


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(*[st.permutations(range(1, n + 1))] * 3)))
def test_composition_laws(triple):
    x, y, z = (Permutation(tuple(t)) for t in triple)
    assert (x * y) * z == x * (y * z)
    assert (x * x.inverse()).is_identity()
    # right action: apply x first
    assert all((x * y)(i) == y(x(i)) for i in range(1, x.degree + 1))
    assert (x ** x.order()).is_identity()


@pytest.mark.parametrize("gens, degree, order", [
    (["(1 2)", "(1 2 3)"], 3, 6),
    (["(1 2 3 4)", "(1 2)"], 4, 24),
    ([], 3, 1),
])
def test_closure_orders(gens, degree, order):
    assert group(degree, *gens).order == order


def test_elements_sorted_identity_first_and_readonly():
    g = sym(4)
    rows = [tuple(r) for r in g.elements]
    assert rows == sorted(rows) and rows[0] == (0, 1, 2, 3)
    with pytest.raises(ValueError):
        g.elements[0, 0] = 3


def test_closure_budget():
    with pytest.raises(BudgetExceeded):
        group_closure(perms(7, "(1 2 3 4 5 6 7)", "(1 2)"), 7, Budget(closure_order=1000))


def test_degree_mismatch():
    with pytest.raises(InvalidInput):
        PermGroup([parse_permutation("(1 2)", 2), parse_permutation("(1 2 3)", 3)])


gen_sets = st.lists(st.permutations(range(1, 7)), min_size=0, max_size=3)


@given(gen_sets)
@settings(max_examples=60, deadline=None)
def test_closure_matches_naive_and_lagrange(gens):
    ps = [Permutation(tuple(p)) for p in gens]
    g = group_closure(ps, 6)
    naive = naive_closure([tuple(i - 1 for i in p.images) for p in ps], 6)
    assert set(naive_elements(g)) == naive
    assert math.factorial(6) % g.order == 0
    assert all(p in g for p in ps)


@given(gen_sets)
@settings(max_examples=40, deadline=None)
def test_orbit_stabilizer(gens):
    g = group_closure([Permutation(tuple(p)) for p in gens], 6)
    orbs = orbits(g)
    assert sorted(x for o in orbs for x in o) == list(range(1, 7))
    for o in orbs:
        for w in o:
            assert len(o) * point_stabilizer(g, w).order == g.order


def test_orbit_examples():
    s3 = sym(3)
    assert point_stabilizer(s3, 1).order == 2 and orbits(s3) == [[1, 2, 3]]
    assert orbits(group_closure([], 2)) == [[1], [2]]
    assert orbits(group(4, "(1 2)(3 4)")) == [[1, 2], [3, 4]]
    assert is_transitive(s3) and not is_transitive(group(4, "(1 2)(3 4)"))


def test_table_is_cayley_table():
    g = sym(4)
    mult, inv = g.table
    for i in range(0, 24, 5):
        for j in range(0, 24, 7):
            assert g.perm(int(mult[i, j])) == g.perm(i) * g.perm(j)
        assert g.perm(int(inv[i])) == g.perm(i).inverse()


def test_table_budget():
    g = group_closure(perms(6, "(1 2 3 4 5 6)", "(1 2)"), 6, Budget(table_order=100))
    with pytest.raises(BudgetExceeded):
        g.table


def test_quotients():
    s4 = sym(4)
    v4 = [s4.index(parse_permutation(t, 4)) for t in ("()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)")]
    q = quotient_group(s4, v4)
    assert q.order == 6 and not to_sympy(q).is_abelian  # the only such group is Sym(3)
    assert quotient_group(s4, range(24)).order == 1
    assert quotient_group(s4, [0]).order == 24
    with pytest.raises(NotNormal):
        quotient_group(s4, [0, s4.index(parse_permutation("(1 2)", 4))])


def test_solubility_matches_sympy():
    from indepgen.invariants import is_soluble
    for n in range(1, 6):
        g = sym(n)
        assert is_soluble(g) == to_sympy(g).is_solvable
