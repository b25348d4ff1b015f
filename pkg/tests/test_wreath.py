import itertools

import numpy as np
import pytest

from _oracles import group, naive_elements, sym
from indepgen.errors import CheckFailed, InvalidInput
from indepgen.invariants import min_generators
from indepgen.lattice import subgroup_lattice
from indepgen.perm import is_transitive, orbits
from indepgen.wreath import (IndependenceCertificate, WreathSpec, alternating_group, cyclic_group,
                             dihedral_square, klein_four_regular, standard_rank_matrix,
                             standard_sylow_instances, sylow_sum_check, symmetric_group, t_omega,
                             verify_wreath_rank, wreath_product)


def c(n, fixed=0):
    return cyclic_group(n, fixed)


@pytest.mark.parametrize("q, p, order", [
    (lambda: c(2), lambda: c(2), 8),
    (lambda: c(2), lambda: c(1, 1), 4),
    (lambda: c(3), lambda: c(3), 81),
    (lambda: klein_four_regular(), lambda: c(2), 32),
])
def test_wreath_orders(q, p, order):
    spec = WreathSpec(q(), p())
    g = wreath_product(spec)
    assert g.order == spec.order == order


def test_fibres_are_blocks():
    g = wreath_product(WreathSpec(c(3), c(2)))
    blocks = [{1, 2, 3}, {4, 5, 6}]
    for i in range(g.order):
        x = g.perm(i)
        assert all({x(b) for b in blk} in blocks for blk in blocks)


def test_c2_wr_c2_is_dihedral():
    g = wreath_product(WreathSpec(c(2), c(2)))
    assert g.order == 8 and sum(1 for i in range(8) if g.perm(i).order() == 4) == 2
    assert min_generators(g) == 2


def test_direct_product_case():
    g = wreath_product(WreathSpec(c(2), c(1, 1)))
    assert orbits(g) == [[1, 2], [3, 4]] and g.order == 4


@pytest.mark.parametrize("q, p, formula", [
    (lambda: c(2), lambda: c(2), 2),
    (lambda: c(2), lambda: c(1, 1), 2),
    (lambda: klein_four_regular(), lambda: c(2), 3),
])
def test_rank_formula_examples(q, p, formula):
    rep = verify_wreath_rank(WreathSpec(q(), p()))
    assert rep.formula == rep.computed == formula and rep.ok


def test_rank_formula_rejects_mixed_primes():
    with pytest.raises(InvalidInput):
        verify_wreath_rank(WreathSpec(c(2), c(3)))
    with pytest.raises(InvalidInput):
        verify_wreath_rank(WreathSpec(c(6), c(2)))
    with pytest.raises(InvalidInput):
        verify_wreath_rank(WreathSpec(c(1), c(2)))


def test_rank_matrix_shape():
    specs = standard_rank_matrix()
    assert len(specs) == 18
    assert {s.Q.order for s in specs} == {2, 3, 4, 8, 9}
    for s in specs:
        p = 2 if s.Q.order in (2, 4, 8) else 3
        assert s.P.order in (1, p) and len(orbits(s.P)) in (1, 2)


def test_rank_matrix_all_entries():
    assert all(verify_wreath_rank(s).ok for s in standard_rank_matrix())


# -- t_omega -----------------------------------------------------------------------------------

def naive_t(K, point=1):
    """Largest irredundant family of subgroups meeting in the stabiliser, by trying every family."""
    lat = subgroup_lattice(K)
    rows = naive_elements(K)
    sets = [frozenset(rows[i] for i in s.elements) for s in lat]
    stab = frozenset(r for r in rows if r[point - 1] == point - 1)
    cands = [s for s in sets if stab <= s and len(s) < K.order]
    best = 0
    for k in range(1, len(cands) + 1):
        for fam in itertools.combinations(cands, k):
            if frozenset.intersection(*fam) != stab:
                continue
            if k == 1 or all(frozenset.intersection(*(fam[:i] + fam[i + 1:])) != stab
                             for i in range(k)):
                best = k
                break
    return best if K.order > 1 and len(stab) < K.order else 0


@pytest.mark.parametrize("make, t", [
    (lambda: sym(3), 1),
    (klein_four_regular, 2),
    (lambda: c(5), 1),
    (lambda: sym(4), None),
    (dihedral_square, None),
    (lambda: c(6), None),
    (lambda: group(6, "(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"), None),
    (lambda: alternating_group(4), None),
    (lambda: group(6, "(1 2)", "(3 4)", "(5 6)", "(1 3 5)(2 4 6)"), None),
])
def test_t_omega_against_exhaustive_families(make, t):
    K = make()
    cert = t_omega(K)
    assert cert.validate() and cert.t == naive_t(K)
    if t is not None:
        assert cert.t == t


def test_certificate_rejects_redundant_family():
    K = klein_four_regular()
    lat = subgroup_lattice(K)
    twos = [s.elements for s in lat if s.order == 2]
    assert IndependenceCertificate(K, 1, np.array([0]), twos[:2]).validate()
    assert not IndependenceCertificate(K, 1, np.array([0]), twos).validate()
    assert not IndependenceCertificate(K, 1, np.array([0]), twos[:1]).validate()


def test_t_omega_needs_transitive_group():
    with pytest.raises(InvalidInput):
        t_omega(group(4, "(1 2)", "(3 4)"))


# -- the Sylow sum inequality -----------------------------------------------------------------

@pytest.mark.parametrize("k_index, values, t", [
    (0, {3: 2, 5: 2}, 1),
    (1, {3: 2, 5: 3}, 1),
    (2, {3: 2, 5: 3}, 1),
    (3, {3: 4, 5: 4}, 2),
])
def test_sylow_sum_examples(k_index, values, t):
    S = alternating_group(5)
    K = standard_sylow_instances()[k_index]
    assert is_transitive(K)
    rep = sylow_sum_check(S, {3, 5}, K)
    assert {term.prime: term.value for term in rep.terms} == values
    assert rep.t == t and rep.strict and rep.ok
    assert all(term.brute_force in (None, term.value) for term in rep.terms)
    assert any(term.brute_force is not None for term in rep.terms)


def test_sylow_sum_rejects_bad_inputs():
    with pytest.raises(InvalidInput):
        sylow_sum_check(sym(3), {3}, symmetric_group(2))
    with pytest.raises(InvalidInput):
        sylow_sum_check(alternating_group(5), {7}, symmetric_group(2))


def test_sylow_sum_detects_non_strict_case():
    # an empty prime set sums to 0, which does not beat t = 2
    with pytest.raises(CheckFailed):
        sylow_sum_check(alternating_group(5), set(), klein_four_regular())


def test_standard_groups():
    assert symmetric_group(4).order == 24 and alternating_group(5).order == 60
    assert dihedral_square().order == 8 and c(9).order == 9
    assert c(2, 1).degree == 3 and orbits(c(2, 1)) == [[1, 2], [3]]
