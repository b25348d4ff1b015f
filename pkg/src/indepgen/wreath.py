"""Imprimitive wreath products, their ranks, and independent subgroup families.

Points of Q wr P (Q on Gamma, P on Delta) are numbered
``(delta - 1) * |Gamma| + gamma``, so each fibre is a contiguous block.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetExceeded, CheckFailed, InvalidInput
from .invariants import is_perfect, min_generators, p_group_prime, sylow_subgroup
from .lattice import SubgroupLattice, subgroup_lattice
from .perm import Permutation, PermGroup, group_closure, is_transitive, orbits


@dataclass(frozen=True)
class WreathSpec:
    Q: PermGroup
    P: PermGroup

    @property
    def order(self) -> int:
        return self.Q.order ** self.P.degree * self.P.order


def _fibre_perm(q: Permutation, fibre: int, n_gamma: int, n_delta: int) -> Permutation:
    images = np.arange(n_gamma * n_delta)
    block = slice(fibre * n_gamma, (fibre + 1) * n_gamma)
    images[block] = fibre * n_gamma + np.asarray(q.images) - 1
    return Permutation.from_zero_based(images)


def _top_perm(p: Permutation, n_gamma: int) -> Permutation:
    shift = (np.asarray(p.images) - 1) * n_gamma
    images = (shift[:, None] + np.arange(n_gamma)[None, :]).ravel()
    return Permutation.from_zero_based(images)


def wreath_product(spec: WreathSpec, label: str | None = None) -> PermGroup:
    """Q wr P on |Gamma|*|Delta| points; Q acts in one fibre per P-orbit, P permutes fibres."""
    Q, P = spec.Q, spec.P
    if spec.order > Q.budget.closure_order:
        raise BudgetExceeded(f"wreath product of order {spec.order} exceeds the closure budget")
    ng, nd = Q.degree, P.degree
    gens = [_top_perm(p, ng) for p in P.generators if not p.is_identity()]
    for orbit in orbits(P):
        gens += [_fibre_perm(q, orbit[0] - 1, ng, nd) for q in Q.generators if not q.is_identity()]
    group = group_closure(gens, ng * nd, Q.budget, label=label)
    if group.order != spec.order:
        raise CheckFailed(f"wreath product has order {group.order}, expected {spec.order}")
    return group


@dataclass(frozen=True)
class WreathRankReport:
    q_label: str
    p_label: str
    prime: int
    order: int
    d_q: int
    d_p: int
    orbits: int
    formula: int
    computed: int

    @property
    def ok(self) -> bool:
        return self.formula == self.computed


def _prime_of(group: PermGroup, allow_trivial: bool) -> int | None:
    if group.order == 1:
        if allow_trivial:
            return None
        raise InvalidInput("Q must be nontrivial")
    p = p_group_prime(group.order)
    if p is None:
        raise InvalidInput(f"group of order {group.order} is not a p-group")
    return p


def verify_wreath_rank(spec: WreathSpec) -> WreathRankReport:
    """Compare d(Q wr P), found by search on the built group, with d(P) + orbits(P)*d(Q)."""
    p = _prime_of(spec.Q, allow_trivial=False)
    p_top = _prime_of(spec.P, allow_trivial=True)
    if p_top is not None and p_top != p:
        raise InvalidInput(f"Q is a {p}-group but P is a {p_top}-group")
    d_q, d_p = min_generators(spec.Q), min_generators(spec.P)
    n_orb = len(orbits(spec.P))
    built = wreath_product(spec)
    return WreathRankReport(spec.Q.label or "Q", spec.P.label or "P", p, built.order, d_q, d_p,
                            n_orb, d_p + n_orb * d_q, min_generators(built))


# -- standard groups for the rank matrix ------------------------------------------------

def cyclic_group(n: int, extra_fixed: int = 0, label: str | None = None) -> PermGroup:
    """C_n acting regularly on 1..n, fixing n+1..n+extra_fixed."""
    degree = n + extra_fixed
    gens = [Permutation.from_cycles([range(1, n + 1)], degree)] if n > 1 else []
    return group_closure(gens, degree, label=label or f"C{n}")


def klein_four_regular() -> PermGroup:
    return group_closure([Permutation.from_cycles([(1, 2), (3, 4)], 4),
                          Permutation.from_cycles([(1, 3), (2, 4)], 4)], label="C2xC2")


def dihedral_square() -> PermGroup:
    return group_closure([Permutation.from_cycles([(1, 2, 3, 4)], 4),
                          Permutation.from_cycles([(1, 3)], 4)], label="D8")


def symmetric_group(n: int) -> PermGroup:
    gens = []
    if n > 1:
        gens = [Permutation.from_cycles([range(1, n + 1)], n), Permutation.from_cycles([(1, 2)], n)]
    return group_closure(gens, n, label=f"Sym({n})")


def alternating_group(n: int) -> PermGroup:
    gens = [Permutation.from_cycles([(1, 2, k)], n) for k in range(3, n + 1)]
    return group_closure(gens, n, label=f"Alt({n})")


def standard_rank_matrix() -> list[WreathSpec]:
    """Q in {C2, C3, C4, C2xC2, D8, C9} against trivial, C_p regular and C_p plus a fixed point."""
    tops = {
        2: [cyclic_group(1, 1, "1 on 2"), cyclic_group(2, 0, "C2 reg"), cyclic_group(2, 1, "C2 on 2+1")],
        3: [cyclic_group(1, 1, "1 on 2"), cyclic_group(3, 0, "C3 reg"), cyclic_group(3, 1, "C3 on 3+1")],
    }
    bases = [(cyclic_group(2), 2), (cyclic_group(3), 3), (cyclic_group(4), 2),
             (klein_four_regular(), 2), (dihedral_square(), 2), (cyclic_group(9), 3)]
    return [WreathSpec(q, top) for q, p in bases for top in tops[p]]


# -- independent subgroup families ----------------------------------------------------------

@dataclass
class IndependenceCertificate:
    K: PermGroup
    point: int
    stabilizer: np.ndarray
    subgroups: list[np.ndarray] = field(default_factory=list)

    @property
    def t(self) -> int:
        return len(self.subgroups)

    def validate(self) -> bool:
        """Recompute: every U contains K_w, the U meet in K_w, and no proper subfamily does."""
        n = self.K.order
        stab = np.zeros(n, dtype=bool)
        stab[self.stabilizer] = True
        rows = []
        for u in self.subgroups:
            row = np.zeros(n, dtype=bool)
            row[u] = True
            if not row[stab].all():
                return False
            rows.append(row)
        if not rows:
            return bool(stab.all())
        if not np.array_equal(np.logical_and.reduce(rows), stab):
            return False
        for i in range(len(rows)):
            rest = [r for j, r in enumerate(rows) if j != i]
            meet = np.logical_and.reduce(rest) if rest else np.ones(n, dtype=bool)
            if np.array_equal(meet, stab):
                return False
        return True


def _depth_above(lattice: SubgroupLattice, floor: int, interval: list[int]) -> dict[int, int]:
    """Longest strictly descending chain from each interval member down to ``floor``."""
    depth = {}
    for u in sorted(interval, key=lambda i: lattice[i].order):
        below = [v for v in depth if v != u and lattice.contains(u, v)]
        depth[u] = 0 if u == floor else 1 + max(depth[v] for v in below)
    return depth


def t_omega(K: PermGroup, point: int = 1, lattice: SubgroupLattice | None = None) -> IndependenceCertificate:
    """Largest irredundant family of subgroups of K whose intersection is K_point.

    Irredundance passes to subfamilies, so the search extends families in
    increasing lattice order; each member must shrink the running
    intersection, which bounds the remaining additions by the longest chain
    from the current intersection down to the stabiliser.
    """
    if not is_transitive(K):
        raise InvalidInput("t_omega needs a transitive group")
    lattice = lattice or subgroup_lattice(K)
    stab_id = lattice.find(np.flatnonzero(K.elements[:, point - 1] == point - 1))
    cert = IndependenceCertificate(K, point, lattice[stab_id].elements)
    if stab_id == lattice.top:
        return cert
    interval = [i for i in range(len(lattice)) if i != lattice.top and lattice.contains(i, stab_id)]
    depth = _depth_above(lattice, stab_id, interval)
    best: list[int] = []

    def extend(family, others, meet, start):
        nonlocal best
        if meet == stab_id:
            if len(family) > len(best):
                best = list(family)
            return
        for pos in range(start, len(interval)):
            u = interval[pos]
            if len(family) + 1 + depth[lattice.meet(meet, u)] <= len(best):
                continue
            new_meet = lattice.meet(meet, u)
            if new_meet == meet:
                continue
            new_others = [lattice.meet(a, u) for a in others]
            if any(a == new_meet for a in new_others):
                continue
            extend(family + [u], new_others + [meet], new_meet, pos + 1)

    extend([], [], lattice.top, 0)
    cert.subgroups = [lattice[i].elements for i in best]
    if not cert.validate():
        raise CheckFailed("independence certificate failed revalidation")
    return cert


# -- the strict inequality for S wr K --------------------------------------------------------

@dataclass(frozen=True)
class PrimeTerm:
    prime: int
    d_top: int
    orbits: int
    d_base: int
    value: int
    brute_force: int | None

    @property
    def consistent(self) -> bool:
        return self.brute_force is None or self.brute_force == self.value


@dataclass(frozen=True)
class SylowSumReport:
    s_label: str
    k_label: str
    terms: tuple[PrimeTerm, ...]
    t: int

    @property
    def total(self) -> int:
        return sum(term.value for term in self.terms)

    @property
    def strict(self) -> bool:
        return self.total > self.t

    @property
    def ok(self) -> bool:
        return self.strict and all(term.consistent for term in self.terms)


def _sylow_or_trivial(group: PermGroup, p: int, lattice: SubgroupLattice) -> PermGroup:
    if group.order % p:
        return group_closure([], group.degree, group.budget, label="1")
    return sylow_subgroup(group, p, lattice)


def sylow_sum_check(S: PermGroup, pi_star: set[int] | frozenset[int], K: PermGroup,
                    brute_force: bool = True) -> SylowSumReport:
    """Sum over p in pi_star of d(P_K) + orbits(P_K) * d(Pi_p), compared with t_omega(K).

    P_K and Pi_p are Sylow p-subgroups of K and S; each term is the rank of
    Pi_p wr P_K, which is also built and searched directly when it fits the
    table budget. A non-strict comparison or a mismatching term raises.
    """
    if S.order == 1 or not is_perfect(S):
        raise InvalidInput("S must be a nontrivial perfect group")
    for p in pi_star:
        if S.order % p:
            raise InvalidInput(f"{p} does not divide |S| = {S.order}")
    k_lattice, s_lattice = subgroup_lattice(K), subgroup_lattice(S)
    cert = t_omega(K, 1, k_lattice)
    terms = []
    for p in sorted(pi_star):
        top = _sylow_or_trivial(K, p, k_lattice)
        base = sylow_subgroup(S, p, s_lattice)
        d_top, d_base, n_orb = min_generators(top), min_generators(base), len(orbits(top))
        spec = WreathSpec(base, top)
        direct = None
        if brute_force and spec.order <= S.budget.table_order:
            direct = min_generators(wreath_product(spec))
        terms.append(PrimeTerm(p, d_top, n_orb, d_base, d_top + n_orb * d_base, direct))
    report = SylowSumReport(S.label or "S", K.label or "K", tuple(terms), cert.t)
    if not all(t.consistent for t in report.terms):
        raise CheckFailed(f"Sylow reduction disagrees with direct rank for {report.k_label}")
    if not report.strict:
        raise CheckFailed(f"sum {report.total} is not larger than t = {report.t} for {report.k_label}")
    return report


def standard_sylow_instances() -> list[PermGroup]:
    """K = Sym(2), C3 regular, Sym(3) natural, C2xC2 regular."""
    return [symmetric_group(2), cyclic_group(3, label="C3 reg"), symmetric_group(3), klein_four_regular()]
