"""The generation invariants d, m, d_p, delta and alpha_p of concrete groups."""

from __future__ import annotations

from dataclasses import dataclass, field
import math

import numpy as np

from . import kernels
from .errors import BudgetExceeded, CheckFailed, InvalidInput
from .lattice import SubgroupLattice, minimal_normal_subgroups, subgroup_lattice
from .perm import Permutation, PermGroup, group_closure, quotient_group
from .zsigmondy import factorize

MAX_SEARCH_SUBGROUPS = 200_000


def prime_divisors(n: int) -> list[int]:
    return list(factorize(n)) if n > 1 else []


# -- subgroup arithmetic on the Cayley table ------------------------------------

def generated_subgroup(group: PermGroup, idx) -> np.ndarray:
    """Sorted element indices of the subgroup generated by the elements ``idx``."""
    mult, _ = group.table
    current = np.array([0], dtype=np.int32)
    member = np.zeros(group.order, dtype=bool)
    member[0] = True
    gens: list[int] = []
    for g in np.unique(np.asarray(idx, dtype=np.int64)):
        if member[g]:
            continue
        gens.append(int(g))
        current = np.sort(kernels.dimino_join(mult, current, gens))
        member[current] = True
    return current


def commutator_subgroup(group: PermGroup, idx=None) -> np.ndarray:
    """[H, H] for the subgroup H on ``idx`` (default the whole group)."""
    mult, inv = group.table
    h = np.arange(group.order) if idx is None else np.asarray(idx, dtype=np.intp)
    left = mult[np.ix_(inv[h], inv[h])]
    right = mult[np.ix_(h, h)]
    return generated_subgroup(group, mult[left, right].ravel())


def is_abelian(group: PermGroup, idx=None) -> bool:
    mult, _ = group.table
    h = np.arange(group.order) if idx is None else np.asarray(idx, dtype=np.intp)
    block = mult[np.ix_(h, h)]
    return bool((block == block.T).all())


def is_soluble(group: PermGroup) -> bool:
    current = np.arange(group.order)
    while len(current) > 1:
        nxt = commutator_subgroup(group, current)
        if len(nxt) == len(current):
            return False
        current = nxt
    return True


def is_perfect(group: PermGroup) -> bool:
    return len(commutator_subgroup(group)) == group.order


# -- d(G) -------------------------------------------------------------------------

def _p_power_exponent(size: int, p: int) -> int:
    e = 0
    while size > 1:
        size //= p
        e += 1
    return e


def _elementary_quotients(group: PermGroup) -> list[tuple[int, np.ndarray, int]]:
    """(p, coset label of each element modulo G'G^p, rank of G/G'G^p) for each p with rank > 0."""
    mult, _ = group.table
    n = group.order
    comm = commutator_subgroup(group)
    base = np.arange(n)
    out = []
    for p in prime_divisors(n):
        powers = np.zeros(n, dtype=np.intp)
        for _ in range(p):
            powers = mult[powers, base]
        sub = generated_subgroup(group, np.concatenate([comm, powers]))
        if len(sub) == n:
            continue
        labels = np.full(n, -1, dtype=np.int64)
        count = 0
        for x in range(n):
            if labels[x] < 0:
                labels[mult[sub, x]] = count
                count += 1
        out.append((p, labels, _p_power_exponent(count, p)))
    return out


def min_generators(group: PermGroup, lattice: SubgroupLattice | None = None) -> int:
    """d(G), the size of a smallest generating set.

    With a lattice the join table is walked level by level. Otherwise an
    exhaustive depth-first search tries k = 1, 2, ... elements, starting at the
    largest rank of an elementary abelian quotient G/G'G^p (a generating set
    maps onto a spanning set there). A partial set is abandoned once its image
    in such a quotient needs more elements than remain. Groups too large for a
    Cayley table are handled only when they are p-groups whose given
    generators can be thinned to exactly that lower bound.
    """
    n = group.order
    if n == 1:
        return 0
    if lattice is not None:
        level, seen, k = {lattice.trivial}, {lattice.trivial}, 0
        while lattice.top not in level:
            k += 1
            level = {int(j) for h in level for j in np.unique(lattice.join_table[h])} - seen
            seen |= level
        return k
    if n > group.budget.table_order:
        return _rank_without_table(group)
    mult, _ = group.table
    quotients = _elementary_quotients(group)
    failed: dict[bytes, int] = {}

    def reach(hs, gens, remaining):
        if len(hs) == n:
            return True
        if remaining == 0:
            return False
        for p, labels, rank in quotients:
            if rank - _p_power_exponent(len(np.unique(labels[hs])), p) > remaining:
                return False
        key = hs.tobytes()
        if failed.get(key, -1) >= remaining:
            return False
        covered = np.zeros(n, dtype=bool)
        covered[hs] = True
        for g in range(n):
            if covered[g]:
                continue
            covered[mult[hs, g]] = True  # <H, g> only depends on the coset Hg
            if reach(np.sort(kernels.dimino_join(mult, hs, gens + (g,))), gens + (g,), remaining - 1):
                return True
        failed[key] = remaining
        if len(failed) > MAX_SEARCH_SUBGROUPS:
            raise BudgetExceeded("d(G) search visited too many subgroups")
        return False

    k = max([1] + [rank for _, _, rank in quotients])
    while not reach(np.array([0], dtype=np.int32), (), k):
        k += 1
    return k


def normal_closure(group: PermGroup, seeds) -> PermGroup:
    """Smallest normal subgroup containing ``seeds``, by closure on permutations."""
    gens = [s for s in seeds if not s.is_identity()]
    while True:
        sub = group_closure(gens, group.degree, group.budget)
        extra = []
        for g in group.generators:
            g_inv = g.inverse()
            for s in gens:
                c = g_inv * s * g
                if c not in sub and c not in extra:
                    extra.append(c)
        if not extra:
            return sub
        gens += extra


def _rank_without_table(group: PermGroup) -> int:
    p = p_group_prime(group.order)
    if p is None:
        raise BudgetExceeded(f"d(G) for a non-p-group of order {group.order} needs a Cayley table")
    gens = [g for g in group.generators if not g.is_identity()]
    seeds = [g ** p for g in gens] + [a.inverse() * b.inverse() * a * b for a in gens for b in gens]
    lower = _p_power_exponent(group.order // normal_closure(group, seeds).order, p)
    i = 0
    while i < len(gens):
        rest = gens[:i] + gens[i + 1:]
        if group_closure(rest, group.degree, group.budget).order == group.order:
            gens = rest
        else:
            i += 1
    if len(gens) != lower:
        raise BudgetExceeded(f"d(G) bounds {lower}..{len(gens)} do not meet without a Cayley table")
    return lower


# -- Frattini and Sylow -------------------------------------------------------

def frattini_subgroup(group: PermGroup, lattice: SubgroupLattice) -> int:
    """Lattice id of Phi(G), the intersection of all maximal subgroups."""
    row = np.ones(group.order, dtype=bool)
    for i in lattice.maximal():
        row &= lattice.member[i].astype(bool)
    return lattice.find(np.flatnonzero(row))


def burnside_frattini(group: PermGroup, p: int) -> np.ndarray:
    """For a p-group P: the subgroup generated by all p-th powers and commutators."""
    mult, inv = group.table
    n = group.order
    powers = np.zeros(n, dtype=np.intp)
    base = np.arange(n)
    for _ in range(p):
        powers = mult[powers, base]
    comms = mult[mult[np.ix_(inv, inv)], mult]
    return generated_subgroup(group, np.concatenate([powers, comms.ravel()]))


def p_group_prime(order: int) -> int | None:
    primes = prime_divisors(order)
    return primes[0] if len(primes) == 1 else None


def frattini_rank(group: PermGroup) -> int:
    """log_p [P : Phi(P)] for a p-group P (power/commutator route)."""
    if group.order == 1:
        return 0
    p = p_group_prime(group.order)
    if p is None:
        raise InvalidInput("frattini_rank needs a p-group")
    index = group.order // len(burnside_frattini(group, p))
    return round(math.log(index, p))


def sylow_subgroup(group: PermGroup, p: int, lattice: SubgroupLattice) -> PermGroup:
    """The first subgroup of full p-power order in lattice order."""
    if group.order % p:
        raise InvalidInput(f"{p} does not divide |G| = {group.order}")
    target = p ** factorize(group.order)[p]
    for sub in lattice:
        if sub.order == target:
            return lattice.as_group(sub.id, label=f"Syl{p}")
    raise CheckFailed(f"no subgroup of order {target}")  # Sylow's theorem


def delta_of_group(group: PermGroup, lattice: SubgroupLattice | None = None) -> tuple[dict[int, int], int]:
    """d_p(G) for each prime divisor and their sum delta(G).

    The search value of each Sylow rank is cross-checked against the
    Frattini-quotient rank; disagreement raises CheckFailed.
    """
    if group.order == 1:
        return {}, 0
    lattice = lattice or subgroup_lattice(group)
    d_p = {}
    for p in prime_divisors(group.order):
        sylow = sylow_subgroup(group, p, lattice)
        d = min_generators(sylow)
        if d != frattini_rank(sylow):
            raise CheckFailed(f"Sylow {p}-subgroup: search rank {d} != Frattini rank")
        d_p[p] = d
    return d_p, sum(d_p.values())


# -- m(G) ---------------------------------------------------------------------

def is_independent_generating(group: PermGroup, idx) -> bool:
    """True when ``idx`` generates G and no member lies in the span of the rest."""
    idx = [int(i) for i in idx]
    if len(generated_subgroup(group, idx)) != group.order:
        return False
    for i, x in enumerate(idx):
        rest = generated_subgroup(group, idx[:i] + idx[i + 1:])
        if x in set(rest.tolist()):
            return False
    return True


def max_independent_generating_set(group: PermGroup, lattice: SubgroupLattice | None = None
                                   ) -> tuple[int, list[Permutation]]:
    """m(G) with a witness, by exhaustive search over ascending independent sequences.

    Independence is inherited by subsets, so every independent set is reached
    by extending one of its prefixes; branches are cut when the longest
    subgroup chain above the current span cannot beat the best size found.
    """
    if group.order == 1:
        return 0, []
    lattice = lattice or subgroup_lattice(group)
    best, witness, _, timed_out = kernels.max_independent(
        lattice.join_table, lattice.member, lattice.height, lattice.top, lattice.trivial,
        group.budget.deadline())
    if timed_out:
        raise BudgetExceeded("m(G) search exceeded the time budget")
    if not is_independent_generating(group, witness):
        raise CheckFailed("m(G) witness failed re-verification")
    return best, [group.perm(i) for i in witness]


def m_of(group: PermGroup, lattice: SubgroupLattice | None = None) -> int:
    return max_independent_generating_set(group, lattice)[0]


def m_relative(group: PermGroup, normal_idx, lattice: SubgroupLattice | None = None,
               m_group: int | None = None) -> int:
    """m(G, N) = m(G) - m(G/N).

    For an abelian minimal normal N the value must be 1 when N is outside
    Phi(G) and 0 when inside; anything else raises CheckFailed.
    """
    lattice = lattice or subgroup_lattice(group)
    n_id = lattice.find(normal_idx)
    if m_group is None:
        m_group = m_of(group, lattice)
    value = m_group - m_of(quotient_group(group, lattice[n_id].elements))
    if n_id in minimal_normal_subgroups(lattice) and is_abelian(group, lattice[n_id].elements):
        inside = lattice.contains(frattini_subgroup(group, lattice), n_id)
        if value != (0 if inside else 1):
            raise CheckFailed(f"m(G,N) = {value} for abelian minimal normal N (in Phi: {inside})")
    return value


# -- chief series ----------------------------------------------------------------

@dataclass(frozen=True)
class ChiefFactor:
    order: int
    prime: int | None
    complemented: bool


@dataclass
class ChiefSeriesRecord:
    series: list[int]
    factors: list[ChiefFactor]

    def alpha(self, primes) -> dict[int, int] | None:
        """Complemented p-power factors per prime; None unless every factor is a p-power."""
        if any(f.prime is None for f in self.factors):
            return None
        return {p: sum(1 for f in self.factors if f.prime == p and f.complemented) for p in primes}


def _is_complemented(lattice: SubgroupLattice, below: int, above: int) -> bool:
    """Some H >= N with H meet M = N and |H||M| = |G||N| (so HM = G)."""
    member = lattice.member.astype(bool)
    n_row, m_row = member[below], member[above]
    n_els = lattice[below].elements
    target = lattice.parent.order * lattice[below].order
    for h in range(len(lattice)):
        if lattice[h].order * lattice[above].order != target:
            continue
        if member[h, n_els].all() and np.array_equal(member[h] & m_row, n_row):
            return True
    return False


def chief_series_alpha(group: PermGroup, lattice: SubgroupLattice, choice: str = "first"
                       ) -> tuple[ChiefSeriesRecord, dict[int, int] | None]:
    """Chief series built upward through minimal normal subgroups of successive quotients.

    ``choice`` picks the first or last candidate in lattice order at each step.
    """
    if choice not in ("first", "last"):
        raise InvalidInput("choice must be 'first' or 'last'")
    normal = lattice.normal
    current, series, factors = lattice.trivial, [lattice.trivial], []
    while current != lattice.top:
        above = [m for m in normal if m != current and lattice.contains(m, current)]
        minimal = [m for m in above if not any(k != m and lattice.contains(m, k) for k in above)]
        nxt = minimal[0] if choice == "first" else minimal[-1]
        size = lattice[nxt].order // lattice[current].order
        primes = prime_divisors(size)
        factors.append(ChiefFactor(size, primes[0] if len(primes) == 1 else None,
                                   _is_complemented(lattice, current, nxt)))
        series.append(nxt)
        current = nxt
    record = ChiefSeriesRecord(series, factors)
    return record, record.alpha(prime_divisors(group.order))


# -- checks ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupProfile:
    label: str
    order: int
    soluble: bool
    d: int
    m: int
    d_p: dict[int, int]
    delta: int
    alpha_p: dict[int, int] | None


@dataclass
class DennisReport:
    m: int
    delta: int
    soluble: bool
    m_le_delta: bool
    alpha_sum: int | None
    m_eq_alpha_sum: bool | None
    alpha_agree: bool | None = None


@dataclass
class QuotientLemmaRecord:
    normal_order: int
    abelian: bool
    in_frattini: bool
    delta_group: int
    delta_quotient: int | None
    pi_n: int
    delta_ok: bool | None
    m_relative: int | None = None
    dichotomy_ok: bool | None = None


class GroupAnalysis:
    """Caches the lattice and invariants of one group for the checkers."""

    def __init__(self, group: PermGroup, label: str | None = None):
        self.group = group
        self.label = label or group.label or "G"

    def __getattr__(self, name):
        # lazily computed attributes, each filled once
        compute = getattr(type(self), "_compute_" + name, None)
        if compute is None:
            raise AttributeError(name)
        value = compute(self)
        self.__dict__[name] = value
        return value

    def _compute_lattice(self):
        return subgroup_lattice(self.group)

    def _compute_soluble(self):
        return is_soluble(self.group)

    def _compute_d(self):
        return min_generators(self.group, self.lattice)

    def _compute_m_witness(self):
        return max_independent_generating_set(self.group, self.lattice)

    def _compute_m(self):
        return self.m_witness[0]

    def _compute_delta_pair(self):
        return delta_of_group(self.group, self.lattice)

    def _compute_frattini(self):
        return frattini_subgroup(self.group, self.lattice)

    def _compute_chief(self):
        return chief_series_alpha(self.group, self.lattice, "first")

    def _compute_chief_last(self):
        return chief_series_alpha(self.group, self.lattice, "last")

    def _compute_minimal_normal(self):
        return minimal_normal_subgroups(self.lattice)

    @property
    def d_p(self):
        return self.delta_pair[0]

    @property
    def delta(self):
        return self.delta_pair[1]

    @property
    def alpha_p(self):
        return self.chief[1] if self.soluble else None

    def profile(self) -> GroupProfile:
        return GroupProfile(self.label, self.group.order, self.soluble, self.d, self.m,
                            self.d_p, self.delta, self.alpha_p)

    def dennis(self) -> DennisReport:
        alpha = self.alpha_p
        alpha_sum = sum(alpha.values()) if alpha is not None else None
        agree = None
        if alpha is not None and len(self.minimal_normal) >= 2:
            agree = self.chief_last[1] == alpha
        return DennisReport(self.m, self.delta, self.soluble, self.m <= self.delta, alpha_sum,
                            None if alpha_sum is None else alpha_sum == self.m, agree)

    def quotient_lemmas(self) -> list[QuotientLemmaRecord]:
        """delta(G) >= delta(G/N) + |pi(N)| for minimal normal N outside Phi(G);
        m(G, N) in {0, 1} with 0 exactly when N <= Phi(G), for abelian N."""
        out = []
        lat = self.lattice
        for n_id in self.minimal_normal:
            els = lat[n_id].elements
            abelian = is_abelian(self.group, els)
            inside = lat.contains(self.frattini, n_id)
            quotient = quotient_group(self.group, els)
            rec = QuotientLemmaRecord(len(els), abelian, inside, self.delta, None,
                                      len(prime_divisors(len(els))), None)
            q_lattice = None
            if not inside:
                q_lattice = subgroup_lattice(quotient)
                rec.delta_quotient = delta_of_group(quotient, q_lattice)[1]
                rec.delta_ok = self.delta >= rec.delta_quotient + rec.pi_n
            if abelian:
                q_lattice = q_lattice or subgroup_lattice(quotient)
                rec.m_relative = self.m - m_of(quotient, q_lattice)
                rec.dichotomy_ok = rec.m_relative == (0 if inside else 1)
            out.append(rec)
        return out


def profile_group(group: PermGroup, label: str | None = None) -> GroupProfile:
    return GroupAnalysis(group, label).profile()


def check_dennis(group: PermGroup) -> DennisReport:
    return GroupAnalysis(group).dennis()


def check_delta_quotient_lemma(group: PermGroup) -> list[QuotientLemmaRecord]:
    return GroupAnalysis(group).quotient_lemmas()
