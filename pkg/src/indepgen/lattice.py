"""Complete subgroup lattices of small permutation groups.

Every subgroup is reached from the trivial one by repeatedly joining a single
element, so the lattice is grown breadth-first from the cyclic subgroups by
join closure. ``<H, g>`` only depends on the right coset ``Hg``, which keeps
the number of closures at sum_H [G:H]. The resulting join table
``join[h, g] = id of <H_h, g>`` doubles as the search graph for d(G) and m(G).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .errors import BudgetExceeded, InvalidInput
from .perm import PermGroup


@dataclass(frozen=True)
class Subgroup:
    id: int
    elements: np.ndarray
    gens: tuple[int, ...]

    @property
    def order(self):
        return len(self.elements)


def _key(member_row):
    return np.packbits(member_row).tobytes()


class SubgroupLattice:
    """All subgroups of ``parent``, ordered by (order, sorted element indices)."""

    def __init__(self, parent: PermGroup, subgroups: list[Subgroup], join: np.ndarray,
                 member: np.ndarray):
        self.parent = parent
        self.subgroups = subgroups
        self.join_table = join
        self.member = member
        self._ids = {_key(member[i]): i for i in range(len(subgroups))}

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, i) -> Subgroup:
        return self.subgroups[i]

    @property
    def trivial(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.subgroups) - 1

    def find(self, elements) -> int:
        """Id of the subgroup with exactly these element indices."""
        row = np.zeros(self.parent.order, dtype=bool)
        row[np.asarray(elements, dtype=np.intp)] = True
        try:
            return self._ids[_key(row)]
        except KeyError:
            raise InvalidInput("element set is not a subgroup in this lattice") from None

    def contains(self, big: int, small: int) -> bool:
        """True when subgroup ``small`` is contained in subgroup ``big``."""
        return bool(self.member[big, self.subgroups[small].elements].all())

    def meet(self, a: int, b: int) -> int:
        row = self.member[a] & self.member[b]
        return self._ids[_key(row.astype(bool))]

    def join(self, a: int, b: int) -> int:
        h = a
        for g in self.subgroups[b].gens:
            h = int(self.join_table[h, g])
        return h

    @cached_property
    def height(self) -> np.ndarray:
        """Length of the longest chain from each subgroup up to the whole group."""
        h = np.zeros(len(self), dtype=np.int32)
        for i in range(len(self) - 2, -1, -1):
            outside = ~self.member[i].astype(bool)
            h[i] = 1 + int(h[self.join_table[i][outside]].max())
        return h

    def maximal(self) -> list[int]:
        return [i for i in range(len(self) - 1) if self.height[i] == 1]

    def overgroups(self, i: int) -> list[int]:
        """Ids of subgroups containing subgroup ``i`` (including itself)."""
        els = self.subgroups[i].elements
        return [j for j in range(len(self)) if self.member[j, els].all()]

    def is_normal(self, i: int) -> bool:
        mult, inv = self.parent.table
        els = self.subgroups[i].elements
        row = self.member[i]
        return all(row[mult[mult[inv[s], els], s]].all() for s in self.parent.generator_indices)

    @cached_property
    def normal(self) -> list[int]:
        return [i for i in range(len(self)) if self.is_normal(i)]

    def as_group(self, i: int, label: str | None = None) -> PermGroup:
        return self.parent.subgroup_from_indices(self.subgroups[i].elements, label=label)


def subgroup_lattice(group: PermGroup) -> SubgroupLattice:
    n = group.order
    if n > group.budget.lattice_order:
        raise BudgetExceeded(f"lattice of order-{n} group exceeds budget {group.budget.lattice_order}")
    mult, _ = group.table
    elements = [np.array([0], dtype=np.int32)]
    gens: list[tuple[int, ...]] = [()]
    ids = {_key(_row(n, elements[0])): 0}
    rows = []
    i = 0
    while i < len(elements):
        hs, hg = elements[i], gens[i]
        row = np.full(n, -1, dtype=np.int32)
        row[hs] = i
        for g in range(n):
            if row[g] >= 0:
                continue
            new = np.sort(kernels.dimino_join(mult, hs, hg + (g,)))
            key = _key(_row(n, new))
            j = ids.get(key)
            if j is None:
                j = ids[key] = len(elements)
                elements.append(new)
                gens.append(hg + (g,))
            row[mult[hs, g]] = j
        rows.append(row)
        i += 1

    order = sorted(range(len(elements)), key=lambda k: (len(elements[k]), elements[k].tolist()))
    relabel = np.empty(len(order), dtype=np.int32)
    relabel[order] = np.arange(len(order), dtype=np.int32)
    join = np.ascontiguousarray(relabel[np.stack([rows[k] for k in order])])
    member = np.zeros((len(order), n), dtype=np.uint8)
    subgroups = []
    for new_id, k in enumerate(order):
        member[new_id, elements[k]] = 1
        subgroups.append(Subgroup(new_id, elements[k], gens[k]))
    join.flags.writeable = False
    member.flags.writeable = False
    return SubgroupLattice(group, subgroups, join, member)


def _row(n, elems):
    r = np.zeros(n, dtype=bool)
    r[elems] = True
    return r


def minimal_normal_subgroups(lattice: SubgroupLattice) -> list[int]:
    """Nontrivial normal subgroups containing no smaller nontrivial normal subgroup."""
    normal = [i for i in lattice.normal if i != lattice.trivial]
    return [i for i in normal
            if not any(j != i and lattice.contains(i, j) for j in normal)]
