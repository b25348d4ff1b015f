"""Permutations and small permutation groups with materialised element sets.

Points are 1..degree. Products act on the right: ``(x * y)(i) = y(x(i))``,
matching the exponent notation omega^(xy) = (omega^x)^y. Group elements are
stored as rows of 0-based images sorted lexicographically, so the identity
is always element 0 and every enumeration is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
import re
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import DEFAULT_BUDGET, Budget, BudgetExceeded, InvalidInput


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise InvalidInput(f"not a bijection on 1..{len(self.images)}: {self.images}")

    @property
    def degree(self):
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_zero_based(cls, images: Iterable[int]) -> Permutation:
        return cls(tuple(int(i) + 1 for i in images))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        img = list(range(1, degree + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
        return cls(tuple(img))

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise InvalidInput("degree mismatch")
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        out = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cyc, x = [start], self(start)
            seen.add(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm
        return lcm(1, *(len(c) for c in self.cycles()))

    def __str__(self):
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Disjoint-cycle notation such as ``"(1 2)(3 4)"``; ``"()"`` is the identity."""
    s = text.strip()
    if not s:
        raise InvalidInput("empty permutation text")
    pos, cycles, used = 0, [], set()
    for m in _CYCLE.finditer(s):
        if s[pos : m.start()].strip():
            raise InvalidInput(f"malformed cycle notation: {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        if not body:
            continue
        try:
            pts = [int(t) for t in body]
        except ValueError:
            raise InvalidInput(f"non-integer point in {text!r}") from None
        for p in pts:
            if not 1 <= p <= degree:
                raise InvalidInput(f"point {p} out of range 1..{degree}")
            if p in used:
                raise InvalidInput(f"point {p} repeated in {text!r}")
            used.add(p)
        cycles.append(pts)
    if s[pos:].strip() or pos == 0:
        raise InvalidInput(f"malformed cycle notation: {text!r}")
    return Permutation.from_cycles(cycles, degree)


def _row_keys(rows: np.ndarray) -> np.ndarray:
    """Sort keys for image rows that order exactly like lexicographic order."""
    deg = rows.shape[1]
    if deg <= 15:
        weights = np.array([deg**k for k in range(deg - 1, -1, -1)], dtype=np.int64)
        return rows.astype(np.int64) @ weights
    rows = np.ascontiguousarray(rows)
    return rows.view(np.dtype((np.void, rows.dtype.itemsize * deg))).ravel()


class PermGroup:
    """A permutation group given by generators, elements materialised on demand."""

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None,
                 *, budget: Budget = DEFAULT_BUDGET, label: str | None = None):
        generators = tuple(generators)
        if degree is None:
            if not generators:
                raise InvalidInput("degree is required when there are no generators")
            degree = generators[0].degree
        if degree < 1:
            raise InvalidInput("degree must be positive")
        for g in generators:
            if g.degree != degree:
                raise InvalidInput(f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = generators
        self.budget = budget
        self.label = label
        self._table = None

    def __repr__(self):
        name = self.label or "PermGroup"
        return f"<{name} degree={self.degree} gens={len(self.generators)}>"

    # -- elements -------------------------------------------------------
    @cached_property
    def elements(self) -> np.ndarray:
        """(order, degree) array of 0-based image rows in lexicographic order."""
        ident = tuple(range(self.degree))
        gens = [tuple(i - 1 for i in g.images) for g in self.generators]
        seen = {ident}
        frontier = [ident]
        limit = self.budget.closure_order
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = tuple([s[i] for i in x])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
                        if len(seen) > limit:
                            raise BudgetExceeded(f"group closure exceeds {limit} elements")
            frontier = nxt
        dtype = np.uint8 if self.degree <= 256 else np.uint16
        arr = np.array(sorted(seen), dtype=dtype).reshape(len(seen), self.degree)
        arr.flags.writeable = False
        return arr

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def _keys(self):
        return _row_keys(self.elements)

    def indices_of(self, rows: np.ndarray) -> np.ndarray:
        """Element indices of 0-based image rows (each row must be in the group)."""
        rows = np.asarray(rows, dtype=self.elements.dtype).reshape(-1, self.degree)
        keys = _row_keys(rows)
        idx = np.searchsorted(self._keys, keys)
        idx = np.minimum(idx, self.order - 1)
        if not np.array_equal(self.elements[idx], rows):
            raise InvalidInput("permutation is not an element of the group")
        return idx.astype(np.int32)

    def index(self, perm: Permutation) -> int:
        return int(self.indices_of(np.array([i - 1 for i in perm.images]))[0])

    def __contains__(self, perm: Permutation) -> bool:
        if perm.degree != self.degree:
            return False
        try:
            self.index(perm)
        except InvalidInput:
            return False
        return True

    def perm(self, i: int) -> Permutation:
        return Permutation.from_zero_based(self.elements[i])

    @cached_property
    def generator_indices(self) -> tuple[int, ...]:
        return tuple(self.index(g) for g in self.generators if not g.is_identity())

    # -- multiplication table --------------------------------------------
    @property
    def table(self) -> tuple[np.ndarray, np.ndarray]:
        """(mult, inv) with ``mult[i, j]`` the index of element i times element j."""
        if self._table is None:
            n = self.order
            if n > self.budget.table_order:
                raise BudgetExceeded(f"Cayley table for order {n} exceeds {self.budget.table_order}")
            els = self.elements.astype(np.intp)
            mult = np.empty((n, n), dtype=np.int32)
            for i in range(n):
                mult[i] = self.indices_of(self.elements[:, els[i]])
            inv = np.argmin(mult, axis=1).astype(np.int32)  # identity is index 0
            mult.flags.writeable = False
            self._table = (mult, inv)
        return self._table

    # -- constructors for subgroups ------------------------------------------
    def subgroup_from_indices(self, idx: Sequence[int], label: str | None = None) -> PermGroup:
        """The subgroup whose elements are ``idx`` (sorted, closed), sharing this table."""
        idx = np.asarray(sorted(int(i) for i in idx), dtype=np.int32)
        gens = small_generating_set(self, idx)
        sub = PermGroup([self.perm(i) for i in gens], self.degree, budget=self.budget, label=label)
        els = self.elements[idx]
        els.flags.writeable = False
        sub.__dict__["elements"] = els
        if self._table is not None:
            mult, inv = self._table
            local = np.full(self.order, -1, dtype=np.int32)
            local[idx] = np.arange(len(idx), dtype=np.int32)
            sub_mult = local[mult[np.ix_(idx, idx)]]
            if (sub_mult < 0).any():
                raise InvalidInput("index set is not closed under multiplication")
            sub_mult.flags.writeable = False
            sub._table = (sub_mult, local[inv[idx]])
        return sub


def small_generating_set(group: PermGroup, idx: np.ndarray) -> list[int]:
    """Greedy generators for the subgroup on ``idx``: add the first element not yet generated."""
    if len(idx) <= 1:
        return []
    mult, _ = group.table
    current = np.array([0], dtype=np.int32)
    member = np.zeros(group.order, dtype=bool)
    member[0] = True
    gens = []
    for g in idx:
        if member[g]:
            continue
        gens.append(int(g))
        current = np.sort(kernels.dimino_join(mult, current, gens))
        member[current] = True
        if len(current) == len(idx):
            break
    if len(current) != len(idx) or not member[idx].all():
        raise InvalidInput("index set is not a subgroup")
    return gens


def group_closure(generators: Sequence[Permutation], degree: int | None = None,
                  budget: Budget = DEFAULT_BUDGET, label: str | None = None) -> PermGroup:
    group = PermGroup(generators, degree, budget=budget, label=label)
    group.elements  # materialise now so budget errors surface here
    return group


def orbits(group: PermGroup, domain: Iterable[int] | None = None) -> list[list[int]]:
    """Orbits of the generators on ``domain`` (default 1..degree), each sorted, in order of least point."""
    points = sorted(set(domain) if domain is not None else range(1, group.degree + 1))
    allowed = set(points)
    seen, out = set(), []
    for start in points:
        if start in seen:
            continue
        orbit, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for g in group.generators:
                y = g(x)
                if y not in orbit:
                    if y not in allowed:
                        raise InvalidInput(f"domain is not invariant: {x} -> {y}")
                    orbit.add(y)
                    stack.append(y)
        seen |= orbit
        out.append(sorted(orbit))
    return out


def is_transitive(group: PermGroup) -> bool:
    return len(orbits(group)) == 1


def point_stabilizer(group: PermGroup, point: int) -> PermGroup:
    if not 1 <= point <= group.degree:
        raise InvalidInput(f"point {point} out of range")
    idx = np.flatnonzero(group.elements[:, point - 1] == point - 1)
    label = f"{group.label}_{point}" if group.label else None
    return group.subgroup_from_indices(idx, label=label)


def quotient_group(group: PermGroup, normal_idx: Sequence[int]) -> PermGroup:
    """G/N acting on the right cosets Nx by right multiplication (faithful since N is normal)."""
    mult, inv = group.table
    nidx = np.asarray(sorted(int(i) for i in normal_idx), dtype=np.intp)
    member = np.zeros(group.order, dtype=bool)
    member[nidx] = True
    if not member[0] or len(nidx) == 0:
        raise InvalidInput("N must contain the identity")
    for s in group.generator_indices:
        conj = mult[mult[inv[s], nidx], s]
        if not member[conj].all():
            raise NotNormal("subgroup is not normal")
    label = np.full(group.order, -1, dtype=np.int64)
    reps = []
    for x in range(group.order):
        if label[x] < 0:
            label[mult[nidx, x]] = len(reps)
            reps.append(x)
    index = len(reps)
    if index * len(nidx) != group.order:
        raise InvalidInput("N is not a subgroup")
    gens = []
    for s in group.generator_indices:
        gens.append(Permutation.from_zero_based(label[mult[reps, s]]))
    name = f"{group.label}/N" if group.label else None
    return group_closure(gens or [Permutation.identity(index)], index, group.budget, label=name)


class NotNormal(InvalidInput):
    pass
