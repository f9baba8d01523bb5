"""The order a finite endofunction induces on its domain.

Elements that reach each other under iteration are merged into one class
(these are exactly the cycles), every other element is a singleton class,
and the classes form a forest whose roots are the cycles. Edges point from
a class to the class of its image ("upwards").
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from fntopo.core import FiniteFunction

_UNVISITED, _IN_PROGRESS, _FINISHED = 0, 1, 2


@dataclass(frozen=True)
class EqClass:
    id: int
    members: tuple[int, ...]
    is_cycle: bool

    @property
    def smallest(self) -> int:
        return self.members[0]

    def label(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


@dataclass(frozen=True)
class Topology:
    """Reduced domain plus its Hasse forest.

    ``parent`` maps each non-maximal class id to its unique upper cover.
    ``class_of`` maps every domain element to its class id.
    """

    classes: tuple[EqClass, ...]
    parent: Mapping[int, int]
    base_set: frozenset[int]
    generator_set: frozenset[int]
    fixed_point_set: frozenset[int]
    class_of: Mapping[int, int]
    child_lists: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(sorted(self.base_set))

    def children(self, cid: int) -> tuple[int, ...]:
        return self.child_lists[cid]

    def ancestors(self, cid: int) -> list[int]:
        """Strict ancestors of ``cid``, nearest first."""
        out = []
        while cid in self.parent:
            cid = self.parent[cid]
            out.append(cid)
        return out

    def below(self, c: int, d: int) -> bool:
        """Strict order on classes: ``c < d`` iff ``d`` is a strict ancestor of ``c``."""
        while c in self.parent:
            c = self.parent[c]
            if c == d:
                return True
        return False

    def depth(self, cid: int) -> int:
        return len(self.ancestors(cid))

    def base_elements(self) -> frozenset[int]:
        return frozenset(x for c in self.base_set for x in self.classes[c].members)

    def generator_elements(self) -> frozenset[int]:
        return frozenset(x for c in self.generator_set for x in self.classes[c].members)

    def fixed_point_elements(self) -> frozenset[int]:
        return frozenset(x for c in self.fixed_point_set for x in self.classes[c].members)


def _find_cycles(f: FiniteFunction) -> list[list[int]]:
    table = f.table
    state = dict.fromkeys(f.domain, _UNVISITED)
    cycles = []
    for start in f.domain:
        if state[start] != _UNVISITED:
            continue
        path = []
        x = start
        while state[x] == _UNVISITED:
            state[x] = _IN_PROGRESS
            path.append(x)
            x = table[x]
        if state[x] == _IN_PROGRESS:
            cycles.append(path[path.index(x):])
        for y in path:
            state[y] = _FINISHED
    return cycles


def build_topology(f: FiniteFunction) -> Topology:
    """Compute classes, Hasse forest and base/generator/fixed-point sets of ``f``.

    Classes are numbered by their smallest member. Runs in O(|A|) apart
    from the final sorts.
    """
    cycles = _find_cycles(f)
    on_cycle = {x for cyc in cycles for x in cyc}
    groups = [(tuple(sorted(c)), True) for c in cycles]
    groups += [((x,), False) for x in f.domain if x not in on_cycle]
    groups.sort(key=lambda g: g[0][0])

    classes = tuple(EqClass(i, members, cyc) for i, (members, cyc) in enumerate(groups))
    class_of = {x: c.id for c in classes for x in c.members}

    parent = {}
    for c in classes:
        if not c.is_cycle:
            parent[c.id] = class_of[f.table[c.smallest]]

    kids: list[list[int]] = [[] for _ in classes]
    for c, p in sorted(parent.items()):
        kids[p].append(c)
    has_child = set(parent.values())
    base = frozenset(c.id for c in classes if c.id not in parent)
    gens = frozenset(c.id for c in classes if c.id not in has_child)
    return Topology(
        classes=classes,
        parent=MappingProxyType(parent),
        base_set=base,
        generator_set=gens,
        fixed_point_set=base & gens,
        class_of=MappingProxyType(class_of),
        child_lists=tuple(tuple(k) for k in kids),
    )


def element_rank_paths(t: Topology, f: FiniteFunction) -> dict[int, list[int]]:
    """For each element, the orbit prefix up to and including the first base element."""
    base = t.base_elements()
    paths: dict[int, list[int]] = {}
    for x in f.domain:
        path = [x]
        while path[-1] not in base:
            path.append(f.table[path[-1]])
        paths[x] = path
    return paths


def base_conditions_required(t: Topology) -> frozenset[int]:
    """Elements at which a recursion over ``f`` needs externally supplied values."""
    return t.base_elements()


def cycle_periods(t: Topology, f: FiniteFunction) -> dict[int, set[int]]:
    """Minimal return period of each member, grouped by cycle class.

    Every member of a cycle class returns to itself after exactly the
    class size; the result lets callers check that rather than assume it.
    """
    out = {}
    for c in t.classes:
        if not c.is_cycle:
            continue
        periods = set()
        for x in c.members:
            y, n = f.table[x], 1
            while y != x:
                y, n = f.table[y], n + 1
            periods.add(n)
        out[c.id] = periods
    return out


def bfs_from_base(t: Topology, f: FiniteFunction) -> dict[int, int]:
    """Distance of every element to the base set, via reverse breadth-first search."""
    pre: dict[int, list[int]] = {x: [] for x in f.domain}
    for x, y in f.table.items():
        pre[y].append(x)
    dist = {x: 0 for x in t.base_elements()}
    queue = deque(sorted(dist))
    while queue:
        y = queue.popleft()
        for x in pre[y]:
            if x not in dist:
                dist[x] = dist[y] + 1
                queue.append(x)
    return dist
