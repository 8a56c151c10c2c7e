"""Brute-force ground truth for minimum k-way splits.

Partitions are enumerated as restricted growth strings (vertex 0 sits in
part 0 and every new part index appears in vertex order), so each set
partition is visited once. A partition counts as a split witness only when
every part induces a connected subgraph; this is what ties partitions to
the component-count definition of a k-way split. Nothing here shares code
with the subset DP in :mod:`kcut.splits`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import InfeasibleError
from .graph import (
    Graph,
    Split,
    _DSU,
    component_count,
    crossing_edges,
    make_split,
    require_positive,
)
from .limits import ORACLE_MAX_N, check_capacity


def restricted_growth_strings(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All canonical assignments of ``n`` vertices to exactly ``parts`` parts."""
    labels = [0] * n

    def rec(v: int, used: int):
        if used + (n - v) < parts:
            return
        if v == n:
            if used == parts:
                yield tuple(labels)
            return
        for p in range(min(used + 1, parts)):
            labels[v] = p
            yield from rec(v + 1, max(used, p + 1))

    if n == 0:
        if parts == 0:
            yield ()
        return
    yield from rec(0, 0)


def _parts_connected(g: Graph, labels, parts: int) -> bool:
    dsu = _DSU(g.vertex_count)
    for e in g.edges:
        if labels[e.u] == labels[e.v]:
            dsu.union(e.u, e.v)
    return dsu.count == parts


def _target(g: Graph, k: int) -> int:
    target = component_count(g) + k - 1
    if k < 1 or target > g.vertex_count:
        raise InfeasibleError(f"no {k}-way split in a graph with {g.vertex_count} vertices")
    return target


def opt_kcut_enumerate(g: Graph, k: int) -> Split:
    """Minimum k-way split by exhaustive partition search.

    Branches whose partial crossing weight already reaches the best complete
    witness are cut, which is safe because weights are positive.
    """
    require_positive(g)
    check_capacity(g.vertex_count, ORACLE_MAX_N, "enumeration oracle")
    target = _target(g, k)
    n = g.vertex_count
    earlier: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e in g.edges:
        lo, hi = min(e.u, e.v), max(e.u, e.v)
        earlier[hi].append((lo, e.weight))
    labels = [0] * n
    best: list = [None, None]

    def rec(v: int, used: int, partial: int):
        if best[0] is not None and partial >= best[0]:
            return
        if used + (n - v) < target:
            return
        if v == n:
            if used == target and _parts_connected(g, labels, target):
                best[0], best[1] = partial, tuple(labels)
            return
        for p in range(min(used + 1, target)):
            add = 0
            for u, w in earlier[v]:
                if labels[u] != p:
                    add += w
            labels[v] = p
            rec(v + 1, max(used, p + 1), partial + add)

    rec(0, 0, 0)
    if best[1] is None:
        raise InfeasibleError(f"no {k}-way split found")
    return make_split(g, crossing_edges(g, best[1]))


def connected_partitions(g: Graph, parts: int) -> Iterator[tuple[int, ...]]:
    for labels in restricted_growth_strings(g.vertex_count, parts):
        if _parts_connected(g, labels, parts):
            yield labels


@dataclass
class SplitCatalog:
    """Per-degree minimum splits plus every 2-way split weight."""

    minima: dict[int, tuple[int, Split]] = field(default_factory=dict)
    opt_weight: dict[int, int] = field(default_factory=dict)
    two_way_weights: list[int] = field(default_factory=list)

    def min_density(self, degree: int):
        weight, split = self.minima[degree]
        return split.density


def enumerate_splits_up_to(g: Graph, h: int) -> SplitCatalog:
    require_positive(g)
    check_capacity(g.vertex_count, ORACLE_MAX_N, "enumeration oracle")
    catalog = SplitCatalog()
    c = component_count(g)
    catalog.opt_weight[1] = 0
    for degree in range(2, h + 1):
        if c + degree - 1 > g.vertex_count:
            break
        split = opt_kcut_enumerate(g, degree)
        catalog.minima[degree] = (split.weight, split)
        catalog.opt_weight[degree] = split.weight
    if 2 in catalog.minima:
        for labels in connected_partitions(g, c + 1):
            catalog.two_way_weights.append(g.weight_of(crossing_edges(g, labels)))
    return catalog
