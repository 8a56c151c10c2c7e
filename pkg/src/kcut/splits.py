"""Exact split oracles: minimum 2-way cut, minimum k-way split, and the
minimum-density split of bounded separation degree that drives the greedy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _dp
from .errors import GraphError, InfeasibleError
from .graph import (
    Graph,
    Split,
    _DSU,
    component_count,
    components,
    crossing_edges,
    make_split,
    require_positive,
    split_order_key,
)
from .limits import DP_MAX_N, check_capacity


@dataclass(frozen=True)
class Partition:
    """Assignment of every vertex to one of ``part_count`` nonempty parts."""

    part_of: tuple[int, ...]
    part_count: int

    def __post_init__(self):
        used = set(self.part_of)
        if used != set(range(self.part_count)):
            raise GraphError("partition parts must be exactly 0..part_count-1, all nonempty")

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        """Renumber arbitrary labels by order of first appearance."""
        relabel: dict[int, int] = {}
        part_of = tuple(relabel.setdefault(x, len(relabel)) for x in labels)
        return cls(part_of, len(relabel))

    def parts(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.part_count)]
        for v, p in enumerate(self.part_of):
            out[p].append(v)
        return out


@dataclass(frozen=True)
class ApexInfo:
    augmented: Graph
    apex_vertex: int
    sentinel_weight: int
    sentinel_edge_ids: frozenset[int]


def apex_augment(g: Graph) -> ApexInfo:
    """Join every component to a new apex vertex through one heavy edge.

    The sentinel weight ``w(E) * n + 1`` exceeds the weight of any edge set of
    ``g``, so no minimum split of the augmented graph uses a sentinel edge.
    """
    n = g.vertex_count
    sentinel = g.total_weight * n + 1
    next_id = max((e.id for e in g.edges), default=-1) + 1
    extra = [(n, comp[0], sentinel, next_id + i) for i, comp in enumerate(components(g))]
    augmented = Graph(n + 1, list(g.edges) + extra, strict=g.strict)
    return ApexInfo(augmented, n, sentinel, frozenset(e[3] for e in extra))


def min_cut_2way(g: Graph) -> Split:
    """Global minimum cut by maximum-adjacency ordering (Stoer-Wagner).

    Ordering ties go to the smallest vertex id, so the result is deterministic.
    """
    require_positive(g)
    n = g.vertex_count
    if n < 2:
        raise GraphError("minimum cut needs at least two vertices")
    if component_count(g) != 1:
        raise GraphError("minimum cut needs a connected graph")
    w = [[0] * n for _ in range(n)]
    for e in g.edges:
        w[e.u][e.v] += e.weight
        w[e.v][e.u] += e.weight
    groups = [[v] for v in range(n)]
    active = list(range(n))
    best_weight, best_side = None, None
    while len(active) > 1:
        start = active[0]
        attach = {v: w[start][v] for v in active if v != start}
        order = [start]
        cut_of_phase = 0
        while attach:
            nxt = max(attach, key=lambda v: (attach[v], -v))
            cut_of_phase = attach.pop(nxt)
            order.append(nxt)
            row = w[nxt]
            for v in attach:
                attach[v] += row[v]
        s, t = order[-2], order[-1]
        if best_weight is None or cut_of_phase < best_weight:
            best_weight, best_side = cut_of_phase, list(groups[t])
        groups[s].extend(groups[t])
        for v in active:
            w[s][v] += w[t][v]
            w[v][s] = w[s][v]
        w[s][s] = 0
        active.remove(t)
    side = set(best_side)
    labels = [1 if v in side else 0 for v in range(n)]
    return make_split(g, crossing_edges(g, labels))


def refine_partition(g: Graph, p: Partition, target: int | None = None) -> Split:
    """Turn a partition into a split with exactly ``target`` components.

    Each part is broken into the connected pieces it induces; then, while
    there are more pieces than ``target`` (default ``comp(g) + parts - 1``),
    the two adjacent pieces joined by the heaviest total edge weight are
    merged. The result never weighs more than the partition's crossing set.
    """
    if len(p.part_of) != g.vertex_count:
        raise GraphError("partition does not cover the graph's vertices")
    if target is None:
        target = component_count(g) + p.part_count - 1
    labels = p.part_of
    dsu = _DSU(g.vertex_count)
    crossing = []
    for e in g.edges:
        if labels[e.u] == labels[e.v]:
            dsu.union(e.u, e.v)
        else:
            crossing.append(e)
    while dsu.count > target:
        between: dict[tuple[int, int], int] = {}
        for e in crossing:
            a, b = dsu.find(e.u), dsu.find(e.v)
            if a != b:
                key = (min(a, b), max(a, b))
                between[key] = between.get(key, 0) + e.weight
        if not between:
            break
        a, b = min(between, key=lambda key: (-between[key], key))
        dsu.union(a, b)
    ids = frozenset(e.id for e in crossing if dsu.find(e.u) != dsu.find(e.v))
    return make_split(g, ids)


@dataclass
class _ComponentTable:
    vertices: list[int]
    total: int
    best: np.ndarray
    tables: tuple | None

    def cut_weight(self, j: int) -> int | None:
        if j >= len(self.best) or self.best[j] == _dp.NEG:
            return None
        return self.total - int(self.best[j])

    def labels(self, j: int) -> list[int]:
        if self.tables is None:
            return [0]
        g, w_in, w_top = self.tables
        lab = _dp.reconstruct(g, w_in, w_top, j, self.best[j])
        return [int(x) for x in lab]


def _solve_component(g: Graph, vertices: list[int], kmax: int) -> _ComponentTable:
    size = len(vertices)
    if size == 1:
        return _ComponentTable(vertices, 0, np.array([_dp.NEG, 0], np.int64), None)
    index = {v: i for i, v in enumerate(vertices)}
    adj = np.zeros((size, size), np.int64)
    total = 0
    for e in g.edges:
        if e.u in index:
            a, b = index[e.u], index[e.v]
            adj[a, b] += e.weight
            adj[b, a] += e.weight
            total += e.weight
    best, gtab, w_in, w_top = _dp.solve_levels(adj, min(kmax, size))
    return _ComponentTable(vertices, total, best, (gtab, w_in, w_top))


def _combine(tables: list[_ComponentTable], extra: int):
    """Cheapest way to add ``extra`` components across independent components.

    Returns ``(weight, parts_per_component)`` or None when infeasible.
    """
    frontier: dict[int, tuple[int, tuple[int, ...]]] = {0: (0, ())}
    for tab in tables:
        nxt: dict[int, tuple[int, tuple[int, ...]]] = {}
        for used, (cost, picks) in sorted(frontier.items()):
            for j in range(1, len(tab.best)):
                cut = tab.cut_weight(j)
                if cut is None or used + j - 1 > extra:
                    continue
                key = used + j - 1
                cand = (cost + cut, picks + (j,))
                if key not in nxt or cand[0] < nxt[key][0]:
                    nxt[key] = cand
        frontier = nxt
    return frontier.get(extra)


def _assemble(g: Graph, tables: list[_ComponentTable], picks: tuple[int, ...], k: int) -> Split:
    labels = [0] * g.vertex_count
    offset = 0
    for tab, j in zip(tables, picks):
        local = tab.labels(j)
        for i, v in enumerate(tab.vertices):
            labels[v] = offset + local[i]
        offset += j
    part = Partition.from_labels(labels)
    return refine_partition(g, part, target=len(tables) + k - 1)


def _feasible(g: Graph, k: int) -> bool:
    return 1 <= k and component_count(g) + k - 1 <= g.vertex_count


def min_split_profile(g: Graph, kmax: int) -> dict[int, Split]:
    """Minimum j-way split of ``g`` for every feasible ``j`` in ``1..kmax``.

    Components are solved independently by the subset DP and recombined
    with a small knapsack over how many extra pieces each one contributes.
    """
    require_positive(g)
    check_capacity(g.vertex_count, DP_MAX_N, "exact k-way split")
    tables = [_solve_component(g, comp, kmax) for comp in components(g)]
    out = {}
    for j in range(1, kmax + 1):
        found = _combine(tables, j - 1)
        if found is not None:
            out[j] = _assemble(g, tables, found[1], j)
    return out


def _min_kway_apex(g: Graph, k: int) -> Split:
    c = component_count(g)
    if c == 1:
        host, sentinels = g, frozenset()
    else:
        info = apex_augment(g)
        host, sentinels = info.augmented, info.sentinel_edge_ids
    table = _solve_component(host, list(range(host.vertex_count)), k)
    part = Partition.from_labels(table.labels(k))
    split = refine_partition(host, part, target=k)
    if split.edge_ids & sentinels:
        raise AssertionError("sentinel edge in a minimum split")
    return make_split(g, split.edge_ids)


def min_kway_split(g: Graph, k: int, method: str = "components") -> Split:
    """Minimum-weight edge set whose removal leaves ``comp(g) + k - 1`` components.

    ``method="components"`` solves each component separately; ``"apex"``
    joins the components through an apex vertex first and solves one
    connected instance. Both give the same weight.
    """
    require_positive(g)
    if not _feasible(g, k):
        raise InfeasibleError(
            f"no {k}-way split: graph has {g.vertex_count} vertices in "
            f"{component_count(g)} components")
    check_capacity(g.vertex_count, DP_MAX_N, "exact k-way split")
    if k == 1:
        return make_split(g, ())
    if method == "apex":
        return _min_kway_apex(g, k)
    if method != "components":
        raise ValueError(f"unknown method {method!r}")
    tables = [_solve_component(g, comp, k) for comp in components(g)]
    found = _combine(tables, k - 1)
    return _assemble(g, tables, found[1], k)


def min_density_bounded(g: Graph, h: int) -> Split:
    """Lowest-density split among those of separation degree ``2..h``.

    For a fixed degree the lowest density is the lowest weight, so this
    compares the minimum j-way splits; ties prefer the smaller degree.
    """
    if h < 2:
        raise ValueError(f"degree bound h must be at least 2, got {h}")
    profile = min_split_profile(g, h)
    candidates = [profile[j] for j in range(2, h + 1) if j in profile]
    if not candidates:
        raise InfeasibleError("graph has no 2-way split")
    return min(candidates, key=split_order_key)
