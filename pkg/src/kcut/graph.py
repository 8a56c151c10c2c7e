"""Weighted undirected multigraphs and the split vocabulary built on them.

A *split* is a set of edge ids. Removing it from a graph raises the number of
connected components; its separation degree is ``comp(G - S) - comp(G) + 1``
and its density is ``w(S) / (degree - 1)``. All weight arithmetic is exact:
integers in ordinary graphs, :class:`fractions.Fraction` in normalized ones.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union

from .errors import GraphError, UndefinedDensityError

Weight = Union[int, Fraction]


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    weight: Weight
    id: int

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


class Graph:
    """Immutable undirected multigraph on vertices ``0..vertex_count-1``.

    ``edges`` may hold :class:`Edge` objects, ``(u, v, w)`` triples (ids are
    assigned in order) or ``(u, v, w, id)`` quadruples. Parallel edges are
    allowed; self-loops are not. With ``strict=True`` every weight must be
    at least 1, which is what the exact oracles and the greedy require.
    """

    def __init__(self, vertex_count: int, edges: Iterable = (), *, strict: bool = False):
        if isinstance(vertex_count, bool) or not isinstance(vertex_count, numbers.Integral):
            raise GraphError(f"vertex_count must be an integer, got {vertex_count!r}")
        if vertex_count < 1:
            raise GraphError("a graph needs at least one vertex")
        self._n = int(vertex_count)
        self._strict = strict
        built = []
        seen = set()
        for pos, item in enumerate(edges):
            edge = self._coerce_edge(item, pos)
            if edge.id in seen:
                raise GraphError(f"duplicate edge id {edge.id}")
            seen.add(edge.id)
            built.append(edge)
        self._edges = tuple(built)
        self._by_id = {e.id: e for e in built}

    def _coerce_edge(self, item, pos: int) -> Edge:
        if isinstance(item, Edge):
            u, v, w, eid = item.u, item.v, item.weight, item.id
        elif len(item) == 3:
            (u, v, w), eid = item, pos
        elif len(item) == 4:
            u, v, w, eid = item
        else:
            raise GraphError(f"cannot interpret {item!r} as an edge")
        u, v, eid = int(u), int(v), int(eid)
        if not (0 <= u < self._n and 0 <= v < self._n):
            raise GraphError(f"edge {eid} endpoint out of range 0..{self._n - 1}")
        if u == v:
            raise GraphError(f"edge {eid} is a self-loop on vertex {u}")
        w = self._check_weight(w, eid)
        return Edge(u, v, w, eid)

    def _check_weight(self, w, eid: int) -> Weight:
        if isinstance(w, bool) or not isinstance(w, numbers.Integral):
            raise GraphError(f"edge {eid} weight must be an integer, got {w!r}")
        w = int(w)
        if w < 0:
            raise GraphError(f"edge {eid} has negative weight {w}")
        if self._strict and w == 0:
            raise GraphError(f"edge {eid} has weight 0, rejected in strict mode")
        return w

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def strict(self) -> bool:
        return self._strict

    def edge(self, eid: int) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise GraphError(f"unknown edge id {eid}") from None

    def has_edge(self, eid: int) -> bool:
        return eid in self._by_id

    @property
    def edge_ids(self) -> frozenset[int]:
        return frozenset(self._by_id)

    @cached_property
    def total_weight(self) -> Weight:
        return sum((e.weight for e in self._edges), 0)

    def weight_of(self, ids: Iterable[int]) -> Weight:
        return sum((self.edge(i).weight for i in ids), 0)

    @cached_property
    def incidence(self) -> tuple[tuple[Edge, ...], ...]:
        inc: list[list[Edge]] = [[] for _ in range(self._n)]
        for e in self._edges:
            inc[e.u].append(e)
            inc[e.v].append(e)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def is_positive(self) -> bool:
        return all(e.weight > 0 for e in self._edges)

    def with_edges(self, edges: Iterable[Edge]) -> "Graph":
        """Same vertex set and weight discipline, different edge list."""
        g = object.__new__(type(self))
        g._n = self._n
        g._strict = self._strict
        g._edges = tuple(edges)
        g._by_id = {e.id: e for e in g._edges}
        return g

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._edges)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self._n}, m={len(self._edges)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))


class NormalizedGraph(Graph):
    """Graph whose rational weights sum to exactly one."""

    def __init__(self, vertex_count: int, edges: Iterable = ()):
        super().__init__(vertex_count, edges, strict=False)
        if self.total_weight != 1:
            raise GraphError(f"normalized weights sum to {self.total_weight}, not 1")

    def _check_weight(self, w, eid: int) -> Weight:
        if isinstance(w, bool) or not isinstance(w, numbers.Rational):
            raise GraphError(f"edge {eid} weight must be rational, got {w!r}")
        w = Fraction(w)
        if w < 0:
            raise GraphError(f"edge {eid} has negative weight {w}")
        return w


@dataclass(frozen=True)
class Split:
    """Edge-id set together with its weight and separation degree.

    The degree is relative to the graph the split was built against; use
    :func:`make_split` rather than constructing this by hand.
    """

    edge_ids: frozenset[int]
    weight: Weight
    separation_degree: int

    @property
    def density(self) -> Fraction:
        if self.separation_degree < 2:
            raise UndefinedDensityError(
                f"density undefined for separation degree {self.separation_degree}")
        return Fraction(self.weight) / (self.separation_degree - 1)

    def sorted_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.edge_ids))

    def __len__(self) -> int:
        return len(self.edge_ids)


class _DSU:
    __slots__ = ("parent", "count")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.count -= 1
        return True


def require_positive(g: Graph) -> None:
    if not g.is_positive():
        raise GraphError("exact split oracles need strictly positive edge weights")


def _ids(s) -> frozenset[int]:
    if isinstance(s, Split):
        return s.edge_ids
    return frozenset(s)


def _dsu_without(g: Graph, removed: frozenset[int] = frozenset()) -> _DSU:
    dsu = _DSU(g.vertex_count)
    for e in g.edges:
        if e.id not in removed:
            dsu.union(e.u, e.v)
    return dsu


def component_count(g: Graph) -> int:
    return _dsu_without(g).count


def component_labels(g: Graph) -> list[int]:
    """Label each vertex by its component, numbered in order of lowest vertex."""
    dsu = _dsu_without(g)
    labels, relabel = [], {}
    for v in range(g.vertex_count):
        labels.append(relabel.setdefault(dsu.find(v), len(relabel)))
    return labels


def components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, ordered by lowest vertex."""
    out: list[list[int]] = []
    for v, c in enumerate(component_labels(g)):
        if c == len(out):
            out.append([])
        out[c].append(v)
    return out


def _check_subset(g: Graph, ids: frozenset[int]) -> None:
    for i in ids:
        if not g.has_edge(i):
            raise GraphError(f"unknown edge id {i}")


def separation_degree(g: Graph, s) -> int:
    ids = _ids(s)
    _check_subset(g, ids)
    return _dsu_without(g, ids).count - component_count(g) + 1


def make_split(g: Graph, s) -> Split:
    ids = _ids(s)
    _check_subset(g, ids)
    return Split(ids, g.weight_of(ids), separation_degree(g, ids))


def density(g: Graph, s) -> Fraction:
    """Exact density ``w(s) / (degree - 1)`` of ``s`` measured in ``g``."""
    return make_split(g, s).density


def split_order_key(split: Split) -> tuple:
    """Sort key used to break density ties: smaller degree, then smaller ids."""
    return (split.density, split.separation_degree, split.sorted_ids())


def remove_split(g: Graph, s) -> Graph:
    ids = _ids(s)
    _check_subset(g, ids)
    return g.with_edges(e for e in g.edges if e.id not in ids)


@dataclass(frozen=True)
class Contraction:
    """Quotient graph plus the maps back to the graph it was built from.

    ``vertex_map[v]`` is the quotient vertex holding original vertex ``v``;
    ``edge_map[q]`` lists the original edge ids merged into quotient edge ``q``.
    """

    graph: Graph
    vertex_map: tuple[int, ...]
    edge_map: dict[int, tuple[int, ...]]

    def lift(self, quotient_ids: Iterable[int]) -> frozenset[int]:
        return frozenset(i for q in quotient_ids for i in self.edge_map[q])


def contract_complement(g: Graph, s) -> Contraction:
    """Contract every edge not in ``s`` and merge the resulting parallel edges.

    Edges of ``s`` whose endpoints fall into the same group become loops and
    are dropped. Quotient vertices are numbered by lowest original vertex and
    quotient edge ids follow sorted endpoint pairs.
    """
    ids = _ids(s)
    _check_subset(g, ids)
    dsu = _DSU(g.vertex_count)
    for e in g.edges:
        if e.id not in ids:
            dsu.union(e.u, e.v)
    relabel: dict[int, int] = {}
    vmap = tuple(relabel.setdefault(dsu.find(v), len(relabel)) for v in range(g.vertex_count))
    merged: dict[tuple[int, int], list[Edge]] = {}
    for e in g.edges:
        if e.id not in ids:
            continue
        a, b = vmap[e.u], vmap[e.v]
        if a == b:
            continue
        merged.setdefault((min(a, b), max(a, b)), []).append(e)
    edges, edge_map = [], {}
    for qid, (a, b) in enumerate(sorted(merged)):
        group = merged[(a, b)]
        edges.append((a, b, sum((e.weight for e in group), 0), qid))
        edge_map[qid] = tuple(sorted(e.id for e in group))
    quotient = Graph(len(relabel), edges, strict=g.strict)
    return Contraction(quotient, vmap, edge_map)


def beta(g: Graph) -> Fraction:
    """Edge-to-vertex ratio ``|E| / |V|``."""
    return Fraction(g.edge_count, g.vertex_count)


def normalize(g: Graph) -> NormalizedGraph:
    total = g.total_weight
    if total <= 0:
        raise GraphError("cannot normalize a graph of zero total weight")
    return NormalizedGraph(
        g.vertex_count, [(e.u, e.v, Fraction(e.weight) / total, e.id) for e in g.edges])


def crossing_edges(g: Graph, labels: Sequence[int]) -> frozenset[int]:
    """Ids of edges whose endpoints carry different labels."""
    return frozenset(e.id for e in g.edges if labels[e.u] != labels[e.v])


def simple_edge_count(g: Graph) -> int:
    return len({(min(e.u, e.v), max(e.u, e.v)) for e in g.edges})


def adjacency_matrix(g: Graph) -> list[list[Weight]]:
    """Dense symmetric matrix with parallel-edge weights summed."""
    n = g.vertex_count
    mat: list[list[Weight]] = [[0] * n for _ in range(n)]
    for e in g.edges:
        mat[e.u][e.v] += e.weight
        mat[e.v][e.u] += e.weight
    return mat


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Subgraph on ``vertices`` (relabelled 0..len-1), edge ids preserved."""
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[e.u], index[e.v], e.weight, e.id)
             for e in g.edges if e.u in index and e.v in index]
    return Graph(len(vertices), edges, strict=g.strict), list(vertices)
