"""Seeded instance generators.

Randomness comes from SplitMix64 (Steele, Lea and Flood), fully specified
below, so a ``GenSpec`` produces the same edge list on every platform and
Python version:

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output z ^ (z >> 31)

Bounded integers use rejection sampling on the full 64-bit output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph
from .oracle import opt_kcut_enumerate

MASK64 = (1 << 64) - 1
FAMILIES = ("cycle", "path", "grid", "star", "complete", "random_planar")


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def integer(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def coin(self) -> bool:
        return bool(self.next_u64() >> 63)


@dataclass(frozen=True)
class GenSpec:
    """What to generate.

    ``size`` is the vertex count for every family except ``grid``, which
    takes ``(rows, cols)``. ``star`` with size n is K_{1,n-1}. Weights are
    1 for ``"unit"`` and uniform on ``[lo, hi]`` for ``"uniform"``.
    """

    family: str
    size: int | tuple[int, int]
    weights: str = "unit"
    lo: int = 1
    hi: int = 10
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.weights not in ("unit", "uniform"):
            raise ValueError(f"unknown weight distribution {self.weights!r}")
        if self.weights == "uniform" and not 1 <= self.lo <= self.hi:
            raise ValueError("uniform weights need 1 <= lo <= hi")
        if self.family == "grid":
            rows, cols = self.size
            if rows < 1 or cols < 1:
                raise ValueError("grid dimensions must be positive")
        else:
            minimum = {"cycle": 3, "path": 1, "star": 1, "complete": 1, "random_planar": 1}
            if self.size < minimum[self.family]:
                raise ValueError(f"{self.family} needs size >= {minimum[self.family]}")


def _cycle(n):
    return [(i, (i + 1) % n) for i in range(n)]


def _path(n):
    return [(i, i + 1) for i in range(n - 1)]


def _grid(rows, cols):
    pairs = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                pairs.append((v, v + 1))
            if r + 1 < rows:
                pairs.append((v, v + cols))
    return pairs


def _star(n):
    return [(0, i) for i in range(1, n)]


def _complete(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _random_planar(n, rng: SplitMix64):
    """Stacked triangulation thinned to a random connected planar subgraph.

    Each new vertex lands in a uniformly chosen triangular face and is joined
    to its three corners. The first edge to every vertex forms a spanning
    tree that is always kept; every other edge survives a fair coin flip.
    """
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    tree = [(0, 1), (1, 2)]
    others = [(0, 2)]
    faces = [(0, 1, 2), (0, 2, 1)]
    for v in range(3, n):
        f = rng.below(len(faces))
        a, b, c = faces[f]
        tree.append((a, v))
        others.extend([(b, v), (c, v)])
        faces[f] = (a, b, v)
        faces.extend([(b, c, v), (c, a, v)])
    kept = [pair for pair in others if rng.coin()]
    return sorted(tree + kept)


def generate(spec: GenSpec) -> Graph:
    rng = SplitMix64(spec.seed)
    family = spec.family
    if family == "grid":
        rows, cols = spec.size
        n, pairs = rows * cols, _grid(rows, cols)
    else:
        n = spec.size
        if family == "random_planar":
            pairs = _random_planar(n, rng)
        else:
            pairs = {"cycle": _cycle, "path": _path, "star": _star, "complete": _complete}[family](n)
    if spec.weights == "unit":
        edges = [(u, v, 1) for u, v in pairs]
    else:
        edges = [(u, v, rng.integer(spec.lo, spec.hi)) for u, v in pairs]
    return Graph(n, edges, strict=True)


def euler_bound_holds(g: Graph) -> bool:
    """``|E| <= 3|V| - 6`` for simple graphs on at least three vertices."""
    n = g.vertex_count
    return n < 3 or g.edge_count <= 3 * n - 6


@dataclass(frozen=True)
class DensityRow:
    degree: int
    min_weight: int
    density: Fraction
    ratio: Fraction


def complete_graph_density_profile(n: int, h: int) -> list[DensityRow]:
    """Min j-way split density of unit K_n relative to the optimal n-way split.

    With k = n the optimum removes every edge, so its density is
    ``(n (n - 1) / 2) / (n - 1) = n / 2`` and the 2-way ratio is
    ``2 (n - 1) / n``. Minimum splits come from the enumeration oracle.
    """
    g = generate(GenSpec("complete", n))
    if n == 1:
        return []
    opt_density = opt_kcut_enumerate(g, n).density
    rows = []
    for j in range(2, min(h, n) + 1):
        split = opt_kcut_enumerate(g, j)
        rows.append(DensityRow(j, split.weight, split.density, split.density / opt_density))
    return rows

