"""Greedy k-cut by repeated removal of low-density splits.

Phase 1 keeps removing a minimum-density split of separation degree at most
``h`` while the removed set has separation degree at or below a threshold.
Phase 2 finishes with one exact minimum ``(k - d + 1)``-way split of what is
left, ``d`` being the component count reached in phase 1. With ``h = 3`` and
threshold ``k - 4`` this is the 2 - eps algorithm for minor-free graphs; with
``h = h(eps)`` and threshold ``k - h(2 + 1/eps)`` it is the approximation
scheme.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import GraphError, InfeasibleError, NotApplicableError
from .graph import (
    Graph,
    Split,
    component_count,
    make_split,
    remove_split,
    require_positive,
)
from .limits import ORACLE_MAX_N, max_vertices
from .splits import min_density_bounded, min_kway_split


def _as_fraction(x, name: str) -> Fraction:
    try:
        return Fraction(x)
    except (TypeError, ValueError):
        raise ValueError(f"{name} must be a rational number, got {x!r}") from None


@dataclass(frozen=True)
class GreedyConfig:
    """Target component count, phase-1 degree bound and optional epsilon.

    ``c2`` only matters to :func:`h_of_epsilon`; the solver itself reads ``h``.
    """

    k: int
    h: int = 3
    epsilon: Fraction | None = None
    c2: Fraction = Fraction(1)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if self.h < 2:
            raise ValueError(f"h must be at least 2, got {self.h}")
        if self.epsilon is not None:
            eps = _as_fraction(self.epsilon, "epsilon")
            if eps <= 0:
                raise ValueError("epsilon must be positive")
            object.__setattr__(self, "epsilon", eps)
        c2 = _as_fraction(self.c2, "c2")
        if c2 <= 0:
            raise ValueError("c2 must be positive")
        object.__setattr__(self, "c2", c2)

    @classmethod
    def from_epsilon(cls, k: int, epsilon, c2=1) -> "GreedyConfig":
        eps, c2 = _as_fraction(epsilon, "epsilon"), _as_fraction(c2, "c2")
        return cls(k=k, h=h_of_epsilon(eps, c2), epsilon=eps, c2=c2)


def h_of_epsilon(epsilon, c2=1) -> int:
    """Degree bound ``ceil(1/delta**2) + 1`` with ``delta = eps / (c2 (1 + eps))``.

    Very loose for small epsilon: epsilon = 1/3 already gives 17.
    """
    epsilon, c2 = _as_fraction(epsilon, "epsilon"), _as_fraction(c2, "c2")
    if epsilon <= 0 or c2 <= 0:
        raise ValueError("epsilon and c2 must be positive")
    delta = epsilon / (c2 * (1 + epsilon))
    return math.ceil(1 / (delta * delta)) + 1


def phase1_threshold(cfg: GreedyConfig) -> int:
    """Largest separation degree of the removed set at which phase 1 continues."""
    if cfg.epsilon is None:
        return cfg.k - (cfg.h + 1)
    return cfg.k - math.ceil(cfg.h * (2 + 1 / cfg.epsilon))


@dataclass(frozen=True)
class GreedyStep:
    phase: int
    split: Split
    density: Fraction
    components_after: int


@dataclass
class GreedyTrace:
    graph: Graph
    config: GreedyConfig
    steps: list[GreedyStep] = field(default_factory=list)

    @property
    def total_weight(self) -> int:
        return sum(s.split.weight for s in self.steps)

    def step_graph(self, i: int) -> Graph:
        """The graph step ``i`` operated on: earlier splits already removed."""
        removed = frozenset().union(*(s.split.edge_ids for s in self.steps[:i]))
        return remove_split(self.graph, removed)


def greedy_kcut(g: Graph, cfg: GreedyConfig) -> tuple[Split, GreedyTrace]:
    require_positive(g)
    n = g.vertex_count
    if not 1 <= cfg.k <= n:
        raise InfeasibleError(f"k={cfg.k} outside 1..{n}")
    if component_count(g) != 1:
        raise GraphError("greedy k-cut expects a connected graph")
    trace = GreedyTrace(g, cfg)
    threshold = phase1_threshold(cfg)
    chosen: set[int] = set()
    current, d = g, 1
    while d <= threshold:
        split = min_density_bounded(current, cfg.h)
        chosen |= split.edge_ids
        current = remove_split(current, split)
        d = component_count(current)
        trace.steps.append(GreedyStep(1, split, split.density, d))
    last = cfg.k - d + 1
    if last >= 2:
        split = min_kway_split(current, last)
        chosen |= split.edge_ids
        current = remove_split(current, split)
        d = component_count(current)
        trace.steps.append(GreedyStep(2, split, split.density, d))
    result = make_split(g, chosen)
    if result.separation_degree != cfg.k:
        raise AssertionError(f"greedy produced {result.separation_degree} components, wanted {cfg.k}")
    return result, trace


def _default_exact(g: Graph, k: int) -> Split:
    if g.vertex_count <= max_vertices(ORACLE_MAX_N):
        from .oracle import opt_kcut_enumerate

        return opt_kcut_enumerate(g, k)
    return min_kway_split(g, k)


def is_sparse_step(trace: GreedyTrace, i: int,
                   exact: Callable[[Graph, int], Split] | None = None) -> bool:
    """Audit that phase-1 step ``i`` has no lower-density rival of degree <= its own.

    Rivals are recomputed from scratch on the step's input graph, by the
    enumeration oracle when it fits and the subset DP otherwise.
    """
    step = trace.steps[i]
    if step.phase != 1:
        raise NotApplicableError("sparsity is only defined for phase-1 steps")
    exact = exact or _default_exact
    graph = trace.step_graph(i)
    c = component_count(graph)
    for degree in range(2, step.split.separation_degree + 1):
        if c + degree - 1 > graph.vertex_count:
            break
        rival = exact(graph, degree)
        if Fraction(rival.weight, degree - 1) < step.density:
            return False
    return True
