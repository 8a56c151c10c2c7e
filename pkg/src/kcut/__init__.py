"""Greedy and exact minimum k-cut on small weighted graphs."""

from .errors import (
    CapacityError,
    GraphError,
    InfeasibleError,
    KCutError,
    NotApplicableError,
    ParseError,
    UndefinedDensityError,
)
from .estimator import ExactKCut, GreedyKCut, check_graph
from .generators import GenSpec, SplitMix64, generate
from .graph import Edge, Graph, NormalizedGraph, Split, make_split, normalize
from .greedy import GreedyConfig, greedy_kcut, h_of_epsilon, is_sparse_step
from .io import parse_graph, render_graph
from .oracle import opt_kcut_enumerate
from .splits import min_cut_2way, min_density_bounded, min_kway_split

__all__ = [
    "CapacityError", "GraphError", "InfeasibleError", "KCutError", "NotApplicableError",
    "ParseError", "UndefinedDensityError",
    "ExactKCut", "GreedyKCut", "check_graph",
    "GenSpec", "SplitMix64", "generate",
    "Edge", "Graph", "NormalizedGraph", "Split", "make_split", "normalize",
    "GreedyConfig", "greedy_kcut", "h_of_epsilon", "is_sparse_step",
    "parse_graph", "render_graph",
    "opt_kcut_enumerate",
    "min_cut_2way", "min_density_bounded", "min_kway_split",
]
