from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from kcut.generators import (
    GenSpec,
    SplitMix64,
    complete_graph_density_profile,
    euler_bound_holds,
    generate,
)
from kcut.graph import beta, component_count, simple_edge_count
from kcut.io import render_graph


def test_splitmix_reference_vector():
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4
    assert rng.next_u64() == 0x06C45D188009454F


def test_bounded_draws_in_range():
    rng = SplitMix64(42)
    draws = [rng.integer(3, 7) for _ in range(500)]
    assert min(draws) == 3 and max(draws) == 7
    with pytest.raises(ValueError):
        rng.below(0)


def test_family_examples():
    assert generate(GenSpec("cycle", 6)).edge_count == 6
    g = generate(GenSpec("grid", (3, 3)))
    assert (g.vertex_count, g.edge_count, beta(g)) == (9, 12, Fraction(4, 3))
    assert generate(GenSpec("complete", 8)).edge_count == 28
    assert generate(GenSpec("star", 5)).edge_count == 4
    assert generate(GenSpec("path", 5)).edge_count == 4


def test_spec_validation():
    with pytest.raises(ValueError):
        GenSpec("hypercube", 4)
    with pytest.raises(ValueError):
        GenSpec("cycle", 2)
    with pytest.raises(ValueError):
        GenSpec("cycle", 5, "uniform", 0, 3)


def test_fixed_seed_bytes_are_frozen():
    text = render_graph(generate(GenSpec("random_planar", 8, "uniform", 1, 10, seed=2024)))
    assert text == FROZEN_PLANAR_8


FROZEN_PLANAR_8 = (
    "p 8 13\ne 0 1 2\ne 0 2 10\ne 0 3 8\ne 0 6 10\ne 1 2 9\ne 1 3 9\ne 1 5 5\n"
    "e 2 4 9\ne 2 6 2\ne 2 7 4\ne 3 5 4\ne 3 6 4\ne 6 7 5\n"
)


@given(st.integers(1, 30), st.integers(0, 2**64 - 1), st.sampled_from(["unit", "uniform"]))
def test_random_planar_properties(n, seed, weights):
    g = generate(GenSpec("random_planar", n, weights, 1, 10, seed=seed))
    assert component_count(g) == 1
    assert simple_edge_count(g) == g.edge_count
    assert euler_bound_holds(g)
    assert all(1 <= e.weight <= 10 for e in g.edges)
    nxg = nx.Graph([(e.u, e.v) for e in g.edges])
    assert nx.check_planarity(nxg)[0]
    assert generate(GenSpec("random_planar", n, weights, 1, 10, seed=seed)) == g


def test_complete_profile_examples():
    assert complete_graph_density_profile(2, 2)[0].ratio == 1
    rows = complete_graph_density_profile(4, 3)
    assert rows[0].min_weight == 3 and rows[0].density == 3 and rows[0].ratio == Fraction(3, 2)


def test_complete_profile_two_way_ratio_grows():
    ratios = [complete_graph_density_profile(n, 2)[0].ratio for n in range(2, 9)]
    assert ratios == [Fraction(2 * (n - 1), n) for n in range(2, 9)]
    assert ratios == sorted(ratios) and all(1 <= r < 2 for r in ratios)
