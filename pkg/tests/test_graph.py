from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import complete, cycle, graphs, path, unit
from kcut.errors import GraphError, UndefinedDensityError
from kcut.graph import (
    Graph,
    NormalizedGraph,
    beta,
    component_count,
    component_labels,
    components,
    contract_complement,
    crossing_edges,
    density,
    make_split,
    normalize,
    remove_split,
    separation_degree,
    split_order_key,
)


def test_construction_rejects_bad_input():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0, 1)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3, 1)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1, -1)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1, 0)], strict=True)
    with pytest.raises(GraphError):
        Graph(3, [(0, 1, 1, 5), (1, 2, 1, 5)])
    with pytest.raises(GraphError):
        Graph(0)


def test_zero_weight_allowed_outside_strict_mode():
    g = Graph(2, [(0, 1, 0)])
    assert g.total_weight == 0 and not g.is_positive()


def test_parallel_edges_kept_distinct():
    g = Graph(2, [(0, 1, 1), (0, 1, 2)])
    assert g.edge_count == 2 and g.total_weight == 3
    assert separation_degree(g, {0}) == 1
    assert separation_degree(g, {0, 1}) == 2


def test_component_count_examples(c6):
    assert component_count(c6) == 1
    assert component_count(remove_split(c6, {0, 3})) == 2
    assert component_count(Graph(4)) == 4


def test_separation_degree_examples(c6):
    assert separation_degree(c6, {0, 1}) == 2
    assert separation_degree(c6, set()) == 1
    assert separation_degree(c6, {0, 2, 4}) == 3


def test_density_examples(c6):
    assert density(c6, {0, 2, 4}) == Fraction(3, 2)
    assert density(path(3), {0}) == 1
    assert density(cycle(8), {0, 2, 4, 6}) == Fraction(4, 3)
    with pytest.raises(UndefinedDensityError):
        make_split(c6, {0}).density


def test_remove_split_examples(c6):
    p = remove_split(c6, {5})
    assert p.vertex_count == 6 and p.edge_count == 5 and component_count(p) == 1
    assert component_count(remove_split(c6, c6.edge_ids)) == 6


def test_contract_complement_examples(c6):
    q = contract_complement(c6, {0, 2, 4}).graph
    assert q.vertex_count == 3 and sorted(e.weight for e in q.edges) == [1, 1, 1]
    assert component_count(q) == 1
    whole = contract_complement(c6, c6.edge_ids).graph
    assert whole.vertex_count == 6 and whole.total_weight == 6
    point = contract_complement(c6, set()).graph
    assert point.vertex_count == 1 and point.edge_count == 0


def test_contraction_merges_parallel_edges():
    g = Graph(4, [(0, 1, 1), (1, 2, 5), (2, 3, 1), (3, 0, 2)], strict=True)
    q = contract_complement(g, {0, 2}).graph
    assert q.vertex_count == 2 and q.edge_count == 1 and q.total_weight == 2


def test_beta_examples(c6):
    assert beta(c6) == 1
    assert beta(complete(5)) == 2


def test_normalize_examples():
    assert [e.weight for e in normalize(cycle(3)).edges] == [Fraction(1, 3)] * 3
    assert normalize(Graph(2, [(0, 1, 7)])).edges[0].weight == 1
    g = Graph(3, [(0, 1, 1), (1, 2, 2), (2, 0, 3)])
    assert [e.weight for e in normalize(g).edges] == [Fraction(1, 6), Fraction(2, 6), Fraction(3, 6)]


def test_normalized_graph_must_sum_to_one():
    with pytest.raises(GraphError):
        NormalizedGraph(2, [(0, 1, Fraction(1, 2))])


def test_tie_key_prefers_smaller_degree():
    g = path(4)
    a, b = make_split(g, {0}), make_split(g, {0, 2})
    assert a.density == b.density == 1
    assert split_order_key(a) < split_order_key(b)


def test_components_ordered_by_lowest_vertex():
    g = unit(5, [(3, 4), (0, 2)])
    assert components(g) == [[0, 2], [1], [3, 4]]
    assert component_labels(g) == [0, 1, 0, 2, 2]


@given(graphs(max_n=8), st.data())
def test_degree_matches_component_count(g, data):
    s = data.draw(st.sets(st.sampled_from(sorted(g.edge_ids)))) if g.edge_count else set()
    deg = separation_degree(g, s)
    assert deg >= 1
    assert component_count(remove_split(g, s)) == component_count(g) + deg - 1
    assert (deg == 1) == (component_count(remove_split(g, s)) == component_count(g))
    assert make_split(g, s).weight == sum(g.edge(i).weight for i in s)


@given(graphs(max_n=7, connected=True), st.data())
def test_contraction_preserves_sub_splits(g, data):
    s = data.draw(st.sets(st.sampled_from(sorted(g.edge_ids)))) if g.edge_count else set()
    con = contract_complement(g, s)
    q = con.graph
    assert q.vertex_count == component_count(remove_split(g, s))
    labels = component_labels(remove_split(g, s))
    assert q.total_weight == g.weight_of(crossing_edges(g, labels))
    if q.edge_count:
        sub = data.draw(st.sets(st.sampled_from(sorted(q.edge_ids))))
        lifted = con.lift(sub)
        assert lifted <= frozenset(s)
        assert make_split(g, lifted).weight == make_split(q, sub).weight
        assert make_split(g, lifted).separation_degree == make_split(q, sub).separation_degree


@given(graphs(max_n=8))
def test_crossing_weight_is_total_minus_internal(g):
    labels = [v % 3 for v in range(g.vertex_count)]
    internal = sum(e.weight for e in g.edges if labels[e.u] == labels[e.v])
    assert g.weight_of(crossing_edges(g, labels)) == g.total_weight - internal
