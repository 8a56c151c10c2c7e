"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``; the per-criterion
summary is printed at the end of the session.
"""

import functools
import json
import time
from fractions import Fraction

import networkx as nx
import pytest

from kcut.cli import main
from kcut.generators import GenSpec, SplitMix64, complete_graph_density_profile, generate
from kcut.graph import Graph, beta, component_count
from kcut.greedy import GreedyConfig, greedy_kcut, phase1_threshold
from kcut.io import render_graph
from kcut.lemmas import (
    CORPUS_FAMILIES,
    PLANAR_DENSITY_FACTOR,
    build_corpus,
    greedy_matching_check,
    run_suite,
    summarize,
)
from kcut.oracle import opt_kcut_enumerate
from kcut.splits import min_kway_split

RESULTS: dict[int, str] = {}
PLANAR_RATIO_BOUND = 2 - Fraction(1, 315)


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            note = kwargs["note"]
            try:
                fn(*args, **kwargs)
            except BaseException as exc:
                RESULTS[number] = f"[criterion {number}] FAIL {title}: {type(exc).__name__}: {exc}"
                print(RESULTS[number])
                raise
            detail = ", ".join(f"{k}={v}" for k, v in note.items())
            RESULTS[number] = f"[criterion {number}] PASS {title} ({detail})"
            print(RESULTS[number])
        return run
    return wrap


@pytest.fixture
def note():
    """Details a criterion reports on its PASS line."""
    return {}


def planar_corpus(count, seed, n_lo, n_hi):
    rng = SplitMix64(seed)
    return [generate(GenSpec("random_planar", rng.integer(n_lo, n_hi), "uniform", 1, 10,
                             seed=rng.next_u64()))
            for _ in range(count)]


def atlas_graphs(max_n=7):
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() <= max_n and nx.is_connected(G):
            yield Graph(G.number_of_nodes(), [(u, v, 1) for u, v in G.edges()], strict=True)


@criterion(1, "exact split engine equals enumeration oracle")
def test_oracle_cross_validation(note):
    checked = 0
    graphs = list(atlas_graphs()) + planar_corpus(200, 1, 2, 9)
    for g in graphs:
        for k in range(1, 5):
            if component_count(g) + k - 1 > g.vertex_count:
                break
            assert min_kway_split(g, k).weight == opt_kcut_enumerate(g, k).weight, (render_graph(g), k)
            checked += 1
    note.update(graphs=len(graphs), comparisons=checked)


@criterion(2, "planar greedy ratio <= 2 - 1/315")
def test_planar_ratio(note):
    worst, runs = Fraction(1), 0
    for g in planar_corpus(320, 2, 4, 12):
        for k in range(2, min(6, g.vertex_count) + 1):
            split, _ = greedy_kcut(g, GreedyConfig(k=k, h=3))
            ratio = Fraction(split.weight, opt_kcut_enumerate(g, k).weight)
            assert ratio <= PLANAR_RATIO_BOUND, (render_graph(g), k, ratio)
            worst = max(worst, ratio)
            runs += 1
    note.update(instances=320, runs=runs, max_ratio=f"{worst} ({float(worst):.4f})")


@criterion(3, "greedy is exact when phase 1 is skipped")
def test_exact_branch(note):
    runs = 0
    for g in planar_corpus(200, 3, 2, 12):
        for k in range(1, min(4, g.vertex_count) + 1):
            cfg = GreedyConfig(k=k, h=3)
            assert phase1_threshold(cfg) < 1
            split, trace = greedy_kcut(g, cfg)
            assert all(s.phase == 2 for s in trace.steps)
            assert split.weight == opt_kcut_enumerate(g, k).weight
            runs += 1
    note.update(runs=runs)


@criterion(4, "density theorem, planar factor 2 - 1/105")
def test_density_suite(note):
    reports = run_suite("density", "planar", count=150, seed=4)
    assert all(r.params["factor"] == PLANAR_DENSITY_FACTOR for r in reports)
    (summary,) = summarize(reports)
    assert summary.failures == 0 and summary.nonvacuous > 0
    note.update(checks=summary.total, nonvacuous=summary.nonvacuous, failures=summary.failures)


@criterion(5, "lemma suites pass and verify exits 0")
def test_lemma_suites(note, capsys):
    code = main(["verify", "--suite", "all", "--count", "60", "--seed", "5"])
    summary = json.loads(capsys.readouterr().out)
    assert code == 0 and summary["failures"] == 0
    required = ["matching_3_1", "largercut_3_3", "lastsplit_3_4", "lastsplit_4_5",
                "twosplit_A3", "beta_2_1", "density_3_2", "lowdensity_4_3"]
    for lemma in required:
        assert summary["lemmas"][lemma]["nonvacuous"] > 0, lemma
    deltas = {r.params["delta"] for r in run_suite("matching", count=10, seed=5)}
    assert deltas == {Fraction(1, 2), Fraction(1)}
    note.update(**{k: f"{v['nonvacuous']}/{v['total']}" for k, v in summary["lemmas"].items()})


@criterion(6, "complete-graph 2-way ratio is 2(n-1)/n")
def test_complete_graph_profile(note):
    seen = {}
    for n in range(4, 11):
        row = complete_graph_density_profile(n, 2)[0]
        assert row.degree == 2 and row.ratio == Fraction(2 * (n - 1), n)
        seen[n] = str(row.ratio)
    note.update(ratios=seen)


@criterion(7, "greedy matching weight >= w(E_B)/(2d-1)")
def test_greedy_matching_bound(note):
    checks = 0
    for family in CORPUS_FAMILIES:
        for g in build_corpus(family, 40, 7):
            max_deg = max(g.degree(v) for v in range(g.vertex_count))
            caps = [Fraction(c) for c in range(1, max_deg + 2)]
            caps += [4 * beta(g) * (1 + d) / d for d in (Fraction(1, 2), Fraction(1))]
            for cap in caps:
                assert greedy_matching_check(g, cap).holds, (render_graph(g), cap)
                checks += 1
    note.update(checks=checks)


@criterion(8, "n=18 greedy under 10 s; n=21 rejected with exit 3")
def test_performance(note, tmp_path, capsys):
    instances = [generate(GenSpec("random_planar", 18, "uniform", 1, 10, seed=s)) for s in range(5)]
    instances.append(generate(GenSpec("grid", (3, 6))))
    slowest = 0.0
    for g in instances:
        start = time.perf_counter()
        split, _ = greedy_kcut(g, GreedyConfig(k=8, h=3))
        elapsed = time.perf_counter() - start
        assert component_count(g.with_edges(e for e in g.edges if e.id not in split.edge_ids)) == 8
        assert elapsed < 10, elapsed
        slowest = max(slowest, elapsed)
    big = tmp_path / "n21.txt"
    big.write_text(render_graph(generate(GenSpec("random_planar", 21, "uniform", 1, 10, seed=0))))
    assert main(["solve", "--input", str(big), "--k", "8"]) == 3
    assert main(["exact", "--input", str(big), "--k", "3"]) == 3
    capsys.readouterr()
    note.update(instances=len(instances), slowest_s=f"{slowest:.2f}")
