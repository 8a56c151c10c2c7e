"""Executable checks of the structural bounds behind the greedy's guarantee.

Every check works on one instance and returns a :class:`LemmaReport`: whether
the statement's hypothesis holds there, the bound it promises, the value
actually observed, and the verdict. A failed hypothesis is a vacuous pass.
Optima come from the enumeration oracle and all comparisons are exact.
"""

from __future__ import annotations

import hashlib
import json
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable

from .errors import GraphError, InfeasibleError
from .generators import GenSpec, SplitMix64, generate
from .graph import (
    Graph,
    Split,
    beta,
    component_count,
    contract_complement,
)
from .greedy import h_of_epsilon
from .io import render_graph
from .limits import MATCHING_MAX_N, check_capacity
from .oracle import enumerate_splits_up_to, opt_kcut_enumerate

LEMMA_IDS = (
    "matching_3_1",
    "density_3_2",
    "largercut_3_3",
    "lastsplit_3_4",
    "lowdensity_4_3",
    "lastsplit_4_5",
    "twosplit_A3",
    "beta_2_1",
)

# Planar constants: epsilon = 1/(35 * 3) since beta <= 3 for simple planar graphs.
PLANAR_EPSILON = Fraction(1, 105)
PLANAR_DENSITY_FACTOR = 2 - PLANAR_EPSILON
MIN_NONVACUOUS_RATE = Fraction(3, 10)


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


def instance_digest(g: Graph) -> str:
    return hashlib.sha256(render_graph(g).encode()).hexdigest()[:16]


@dataclass(frozen=True)
class LemmaReport:
    """Outcome of one check on one instance.

    ``direction`` is ``"<="`` when the observed value must stay below the bound
    and ``">="`` when it must reach it.
    """

    lemma_id: str
    instance_digest: str
    hypothesis_holds: bool
    bound: Fraction
    observed: Fraction
    direction: str
    params: dict = field(default_factory=dict)
    notes: str = ""

    def __post_init__(self):
        if self.lemma_id not in LEMMA_IDS:
            raise ValueError(f"unknown lemma id {self.lemma_id!r}")
        if self.direction not in ("<=", ">="):
            raise ValueError(f"bad direction {self.direction!r}")

    @property
    def satisfied(self) -> bool:
        if self.direction == "<=":
            return self.observed <= self.bound
        return self.observed >= self.bound

    @property
    def passed(self) -> bool:
        return not self.hypothesis_holds or self.satisfied

    @property
    def vacuous(self) -> bool:
        return not self.hypothesis_holds

    def to_record(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "instance": self.instance_digest,
            "hypothesis": self.hypothesis_holds,
            "bound": _fmt(self.bound),
            "direction": self.direction,
            "observed": _fmt(self.observed),
            "pass": self.passed,
            "params": {k: _fmt(v) for k, v in sorted(self.params.items())},
            "notes": self.notes,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "LemmaReport":
        report = cls(rec["lemma_id"], rec["instance"], rec["hypothesis"],
                     Fraction(rec["bound"]), Fraction(rec["observed"]),
                     rec["direction"], dict(rec.get("params", {})), rec.get("notes", ""))
        if report.passed != rec["pass"]:
            raise ValueError("record's pass flag disagrees with its values")
        return report

    def sort_key(self):
        return (self.instance_digest, self.lemma_id, json.dumps(self.to_record()["params"]))


# -- matchings ---------------------------------------------------------------

def low_degree_edges(g: Graph, degree_cap) -> list:
    """Edges whose endpoints both have degree strictly below ``degree_cap``."""
    cap = Fraction(degree_cap)
    return [e for e in g.edges if g.degree(e.u) < cap and g.degree(e.v) < cap]


def greedy_matching(g: Graph, degree_cap) -> frozenset[int]:
    """Heaviest-first matching inside the low-degree edge set.

    Repeatedly takes the heaviest remaining edge (lowest id on ties) and
    discards everything incident to it.
    """
    matched: set[int] = set()
    chosen = []
    for e in sorted(low_degree_edges(g, degree_cap), key=lambda e: (-e.weight, e.id)):
        if e.u not in matched and e.v not in matched:
            matched.update((e.u, e.v))
            chosen.append(e.id)
    return frozenset(chosen)


@dataclass(frozen=True)
class GreedyMatchingCheck:
    degree_cap: Fraction
    matching_weight: Fraction
    low_degree_weight: Fraction
    bound: Fraction

    @property
    def holds(self) -> bool:
        return self.matching_weight >= self.bound


def greedy_matching_check(g: Graph, degree_cap) -> GreedyMatchingCheck:
    """Compare the greedy matching against ``w(E_B) / (2 d - 1)``."""
    cap = Fraction(degree_cap)
    if cap < 1:
        raise ValueError("degree cap must be at least 1")
    eb = low_degree_edges(g, cap)
    w_eb = Fraction(sum(e.weight for e in eb))
    w_m = Fraction(g.weight_of(greedy_matching(g, cap)))
    return GreedyMatchingCheck(cap, w_m, w_eb, w_eb / (2 * cap - 1))


def max_weight_matching_exact(g: Graph) -> frozenset[int]:
    """Maximum-weight matching by memoized search over unmatched-vertex sets."""
    n = g.vertex_count
    check_capacity(n, MATCHING_MAX_N, "exact matching")
    heaviest: dict[tuple[int, int], tuple] = {}
    for e in g.edges:
        key = (min(e.u, e.v), max(e.u, e.v))
        if key not in heaviest or (e.weight, -e.id) > (heaviest[key][0], -heaviest[key][1]):
            heaviest[key] = (e.weight, e.id)
    nbrs: list[list[tuple[int, object, int]]] = [[] for _ in range(n)]
    for (a, b), (w, eid) in heaviest.items():
        if w > 0:
            nbrs[a].append((b, w, eid))
            nbrs[b].append((a, w, eid))

    @lru_cache(maxsize=None)
    def best(mask: int):
        if mask == 0:
            return 0, ()
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        top = best(rest)
        for u, w, eid in nbrs[v]:
            if rest >> u & 1:
                sub = best(rest & ~(1 << u))
                if sub[0] + w > top[0]:
                    top = (sub[0] + w, sub[1] + (eid,))
        return top

    return frozenset(best((1 << n) - 1)[1])


# -- checks ------------------------------------------------------------------

def _require_connected(g: Graph, what: str):
    if component_count(g) != 1:
        raise GraphError(f"{what} needs a connected graph")


def check_matching_lemma(g: Graph, delta) -> LemmaReport:
    """Heavy matching in a graph whose 2-way splits are all dense.

    Hypothesis: after normalization every 2-way split has density at least
    ``(1 + delta) / n``. Promise: the maximum matching carries at least
    ``delta**2 / (16 beta (1 + delta))`` of the total weight. The report also
    records the intermediate claim ``w(E_B) >= delta / 2`` for the degree cap
    ``d = 4 beta (1 + delta) / delta`` and the greedy matching inequality.
    """
    delta = Fraction(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    _require_connected(g, "matching check")
    n, total = g.vertex_count, Fraction(g.total_weight)
    b = beta(g)
    catalog = enumerate_splits_up_to(g, 2)
    min_two = Fraction(min(catalog.two_way_weights)) / total if catalog.two_way_weights else None
    hypothesis = min_two is not None and min_two >= (1 + delta) / n
    observed = g.weight_of(max_weight_matching_exact(g)) / total
    cap = 4 * b * (1 + delta) / delta
    gm = greedy_matching_check(g, cap)
    params = {"delta": delta, "beta": b, "degree_cap": cap,
              "low_degree_weight": gm.low_degree_weight / total,
              "greedy_matching": gm.matching_weight / total,
              "greedy_bound_holds": gm.holds}
    if min_two is not None:
        params["min_two_way_density"] = min_two
    notes = ""
    if hypothesis and gm.low_degree_weight / total < delta / 2:
        notes = "low-degree edge weight below delta/2"
    return LemmaReport("matching_3_1", instance_digest(g), hypothesis,
                       delta * delta / (16 * b * (1 + delta)), observed, ">=", params, notes)


def _opt(g: Graph, k: int) -> Split:
    return opt_kcut_enumerate(g, k)


def _min_density_oracle(g: Graph, h: int) -> Fraction:
    catalog = enumerate_splits_up_to(g, h)
    if not catalog.minima:
        raise InfeasibleError("graph has no 2-way split")
    return min(catalog.min_density(d) for d in catalog.minima)


def check_density_theorem(g: Graph, k: int, h: int, factor) -> LemmaReport:
    """Some split of degree at most ``h`` has density at most ``factor * OPT_k / k``.

    With ``h = 3`` this is the planar ``2 - 1/105`` statement (id
    ``density_3_2``, hypothesis ``k >= 3``); larger ``h`` is the ``1 + eps``
    generalization (id ``lowdensity_4_3``, hypothesis ``k >= h``).
    """
    factor = Fraction(factor)
    lemma = "density_3_2" if h == 3 else "lowdensity_4_3"
    hypothesis = k >= 3 and k >= h and component_count(g) + k - 1 <= g.vertex_count
    params = {"k": k, "h": h, "factor": factor}
    if component_count(g) + 1 > g.vertex_count:
        return LemmaReport(lemma, instance_digest(g), False, Fraction(0), Fraction(0), "<=",
                           params, "no split exists")
    observed = _min_density_oracle(g, h)
    if not hypothesis:
        return LemmaReport(lemma, instance_digest(g), False, Fraction(0), observed, "<=", params)
    opt = _opt(g, k)
    params["opt"] = opt.weight
    return LemmaReport(lemma, instance_digest(g), True, factor * opt.weight / k, observed,
                       "<=", params)


def contracted_density_check(g: Graph, k: int, h: int, factor) -> tuple[LemmaReport, Graph]:
    """Density check rerun on the graph left by contracting all non-OPT edges.

    The quotient has exactly ``k`` vertices and total weight ``OPT_k``, so its
    verdict must agree with the original's. The report notes the quotient's
    ``beta`` and the minor-free epsilon ``1 / (35 beta)`` it would imply.
    """
    opt = _opt(g, k)
    quotient = contract_complement(g, opt).graph
    report = check_density_theorem(quotient, k, h, factor)
    b = beta(quotient)
    params = dict(report.params, contracted=True, quotient_beta=b,
                  quotient_epsilon=1 / (35 * b) if b else Fraction(0))
    return LemmaReport(report.lemma_id, report.instance_digest, report.hypothesis_holds,
                       report.bound, report.observed, report.direction, params,
                       f"quotient of {instance_digest(g)}"), quotient


def check_largercut(g: Graph, k_vertices: int, h: int, delta) -> LemmaReport:
    """A sparse h-way split forces a fairly sparse (h+1)-way split.

    Works on the normalized weights of ``g``, which must be connected with
    exactly ``k_vertices`` vertices and ``h < k_vertices``.
    """
    delta = Fraction(delta)
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    if g.vertex_count != k_vertices:
        raise GraphError(f"expected {k_vertices} vertices, got {g.vertex_count}")
    if not 2 <= h < k_vertices:
        raise ValueError(f"need 2 <= h < k, got h={h}, k={k_vertices}")
    _require_connected(g, "larger-cut check")
    k, total = k_vertices, Fraction(g.total_weight)
    dens_h = Fraction(_opt(g, h).weight) / total / (h - 1)
    observed = Fraction(_opt(g, h + 1).weight) / total / h
    bound = (1 + delta) / k + (1 - delta) / (h * k)
    return LemmaReport("largercut_3_3", instance_digest(g), dens_h <= (1 + delta) / k,
                       bound, observed, "<=",
                       {"k": k, "h": h, "delta": delta, "h_density": dens_h})


def tight_delta(g: Graph, h: int) -> Fraction:
    """Smallest delta >= 0 for which the larger-cut hypothesis holds."""
    k, total = g.vertex_count, Fraction(g.total_weight)
    dens_h = Fraction(_opt(g, h).weight) / total / (h - 1)
    return max(Fraction(0), k * dens_h - 1)


def check_twosplit_claim(g: Graph) -> LemmaReport:
    """With ``h`` components on ``k`` vertices, some 2-way split weighs at most ``2 w(E) / (k - h + 1)``."""
    k, h = g.vertex_count, component_count(g)
    if h >= k:
        raise InfeasibleError("every vertex is isolated; no 2-way split exists")
    observed = Fraction(_opt(g, 2).weight)
    bound = Fraction(2 * g.total_weight, k - h + 1)
    return LemmaReport("twosplit_A3", instance_digest(g), True, bound, observed, "<=",
                       {"k": k, "h": h})


def _ceil_rational(x: float, denominator: int = 10**6) -> Fraction:
    return Fraction(math.ceil(x * denominator) + 1, denominator)


def edge_density_bound(minor_order: int) -> Fraction:
    """Upper bound on ``|E|/|V|`` for simple K_r-minor-free graphs.

    The asymptotic ``0.32 r sqrt(ln r)`` is rounded up to a rational; for
    ``r <= 9`` the exact extremal bound ``r - 2`` is used when larger, since
    the asymptotic form undershoots small dense cases such as planar graphs
    with ``beta`` near 3.
    """
    r = minor_order
    if r < 2:
        raise ValueError("minor order must be at least 2")
    bound = _ceil_rational(0.32 * r * math.sqrt(math.log(r)))
    if r <= 9:
        bound = max(bound, Fraction(r - 2))
    return bound


def check_beta_bound(g: Graph, minor_order: int, planar: bool = False) -> LemmaReport:
    """Edge density of an H-minor-free graph, ``|V(H)| = minor_order``.

    Planar inputs are held to Euler's ``|E| <= 3|V| - 6``, i.e.
    ``beta <= 3 - 6/n`` for ``n >= 3``, which also gives ``beta <= 3``.
    """
    b = beta(g)
    bound = edge_density_bound(minor_order)
    params = {"minor_order": minor_order, "planar": planar}
    if planar and g.vertex_count >= 3:
        bound = min(bound, 3 - Fraction(6, g.vertex_count))
    return LemmaReport("beta_2_1", instance_digest(g), True, bound, b, "<=", params)


def check_lastsplit(g: Graph, k: int, s: int, h: int, epsilon, variant: str | None = None) -> LemmaReport:
    """The minimum s-way split is nearly as sparse as ``OPT_k / k``.

    ``variant="claim"`` (default for ``s`` in {3, 4}) uses the planar bounds
    ``(2 - eps/2)`` and ``(2 - eps/3)``; ``variant="ptas"`` requires
    ``s >= h (1 + 1/eps)`` and bounds by ``(1 + 2 eps)``. Both need ``k >= s``.
    """
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    if variant is None:
        variant = "claim" if s in (3, 4) else "ptas"
    n, c = g.vertex_count, component_count(g)
    params = {"k": k, "s": s, "h": h, "epsilon": eps}
    feasible = 2 <= s <= k and c + k - 1 <= n
    if variant == "claim":
        lemma = "lastsplit_3_4"
        hypothesis = feasible and s in (3, 4)
        factor = 2 - eps / (s - 1) if s in (3, 4) else Fraction(0)
    elif variant == "ptas":
        lemma = "lastsplit_4_5"
        hypothesis = feasible and s >= h * (1 + 1 / eps)
        factor = 1 + 2 * eps
    else:
        raise ValueError(f"unknown variant {variant!r}")
    if not hypothesis:
        return LemmaReport(lemma, instance_digest(g), False, Fraction(0), Fraction(0), "<=", params)
    observed = _opt(g, s).density
    opt = _opt(g, k)
    params["opt"] = opt.weight
    return LemmaReport(lemma, instance_digest(g), True, factor * opt.weight / k, observed,
                       "<=", params)


# -- corpora -----------------------------------------------------------------

def _prism(m: int):
    ring = [(i, (i + 1) % m) for i in range(m)]
    return 2 * m, ring + [(m + a, m + b) for a, b in ring] + [(i, m + i) for i in range(m)]


def _antiprism(m: int):
    n, edges = _prism(m)
    return n, edges[:2 * m] + [(i, m + i) for i in range(m)] + [(i, m + (i + 1) % m) for i in range(m)]


def _regular(rng: SplitMix64) -> Graph:
    shape = rng.below(3)
    m = rng.integer(3, 6)
    if shape == 0:
        n, pairs = 2 * m, [(i, (i + 1) % (2 * m)) for i in range(2 * m)]
    elif shape == 1:
        n, pairs = _prism(m)
    else:
        n, pairs = _antiprism(m)
    if rng.coin():
        edges = [(u, v, 1) for u, v in pairs]
    else:
        edges = [(u, v, rng.integer(9, 10)) for u, v in pairs]
    return Graph(n, edges, strict=True)


def _planar(rng: SplitMix64, lo: int = 5, hi: int = 10) -> Graph:
    return generate(GenSpec("random_planar", rng.integer(lo, hi), "uniform", 1, 10,
                            seed=rng.next_u64()))


def _cycle(rng: SplitMix64) -> Graph:
    n = rng.integer(4, 10)
    if rng.coin():
        return generate(GenSpec("cycle", n))
    return generate(GenSpec("cycle", n, "uniform", 1, 10, seed=rng.next_u64()))


def _grid(rng: SplitMix64) -> Graph:
    size = (rng.integer(2, 3), rng.integer(2, 4))
    if rng.coin():
        return generate(GenSpec("grid", size))
    return generate(GenSpec("grid", size, "uniform", 1, 3, seed=rng.next_u64()))


_BUILDERS: dict[str, Callable[[SplitMix64], Graph]] = {
    "planar": _planar,
    "planar_large": lambda rng: _planar(rng, 10, 12),
    "cycle": _cycle,
    "grid": _grid,
    "regular": _regular,
}
CORPUS_FAMILIES = tuple(_BUILDERS) + ("mixed",)
_MIXED_ORDER = ("planar", "regular", "grid", "cycle", "planar_large")


def build_corpus(family: str, count: int, seed: int) -> list[Graph]:
    """``count`` connected planar instances, reproducible from ``seed``."""
    if family not in CORPUS_FAMILIES:
        raise ValueError(f"unknown corpus family {family!r}; choose from {CORPUS_FAMILIES}")
    rng = SplitMix64(seed)
    out = []
    for i in range(count):
        name = _MIXED_ORDER[i % len(_MIXED_ORDER)] if family == "mixed" else family
        out.append(_BUILDERS[name](SplitMix64(rng.next_u64())))
    return out


# -- suites ------------------------------------------------------------------

def _suite_matching(g: Graph) -> list[LemmaReport]:
    return [check_matching_lemma(g, d) for d in (Fraction(1, 2), Fraction(1))]


def _ks(g: Graph, lo: int, hi: int) -> range:
    return range(lo, min(hi, g.vertex_count) + 1)


def _suite_density(g: Graph) -> list[LemmaReport]:
    out = []
    for k in _ks(g, 3, 6):
        out.append(check_density_theorem(g, k, 3, PLANAR_DENSITY_FACTOR))
        out.append(contracted_density_check(g, k, 3, PLANAR_DENSITY_FACTOR)[0])
    return out


def _suite_largercut(g: Graph) -> list[LemmaReport]:
    out = []
    for k in _ks(g, 3, 6):
        quotient = contract_complement(g, _opt(g, k)).graph
        for h in range(2, k):
            out.append(check_largercut(quotient, k, h, tight_delta(quotient, h)))
            out.append(check_largercut(quotient, k, h, Fraction(1, 2)))
    return out


def _suite_lastsplit(g: Graph) -> list[LemmaReport]:
    out = []
    for k in _ks(g, 3, 6):
        for s in (3, 4):
            if s <= k:
                out.append(check_lastsplit(g, k, s, 3, PLANAR_EPSILON, "claim"))
    eps = Fraction(1)
    h = h_of_epsilon(eps, 1)
    s_min = math.ceil(h * (1 + 1 / eps))
    for k in _ks(g, s_min, g.vertex_count):
        for s in range(s_min, k + 1):
            out.append(check_lastsplit(g, k, s, h, eps, "ptas"))
    return out


def _suite_lowdensity(g: Graph) -> list[LemmaReport]:
    eps = Fraction(1)
    h = h_of_epsilon(eps, 1)
    return [check_density_theorem(g, k, h, 1 + eps) for k in _ks(g, h, h + 3)]


def _suite_twosplit(g: Graph) -> list[LemmaReport]:
    return [check_twosplit_claim(g)]


def _suite_beta(g: Graph) -> list[LemmaReport]:
    return [check_beta_bound(g, 5, planar=True)]


SUITES: dict[str, Callable[[Graph], list[LemmaReport]]] = {
    "matching": _suite_matching,
    "density": _suite_density,
    "largercut": _suite_largercut,
    "lastsplit": _suite_lastsplit,
    "lowdensity": _suite_lowdensity,
    "twosplit": _suite_twosplit,
    "beta": _suite_beta,
}
DEFAULT_FAMILY = {
    "matching": "regular",
    "density": "planar",
    "largercut": "planar",
    "lastsplit": "mixed",
    "lowdensity": "planar",
    "twosplit": "planar",
    "beta": "mixed",
}


def _run_one(args) -> list[LemmaReport]:
    suite, g = args
    return SUITES[suite](g)


def run_suite(suite: str, family: str | None = None, count: int = 50, seed: int = 0,
              jobs: int = 1) -> list[LemmaReport]:
    """Run one suite over a seeded corpus; reports come back in a fixed order."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {tuple(SUITES)}")
    corpus = build_corpus(family or DEFAULT_FAMILY[suite], count, seed)
    tasks = [(suite, g) for g in corpus]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_run_one, tasks))
    else:
        batches = [_run_one(t) for t in tasks]
    reports = [r for batch in batches for r in batch]
    return sorted(reports, key=LemmaReport.sort_key)


@dataclass(frozen=True)
class LemmaSummary:
    lemma_id: str
    total: int
    vacuous: int
    failures: int

    @property
    def nonvacuous(self) -> int:
        return self.total - self.vacuous

    @property
    def nonvacuous_rate(self) -> Fraction:
        return Fraction(self.nonvacuous, self.total) if self.total else Fraction(0)


def summarize(reports: Iterable[LemmaReport], warn: bool = True) -> list[LemmaSummary]:
    counts: dict[str, list[int]] = {}
    for r in reports:
        c = counts.setdefault(r.lemma_id, [0, 0, 0])
        c[0] += 1
        c[1] += r.vacuous
        c[2] += not r.passed
    out = [LemmaSummary(lid, *counts[lid]) for lid in LEMMA_IDS if lid in counts]
    if warn:
        for s in out:
            if s.nonvacuous_rate < MIN_NONVACUOUS_RATE:
                warnings.warn(f"{s.lemma_id}: only {s.nonvacuous}/{s.total} instances "
                              f"satisfy the hypothesis", stacklevel=2)
    return out


def write_reports(reports: Iterable[LemmaReport], path) -> None:
    with Path(path).open("w") as fh:
        for r in reports:
            fh.write(json.dumps(r.to_record()) + "\n")


def read_reports(path) -> list[LemmaReport]:
    with Path(path).open() as fh:
        return [LemmaReport.from_record(json.loads(line)) for line in fh if line.strip()]
