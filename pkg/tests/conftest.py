import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from kcut.graph import Graph, component_count

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False, max_weight=9, parallel=True):
    """Strict graphs; ``connected`` adds a random spanning tree first."""
    n = draw(st.integers(min_n, max_n))
    pairs = []
    if connected:
        for v in range(1, n):
            pairs.append((draw(st.integers(0, v - 1)), v))
    if n >= 2:
        extra = draw(st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1]),
            max_size=2 * n))
        pairs.extend(extra)
    if not parallel:
        pairs = sorted({(min(u, v), max(u, v)) for u, v in pairs})
    weights = draw(st.lists(st.integers(1, max_weight), min_size=len(pairs), max_size=len(pairs)))
    g = Graph(n, [(u, v, w) for (u, v), w in zip(pairs, weights)], strict=True)
    if connected:
        assert component_count(g) == 1
    return g


def unit(n, pairs):
    return Graph(n, [(u, v, 1) for u, v in pairs], strict=True)


def cycle(n, weights=None):
    weights = weights or [1] * n
    return Graph(n, [(i, (i + 1) % n, w) for i, w in enumerate(weights)], strict=True)


def path(n):
    return unit(n, [(i, i + 1) for i in range(n - 1)])


def grid(r, c):
    pairs = []
    for i in range(r):
        for j in range(c):
            v = i * c + j
            if j + 1 < c:
                pairs.append((v, v + 1))
            if i + 1 < r:
                pairs.append((v, v + c))
    return unit(r * c, pairs)


def complete(n):
    return unit(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


@pytest.fixture
def c6():
    return cycle(6)


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
