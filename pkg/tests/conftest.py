from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from mmvc.graph import Graph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_mmvc(g: Graph) -> int:
    """Largest minimal vertex cover by enumerating every subset."""
    best = 0
    for mask in range(1 << g.n):
        x = [v for v in range(g.n) if mask >> v & 1]
        if len(x) <= best:
            continue
        xs = set(x)
        if all(u in xs or v in xs for u, v in g.edges()) and all(
            any(w not in xs for w in g.neighbors(v)) for v in x
        ):
            best = len(x)
    return best


@pytest.fixture
def paw_graph() -> Graph:
    # triangle 0-1-2 with a pendant 3 on vertex 0
    return Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


@pytest.fixture
def bull_graph() -> Graph:
    # triangle 0-1-2 with pendants 3 on 0 and 4 on 1
    return Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])


# -- acceptance summary ----------------------------------------------------

ACCEPTANCE: dict[int, tuple[bool, str]] = {}
CRITERIA = {
    1: "kernel soundness sweep",
    2: "kernel size bounds",
    3: "clique/independent-set partition bound",
    4: "Ramsey extractor floor",
    5: "Monotone SAT reduction equivalence",
    6: "kernel-to-approximation pipeline",
    7: "pendant-triangle fixture",
    8: "clique-neighbourhood diagnostics",
}


def record(criterion: int, ok: bool, detail: str) -> None:
    """Remember one criterion verdict and echo it (visible with ``-s``)."""
    ACCEPTANCE[criterion] = (ok, detail)
    print(_line(criterion))


def _line(criterion: int) -> str:
    if criterion not in ACCEPTANCE:
        return f"criterion {criterion} [NOT RUN] {CRITERIA[criterion]}"
    ok, detail = ACCEPTANCE[criterion]
    return f"criterion {criterion} [{'PASS' if ok else 'FAIL'}] {CRITERIA[criterion]}: {detail}"


def pytest_runtest_logreport(report):
    # a test that raised before recording its verdict still counts as a failure
    if not report.failed or "test_criterion_" not in report.nodeid:
        return
    criterion = int(report.nodeid.rsplit("test_criterion_", 1)[1].split("_", 1)[0])
    crash = getattr(report.longrepr, "reprcrash", None)
    message = crash.message.splitlines()[0] if crash else "error"
    previous = ACCEPTANCE.get(criterion)
    if previous is None or previous[0]:
        ACCEPTANCE[criterion] = (False, f"test failed: {message}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for c in CRITERIA:
        terminalreporter.write_line(_line(c))
