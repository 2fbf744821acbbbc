import pytest

from bdcx.complex import SimplicialComplex
from bdcx.graph import Graph, constant_bound, path_graph, star_graph


def hollow_simplex(vertices) -> SimplicialComplex:
    vs = list(vertices)
    return SimplicialComplex.from_faces([set(vs) - {v} for v in vs])


@pytest.fixture
def p4():
    g = path_graph(4)
    return g, constant_bound(g)


@pytest.fixture
def star3():
    g = star_graph(3)
    return g, constant_bound(g)


@pytest.fixture
def triangle_with_pendant():
    # triangle a-b-c plus leaf d hanging from a
    return Graph.from_edges([("d", "a"), ("a", "b"), ("b", "c"), ("c", "a")])


# -- acceptance summary -------------------------------------------------------

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line per acceptance criterion (printed in the summary)."""

    def record(number: int, ok: bool, detail: str) -> None:
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
        ACCEPTANCE_LINES[number] = line
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
