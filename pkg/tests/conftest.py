from fractions import Fraction

import pytest

from pmgraph import PmGraph

# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def build_k4(lengths=None) -> PmGraph:
    lengths = lengths or {}
    value = lambda name: lengths.get(name, Fraction(1))
    return PmGraph.build(
        ["1", "2", "3", "4"],
        [
            ("a", "1", "2", value("a")),
            ("b", "1", "3", value("b")),
            ("c", "1", "4", value("c")),
            ("d", "2", "3", value("d")),
            ("e", "2", "4", value("e")),
            ("f", "3", "4", value("f")),
        ],
    )


def build_theta(a=1, b=1, c=1, qp=1, qs=0) -> PmGraph:
    # two vertices joined by three parallel edges; weights chosen by caller
    return PmGraph.build(
        [("P", qp), ("S", qs)],
        [("a", "P", "S", a), ("b", "P", "S", b), ("c", "P", "S", c)],
    )


def build_circle(lengths=(4, 5, 3), q_first=0) -> PmGraph:
    n = len(lengths)
    names = [f"v{i}" for i in range(n)]
    vertices = [(names[0], q_first)] + [(v, 0) for v in names[1:]]
    edges = [
        (f"e{i}", names[i], names[(i + 1) % n], lengths[i]) for i in range(n)
    ]
    return PmGraph.build(vertices, edges)


def build_loop(length=12, q=0) -> PmGraph:
    return PmGraph.build([("X", q)], [("l", "X", "X", length)])


def build_path(lengths=(1, 2, 3), q_ends=1) -> PmGraph:
    n = len(lengths)
    names = [f"p{i}" for i in range(n + 1)]
    vertices = [(names[0], q_ends)] + [(v, 0) for v in names[1:-1]]
    vertices.append((names[-1], q_ends))
    edges = [(f"e{i}", names[i], names[i + 1], lengths[i]) for i in range(n)]
    return PmGraph.build(vertices, edges)


def build_loop_with_bridge(bridge=2, loop=3) -> PmGraph:
    # loop b at X (weight 1) plus a bridge a out to a weight-1 leaf
    return PmGraph.build(
        [("X", 1), ("Y", 1)],
        [("b", "X", "X", loop), ("a", "X", "Y", bridge)],
    )


@pytest.fixture
def k4_unit() -> PmGraph:
    return build_k4()


@pytest.fixture
def theta_unit() -> PmGraph:
    return build_theta()
