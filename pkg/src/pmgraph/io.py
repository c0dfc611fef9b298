"""Plain-text and JSON serialization of pm-graphs.

Text format, one record per line::

    # comment (also allowed after a record)
    vertex <id> [q=<nonneg int>]
    edge <id> <vertex-id> <vertex-id> <length>

Lengths are exact rationals written as ``num/den``, an integer, or a decimal
literal (``2.5`` parses to 5/2, not a float).  Vertices must be declared
before any edge that uses them.  Parsing never normalizes: the graph comes
back exactly as written.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Mapping

from .graph import Edge, PmGraph, PmGraphError, Vertex


class ParseError(PmGraphError):
    """Malformed graph text; carries 1-based line and column of the offense."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _column_of(line: str, token_index: int) -> int:
    # 1-based starting column of the token at token_index, for error messages
    pos = 0
    seen = 0
    while pos < len(line):
        if line[pos].isspace():
            pos += 1
            continue
        end = pos
        while end < len(line) and not line[end].isspace():
            end += 1
        if seen == token_index:
            return pos + 1
        seen += 1
        pos = end
    return len(line) + 1


def _parse_length(token: str, lineno: int, column: int) -> Fraction:
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"cannot parse length {token!r} as a rational", lineno, column)
    if value <= 0:
        raise ParseError(f"edge length must be positive, got {token}", lineno, column)
    return value


def parse_graph(text: str) -> PmGraph:
    """Parse text in the format above into a :class:`PmGraph`.

    Raises :class:`ParseError` on the first syntax or reference problem.
    The result is not validated against the pm-graph axioms; callers that
    need a valid graph should follow up with :func:`pmgraph.graph.validate`.
    """
    vertices: list[Vertex] = []
    edges: list[Edge] = []
    vertex_ids: set[str] = set()
    edge_ids: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        kind = tokens[0]
        if kind == "vertex":
            if len(tokens) < 2 or len(tokens) > 3:
                raise ParseError(
                    "expected 'vertex <id> [q=<int>]'", lineno, _column_of(line, 0)
                )
            vid = tokens[1]
            if vid in vertex_ids:
                raise ParseError(
                    f"duplicate vertex id {vid!r}", lineno, _column_of(line, 1)
                )
            q = 0
            if len(tokens) == 3:
                col = _column_of(line, 2)
                if not tokens[2].startswith("q="):
                    raise ParseError(
                        f"expected 'q=<int>', got {tokens[2]!r}", lineno, col
                    )
                try:
                    q = int(tokens[2][2:])
                except ValueError:
                    raise ParseError(
                        f"cannot parse weight {tokens[2][2:]!r} as an integer",
                        lineno,
                        col,
                    )
                if q < 0:
                    raise ParseError(
                        f"vertex weight must be nonnegative, got {q}", lineno, col
                    )
            vertices.append(Vertex(vid, q))
            vertex_ids.add(vid)
        elif kind == "edge":
            if len(tokens) != 5:
                raise ParseError(
                    "expected 'edge <id> <vertex> <vertex> <length>'",
                    lineno,
                    _column_of(line, 0),
                )
            eid, u, v, length_token = tokens[1:]
            if eid in edge_ids:
                raise ParseError(
                    f"duplicate edge id {eid!r}", lineno, _column_of(line, 1)
                )
            for index, end in ((2, u), (3, v)):
                if end not in vertex_ids:
                    raise ParseError(
                        f"edge {eid!r} references undeclared vertex {end!r}",
                        lineno,
                        _column_of(line, index),
                    )
            length = _parse_length(length_token, lineno, _column_of(line, 4))
            edges.append(Edge(eid, u, v, length))
            edge_ids.add(eid)
        else:
            raise ParseError(
                f"unknown record {kind!r} (expected 'vertex' or 'edge')",
                lineno,
                _column_of(line, 0),
            )
    return PmGraph(tuple(vertices), tuple(edges))


def format_fraction(x: Fraction) -> str:
    """Canonical text form: lowest terms, ``p/q`` or a bare integer."""
    return str(x)


def graph_to_text(g: PmGraph) -> str:
    """Serialize to the text format; ``parse_graph`` round-trips exactly."""
    lines = []
    for v in g.vertices:
        lines.append(f"vertex {v.id}" + (f" q={v.q}" if v.q else ""))
    for e in g.edges:
        lines.append(f"edge {e.id} {e.u} {e.v} {format_fraction(e.length)}")
    return "\n".join(lines) + "\n"


def graph_to_json_dict(g: PmGraph) -> dict:
    return {
        "vertices": [{"id": v.id, "q": v.q} for v in g.vertices],
        "edges": [
            {"id": e.id, "u": e.u, "v": e.v, "length": format_fraction(e.length)}
            for e in g.edges
        ],
    }


def graph_from_json_dict(data: Mapping) -> PmGraph:
    vertices = tuple(Vertex(v["id"], int(v.get("q", 0))) for v in data["vertices"])
    edges = tuple(
        Edge(e["id"], e["u"], e["v"], Fraction(e["length"])) for e in data["edges"]
    )
    return PmGraph(vertices, edges)


def dumps_json(payload: object) -> str:
    """Stable JSON encoding used everywhere machine output is produced."""
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"
