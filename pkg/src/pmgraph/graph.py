"""Polarized metrized graphs: data model, axioms, and model surgery.

A polarized metrized graph (pm-graph) is a finite connected multigraph whose
edges carry positive rational lengths and whose vertices carry nonnegative
integer polarization weights ``q``, subject to the effectivity condition that
the canonical divisor coefficient ``v(p) - 2 + 2*q(p)`` is nonnegative at
every vertex ``p``.  Self-loops and parallel edges are allowed; a self-loop
contributes 2 to the valence of its vertex.

All lengths are :class:`fractions.Fraction` end to end and every operation is
a pure function returning a new graph, so results are exact and reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

RationalLike = Union[Fraction, int, str]


class PmGraphError(Exception):
    """Base class for errors raised by this package."""


class InvalidGraphError(PmGraphError):
    """The graph violates a pm-graph axiom (see :func:`validate`)."""


class UnsupportedGenusError(PmGraphError):
    """An operation restricted to total genus 3 was called off-domain."""


def as_rational(value: RationalLike) -> Fraction:
    """Coerce int / str / Fraction to an exact Fraction (never via float)."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class Vertex:
    id: str
    q: int = 0


@dataclass(frozen=True)
class Edge:
    id: str
    u: str
    v: str
    length: Fraction

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    @property
    def ends(self) -> tuple[str, str]:
        return (self.u, self.v)


@dataclass(frozen=True)
class PmGraph:
    """Immutable multigraph with rational edge lengths and vertex weights.

    Construction does not enforce the pm-graph axioms; call
    :func:`validate` or :func:`require_valid` for that.  This keeps
    intentionally broken graphs constructible so that validation itself
    can be exercised.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    @classmethod
    def build(
        cls,
        vertices: Iterable[Union[str, tuple[str, int], Vertex]],
        edges: Iterable[Union[tuple[str, str, str, RationalLike], Edge]],
    ) -> "PmGraph":
        """Convenience constructor coercing loose vertex/edge specs.

        Vertices may be given as ``"id"``, ``("id", q)`` or :class:`Vertex`;
        edges as ``("id", u, v, length)`` or :class:`Edge` (lengths are
        coerced through :class:`Fraction`, so ``"5/3"`` and ``"2.5"`` stay
        exact).
        """
        vs: list[Vertex] = []
        for spec in vertices:
            if isinstance(spec, Vertex):
                vs.append(spec)
            elif isinstance(spec, str):
                vs.append(Vertex(spec, 0))
            else:
                name, q = spec
                vs.append(Vertex(name, int(q)))
        es: list[Edge] = []
        for spec in edges:
            if isinstance(spec, Edge):
                es.append(spec)
            else:
                name, u, v, length = spec
                es.append(Edge(name, u, v, as_rational(length)))
        return cls(tuple(vs), tuple(es))

    @cached_property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    @cached_property
    def _vertex_map(self) -> dict[str, Vertex]:
        return {v.id: v for v in self.vertices}

    @cached_property
    def _edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    def vertex(self, vid: str) -> Vertex:
        return self._vertex_map[vid]

    def edge(self, eid: str) -> Edge:
        return self._edge_map[eid]

    def q(self, vid: str) -> int:
        return self._vertex_map[vid].q

    @cached_property
    def _valences(self) -> dict[str, int]:
        val = {v.id: 0 for v in self.vertices}
        for e in self.edges:
            if e.is_loop:
                val[e.u] = val.get(e.u, 0) + 2
            else:
                val[e.u] = val.get(e.u, 0) + 1
                val[e.v] = val.get(e.v, 0) + 1
        return val

    def valence(self, vid: str) -> int:
        """Number of edge ends at ``vid``; a self-loop counts twice."""
        if vid not in self._vertex_map:
            raise KeyError(vid)
        return self._valences.get(vid, 0)

    @cached_property
    def total_length(self) -> Fraction:
        return sum((e.length for e in self.edges), Fraction(0))

    def incident_edges(self, vid: str) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if vid in e.ends)


@dataclass(frozen=True)
class GenusData:
    """First Betti number ``g`` and total genus ``gbar = g + sum(q)``."""

    g: int
    gbar: int


@dataclass(frozen=True)
class ValidationReport:
    passed: bool
    problems: tuple[str, ...] = field(default_factory=tuple)


def connected_components(
    g: PmGraph, skip_edges: frozenset[str] = frozenset()
) -> list[set[str]]:
    """Vertex sets of the connected components, ignoring ``skip_edges``.

    Deterministic: components are reported in order of their first vertex.
    """
    adjacency: dict[str, list[str]] = {v.id: [] for v in g.vertices}
    for e in g.edges:
        if e.id in skip_edges or e.is_loop:
            continue
        if e.u in adjacency and e.v in adjacency:
            adjacency[e.u].append(e.v)
            adjacency[e.v].append(e.u)
    seen: set[str] = set()
    components: list[set[str]] = []
    for root in g.vertex_ids:
        if root in seen:
            continue
        component = {root}
        stack = [root]
        while stack:
            current = stack.pop()
            for neighbor in adjacency[current]:
                if neighbor not in component:
                    component.add(neighbor)
                    stack.append(neighbor)
        seen |= component
        components.append(component)
    return components


def validate(g: PmGraph) -> ValidationReport:
    """Check every pm-graph axiom and report all violations.

    Checks, in order: unique vertex ids, unique edge ids, edge endpoints
    declared, positive lengths, nonnegative ``q``, nonempty vertex set,
    connectedness, and effectivity of the canonical divisor.
    """
    problems: list[str] = []
    seen_v: set[str] = set()
    for v in g.vertices:
        if v.id in seen_v:
            problems.append(f"duplicate vertex id {v.id!r}")
        seen_v.add(v.id)
    seen_e: set[str] = set()
    structural_ok = True
    for e in g.edges:
        if e.id in seen_e:
            problems.append(f"duplicate edge id {e.id!r}")
        seen_e.add(e.id)
        for end in e.ends:
            if end not in seen_v:
                problems.append(f"edge {e.id!r} references unknown vertex {end!r}")
                structural_ok = False
        if e.length <= 0:
            problems.append(f"edge {e.id!r} has nonpositive length {e.length}")
    for v in g.vertices:
        if v.q < 0:
            problems.append(f"vertex {v.id!r} has negative weight q={v.q}")
    if not g.vertices:
        problems.append("vertex set is empty")
        return ValidationReport(False, tuple(problems))
    if structural_ok:
        components = connected_components(g)
        if len(components) > 1:
            labels = ", ".join(
                "{" + ", ".join(sorted(c)) + "}" for c in components
            )
            problems.append(f"graph is not connected: components {labels}")
        divisor = canonical_divisor(g)
        for vid in g.vertex_ids:
            if divisor[vid] < 0:
                v = g.vertex(vid)
                problems.append(
                    f"canonical divisor is negative at vertex {vid!r}: "
                    f"valence {g.valence(vid)} - 2 + 2*q({v.q}) = {divisor[vid]}"
                )
    return ValidationReport(not problems, tuple(problems))


def require_valid(g: PmGraph) -> PmGraph:
    report = validate(g)
    if not report.passed:
        raise InvalidGraphError("; ".join(report.problems))
    return g


def canonical_divisor(g: PmGraph) -> dict[str, int]:
    """Coefficient ``v(p) - 2 + 2*q(p)`` of the canonical divisor at each vertex."""
    return {v.id: g.valence(v.id) - 2 + 2 * v.q for v in g.vertices}


def genus(g: PmGraph) -> GenusData:
    """Betti number ``e - v + 1`` and total genus of a valid (connected) graph."""
    betti = len(g.edges) - len(g.vertices) + 1
    return GenusData(betti, betti + sum(v.q for v in g.vertices))


def _fresh_id(taken: set[str], stem: str) -> str:
    candidate = stem
    while candidate in taken:
        candidate += "'"
    return candidate


def subdivide(g: PmGraph, edge_id: str, t: RationalLike) -> PmGraph:
    """Split edge ``edge_id`` at interior fraction ``t`` of its length.

    A fresh weight-0 vertex replaces the point at distance ``t * length``
    from the edge's first endpoint.  The metric graph, and hence every
    invariant, is unchanged.  The new vertex is the unique vertex of the
    result that is not in ``g``.
    """
    t = as_rational(t)
    if not 0 < t < 1:
        raise ValueError(f"subdivision point must satisfy 0 < t < 1, got {t}")
    old = g.edge(edge_id)
    midpoint = _fresh_id(set(g.vertex_ids), f"{edge_id}:{t}")
    edge_ids = {e.id for e in g.edges}
    first = _fresh_id(edge_ids, f"{edge_id}.1")
    second = _fresh_id(edge_ids | {first}, f"{edge_id}.2")
    new_edges = []
    for e in g.edges:
        if e.id == edge_id:
            new_edges.append(Edge(first, old.u, midpoint, old.length * t))
            new_edges.append(Edge(second, midpoint, old.v, old.length * (1 - t)))
        else:
            new_edges.append(e)
    return PmGraph(g.vertices + (Vertex(midpoint, 0),), tuple(new_edges))


def normalize(g: PmGraph) -> PmGraph:
    """Suppress superfluous vertices: valence 2, weight 0, not the only vertex.

    Each such vertex is removed and its two incident edge segments are merged
    into a single edge of summed length (which may become a self-loop).  The
    result has no removable vertices and represents the same metric graph.
    """
    current = g
    while True:
        target = None
        for v in current.vertices:
            if v.q != 0 or len(current.vertices) == 1:
                continue
            incident = current.incident_edges(v.id)
            if current.valence(v.id) == 2 and len(incident) == 2:
                target = (v, incident)
                break
        if target is None:
            return current
        v, (e1, e2) = target
        far1 = e1.v if e1.u == v.id else e1.u
        far2 = e2.v if e2.u == v.id else e2.u
        merged = Edge(
            _fresh_id({e.id for e in current.edges if e.id not in (e1.id, e2.id)},
                      f"{e1.id}+{e2.id}"),
            far1,
            far2,
            e1.length + e2.length,
        )
        vertices = tuple(w for w in current.vertices if w.id != v.id)
        edges = []
        placed = False
        for e in current.edges:
            if e.id in (e1.id, e2.id):
                if not placed:
                    edges.append(merged)
                    placed = True
            else:
                edges.append(e)
        current = PmGraph(vertices, tuple(edges))


def scaled(g: PmGraph, factor: RationalLike) -> PmGraph:
    """The same combinatorial graph with every length multiplied by ``factor``."""
    factor = as_rational(factor)
    if factor <= 0:
        raise ValueError(f"scale factor must be positive, got {factor}")
    return PmGraph(
        g.vertices,
        tuple(Edge(e.id, e.u, e.v, e.length * factor) for e in g.edges),
    )


def one_point_union(
    g1: PmGraph, g2: PmGraph, at1: str, at2: str, rename_suffix: str = "'"
) -> PmGraph:
    """Glue ``g2`` onto ``g1`` by identifying vertex ``at2`` with ``at1``.

    Vertex and edge ids of ``g2`` get ``rename_suffix`` appended until they
    are free, so arbitrary pairs of graphs can be joined.  The merged vertex
    keeps ``q = q1 + q2``, which preserves validity of the union.
    """
    taken_v = set(g1.vertex_ids)
    v_rename: dict[str, str] = {}
    for v in g2.vertices:
        if v.id == at2:
            v_rename[v.id] = at1
            continue
        name = v.id
        while name in taken_v:
            name += rename_suffix
        v_rename[v.id] = name
        taken_v.add(name)
    taken_e = {e.id for e in g1.edges}
    vertices = list(g1.vertices)
    for i, v in enumerate(vertices):
        if v.id == at1:
            vertices[i] = Vertex(at1, v.q + g2.q(at2))
    for v in g2.vertices:
        if v.id != at2:
            vertices.append(Vertex(v_rename[v.id], v.q))
    edges = list(g1.edges)
    for e in g2.edges:
        name = e.id
        while name in taken_e:
            name += rename_suffix
        taken_e.add(name)
        edges.append(Edge(name, v_rename[e.u], v_rename[e.v], e.length))
    return PmGraph(tuple(vertices), tuple(edges))
