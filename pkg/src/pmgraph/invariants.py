"""Exact admissible invariants of pm-graphs.

``tau``, ``theta`` and the ``delta`` decomposition are defined for every
valid pm-graph.  The four derived invariants ``phi``, ``lambda``,
``epsilon`` and ``Z`` are produced by closed formulas in ``tau``, ``theta``
and the total length that hold on total genus 3, so :func:`zhang_invariants`
refuses any other total genus rather than return something wrong.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graph import (
    PmGraph,
    UnsupportedGenusError,
    canonical_divisor,
    genus,
    require_valid,
)
from .io import format_fraction
from .resistance import ResistanceMatrix, classify_edges, resistance_matrix


def tau(g: PmGraph, base: Optional[str] = None, rm: Optional[ResistanceMatrix] = None) -> Fraction:
    """Tau constant: ``(1/4) * integral over the graph of (dr(x, y)/dx)^2``.

    Restricted to any edge, ``x -> r(x, y)`` is a quadratic whose leading
    coefficient ``-(L - r(p,q))/L^2`` depends only on the edge, so each edge
    integrates in closed form.  The value is independent of the base vertex
    ``y`` (checked property, not assumed); ``base`` defaults to the first
    vertex.  ``rm`` may pass in a precomputed resistance matrix.
    """
    require_valid(g)
    if rm is None:
        rm = resistance_matrix(g)
    if base is None:
        base = g.vertex_ids[0]
    total = Fraction(0)
    for e in g.edges:
        L = e.length
        x = Fraction(0) if e.is_loop else rm.get(e.u, e.v)
        a = -(L - x) / L**2
        b = (rm.get(e.v, base) - rm.get(e.u, base)) / L - a * L
        total += Fraction(4, 3) * a * a * L**3 + 2 * a * b * L**2 + b * b * L
    return total / 4


def theta(g: PmGraph, rm: Optional[ResistanceMatrix] = None) -> Fraction:
    """``sum over ordered vertex pairs (p, s) of K(p) K(s) r(p, s)``.

    ``K`` is the canonical divisor coefficient; each unordered pair therefore
    counts twice.  Vertices with ``K = 0`` contribute nothing, so the value
    does not change under subdivision or smoothing of weight-0 valence-2
    vertices.
    """
    require_valid(g)
    if rm is None:
        rm = resistance_matrix(g)
    k = canonical_divisor(g)
    ids = g.vertex_ids
    total = Fraction(0)
    for p in ids:
        if k[p] == 0:
            continue
        for s in ids:
            if k[s] == 0:
                continue
            total += k[p] * k[s] * rm.get(p, s)
    return total


def delta(g: PmGraph, rm: Optional[ResistanceMatrix] = None) -> dict[int, Fraction]:
    """Total edge length by type: ``delta[i]`` sums type-``i`` bridges, and
    ``delta[0]`` sums all non-bridge edges.

    Keys run over ``0 .. gbar // 2`` and always include every possible type,
    with value 0 when no edge of the type is present.
    """
    require_valid(g)
    if rm is None:
        rm = resistance_matrix(g)
    gbar = genus(g).gbar
    result = {i: Fraction(0) for i in range(gbar // 2 + 1)}
    classes = classify_edges(g, rm)
    for e in g.edges:
        result[classes[e.id].type_index] += e.length
    return result


@dataclass(frozen=True, eq=True)
class InvariantSet:
    """Complete exact invariant record of a pm-graph.

    ``phi``, ``lam``, ``epsilon`` and ``z`` are ``None`` unless the total
    genus is 3.  Two records compare equal exactly when every field does,
    which is what catalog cross-checks rely on.
    """

    ell: Fraction
    g: int
    gbar: int
    tau: Fraction
    theta: Fraction
    delta: dict[int, Fraction]
    phi: Optional[Fraction] = None
    lam: Optional[Fraction] = None
    epsilon: Optional[Fraction] = None
    z: Optional[Fraction] = None

    def to_json_dict(self) -> dict:
        payload: dict = {
            "ell": format_fraction(self.ell),
            "g": self.g,
            "gbar": self.gbar,
            "tau": format_fraction(self.tau),
            "theta": format_fraction(self.theta),
            "delta": {
                str(i): format_fraction(self.delta[i]) for i in sorted(self.delta)
            },
        }
        if self.phi is not None:
            payload["phi"] = format_fraction(self.phi)
            payload["lambda"] = format_fraction(self.lam)
            payload["epsilon"] = format_fraction(self.epsilon)
            payload["Z"] = format_fraction(self.z)
        return payload

    def by_name(self, name: str) -> Fraction:
        """Look up an invariant by its conventional name (``lambda``, ``Z``...)."""
        aliases = {
            "ell": self.ell,
            "tau": self.tau,
            "theta": self.theta,
            "phi": self.phi,
            "lambda": self.lam,
            "epsilon": self.epsilon,
            "Z": self.z,
        }
        if name not in aliases:
            raise KeyError(name)
        value = aliases[name]
        if value is None:
            raise UnsupportedGenusError(
                f"{name} is only defined on total genus 3 graphs"
            )
        return value


def zhang_invariants(g: PmGraph, rm: Optional[ResistanceMatrix] = None) -> dict[str, Fraction]:
    """``phi``, ``lambda``, ``epsilon`` and ``Z`` of a total genus 3 graph.

    On total genus 3 these admit closed forms in ``tau``, ``theta`` and the
    total length ``ell``::

        phi     = 13/3 tau + theta/12 - ell/4
        lambda  =  3/7 tau + theta/56 + ell/14
        epsilon =  8/3 tau + theta/6
        Z       =  5/9 tau + theta/72

    Any other total genus raises :class:`UnsupportedGenusError`.
    """
    require_valid(g)
    data = genus(g)
    if data.gbar != 3:
        raise UnsupportedGenusError(
            f"phi/lambda/epsilon/Z require total genus 3, got {data.gbar}"
        )
    if rm is None:
        rm = resistance_matrix(g)
    t = tau(g, rm=rm)
    th = theta(g, rm=rm)
    ell = g.total_length
    return {
        "phi": Fraction(13, 3) * t + th / 12 - ell / 4,
        "lambda": Fraction(3, 7) * t + th / 56 + ell / 14,
        "epsilon": Fraction(8, 3) * t + th / 6,
        "Z": Fraction(5, 9) * t + th / 72,
    }


def invariant_set(g: PmGraph) -> InvariantSet:
    """All invariants of a valid graph in one pass (one Laplacian solve)."""
    require_valid(g)
    rm = resistance_matrix(g)
    data = genus(g)
    t = tau(g, rm=rm)
    th = theta(g, rm=rm)
    d = delta(g, rm=rm)
    ell = g.total_length
    quartet: dict[str, Optional[Fraction]] = {
        "phi": None,
        "lambda": None,
        "epsilon": None,
        "Z": None,
    }
    if data.gbar == 3:
        quartet = zhang_invariants(g, rm=rm)  # type: ignore[assignment]
    return InvariantSet(
        ell=ell,
        g=data.g,
        gbar=data.gbar,
        tau=t,
        theta=th,
        delta=d,
        phi=quartet["phi"],
        lam=quartet["lambda"],
        epsilon=quartet["epsilon"],
        z=quartet["Z"],
    )
