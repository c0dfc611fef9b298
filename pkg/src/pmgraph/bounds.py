"""Sharp lower bounds on normalized invariants, certified by exact sampling.

Every bound here is a statement about the scale-free ratio invariant/ell:
for each catalog family (or group of families) a floor is recorded, together
with a witness length assignment attaining it when sharpness is known.  Two
checks accompany each floor:

* :func:`sample_check` draws length tuples as exact rationals and evaluates
  the invariant through the general engine.  A "pass" is therefore a proof
  for the sampled points, not a float approximation; there is no tolerance
  anywhere in this module.
* :func:`witness_check` confirms equality at the witness.  Witnesses with a
  zero entry mark degenerate limits: the closed form is evaluated at the
  boundary point itself (the graph constructor requires positive lengths),
  and the engine is run along a shrinking-parameter sequence to confirm the
  ratio decreases monotonically toward the floor.

The single zero-length family ``g0.I`` is excluded from every ratio check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from fnmatch import fnmatchcase
from typing import Mapping, Optional

from . import catalog
from .invariants import tau as tau_of
from .invariants import zhang_invariants
from .resistance import resistance_matrix

RATIO_INVARIANTS = ("tau", "phi", "lambda", "epsilon")

# ClosedRow position of each bounded invariant
_ROW_INDEX = {"tau": 0, "phi": 3, "lambda": 4, "epsilon": 5}


@dataclass(frozen=True)
class Witness:
    """Length assignment attaining a floor, possibly on the boundary."""

    family: str
    lengths: Mapping[str, Fraction]

    @property
    def is_boundary(self) -> bool:
        return any(value == 0 for value in self.lengths.values())


@dataclass(frozen=True)
class BoundSpec:
    """A floor for invariant/ell over the families matched by ``selector``.

    ``selector`` is a comma-separated list of family ids or glob patterns
    (``"g1.*"``).  ``exact`` marks ratios that are constant rather than
    merely bounded (the tree families).  ``witness`` is optional; groups
    whose floor is approached only in degenerate limits outside the group
    carry none.
    """

    selector: str
    invariant: str
    floor: Fraction
    exact: bool = False
    witness: Optional[Witness] = None

    def matches(self, fid: str) -> bool:
        return any(
            fnmatchcase(fid, pattern.strip())
            for pattern in self.selector.split(",")
        )


@dataclass(frozen=True)
class SampleReport:
    """Outcome of an exact sampling run for one BoundSpec."""

    spec: BoundSpec
    families: tuple[str, ...]
    samples_per_family: int
    seed: int
    min_ratio: Fraction
    min_family: str
    min_lengths: tuple[tuple[str, Fraction], ...]
    violation: Optional[tuple[str, tuple[tuple[str, Fraction], ...], Fraction]]

    @property
    def passed(self) -> bool:
        return self.violation is None


@dataclass(frozen=True)
class WitnessReport:
    spec: BoundSpec
    checks: tuple[tuple[str, bool, str], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)


def _ones(fid: str) -> Witness:
    params = catalog.family(fid).params
    return Witness(fid, {name: Fraction(1) for name in params})


def _boundary(fid: str, zero: tuple[str, ...]) -> Witness:
    params = catalog.family(fid).params
    return Witness(
        fid,
        {name: Fraction(0) if name in zero else Fraction(1) for name in params},
    )


def bound_table() -> list[BoundSpec]:
    """All certified floors, one row per (family group, invariant)."""
    third = [
        # phi floors vary by family within total genus 3 graphs of genus 3
        BoundSpec("g3.I,g3.IV,g3.V,g3.VI,g3.VII,g3.XI", "phi",
                  Fraction(1, 9), witness=_ones("g3.I")),
        BoundSpec("g3.III,g3.IX,g3.X,g3.XII", "phi", Fraction(7, 81)),
        BoundSpec("g3.II", "phi", Fraction(1, 16), witness=_ones("g3.II")),
        BoundSpec("g3.VIII", "phi", Fraction(1, 16),
                  witness=_boundary("g3.VIII", ("a",))),
        BoundSpec("g3.XIII", "phi", Fraction(1, 16),
                  witness=_boundary("g3.XIII", ("a", "b"))),
        BoundSpec("g3.XIV", "phi", Fraction(17, 288), witness=_ones("g3.XIV")),
        BoundSpec("g3.XIV", "tau", Fraction(5, 96), witness=_ones("g3.XIV")),
        BoundSpec("g3.*", "lambda", Fraction(3, 28), witness=_ones("g3.I")),
        BoundSpec("g3.*", "epsilon", Fraction(2, 9), witness=_ones("g3.I")),
    ]
    return [
        BoundSpec("g0.*", "phi", Fraction(4, 3), exact=True,
                  witness=_ones("g0.II")),
        BoundSpec("g0.*", "lambda", Fraction(2, 7), exact=True,
                  witness=_ones("g0.II")),
        BoundSpec("g0.*", "epsilon", Fraction(5, 3), exact=True,
                  witness=_ones("g0.II")),
        BoundSpec("g1.*", "phi", Fraction(1, 9), witness=_ones("g1.I")),
        BoundSpec("g1.*", "lambda", Fraction(3, 28), witness=_ones("g1.I")),
        BoundSpec("g1.*", "epsilon", Fraction(2, 9), witness=_ones("g1.I")),
        BoundSpec("g2.*", "phi", Fraction(7, 81), witness=_ones("g2.III")),
        BoundSpec("g2.*", "lambda", Fraction(3, 28), witness=_ones("g2.I")),
        BoundSpec("g2.*", "epsilon", Fraction(2, 9), witness=_ones("g2.I")),
    ] + third


def matching_families(spec: BoundSpec) -> list[str]:
    """Catalog families covered by a spec, zero-length family excluded."""
    return [
        fid
        for fid in catalog.list_families()
        if spec.matches(fid) and not catalog.family(fid).degenerate
    ]


def engine_ratio(fid: str, lengths: Mapping[str, Fraction], invariant: str) -> Fraction:
    """invariant/ell via the general engine (no closed forms involved)."""
    graph = catalog.build(fid, lengths)
    rm = resistance_matrix(graph)
    if invariant == "tau":
        value = tau_of(graph, rm=rm)
    else:
        value = zhang_invariants(graph, rm=rm)[
            "Z" if invariant == "Z" else invariant
        ]
    return value / graph.total_length


def engine_ratios(fid: str, lengths: Mapping[str, Fraction]) -> dict[str, Fraction]:
    """All four bounded ratios from a single engine pass over one graph."""
    graph = catalog.build(fid, lengths)
    rm = resistance_matrix(graph)
    quartet = zhang_invariants(graph, rm=rm)
    ell = graph.total_length
    return {
        "tau": tau_of(graph, rm=rm) / ell,
        "phi": quartet["phi"] / ell,
        "lambda": quartet["lambda"] / ell,
        "epsilon": quartet["epsilon"] / ell,
    }


def closed_ratio(fid: str, lengths: Mapping[str, Fraction], invariant: str) -> Fraction:
    """invariant/ell via the family's closed form; tolerates boundary zeros."""
    spec = catalog.family(fid)
    row = spec.closed(dict(lengths))
    ell = sum(lengths.values(), Fraction(0))
    return row[_ROW_INDEX[invariant]] / ell


def sample_check(
    spec: BoundSpec, samples: int = 1000, seed: int = 0,
    only: Optional[str] = None,
) -> SampleReport:
    """Draw exact-rational tuples per family and compare ratios to the floor.

    Deterministic for a given (spec, samples, seed): each family uses its own
    stream seeded by family id and seed, so per-family results do not depend
    on which other families the selector matches.  ``only`` restricts a group
    selector to a single covered family.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    families = matching_families(spec)
    if only is not None:
        families = [fid for fid in families if fid == only]
    if not families:
        raise catalog.UnknownFamilyError(
            f"selector {spec.selector!r} matches no family"
        )
    min_ratio: Optional[Fraction] = None
    min_family = ""
    min_lengths: tuple[tuple[str, Fraction], ...] = ()
    violation = None
    for fid in families:
        params = catalog.family(fid).params
        rng = random.Random(f"{fid}:{seed}")
        for _ in range(samples):
            lengths = catalog.random_lengths(params, rng)
            ratio = engine_ratio(fid, lengths, spec.invariant)
            frozen = tuple(sorted(lengths.items()))
            if min_ratio is None or ratio < min_ratio:
                min_ratio, min_family, min_lengths = ratio, fid, frozen
            bad = ratio != spec.floor if spec.exact else ratio < spec.floor
            if bad and violation is None:
                violation = (fid, frozen, ratio)
    assert min_ratio is not None
    return SampleReport(
        spec=spec,
        families=tuple(families),
        samples_per_family=samples,
        seed=seed,
        min_ratio=min_ratio,
        min_family=min_family,
        min_lengths=min_lengths,
        violation=violation,
    )


def witness_check(spec: BoundSpec) -> WitnessReport:
    """Confirm the floor is attained at the recorded witness, exactly."""
    witness = spec.witness
    if witness is None:
        raise ValueError(f"bound {spec.selector}/{spec.invariant} has no witness")
    checks: list[tuple[str, bool, str]] = []
    if not witness.is_boundary:
        engine = engine_ratio(witness.family, witness.lengths, spec.invariant)
        checks.append(
            (
                f"engine {spec.invariant}/ell at {witness.family} witness",
                engine == spec.floor,
                f"{engine} vs floor {spec.floor}",
            )
        )
        closed = closed_ratio(witness.family, witness.lengths, spec.invariant)
        checks.append(
            (
                f"closed-form {spec.invariant}/ell at {witness.family} witness",
                closed == spec.floor,
                f"{closed} vs floor {spec.floor}",
            )
        )
    else:
        closed = closed_ratio(witness.family, witness.lengths, spec.invariant)
        checks.append(
            (
                f"closed-form {spec.invariant}/ell at {witness.family}"
                " boundary witness",
                closed == spec.floor,
                f"{closed} vs floor {spec.floor}",
            )
        )
        # approach the boundary along 1/n; the engine never sees a zero length
        zero_names = [k for k, v in witness.lengths.items() if v == 0]
        ratios = []
        for denom in (4, 16, 64, 256):
            lengths = dict(witness.lengths)
            for name in zero_names:
                lengths[name] = Fraction(1, denom)
            ratios.append(engine_ratio(witness.family, lengths, spec.invariant))
        above = all(r > spec.floor for r in ratios)
        checks.append(
            (
                "engine ratio stays above the floor along the limit",
                above,
                " > ".join(str(r) for r in ratios) + f" > {spec.floor}",
            )
        )
        monotone = all(ratios[i + 1] < ratios[i] for i in range(len(ratios) - 1))
        shrinking = (ratios[-1] - spec.floor) < (ratios[0] - spec.floor) / 4
        checks.append(
            (
                "engine ratio decreases monotonically toward the floor",
                monotone and shrinking,
                f"gaps {[str(r - spec.floor) for r in ratios]}",
            )
        )
    return WitnessReport(spec=spec, checks=tuple(checks))


def verify_bounds(
    family: Optional[str] = None, samples: int = 1000, seed: int = 0
) -> list[tuple[SampleReport, Optional[WitnessReport]]]:
    """Run sample and witness checks for every bound row.

    ``family`` restricts the table to rows whose selector covers that family.
    """
    results = []
    for spec in bound_table():
        if family is not None and not spec.matches(family):
            continue
        report = sample_check(spec, samples=samples, seed=seed, only=family)
        witness_report = witness_check(spec) if spec.witness else None
        results.append((report, witness_report))
    if family is not None and not results:
        raise catalog.UnknownFamilyError(
            f"no bound row covers family {family!r}"
        )
    return results
