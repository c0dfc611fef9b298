"""Exact invariants of polarized metrized graphs of total genus 3.

The package computes the tau, theta, delta, phi, lambda, epsilon and Z
invariants of polarized metrized graphs with rational edge lengths, entirely
in exact rational arithmetic.  A catalog of the 41 fixed families of total
genus 3 carries independently transcribed closed forms that cross-check the
general engine; a polynomial module certifies the symbolic identities behind
the sharp lower bounds; a bounds module corroborates those floors by exact
sampling and confirms the sharpness witnesses.
"""

from .graph import (
    Edge,
    GenusData,
    InvalidGraphError,
    PmGraph,
    PmGraphError,
    UnsupportedGenusError,
    ValidationReport,
    Vertex,
    as_rational,
    canonical_divisor,
    connected_components,
    genus,
    normalize,
    one_point_union,
    require_valid,
    scaled,
    subdivide,
    validate,
)
from .io import (
    ParseError,
    dumps_json,
    graph_from_json_dict,
    graph_to_json_dict,
    graph_to_text,
    parse_graph,
)
from .resistance import (
    EdgeClass,
    ResistanceMatrix,
    classify_edges,
    laplacian,
    resistance,
    resistance_matrix,
)
from .invariants import (
    InvariantSet,
    delta,
    invariant_set,
    tau,
    theta,
    zhang_invariants,
)
from .catalog import (
    CatalogError,
    CrossCheckReport,
    FamilySpec,
    ParameterError,
    UnknownFamilyError,
    build,
    check_family,
    closed_form,
    cross_check,
    family,
    list_families,
    random_lengths,
)
from .polynomials import Polynomial, variables
from .identities import (
    IdentityCertificate,
    PROBE_NAMES,
    identity_names,
    named,
    verify_all,
    verify_identity,
)
from .bounds import (
    BoundSpec,
    SampleReport,
    Witness,
    WitnessReport,
    bound_table,
    engine_ratio,
    engine_ratios,
    matching_families,
    sample_check,
    verify_bounds,
    witness_check,
)

__version__ = "1.0.0"

__all__ = [
    "Edge",
    "GenusData",
    "InvalidGraphError",
    "PmGraph",
    "PmGraphError",
    "UnsupportedGenusError",
    "ValidationReport",
    "Vertex",
    "as_rational",
    "canonical_divisor",
    "connected_components",
    "genus",
    "normalize",
    "one_point_union",
    "require_valid",
    "scaled",
    "subdivide",
    "validate",
    "ParseError",
    "dumps_json",
    "graph_from_json_dict",
    "graph_to_json_dict",
    "graph_to_text",
    "parse_graph",
    "EdgeClass",
    "ResistanceMatrix",
    "classify_edges",
    "laplacian",
    "resistance",
    "resistance_matrix",
    "InvariantSet",
    "delta",
    "invariant_set",
    "tau",
    "theta",
    "zhang_invariants",
    "CatalogError",
    "CrossCheckReport",
    "FamilySpec",
    "ParameterError",
    "UnknownFamilyError",
    "build",
    "check_family",
    "closed_form",
    "cross_check",
    "family",
    "list_families",
    "random_lengths",
    "Polynomial",
    "variables",
    "IdentityCertificate",
    "PROBE_NAMES",
    "identity_names",
    "named",
    "verify_all",
    "verify_identity",
    "BoundSpec",
    "SampleReport",
    "Witness",
    "WitnessReport",
    "bound_table",
    "engine_ratio",
    "engine_ratios",
    "matching_families",
    "sample_check",
    "verify_bounds",
    "witness_check",
    "__version__",
]
