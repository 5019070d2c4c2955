"""Exact spectra, explicit constructions and automorphism-group tools for
set-inclusion graphs and the intersection-relation families on k-subsets."""

from .combinatorics import alpha, beta, beta_middle, binom, intersection_number
from .errors import CapExceededError
from .graphs import (
    Graph,
    GraphParams,
    JohnsonGraph,
    SubsetGraph,
    build_inclusion_graph,
    build_johnson_graph,
    build_line_graph,
    canonical_params_up_to,
    canonicalize,
    enumerate_subsets,
    export_graph,
    is_connected,
    johnson_matrices,
    johnson_scheme_holds,
    parse_graph6,
    subset_rank,
    subset_unrank,
)
from .spectra import (
    ExactEigenvalue,
    Spectrum,
    SpectrumComparison,
    SurdEigenvalue,
    compare_spectra,
    eigensolver_oracle,
    format_eigenvalue,
    spectrum_inclusion,
    spectrum_line_inclusion,
    spectrum_line_middle,
    spectrum_line_semiregular,
    spectrum_middle,
)
from .automorphisms import (
    GroupDescription,
    InducedAction,
    aut_group,
    brute_force_aut_order,
    common_neighbor_fingerprint,
    induced_action,
    is_automorphism,
    orbit_count,
    pointwise_stabilizer_trivial,
    tau_action,
)

__all__ = [
    "CapExceededError",
    "binom",
    "alpha",
    "beta",
    "beta_middle",
    "intersection_number",
    "GraphParams",
    "Graph",
    "SubsetGraph",
    "JohnsonGraph",
    "canonicalize",
    "canonical_params_up_to",
    "enumerate_subsets",
    "subset_rank",
    "subset_unrank",
    "build_inclusion_graph",
    "build_johnson_graph",
    "build_line_graph",
    "export_graph",
    "parse_graph6",
    "is_connected",
    "johnson_matrices",
    "johnson_scheme_holds",
    "ExactEigenvalue",
    "SurdEigenvalue",
    "Spectrum",
    "SpectrumComparison",
    "format_eigenvalue",
    "spectrum_inclusion",
    "spectrum_middle",
    "spectrum_line_semiregular",
    "spectrum_line_inclusion",
    "spectrum_line_middle",
    "eigensolver_oracle",
    "compare_spectra",
    "InducedAction",
    "GroupDescription",
    "induced_action",
    "tau_action",
    "is_automorphism",
    "aut_group",
    "brute_force_aut_order",
    "pointwise_stabilizer_trivial",
    "common_neighbor_fingerprint",
    "orbit_count",
]
