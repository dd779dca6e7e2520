"""Exact graph toughness, spectra of strongly regular families, and a
verification suite reproducing the headline values on a fixed catalog."""

from .core import (
    Graph,
    build_graph,
    complement,
    components_after_removal,
    disjoint_union,
    from_text,
    induced_subgraph,
    is_connected,
    join,
    line_graph,
    mask_of,
    read_graph,
    regularity,
    to_text,
    vertices_of,
    write_graph,
)
from .families import (
    GeneralizedQuadrangle,
    bipartite_sparse_cut,
    check_gq,
    complete,
    complete_bipartite,
    cycle,
    extremal_x,
    gadget_even,
    gadget_odd,
    gq_2_4,
    gq_grid,
    gq_point_graph,
    gq_symplectic,
    graph_from_spec,
    hypercube,
    kneser,
    lattice,
    matching_complement,
    path,
    petersen,
    structure_from_spec,
    triangular,
)
from .spectral import (
    QuotientMatrix,
    Spectrum,
    SrgParams,
    adjacency_matrix,
    check_equitable,
    group_eigenvalues,
    hoffman_ratio_bound,
    interlacing_holds,
    jacobi_eigenvalues,
    lambda_summary,
    quotient_eigenvalues,
    spectrum,
    srg_check,
    srg_spectrum,
    theta,
)
from .connectivity import (
    ConnectivityReport,
    IndependenceResult,
    connectivity_report,
    edge_connectivity,
    local_vertex_connectivity,
    max_independent_set,
    vertex_connectivity,
)
from .toughness import (
    BoundsReport,
    MinimizerReport,
    ToughnessCertificate,
    bounds,
    classify_minimizers,
    hoffman_equality_upper,
    toughness_exact,
    toughness_naive,
    toughness_of_set,
)
from .suite import (
    CHECK_IDS,
    PROFILES,
    CheckResult,
    SuiteProfile,
    VerificationReport,
    check_one,
    run_suite,
)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundsReport",
    "CHECK_IDS",
    "CheckResult",
    "ConnectivityReport",
    "GeneralizedQuadrangle",
    "Graph",
    "IndependenceResult",
    "MinimizerReport",
    "PROFILES",
    "QuotientMatrix",
    "Spectrum",
    "SrgParams",
    "SuiteProfile",
    "ToughnessCertificate",
    "VerificationReport",
    "adjacency_matrix",
    "bipartite_sparse_cut",
    "bounds",
    "build_graph",
    "check_equitable",
    "check_gq",
    "check_one",
    "classify_minimizers",
    "complement",
    "complete",
    "complete_bipartite",
    "components_after_removal",
    "connectivity_report",
    "cycle",
    "disjoint_union",
    "edge_connectivity",
    "extremal_x",
    "from_text",
    "gadget_even",
    "gadget_odd",
    "gq_2_4",
    "gq_grid",
    "gq_point_graph",
    "gq_symplectic",
    "graph_from_spec",
    "group_eigenvalues",
    "hoffman_equality_upper",
    "hoffman_ratio_bound",
    "hypercube",
    "induced_subgraph",
    "interlacing_holds",
    "is_connected",
    "jacobi_eigenvalues",
    "join",
    "kneser",
    "lambda_summary",
    "lattice",
    "line_graph",
    "local_vertex_connectivity",
    "mask_of",
    "matching_complement",
    "max_independent_set",
    "path",
    "petersen",
    "quotient_eigenvalues",
    "read_graph",
    "regularity",
    "run_suite",
    "spectrum",
    "srg_check",
    "srg_spectrum",
    "structure_from_spec",
    "theta",
    "toughness_exact",
    "toughness_naive",
    "toughness_of_set",
    "triangular",
    "to_text",
    "vertices_of",
    "vertex_connectivity",
    "write_graph",
]
