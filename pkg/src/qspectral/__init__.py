"""Signless-Laplacian spectral toolkit for cone-over-cycles graph joins.

Closed-form Q-spectra with explicit eigenvectors, exact integer
cospectrality, degree-census identities, and exhaustive small-order
isomorph-free search for Q-cospectral mates.
"""

from .census import (
    FourVertexReport,
    MomentSystemResidual,
    ReducedCensus,
    four_vertex_report,
    kappa1_degree_gap_check,
    moment_system_residual,
    solve_reduced_census,
    spectral_domination_check,
)
from .closedform import (
    ClosedFormSpectrum,
    EigenPair,
    closed_form_eigenpairs,
    closed_form_mate_eigenpairs,
    closed_form_mate_spectrum,
    closed_form_spectrum,
    cospectral_mate,
    cubic_roots,
    cubic_value,
    eigenpair_matrix_rank,
    eigenpair_residual,
    multiplicity_of_one,
    verify_eigenpairs,
)
from .enumeration import (
    CanonicalForm,
    DqsReport,
    MAX_CANON_ORDER,
    MAX_ENUM_ORDER,
    canonical_form,
    dqs_report,
    find_q_cospectral_mates,
    generate_all,
)
from .errors import (
    Graph6ParseError,
    InvalidParameterError,
    NotFoundError,
    NumericError,
    OutOfScopeError,
    PreconditionError,
    QSpectralError,
    UnsupportedOrderError,
)
from .graph6 import decode, encode, read_file, write_file
from .graphs import (
    CycleJoinParams,
    DegreeCensus,
    Graph,
    apex_vertex,
    complete,
    complete_bipartite,
    cone_components,
    cone_cycles,
    cone_cycles_mate,
    connected_components,
    cycle,
    degree_census,
    delete_edge,
    delete_vertex,
    disjoint_union,
    empty_graph,
    has_bipartite_component,
    induced_subgraph,
    is_connected,
    join,
    path,
    triangle_count,
    z_tree,
)
from .linalg import (
    CharPoly,
    MomentTriple,
    Spectrum,
    char_poly_exact,
    cospectral,
    exact_determinant,
    interlacing_check,
    jacobi_eigenvalues,
    moments,
    multiplicity,
    q_matrix,
    spectrum,
    submatrix_lower_bound_check,
    theta,
    verify_trace_identities,
    weighted_submatrix,
)

__version__ = "0.1.0"
