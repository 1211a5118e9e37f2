"""Least signless-Laplacian eigenvalue toolkit.

Construct the extremal families (cycle-stem-broom minimizers, pendant-
decorated clique maximizers), compute Q-spectra with an in-repo symmetric
eigensolver cross-checked by an exact characteristic-polynomial oracle,
verify first-eigenvector structure, search graph classes exhaustively at
small order, and evaluate the closed-form bounds.
"""

from .bounds import (
    BoundReport,
    BoundRow,
    bound_lima,
    bound_pendant,
    bound_pendant_general,
    bound_report,
    bound_submatrix,
    compare_bounds,
    soundness_report,
)
from .charpoly import charpoly_coeffs, charpoly_oracle, smallest_real_root
from .errors import (
    CapacityExceededError,
    DegenerateSpectrumError,
    InvalidParameterError,
    NoConvergenceError,
    ParseError,
    QminlabError,
)
from .families import (
    KLandmarks,
    PendantProfile,
    ULandmarks,
    UParams,
    balanced_profile,
    build_K,
    build_U,
    build_U_std,
    majorizes,
)
from .graph6 import decode_graph6, encode_graph6, format_edge_list, parse_edge_list
from .graphs import (
    Graph,
    StructureReport,
    TwoColoring,
    attach_pendants,
    coalesce,
    complete_graph,
    cycle_graph,
    is_isomorphic,
    path_graph,
    structure_report,
)
from .patterns import (
    BranchSpec,
    PatternReport,
    check_bipartite_branch,
    check_tree_monotone,
    check_U_pattern,
    split_branches,
)
from .search import (
    ClassQuery,
    MajorizationScan,
    RelocationResult,
    SearchResult,
    alpha,
    enumerate_class,
    find_extremal,
    interlacing_check,
    majorization_scan,
    relocation_experiment,
)
from .spectra import (
    Spectrum,
    eig_sym,
    q_matrix,
    q_min_of,
    qmin_stack,
    rayleigh,
    residual,
)

__version__ = "0.1.0"
