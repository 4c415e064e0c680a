"""Perfect state transfer in spin networks via stratification and Jacobi chains."""

from .errors import (
    ConvergenceFailure,
    DegenerateSequence,
    DisconnectedGraph,
    InvalidEdge,
    InvalidTarget,
    InvalidWindow,
    ModeMismatch,
    PoleProximity,
    QuotientClosureViolation,
    SpinNetworkError,
)
from .fidelity import (
    FidelityTrace,
    PstCertificate,
    amplitude,
    commensurate_period,
    layer_amplitudes,
    pst_search,
    trace,
)
from .network import (
    SpinNetwork,
    build_binary_tree_modulated,
    build_binary_tree_unweighted,
    build_circulant6,
    build_demo,
    build_engineered_chain,
    build_hypercube_column,
    build_star_extended,
    build_w_network,
    from_edge_list,
    hamiltonian,
)
from .oracle import EigenDecomposition, amplitude_full, evolve, sym_eigen, walk_count
from .spectral import (
    OrthoPolySystem,
    SpectralMeasure,
    eval_assoc_poly,
    eval_poly,
    gauss_measure,
    moments,
    stieltjes_cf,
    stieltjes_pf,
)
from .stratification import (
    JacobiSequences,
    Stratification,
    layer_vectors,
    quotient_matrix,
    reduce,
    stratify,
)

__version__ = "0.1.0"
