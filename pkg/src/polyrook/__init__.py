"""Polyomino ideals: initial-ideal complexes, shelling-based h-vectors, and
switching rook polynomials, with exhaustive verification of the theorems
relating them on frame polyominoes and small polyomino families."""

from .errors import PolyrookError
from .families import (
    FrameDecomposition,
    FrameSpec,
    MaximalChain,
    NorthEastPath,
    build_frame,
    build_parallelogram,
    decompose_frame,
    lies_above,
    maximal_chains,
    rectangle,
)
from .grid import (
    EdgeInterval,
    GridInterval,
    Polyomino,
    build_polyomino,
    classify_simplicity,
    inner_intervals,
    lower_right_cell,
    maximal_edge_intervals,
    vertex_exceeds,
)
from .ideal import (
    InnerMinor,
    Monomial,
    generators,
    h_from_hilbert,
    hilbert_function,
    is_groebner,
    krull_dimension_frame,
    leading_monomial,
)
from .polynomial import IntPolynomial
from .rooks import (
    AttackPolicy,
    RookConfig,
    SwitchMove,
    apply_switch,
    canonical_representatives,
    is_canonical,
    rook_configs,
    rook_polynomial,
    rooks_attack,
    switching_classes,
    switching_moves,
    switching_rook_polynomial,
)
from .simplicial import (
    AttackGraph,
    Facet,
    ShellingReport,
    Step,
    attack_graph,
    f_vector,
    facet_precedes,
    facets,
    h_from_f,
    h_from_steps,
    shelling_verify,
    steps_of,
)
from .correspondence import (
    PsiTrace,
    TheoremReport,
    psi,
    verify_bijection,
    verify_main_theorem,
)
from .explorer import (
    ExplorationRecord,
    conjecture_sweep,
    enumerate_fixed_polyominoes,
    enumerate_small_frames,
)

__version__ = "0.1.0"
