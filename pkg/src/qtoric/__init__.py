"""Toric-geometry analysis of multi-qubit pure states.

Moment maps on projective space and products of projective lines, lattice
polytopes with Delzant checks and normal fans, the Segre binomial relations
as a separability certificate, and the standard small-system entanglement
invariants (concurrence, three-tangle, m-tangle, four-qubit H and I1 with an
independent epsilon-contraction four-tangle).
"""

from .analyzer import AnalysisReport, DEFAULT_TOLERANCE, analyze, extract_factors
from .errors import (
    DegenerateIntervalError,
    DimensionMismatchError,
    EmptyFactorListError,
    IndexOutOfRangeError,
    LengthMismatchError,
    NonFiniteAmplitudeError,
    OddQubitCountError,
    QToricError,
    RedundantVertexError,
    SchemaError,
    UnknownNameError,
    UnsupportedPolytopeError,
    WrongQubitCountError,
    ZeroStateError,
)
from .measures import (
    FourQubitVectors,
    G,
    J,
    Tau4IdentityReport,
    bilinear_g,
    check_tau4_identities,
    concurrence,
    four_qubit_vectors,
    invariant_H,
    invariant_I1,
    m_tangle,
    spin_flip,
    tau4_epsilon_oracle,
    three_tangle,
)
from .moment import (
    BoxPolytope,
    fixed_point_images,
    in_polytope,
    moment_product,
    moment_projective,
    s1_moment_disk,
)
from .states import (
    MultiQubitState,
    ProjectivePoint,
    QubitFactor,
    bits_to_index,
    conjugate_state,
    index_bits,
    inner_product,
    make_state,
    named_state,
    point_from_dict,
    point_to_dict,
    segre_embed,
    state_from_dict,
    state_to_dict,
)
from .toric import (
    BinomialRelation,
    Cone,
    DelzantFailure,
    DelzantVerdict,
    ExponentSet,
    Fan,
    LatticePolytope,
    cube,
    delzant_check,
    lattice_points,
    max_segre_residual,
    normal_fan_box,
    relation_residual,
    segre_relations,
    unit_cube_exponents,
    verify_beta_balance,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # states
    "MultiQubitState",
    "QubitFactor",
    "ProjectivePoint",
    "make_state",
    "conjugate_state",
    "segre_embed",
    "inner_product",
    "named_state",
    "index_bits",
    "bits_to_index",
    "state_to_dict",
    "state_from_dict",
    "point_to_dict",
    "point_from_dict",
    # moment
    "BoxPolytope",
    "moment_projective",
    "moment_product",
    "fixed_point_images",
    "s1_moment_disk",
    "in_polytope",
    # toric
    "LatticePolytope",
    "ExponentSet",
    "BinomialRelation",
    "Cone",
    "Fan",
    "DelzantFailure",
    "DelzantVerdict",
    "cube",
    "lattice_points",
    "unit_cube_exponents",
    "delzant_check",
    "normal_fan_box",
    "segre_relations",
    "relation_residual",
    "max_segre_residual",
    "verify_beta_balance",
    # measures
    "J",
    "G",
    "FourQubitVectors",
    "Tau4IdentityReport",
    "spin_flip",
    "concurrence",
    "m_tangle",
    "three_tangle",
    "invariant_H",
    "bilinear_g",
    "invariant_I1",
    "four_qubit_vectors",
    "tau4_epsilon_oracle",
    "check_tau4_identities",
    # analyzer
    "AnalysisReport",
    "DEFAULT_TOLERANCE",
    "analyze",
    "extract_factors",
    # errors
    "QToricError",
    "LengthMismatchError",
    "ZeroStateError",
    "NonFiniteAmplitudeError",
    "DimensionMismatchError",
    "EmptyFactorListError",
    "UnknownNameError",
    "WrongQubitCountError",
    "OddQubitCountError",
    "UnsupportedPolytopeError",
    "RedundantVertexError",
    "DegenerateIntervalError",
    "IndexOutOfRangeError",
    "SchemaError",
]
