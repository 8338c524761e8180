"""Partial orders on complex matrices and what they buy you.

The package decides the minus, star, sharp, core and related orders on
pairs of complex matrices, produces the projection witnesses behind each
decision, and uses those witnesses constructively: pseudoinverses of sums,
reflexive inverses of sums with prescribed range and kernel, additivity of
group / core / Moore-Penrose inverses, and decoupling of joint least
squares problems.
"""

from .additivity import (
    DisjointRangeAdditivity,
    KernelCharacterization,
    disjoint_range_additivity,
    is_range_additive,
    kernel_characterization,
)
from .exceptions import (
    ComplementError,
    GroupInvertibilityError,
    MembershipError,
    MinusordError,
    OrderConditionError,
    VerificationError,
)
from .generate import (
    MAX_CONDITION,
    PAIR_KINDS,
    as_rng,
    core_pair,
    minus_chain,
    minus_pair,
    pair_generator,
    sharp_pair,
    star_pair,
)
from .geninv import (
    core_inverse,
    group_inverse,
    is_group_invertible,
    pinv,
    reflexive_inverse,
)
from .linalg import (
    DEFAULT_TOLERANCE,
    ToleranceConfig,
    numerical_rank,
    range_contains,
    singular_values,
)
from .lsq import DecoupledLeastSquares, Weight, decoupled_lss, solve_system, wlss_solve
from .mmio import (
    format_matrix,
    parse_matrix,
    read_matrix,
    read_vector,
    write_matrix,
    write_vector,
)
from .orders import (
    ORDER_NAMES,
    OrderReport,
    RankData,
    core_order,
    inner_inverse_witness,
    left_minus_order,
    left_star_order,
    minus_order,
    order_predicate,
    right_minus_order,
    right_star_order,
    sharp_order,
    star_order,
    weak_minus_order,
)
from .reporting import canonical_json, matrix_payload, order_report_payload
from .subspaces import (
    AngleEquivalences,
    Projection,
    Subspace,
    angle_equivalences,
    intersect,
    is_direct_sum,
    minimal_angle_cos,
    null_basis,
    oblique_projection,
    ominus,
    orthogonal_projection,
    range_basis,
    subspace_equal,
    subspace_sum,
)
from .sums import (
    INVERSE_KINDS,
    AgreeingSplit,
    SplitWitness,
    agreeing_split,
    build_split,
    fill_fishkind_pinv,
    ordered_inverse_additivity,
    st_projections,
    sum_reflexive_inverse,
    werner_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # exceptions
    "MinusordError", "ComplementError", "GroupInvertibilityError",
    "MembershipError", "OrderConditionError", "VerificationError",
    # numerics
    "ToleranceConfig", "DEFAULT_TOLERANCE", "numerical_rank",
    "singular_values", "range_contains",
    # subspaces
    "Subspace", "Projection", "range_basis", "null_basis", "subspace_sum",
    "intersect", "ominus", "is_direct_sum", "subspace_equal",
    "minimal_angle_cos", "AngleEquivalences", "angle_equivalences",
    "orthogonal_projection", "oblique_projection",
    # range additivity
    "is_range_additive", "DisjointRangeAdditivity",
    "disjoint_range_additivity", "KernelCharacterization",
    "kernel_characterization",
    # orders
    "ORDER_NAMES", "OrderReport", "RankData", "minus_order",
    "left_minus_order", "right_minus_order", "star_order",
    "left_star_order", "right_star_order", "sharp_order", "core_order",
    "weak_minus_order", "order_predicate", "inner_inverse_witness",
    # generalized inverses
    "pinv", "reflexive_inverse", "is_group_invertible", "group_inverse",
    "core_inverse",
    # sums
    "SplitWitness", "build_split", "fill_fishkind_pinv", "st_projections",
    "AgreeingSplit", "agreeing_split", "sum_reflexive_inverse",
    "werner_decomposition", "ordered_inverse_additivity", "INVERSE_KINDS",
    # least squares
    "Weight", "solve_system", "wlss_solve", "DecoupledLeastSquares",
    "decoupled_lss",
    # generators
    "PAIR_KINDS", "MAX_CONDITION", "as_rng", "minus_pair", "star_pair",
    "sharp_pair", "core_pair", "minus_chain", "pair_generator",
    # io / reporting
    "read_matrix", "write_matrix", "read_vector", "write_vector",
    "parse_matrix", "format_matrix", "canonical_json", "matrix_payload",
    "order_report_payload",
]
