"""nilrig: exact-arithmetic workbench for deformation cohomology and
rigidity of nilpotent structure-constant Lie algebras."""

from .exactlin import (
    Q,
    RationalMatrix,
    RowReducer,
    TruncatedSeries,
    kernel_basis,
    matrix_rank,
    parse_rational,
    rref,
    series_add,
    series_compose,
    series_mul,
)
from .liealg import (
    CharSeq,
    LieAlgebra,
    SubspaceChain,
    abelian,
    ad_matrix,
    basis_change,
    bracket,
    center_dim,
    characteristic_sequence,
    derivation_algebra_dim,
    derived_dim,
    direct_sum,
    is_lie,
    is_p_step,
    jacobi_defect,
    jordan_partition,
    lower_central_series,
    nilindex,
    three_step_defect,
    two_step_defect,
)
from .cohom import (
    Cochain,
    CohomologyReport,
    ComplexKind,
    DeformationCheck,
    MultiMap,
    PermCombination,
    bullet_square,
    ch_delta2,
    ch_delta_general,
    check_linear_deformation_2step,
    check_linear_deformation_3step,
    chevalley_delta1,
    chevalley_delta2,
    comp1,
    deformed_bracket,
    is_attached,
    jordan_cocycle_defect,
    jordan_linearized_defect,
    r_delta2,
    r_delta3,
    space_dims,
)
from .families import (
    CocycleTemplate,
    FamilyParams,
    classification_F731,
    cocycle_space_dim_221,
    deformed_2step,
    g_k3k2k1,
    g_p01,
    g_p1,
    g_p12,
    heisenberg,
    normalized_cocycle_template,
    rigid_2step,
    rigid_3step_7,
)
from .operads import (
    DimSequence,
    count_commutative_binary_trees,
    dual_dims_2nilp,
    gen_function,
    koszul_check,
    static_dims_table,
    two_nilp_dims,
)

__version__ = "0.1.0"
