"""Exact gl_n weight systems on horizontal chord diagrams and their positivity."""

from .config import DEFAULT_GUARDS, Guards
from .diagrams import (
    Chord,
    ChordWord,
    all_four_t_generators,
    all_two_t_generators,
    compose,
    DiagramExpr,
    enumerate_words,
    expr_multiply,
    expr_star,
    four_t_generator,
    parse_diagram,
    star,
    tensor_split,
    tensor_split_expr,
    two_t_generator,
)
from .errors import (
    ConsistencyError,
    DimensionError,
    ParseError,
    ResourceError,
    ShapeError,
    ZeroModuleError,
)
from .perms import (
    CyclePoly,
    GroupAlgebraElement,
    Permutation,
    cycle_count,
    evaluate_poly,
    ga_multiply,
    ga_star,
    parse_cycles,
    parse_group_element,
    perm_compose,
    perm_inverse,
    sigma,
    sigma_lin,
    w_st_poly,
)
from .states import (
    GramReport,
    GramSpec,
    PSDResult,
    basis_size,
    gram_matrix,
    psd_check,
    quadratic_form,
    verify_state,
)
from .weights import (
    Labelling,
    WeightValue,
    class_functional,
    parse_labelling,
    pipeline_image,
    tensor_oracle,
    tensor_oracle_std,
    weight,
    weight_poly,
    weight_std,
    weight_std_poly,
)
from .young import (
    Partition,
    RepLabel,
    Tableau,
    canonical_tableau,
    column_stabilizer,
    labelling_symmetriser,
    normalization_constant,
    parse_label,
    parse_partition,
    partitions,
    rep_dimension,
    row_stabilizer,
    small_symmetriser,
    standard_tableaux,
    symmetriser,
    unnormalized_symmetriser,
)

__version__ = "0.1.0"

__all__ = [
    "all_four_t_generators",
    "all_two_t_generators",
    "basis_size",
    "canonical_tableau",
    "Chord",
    "ChordWord",
    "class_functional",
    "column_stabilizer",
    "compose",
    "ConsistencyError",
    "cycle_count",
    "CyclePoly",
    "DEFAULT_GUARDS",
    "DiagramExpr",
    "DimensionError",
    "enumerate_words",
    "evaluate_poly",
    "expr_multiply",
    "expr_star",
    "four_t_generator",
    "ga_multiply",
    "ga_star",
    "gram_matrix",
    "GramReport",
    "GramSpec",
    "GroupAlgebraElement",
    "Guards",
    "Labelling",
    "labelling_symmetriser",
    "normalization_constant",
    "parse_cycles",
    "parse_diagram",
    "parse_group_element",
    "parse_label",
    "parse_labelling",
    "parse_partition",
    "ParseError",
    "Partition",
    "partitions",
    "perm_compose",
    "perm_inverse",
    "Permutation",
    "pipeline_image",
    "psd_check",
    "PSDResult",
    "quadratic_form",
    "rep_dimension",
    "RepLabel",
    "ResourceError",
    "row_stabilizer",
    "ShapeError",
    "sigma",
    "sigma_lin",
    "small_symmetriser",
    "standard_tableaux",
    "star",
    "symmetriser",
    "Tableau",
    "tensor_oracle",
    "tensor_oracle_std",
    "tensor_split",
    "tensor_split_expr",
    "two_t_generator",
    "unnormalized_symmetriser",
    "verify_state",
    "w_st_poly",
    "weight",
    "weight_poly",
    "weight_std",
    "weight_std_poly",
    "WeightValue",
    "ZeroModuleError",
]
