"""Exact-arithmetic toolkit for self-dual additive codes over Z2 x Z4."""

from .classify import (
    AdmissibilityQuery,
    SelfDualClass,
    StructureReport,
    admissible,
    check_structure_relations,
    classify,
    gray_image_linear,
)
from .codes import (
    AdditiveCode,
    GeneratorMatrix,
    TypeParams,
    even_weight_subcode,
    is_antipodal,
    is_separable,
    order_two_subcode,
    puncture_X,
    puncture_Y,
    span,
    type_params,
    x_kernel_dimension,
)
from .construct import (
    CATALOG_NAMES,
    CatalogEntry,
    catalog,
    direct_product,
    find_neighbor_vector,
    ladder_build,
    neighbor,
)
from .duality import (
    DualityReport,
    brute_force_dual,
    dual,
    dual_type,
    duality_report,
    is_self_dual,
    is_self_orthogonal,
)
from .enumerators import (
    GleasonDecomposition,
    WeightEnumerator,
    even_subcode_we,
    format_coefficients,
    format_enumerator,
    format_gleason,
    gleason_decompose,
    macwilliams,
    ring_generators,
    shadow_we,
    weight_enumerator,
)
from .errors import (
    GuardExceeded,
    InconsistentEnumerator,
    NotInRing,
    ParseError,
    PreconditionError,
    ShapeMismatch,
    Z2Z4Error,
)
from .fileio import format_generator_matrix, parse_generator_matrix
from .search import SearchResult, search_self_dual
from .shadow import (
    GlueResult,
    ShadowDecomposition,
    decompose,
    glue,
    glue_vector_neighbors,
    orthogonality_table,
    shadow,
)
from .vectors import (
    AmbientParams,
    MixedVector,
    binary_inner,
    gray_map,
    inner_product,
    p_count,
    quaternary_inner,
    weight,
)

__version__ = "1.0.0"

__all__ = [
    "AdditiveCode",
    "AdmissibilityQuery",
    "AmbientParams",
    "CATALOG_NAMES",
    "CatalogEntry",
    "DualityReport",
    "GeneratorMatrix",
    "GleasonDecomposition",
    "GlueResult",
    "GuardExceeded",
    "InconsistentEnumerator",
    "MixedVector",
    "NotInRing",
    "ParseError",
    "PreconditionError",
    "SearchResult",
    "SelfDualClass",
    "ShadowDecomposition",
    "ShapeMismatch",
    "StructureReport",
    "TypeParams",
    "WeightEnumerator",
    "Z2Z4Error",
    "admissible",
    "binary_inner",
    "brute_force_dual",
    "catalog",
    "check_structure_relations",
    "classify",
    "decompose",
    "direct_product",
    "dual",
    "dual_type",
    "duality_report",
    "even_subcode_we",
    "even_weight_subcode",
    "find_neighbor_vector",
    "format_coefficients",
    "format_enumerator",
    "format_generator_matrix",
    "format_gleason",
    "gleason_decompose",
    "glue",
    "glue_vector_neighbors",
    "gray_image_linear",
    "gray_map",
    "inner_product",
    "is_antipodal",
    "is_self_dual",
    "is_self_orthogonal",
    "is_separable",
    "ladder_build",
    "macwilliams",
    "neighbor",
    "order_two_subcode",
    "orthogonality_table",
    "p_count",
    "parse_generator_matrix",
    "puncture_X",
    "puncture_Y",
    "quaternary_inner",
    "ring_generators",
    "search_self_dual",
    "shadow",
    "shadow_we",
    "span",
    "type_params",
    "weight",
    "weight_enumerator",
    "x_kernel_dimension",
]
