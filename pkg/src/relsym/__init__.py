"""Exact Poincare series of relative symmetric invariants for normal pairs
of finite SL2/SL3 subgroups, with the tensor-matrix/affine-Dynkin
correspondence that organizes them."""

from .catalog import GROUP_NAMES, PAIR_NAMES, Pair, get_group, get_pair
from .dynkin import AFFINE_TYPES, AffineType, classify_cartan
from .errors import RelsymError
from .groups import (
    CharTable,
    ClassFunction,
    MatrixGroup,
    character_table,
    exterior_power_character,
    induce_characters,
    natural_character,
    restrict_characters,
    trivial_character,
)
from .poly import IntPoly, PolyMatrix, RatFun, Series, factored_display, series_expand
from .series import (
    SeriesBundle,
    closed_form_cartan_det,
    closed_form_invariants,
    cramer_matrix,
    exponent_product,
    exponent_series,
    group_series,
    molien_ratfun,
    pair_series,
    proportionality_check,
    series_by_determinant,
)
from .tensor import TensorMatrix, group_tensor_matrices, quiver_dot, tensor_matrix

__all__ = [
    "AFFINE_TYPES",
    "AffineType",
    "CharTable",
    "ClassFunction",
    "GROUP_NAMES",
    "IntPoly",
    "MatrixGroup",
    "PAIR_NAMES",
    "Pair",
    "PolyMatrix",
    "RatFun",
    "RelsymError",
    "Series",
    "SeriesBundle",
    "TensorMatrix",
    "character_table",
    "classify_cartan",
    "closed_form_cartan_det",
    "closed_form_invariants",
    "cramer_matrix",
    "exponent_product",
    "exponent_series",
    "exterior_power_character",
    "factored_display",
    "get_group",
    "get_pair",
    "group_series",
    "group_tensor_matrices",
    "induce_characters",
    "molien_ratfun",
    "natural_character",
    "pair_series",
    "proportionality_check",
    "quiver_dot",
    "restrict_characters",
    "series_by_determinant",
    "series_expand",
    "tensor_matrix",
    "trivial_character",
]

__version__ = "1.0.0"
