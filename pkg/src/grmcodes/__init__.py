"""Generalised Reed-Muller cyclic codes, their relatives, and exact analysis tools."""

from .codes import (
    CyclicCode,
    ExtendedCode,
    bch,
    complement,
    dual,
    extend,
    from_defining_set,
    generator_matrix,
    grm,
    is_lcd,
    is_reversible,
    is_subcode,
    pgrm,
    reversible_grm,
)
from .field import FieldTable, field_create, subfield_embed
from .polynomial import Polynomial, factor_xn_minus_1, minimal_polynomial, reciprocal

__all__ = [
    "CyclicCode",
    "ExtendedCode",
    "FieldTable",
    "Polynomial",
    "bch",
    "complement",
    "dual",
    "extend",
    "factor_xn_minus_1",
    "field_create",
    "from_defining_set",
    "generator_matrix",
    "grm",
    "is_lcd",
    "is_reversible",
    "is_subcode",
    "minimal_polynomial",
    "pgrm",
    "reciprocal",
    "reversible_grm",
    "subfield_embed",
]
