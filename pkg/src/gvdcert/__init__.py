"""Exact computational commutative algebra for geometric vertex decomposition.

The package decides and certifies geometric vertex decomposability of
polynomial ideals, constructs elementary G-biliaison witnesses and glicci
certificate chains, and bridges to vertex decomposition of simplicial
complexes through Stanley-Reisner theory. All arithmetic is exact.
"""

from .fields import GF, QQ, Field, field_inverse
from .poly import (
    MonomialOrder,
    Polynomial,
    VarContext,
    cmp_monomials,
    context,
    initial_form,
    lex_order,
    natural_order,
    var_first_order,
)
from .groebner import (
    GBResult,
    Ideal,
    buchberger,
    colon_and_saturate,
    colon_poly,
    dimension,
    eliminate,
    exact_divide,
    height,
    ideal_equal,
    ideal_member,
    initial_ideal,
    intersect,
    normal_form,
    radical_member,
    saturate_poly,
)

__all__ = [
    "GF",
    "QQ",
    "Field",
    "field_inverse",
    "MonomialOrder",
    "Polynomial",
    "VarContext",
    "cmp_monomials",
    "context",
    "initial_form",
    "lex_order",
    "natural_order",
    "var_first_order",
    "GBResult",
    "Ideal",
    "buchberger",
    "colon_and_saturate",
    "colon_poly",
    "dimension",
    "eliminate",
    "exact_divide",
    "height",
    "ideal_equal",
    "ideal_member",
    "initial_ideal",
    "intersect",
    "normal_form",
    "radical_member",
    "saturate_poly",
]

__version__ = "0.1.0"
