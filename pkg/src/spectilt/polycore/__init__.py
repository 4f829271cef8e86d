"""Exact coefficients, polynomials, Gröbner bases and ideal operations."""

from .field import QQ, PrimeField, RationalField, field_from_name
from .groebner import ModuleOrder, groebner
from .ideal import (
    Ideal,
    divide_exact,
    groebner_basis,
    ideal_membership,
    ideal_quotient,
    ideal_quotient_ideal,
    intersect,
    krull_dim,
    normal_form,
    saturation,
)
from .monomial import DEGREVLEX, LEX, MonomialOrder
from .poly import Poly, PolyRing, format_poly, parse_poly, poly_ring

__all__ = [
    "QQ", "PrimeField", "RationalField", "field_from_name", "ModuleOrder", "groebner",
    "Ideal", "divide_exact", "groebner_basis", "ideal_membership", "ideal_quotient",
    "ideal_quotient_ideal", "intersect", "krull_dim", "normal_form", "saturation",
    "DEGREVLEX", "LEX", "MonomialOrder", "Poly", "PolyRing", "format_poly", "parse_poly",
    "poly_ring",
]
