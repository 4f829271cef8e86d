"""Syzygies, the Auslander-Bridger transpose, L(p) and the Ext/Tor functor checks."""

from ..homalg import syzygy_module
from .transpose import (
    GRADE_HYPOTHESIS,
    FunctorCheck,
    TransposeResult,
    functor_iso_check,
    grade_condition,
    lp_module,
    tr_omega,
    transpose,
)

__all__ = [
    "GRADE_HYPOTHESIS", "FunctorCheck", "TransposeResult", "functor_iso_check", "grade_condition",
    "lp_module", "syzygy_module", "tr_omega", "transpose",
]
