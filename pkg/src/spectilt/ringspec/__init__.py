"""Presented rings, certified primes, windows and window-relative torsion theory."""

from .rings import (
    Prime,
    Ring,
    SpecSeq,
    Window,
    declare_prime,
    minimal_elements,
    polynomial_ring,
    quotient_ring,
    spec_closure,
)
from .torsion import TorsionSplit, ass_in_window, is_divisible, supp_in_window, torsion_part

__all__ = [
    "Prime", "Ring", "SpecSeq", "Window", "declare_prime", "minimal_elements", "polynomial_ring",
    "quotient_ring", "spec_closure", "TorsionSplit", "ass_in_window", "is_divisible",
    "supp_in_window", "torsion_part",
]
