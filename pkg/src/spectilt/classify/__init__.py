"""Descending sequences of specialization-closed sets and class membership."""

from .membership import (
    COTILTING_METHODS,
    TILTING_METHODS,
    MembershipVerdict,
    clear_cache,
    cotilting_membership,
    find_separator,
    membership_all,
    resolving_generators,
    same_class_check,
    shift_check,
    tilting_membership,
)
from .sequences import ClassEnumeration, SequenceReport, allowed_sets, enumerate_sequences, validate_sequence

__all__ = [
    "COTILTING_METHODS", "TILTING_METHODS", "ClassEnumeration", "MembershipVerdict", "SequenceReport",
    "allowed_sets", "clear_cache", "cotilting_membership", "enumerate_sequences", "find_separator",
    "membership_all", "resolving_generators", "same_class_check", "shift_check", "tilting_membership",
    "validate_sequence",
]
