"""Cohen-Macaulay checks, intersection multiplicities and K(p) probes."""

from .checks import chi, cm_translate_check, hochster_probe, is_cohen_macaulay, serre_check

__all__ = ["chi", "cm_translate_check", "hochster_probe", "is_cohen_macaulay", "serre_check"]
