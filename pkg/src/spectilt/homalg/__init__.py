"""Finitely presented graded modules, resolutions, Ext/Tor and numerical invariants."""

from .functors import clear_cache, ext_module, hom_module, tensor_module, tor_module
from .invariants import (
    INFINITE,
    BassTable,
    IsoReport,
    annihilator,
    bass_invariant,
    bass_table,
    betti_numbers,
    depth,
    dim_module,
    graded_betti,
    hilbert_equal,
    iso_proxy,
    kills,
    length,
    rank_over_domain,
    residue_field_module,
    residue_module,
)
from .module import FpModule, direct_sum, prune
from .resolution import (
    AtLeast,
    Complex,
    default_pd_cap,
    free_resolution,
    pd,
    pd_cap,
    syzygy_matrix,
    syzygy_module,
)
from .syz import syzygies

__all__ = [
    "INFINITE", "AtLeast", "BassTable", "Complex", "FpModule", "IsoReport", "annihilator",
    "bass_invariant", "bass_table", "betti_numbers", "clear_cache", "default_pd_cap", "depth",
    "dim_module", "direct_sum", "ext_module", "free_resolution", "graded_betti", "hilbert_equal",
    "hom_module", "iso_proxy", "kills", "length", "pd", "pd_cap", "prune", "rank_over_domain",
    "residue_field_module", "residue_module", "syzygies", "syzygy_matrix", "syzygy_module",
    "tensor_module", "tor_module",
]
