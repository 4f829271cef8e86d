"""Numerical invariants: generic ranks, Bass numbers, depth, dimension, length."""

import math
from dataclasses import dataclass, field

from ..errors import InputError, InvariantError
from ..polycore import Ideal, Poly, intersect
from ..polycore.groebner import add_vec
from .functors import ext_module
from .module import FpModule, poly_at, prune, vec_entries
from .resolution import free_resolution
from .syz import kernel_of_map

INFINITE = math.inf


def residue_module(prime_or_ideal):
    """R/p as a cyclic module (accepts a Prime or an Ideal of the ambient ring)."""
    ideal = getattr(prime_or_ideal, "ideal", prime_or_ideal)
    ring = getattr(prime_or_ideal, "ring", None)
    if ring is None:
        raise InputError("residue_module needs a Prime")
    gens = [g for g in ideal.gb if not ring.I.contains(g)]
    return FpModule.quotient(ring, gens)


def residue_field_module(ring):
    """k = R/m for the irrelevant graded maximal ideal."""
    return FpModule.quotient(ring, ring.A.gens())


def annihilator(M):
    """ann(M) as an ideal of the ambient ring containing I."""
    ring = M.ring
    A = ring.A
    if M.is_zero():
        return Ideal(A, [A.one])
    zero_exp = (0,) * ring.nvars
    result = None
    for j, dj in enumerate(M.degrees):
        ker = kernel_of_map(ring, [dj], [{(j,) + zero_exp: ring.field.one}], M.degrees, M.relations)
        polys = [Poly(A, {t[1:]: c for t, c in v.items()}) for v in ker]
        Jj = Ideal(A, polys + list(ring.I.gb))
        result = Jj if result is None else intersect(result, Jj)
    return result


def kills(ideal_gens, M):
    """Does every generator annihilate M?"""
    for g in ideal_gens:
        for j in range(M.ngens):
            if not M.contains_relation(poly_at(g, j)):
                return False
    return True


def _fraction_free_rank(rows, ncols, reduce, F):
    """Rank of a matrix over the domain A/p; entries are term dicts reduced by ``reduce``."""
    rows = [r for r in (dict((c, e) for c, e in row.items() if e) for row in rows) if r]
    rank = 0
    used = set()
    while rows:
        piv_row = None
        for idx, r in enumerate(rows):
            cols = [c for c in r if c not in used]
            if cols:
                piv_row = idx
                break
        if piv_row is None:
            break
        prow = rows.pop(piv_row)
        col = min(c for c in prow if c not in used)
        piv = prow[col]
        used.add(col)
        rank += 1
        new_rows = []
        for r in rows:
            a = r.get(col)
            if a:
                nr = {}
                for c in set(r) | set(prow):
                    v = add_vec(F, _pmul(F, piv, r.get(c, {})), _pmul(F, a, prow.get(c, {})), F.neg(F.one))
                    v = reduce(v)
                    if v:
                        nr[c] = v
                r = nr
            if r:
                new_rows.append(r)
        rows = new_rows
    return rank


def _pmul(F, a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = F.add(out.get(e, F.zero), F.mul(ca, cb))
    return {e: c for e, c in out.items() if c != F.zero}


def rank_over_domain(N, prime):
    """dim over k(p) of N_p for an R/p-module N; the generic rank over R/p."""
    ring = N.ring
    if N.ring != prime.ring:
        raise InputError("module and prime live over different rings")
    pgens = [g for g in prime.ideal.gb if not ring.I.contains(g)]
    if not kills(pgens, N):
        raise InputError(f"prime {prime.name} does not annihilate the module", code="homalg.not_killed")
    P = prune(N)
    g = P.ngens
    if g == 0:
        return 0
    pres = prime.ideal.gb_result

    def reduce(terms):
        r = pres.reduce({(0,) + e: c for e, c in terms.items()})
        return {t[1:]: c for t, c in r.items()}

    rows = []
    for v in P.relations:
        rows.append({pos: reduce(terms) for pos, terms in vec_entries(v).items()})
    return g - _fraction_free_rank(rows, g, reduce, ring.field)


def bass_invariant(i, prime, M):
    """mu_i(p, M) = rank over R/p of Ext^i(R/p, M)."""
    if i < 0:
        return 0
    if M.is_zero():
        return 0
    E = ext_module(i, residue_module(prime), M)
    return rank_over_domain(E, prime)


@dataclass
class BassTable:
    prime: object
    values: list
    caveats: list = field(default_factory=list)

    def to_dict(self):
        return {"prime": self.prime.name, "mu": list(self.values), "caveats": list(self.caveats)}


def bass_table(prime, M, max_index):
    vals = [bass_invariant(i, prime, M) for i in range(max_index + 1)]
    if any(v < 0 for v in vals):
        raise InvariantError("negative Bass number")
    caveats = []
    if prime.asserted:
        caveats.append("primality asserted")
    return BassTable(prime, vals, caveats)


def depth(M):
    """Depth with respect to the irrelevant graded maximal ideal."""
    if M.is_zero():
        raise InputError("depth of the zero module is undefined", code="homalg.zero_module")
    k = residue_field_module(M.ring)
    top = M.krull_dim()
    for i in range(top + 1):
        if not ext_module(i, k, M).is_zero():
            return i
    raise InvariantError(f"no nonvanishing Ext^i(k, M) for i <= dim M = {top}")


def dim_module(M):
    return M.krull_dim()


def length(M):
    """Total k-dimension when dim M <= 0, else INFINITE."""
    n = M.total_length()
    return INFINITE if n is None else n


def betti_numbers(M, cap=None):
    C = free_resolution(M, cap)
    return C.ranks()


def graded_betti(M, cap=None):
    return free_resolution(M, cap).betti_table()


# ---------------------------------------------------------------------------
# isomorphism proxy
# ---------------------------------------------------------------------------

@dataclass
class IsoReport:
    equal: bool
    shift: int
    betti_equal: bool
    hilbert_equal: bool
    degree_range: tuple
    detail: str = ""

    def to_dict(self):
        return {
            "equal": self.equal,
            "shift": self.shift,
            "betti_equal": self.betti_equal,
            "hilbert_equal": self.hilbert_equal,
            "degree_range": list(self.degree_range),
            "detail": self.detail,
            "kind": "Betti/Hilbert-equal" if self.equal else "Betti/Hilbert-different",
        }


def _betti_shifted(table, s):
    return {(i, d + s): v for (i, d), v in table.items()}


def iso_proxy(M, N, degree_bound=None, allow_shift=False, cap=None):
    """Compare graded Betti tables and Hilbert functions (optionally up to a uniform degree shift)."""
    Mp, Np = prune(M), prune(N)
    if Mp.is_zero() or Np.is_zero():
        eq = Mp.is_zero() and Np.is_zero()
        return IsoReport(eq, 0, eq, eq, (0, 0), "" if eq else "exactly one module is zero")
    s = 0
    if allow_shift:
        s = min(Np.degrees) - min(Mp.degrees)
    CM = free_resolution(Mp, cap)
    CN = free_resolution(Np, cap)
    L = min(CM.length, CN.length)
    bm = {k: v for k, v in _betti_shifted(CM.betti_table(), s).items() if k[0] <= L}
    bn = {k: v for k, v in CN.betti_table().items() if k[0] <= L}
    betti_eq = bm == bn and CM.complete == CN.complete
    lo = min(min(Mp.degrees) + s, min(Np.degrees))
    if degree_bound is None:
        degree_bound = max(Mp.max_presentation_degree() + s, Np.max_presentation_degree()) + 6
    hil_eq = all(Mp.hilbert_function(d - s) == Np.hilbert_function(d) for d in range(lo, degree_bound + 1))
    detail = []
    if not betti_eq:
        detail.append("graded Betti tables differ")
    if not hil_eq:
        detail.append("Hilbert functions differ")
    return IsoReport(betti_eq and hil_eq, s, betti_eq, hil_eq, (lo, degree_bound), "; ".join(detail))


def hilbert_equal(M, N, lo, hi):
    """Degreewise equality of Hilbert functions on [lo, hi]; returns the first mismatch or None."""
    for d in range(lo, hi + 1):
        a, b = M.hilbert_function(d), N.hilbert_function(d)
        if a != b:
            return (d, a, b)
    return None


__all__ = [
    "INFINITE", "BassTable", "IsoReport", "annihilator", "bass_invariant", "bass_table",
    "betti_numbers", "depth", "dim_module", "graded_betti", "hilbert_equal", "iso_proxy",
    "kills", "length", "rank_over_domain", "residue_field_module", "residue_module",
]
