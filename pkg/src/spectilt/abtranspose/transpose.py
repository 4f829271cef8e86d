"""Syzygy modules, the Auslander-Bridger transpose and the modules L(p)."""

from dataclasses import dataclass, field

from ..errors import HypothesisError, InputError, InvariantError
from ..homalg import (
    FpModule,
    ext_module,
    hilbert_equal,
    pd,
    prune,
    residue_module,
    syzygy_module,
    tor_module,
)

GRADE_HYPOTHESIS = "Ext^i_R(U, R) = 0 for i = 0..n (grade condition on U)"


@dataclass
class TransposeResult:
    module: FpModule
    minimality: str
    source: FpModule

    def to_dict(self):
        return {
            "module": self.module.to_dict(),
            "minimality": self.minimality,
            "source_presentation": self.source.to_dict(),
        }


def transpose(M):
    """coker of the dual of the (minimal) presentation P_1 -> P_0 of M."""
    ring = M.ring
    P = prune(M) if M.graded else M
    rows = P.relations
    r = len(rows)
    if r == 0:
        return TransposeResult(FpModule.zero(ring), _minimality(P), P)
    rdeg = P.relation_degrees()
    # basis e_j of P_0^* maps to sum_k D[k][j] e_k^* in P_1^*
    dual = [dict() for _ in range(P.ngens)]
    for k, v in enumerate(rows):
        for t, c in v.items():
            dual[t[0]][(k,) + t[1:]] = c
    T = FpModule(ring, [-d for d in rdeg], [d for d in dual if d], graded=P.graded, check=False)
    if P.graded:
        T = prune(T)
    return TransposeResult(T, _minimality(P), P)


def _minimality(P):
    return "canonical" if P.graded else "up-to-projectives"


def grade_condition(U, n):
    """First i in 0..n with Ext^i(U, R) != 0, or None when the grade condition holds."""
    Rfree = FpModule.free(U.ring)
    for i in range(n + 1):
        if not ext_module(i, U, Rfree).is_zero():
            return i
    return None


def tr_omega(U, n):
    """Tr(Omega^n U)."""
    return transpose(syzygy_module(U, n)).module


def lp_module(prime, check=True):
    """L(p) = Tr(Omega^{ht p - 1}(R/p)), with the grade condition and pd = ht p checked."""
    h = prime.height
    ring = prime.ring
    if h < 1:
        raise HypothesisError(f"L(p) needs ht p >= 1; {prime.name} has height {h}",
                              hypothesis="ht p >= 1")
    U = residue_module(prime)
    if not ring.gorenstein_asserted:
        bad = grade_condition(U, h - 1)
        if bad is not None:
            raise HypothesisError(
                f"grade condition fails for R/{prime.name}: Ext^{bad}(R/p, R) != 0 with "
                f"{bad} < ht p = {h}",
                hypothesis=GRADE_HYPOTHESIS)
    L = tr_omega(U, h - 1)
    if check:
        p = pd(L)
        if p != h:
            raise InvariantError(f"pd L({prime.name}) = {p} but ht = {h}")
    return L


@dataclass
class FunctorCheck:
    n: int
    rows: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r["ext_tor1_equal"] and r["ext1_torn_equal"] for r in self.rows)

    def to_dict(self):
        return {"n": self.n, "ok": self.ok, "rows": self.rows}


def _range(*mods, extra=6):
    nz = [m for m in mods if m.ngens]
    if not nz:
        return 0, -1
    lo = min(min(m.degrees) for m in nz)
    hi = max(m.max_presentation_degree() for m in nz) + extra
    return lo, hi


def functor_iso_check(U, n, suite, names=None, degree_bound=None):
    """Compare Ext^n(U,-) with Tor_1(Tr Omega^n U,-) and Ext^1(Tr Omega^n U,-) with Tor_n(-,U)."""
    if n < 0:
        raise InputError("n must be >= 0")
    bad = grade_condition(U, n)
    if bad is not None:
        raise HypothesisError(f"Ext^{bad}(U, R) != 0 with {bad} <= n = {n}", hypothesis=GRADE_HYPOTHESIS)
    T = tr_omega(U, n)
    rep = FunctorCheck(n)
    for idx, M in enumerate(suite):
        a = ext_module(n, U, M)
        b = tor_module(1, T, M)
        c = ext_module(1, T, M)
        d = tor_module(n, M, U)
        lo1, hi1 = _range(a, b)
        lo2, hi2 = _range(c, d)
        if degree_bound is not None:
            hi1 = hi2 = degree_bound
        m1 = _compare(a, b, lo1, hi1)
        m2 = _compare(c, d, lo2, hi2)
        rep.rows.append({
            "module": names[idx] if names else idx,
            "ext_tor1_equal": m1 is None,
            "ext1_torn_equal": m2 is None,
            "mismatch": [x for x in (m1, m2) if x is not None],
            "degree_ranges": [[lo1, hi1], [lo2, hi2]],
        })
    return rep


def _compare(a, b, lo, hi):
    if a.is_zero() or b.is_zero():
        if a.is_zero() == b.is_zero():
            return None
        return {"degree": None, "left": "zero" if a.is_zero() else "nonzero",
                "right": "zero" if b.is_zero() else "nonzero"}
    if a.krull_dim() != b.krull_dim():
        return {"degree": None, "left": f"dim {a.krull_dim()}", "right": f"dim {b.krull_dim()}"}
    hit = hilbert_equal(a, b, lo, hi)
    if hit is None:
        return None
    return {"degree": hit[0], "left": hit[1], "right": hit[2]}
