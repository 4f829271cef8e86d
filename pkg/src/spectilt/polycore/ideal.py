"""Ideals of k[x_1..x_m]: reduced Gröbner bases and ideal-level operations."""

import threading

from ..errors import BudgetError, InputError
from . import _kernels
from .groebner import ModuleOrder, check_same_field, groebner, lead_term
from .monomial import elimination_order
from .poly import Poly, PolyRing


def poly_to_vec(p, pos=0):
    return {(pos,) + e: c for e, c in p.terms.items()}


def vec_to_poly(ring, vec):
    return Poly(ring, {t[1:]: c for t, c in vec.items()})


def _gb(ring, polys, order):
    mo = ModuleOrder(order)
    res = groebner(ring.field, ring.nvars, [poly_to_vec(p) for p in polys if p], mo)
    return res


def groebner_basis(gens, order=None):
    """Reduced Gröbner basis of the ideal generated by gens (monic, sorted ascending).

    The zero ideal has the empty basis; the unit ideal gives [1].
    """
    gens = list(gens)
    if not gens:
        return []
    check_same_field(gens)
    ring = gens[0].ring
    order = order or ring.order
    res = _gb(ring, gens, order)
    return [vec_to_poly(ring, v) for v in res.basis]


def normal_form(f, G, order=None):
    """Remainder of f on division by the reduced Gröbner basis G."""
    if f.is_zero() or not G:
        return f
    check_same_field([f] + list(G))
    ring = f.ring
    order = order or ring.order
    mo = ModuleOrder(order)
    from .groebner import GroebnerResult
    res = GroebnerResult(ring.field, mo, [poly_to_vec(g) for g in G], [], ring.nvars)
    return vec_to_poly(ring, res.reduce(poly_to_vec(f)))


class Ideal:
    """Ideal with a write-once cached reduced Gröbner basis."""

    def __init__(self, ring, gens, order=None):
        if not isinstance(ring, PolyRing):
            raise InputError("Ideal needs a PolyRing")
        self.ring = ring
        self.order = order or ring.order
        self.generators = tuple(ring(g) for g in gens)
        self._gb = None
        self._res = None
        self._lock = threading.Lock()

    @classmethod
    def from_strings(cls, ring, texts, order=None):
        return cls(ring, [ring(t) for t in texts], order)

    def _compute(self):
        if self._res is None:
            with self._lock:
                if self._res is None:
                    res = _gb(self.ring, self.generators, self.order)
                    self._gb = tuple(vec_to_poly(self.ring, v) for v in res.basis)
                    self._res = res
        return self._res

    @property
    def gb(self):
        self._compute()
        return self._gb

    @property
    def gb_result(self):
        return self._compute()

    def normal_form(self, f):
        f = self.ring(f)
        if f.is_zero():
            return f
        return vec_to_poly(self.ring, self._compute().reduce(poly_to_vec(f)))

    def contains(self, f):
        return self.normal_form(f).is_zero()

    __contains__ = contains

    def is_zero(self):
        return len(self.gb) == 0

    def is_unit(self):
        gb = self.gb
        return len(gb) == 1 and gb[0].is_constant()

    def issubset(self, other):
        return all(other.contains(g) for g in self.generators)

    def __le__(self, other):
        return self.issubset(other)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.order == other.order:
            return self.gb == other.gb
        return self.issubset(other) and other.issubset(self)

    def __hash__(self):
        return hash(self.gb)

    def __add__(self, other):
        return Ideal(self.ring, self.generators + other.generators, self.order)

    def __mul__(self, other):
        return Ideal(self.ring, [a * b for a in self.generators for b in other.generators], self.order)

    def lead_monomials(self):
        res = self._compute()
        return [lt[1:] for lt in res.leads]

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.gb)

    def is_monomial(self):
        return all(len(g) == 1 for g in self.gb)

    def krull_dim(self):
        return krull_dim(self)

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.generators) + ")"

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def ideal_membership(f, I):
    return I.contains(f)


def krull_dim(I):
    """dim k[x]/I from the leading-term ideal; the unit ideal gives -1."""
    if I.is_unit():
        return -1
    leads = I.lead_monomials()
    masks = _kernels.support_masks(leads)
    return _kernels.max_independent(masks, I.ring.nvars)


def _extended_ring(ring, extra=("_t",)):
    return PolyRing(ring.field, tuple(extra) + ring.variables, elimination_order(len(extra)))


def intersect(I, J):
    """I ∩ J by eliminating t from t*I + (1-t)*J."""
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [], I.order)
    S = _extended_ring(ring)
    t = S.var("_t")

    def lift(p):
        return Poly(S, {(0,) + e: c for e, c in p.terms.items()})

    gens = [t * lift(g) for g in I.generators] + [(S.one - t) * lift(g) for g in J.generators]
    G = groebner_basis(gens, S.order)
    out = []
    for g in G:
        if all(e[0] == 0 for e in g.terms):
            out.append(Poly(ring, {e[1:]: c for e, c in g.terms.items()}))
    return Ideal(ring, out, I.order)


def divide_exact(g, f):
    """g / f, raising if f does not divide g."""
    ring = g.ring
    order = ring.order
    q = ring.zero
    r = g
    lf = f.lead_monomial(order)
    cf = f.terms[lf]
    F = ring.field
    while not r.is_zero():
        lr = r.lead_monomial(order)
        if not all(a >= b for a, b in zip(lr, lf)):
            raise InputError(f"{f} does not divide {g}")
        m = tuple(a - b for a, b in zip(lr, lf))
        c = F.div(r.terms[lr], cf)
        q = q + ring.monomial(m, c)
        r = r - f.mul_monomial(m, c)
    return q


def ideal_quotient(I, f):
    """(I : f) = (I ∩ <f>) / f."""
    ring = I.ring
    f = ring(f)
    if f.is_zero():
        raise InputError("ideal quotient by the zero polynomial")
    inter = intersect(I, Ideal(ring, [f], I.order))
    return Ideal(ring, [divide_exact(g, f) for g in inter.gb], I.order)


def ideal_quotient_ideal(I, J):
    """(I : J) as the intersection of (I : g) over generators g of J."""
    gens = [g for g in J.generators if not g.is_zero()]
    if not gens:
        return Ideal(I.ring, [I.ring.one], I.order)
    out = ideal_quotient(I, gens[0])
    for g in gens[1:]:
        out = intersect(out, ideal_quotient(I, g))
    return out


def saturation(I, J, cap=64):
    """(I : J^∞) and the number of quotient steps taken until it stabilised."""
    cur = I
    for step in range(1, cap + 1):
        nxt = ideal_quotient_ideal(cur, J)
        if nxt == cur:
            return nxt, step
        cur = nxt
    raise BudgetError(f"saturation did not stabilise within {cap} steps", code="polycore.saturation_cap")


def lead_ideal_is_monomial_prime(I):
    """Variable indices if I is generated by a subset of the variables, else None."""
    gb = I.gb
    idx = []
    for g in gb:
        if len(g) != 1:
            return None
        (e, _), = g.terms.items()
        if sum(e) != 1:
            return None
        idx.append(e.index(1))
    return sorted(idx)


__all__ = [
    "Ideal", "groebner_basis", "normal_form", "ideal_membership", "ideal_quotient",
    "ideal_quotient_ideal", "saturation", "krull_dim", "intersect", "divide_exact",
    "poly_to_vec", "vec_to_poly", "lead_term",
]
