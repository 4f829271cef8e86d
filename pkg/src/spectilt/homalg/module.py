"""Finitely presented graded modules over R = A/I.

A module is coker(A) where the rows of A are relations among g generators
of degrees d_1..d_g.  Internally a row is a *vector*: a dict from terms
``(pos, e_1..e_m)`` to coefficients.  The relations I*e_j are never stored;
every computation appends them.
"""

import threading

from ..errors import InputError
from ..polycore import _kernels
from ..polycore.groebner import (
    ModuleOrder,
    add_vec,
    groebner,
    is_homogeneous_vec,
    lead_term,
    mul_vec_poly,
    scale_vec,
    vec_wdeg,
)
from ..polycore.monomial import DEGREVLEX
from ..polycore.poly import Poly


# ---------------------------------------------------------------------------
# vector <-> polynomial helpers
# ---------------------------------------------------------------------------

def vec_entries(vec):
    """pos -> {exps: coeff}"""
    out = {}
    for t, c in vec.items():
        out.setdefault(t[0], {})[t[1:]] = c
    return out


def entries_to_vec(entries):
    vec = {}
    for pos, terms in entries.items():
        for e, c in terms.items():
            vec[(pos,) + e] = c
    return vec


def poly_at(p, pos):
    return {(pos,) + e: c for e, c in p.terms.items()}


def row_to_vec(row):
    vec = {}
    for j, p in enumerate(row):
        for e, c in p.terms.items():
            vec[(j,) + e] = c
    return vec


def vec_to_row(ring, vec, g):
    A = ring.A
    ents = vec_entries(vec)
    return [Poly(A, dict(ents.get(j, {}))) for j in range(g)]


def shift_vec(vec, offset):
    return {(t[0] + offset,) + t[1:]: c for t, c in vec.items()}


def canonical(vec):
    return tuple(sorted(vec.items()))


def i_multiples(ring, rank):
    """The vectors f*e_j for f in the reduced GB of I, j < rank."""
    out = []
    for f in ring.I.gb:
        for j in range(rank):
            out.append(poly_at(f, j))
    return out


def reduce_mod_I(ring, vec):
    """Componentwise normal form modulo I."""
    if ring.is_ambient_polynomial or not vec:
        return dict(vec)
    res = ring.I.gb_result
    out = {}
    for pos, terms in vec_entries(vec).items():
        r = res.reduce({(0,) + e: c for e, c in terms.items()})
        for t, c in r.items():
            out[(pos,) + t[1:]] = c
    return out


def module_order(degrees):
    return ModuleOrder(DEGREVLEX, shifts=degrees)


# ---------------------------------------------------------------------------
# FpModule
# ---------------------------------------------------------------------------

class FpModule:
    """coker of a presentation matrix over a Ring (rows = relations)."""

    def __init__(self, ring, degrees, relations, graded=None, minimal=False, check=True):
        self.ring = ring
        self.degrees = tuple(int(d) for d in degrees)
        rels = []
        for v in relations:
            v = reduce_mod_I(ring, v)
            if v:
                rels.append(v)
        self.relations = tuple(rels)
        order = module_order(self.degrees)
        homog = all(is_homogeneous_vec(v, order) for v in self.relations)
        if graded is None:
            graded = homog
        if graded and not homog and check:
            bad = next(i for i, v in enumerate(self.relations) if not is_homogeneous_vec(v, order))
            raise InputError(f"relation row {bad} is not homogeneous for degrees {list(self.degrees)}",
                             code="homalg.inhomogeneous")
        self.graded = bool(graded) and ring.is_graded
        self.minimal = minimal
        self._gb = None
        self._lock = threading.Lock()
        self._key = None

    # -- construction ----------------------------------------------------
    @classmethod
    def coker(cls, ring, matrix, degrees=None, graded=None):
        rows = [[ring.A(x) for x in row] for row in matrix]
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise InputError("presentation matrix rows have different lengths", code="homalg.shape")
        g = widths.pop() if widths else (len(degrees) if degrees is not None else 0)
        if degrees is None:
            degrees = _infer_degrees(rows, g)
            if degrees is None:
                if graded:
                    raise InputError("could not infer homogeneous generator degrees", code="homalg.inhomogeneous")
                degrees = [0] * g
                graded = False
        if len(degrees) != g:
            msg = f"{len(degrees)} generator degrees given for {g} columns"
            if len(degrees) < g:
                hit = next(((i, j) for i, row in enumerate(rows) for j in range(len(degrees), g)
                            if not row[j].is_zero()), None)
                if hit is not None:
                    i, j = hit
                    msg += f"; entry [{i}][{j}] = {rows[i][j]} sits in column {j}, which has no degree"
            raise InputError(msg, code="homalg.shape")
        for i, row in enumerate(rows):
            _check_row_degrees(row, degrees, i, graded)
        return cls(ring, degrees, [row_to_vec(r) for r in rows], graded=graded)

    @classmethod
    def quotient(cls, ring, gens, degree=0):
        """R/J for J generated by gens (cyclic module)."""
        A = ring.A
        gens = [A(g) for g in gens]
        graded = all(g.is_homogeneous() for g in gens)
        return cls(ring, [degree], [poly_at(g, 0) for g in gens if g], graded=graded)

    @classmethod
    def free(cls, ring, rank=1, degrees=None):
        degrees = list(degrees) if degrees is not None else [0] * rank
        return cls(ring, degrees, [], graded=True, minimal=True)

    @classmethod
    def zero(cls, ring):
        return cls(ring, [], [], graded=True, minimal=True)

    # -- basic data ------------------------------------------------------
    @property
    def ngens(self):
        return len(self.degrees)

    @property
    def key(self):
        if self._key is None:
            self._key = (id(self.ring), self.degrees, tuple(canonical(v) for v in self.relations))
        return self._key

    def __hash__(self):
        return hash(self.key)

    def __eq__(self, other):
        return isinstance(other, FpModule) and self.ring == other.ring and self.key[1:] == other.key[1:]

    def matrix(self):
        return [vec_to_row(self.ring, v, self.ngens) for v in self.relations]

    def relation_degrees(self):
        order = module_order(self.degrees)
        return [vec_wdeg(v, order) for v in self.relations]

    def order(self):
        return module_order(self.degrees)

    def shift(self, s):
        """M(s): generator degrees lowered by s."""
        return FpModule(self.ring, [d - s for d in self.degrees], self.relations,
                        graded=self.graded, minimal=self.minimal)

    def __repr__(self):
        rows = ["[" + ", ".join(str(p) for p in r) + "]" for r in self.matrix()]
        return f"FpModule(coker [{', '.join(rows)}] degrees {list(self.degrees)})"

    def to_dict(self):
        return {
            "degrees": list(self.degrees),
            "matrix": [[str(p) for p in r] for r in self.matrix()],
        }

    # -- Gröbner data ----------------------------------------------------
    def gb(self):
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = groebner(self.ring.field, self.ring.nvars, list(self.relations),
                                        self.order(), forced=i_multiples(self.ring, self.ngens))
        return self._gb

    def lead_exponents(self, j):
        return self.gb().lead_exponents(j)

    def is_zero(self):
        if self.ngens == 0:
            return True
        unit = (0,) * self.ring.nvars
        gb = self.gb()
        for j in range(self.ngens):
            if unit not in set(gb.lead_exponents(j)):
                return False
        return True

    def contains_relation(self, vec):
        """Is vec zero in M, i.e. in the relation submodule + I*A^g?"""
        return self.gb().contains(vec)

    def reduce(self, vec):
        return self.gb().reduce(vec)

    def hilbert_function(self, d):
        """dim_k of the degree-d piece."""
        n = self.ring.nvars
        total = 0
        for j, dj in enumerate(self.degrees):
            if d - dj < 0:
                continue
            total += _kernels.count_standard(self.lead_exponents(j), n, d - dj)
        return total

    def hilbert_values(self, lo, hi):
        return [self.hilbert_function(d) for d in range(lo, hi + 1)]

    def krull_dim(self):
        """dim of the support; -1 for the zero module."""
        n = self.ring.nvars
        best = -1
        for j in range(self.ngens):
            leads = self.lead_exponents(j)
            masks = _kernels.support_masks(leads)
            best = max(best, _kernels.max_independent(masks, n))
        return best

    def total_length(self):
        """Total k-dimension; None when infinite."""
        if self.is_zero():
            return 0
        if self.krull_dim() > 0:
            return None
        n = self.ring.nvars
        total = 0
        for j in range(self.ngens):
            leads = self.lead_exponents(j)
            d = 0
            while True:
                c = _kernels.count_standard(leads, n, d)
                if c == 0:
                    break
                total += c
                d += 1
        return total

    def min_degree(self):
        return min(self.degrees) if self.degrees else 0

    def max_presentation_degree(self):
        ds = list(self.degrees) + self.relation_degrees()
        return max(ds) if ds else 0


def _infer_degrees(rows, g):
    """Generator degrees making every row homogeneous, anchored at 0 for the first
    generator of each connected block; None if impossible."""
    degrees = [None] * g
    # constraints deg(entry[i][j]) = r_i - d_j
    changed = True
    row_deg = [None] * len(rows)
    for j in range(g):
        if degrees[j] is not None:
            continue
        degrees[j] = 0
        changed = True
        while changed:
            changed = False
            for i, row in enumerate(rows):
                for jj, p in enumerate(row):
                    if p.is_zero():
                        continue
                    if not p.is_homogeneous():
                        return None
                    dp = p.degree()
                    if degrees[jj] is not None and row_deg[i] is None:
                        row_deg[i] = dp + degrees[jj]
                        changed = True
                    elif degrees[jj] is None and row_deg[i] is not None:
                        degrees[jj] = row_deg[i] - dp
                        changed = True
                    elif degrees[jj] is not None and row_deg[i] != dp + degrees[jj]:
                        return None
    return degrees


def _check_row_degrees(row, degrees, i, graded):
    if graded is False:
        return
    rd = None
    for j, p in enumerate(row):
        if p.is_zero():
            continue
        if not p.is_homogeneous():
            raise InputError(f"entry [{i}][{j}] = {p} is not homogeneous", code="homalg.inhomogeneous")
        d = p.degree() + degrees[j]
        if rd is None:
            rd = d
        elif d != rd:
            raise InputError(
                f"entry [{i}][{j}] = {p} has degree {p.degree()} but the graded convention "
                f"needs {rd - degrees[j]} (row degree {rd} - generator degree {degrees[j]})",
                code="homalg.inhomogeneous")


# ---------------------------------------------------------------------------
# direct sums
# ---------------------------------------------------------------------------

def direct_sum(*mods):
    if not mods:
        raise InputError("direct sum of nothing")
    ring = mods[0].ring
    degrees = []
    rels = []
    off = 0
    for M in mods:
        degrees.extend(M.degrees)
        rels.extend(shift_vec(v, off) for v in M.relations)
        off += M.ngens
    return FpModule(ring, degrees, rels, graded=all(M.graded for M in mods))


# ---------------------------------------------------------------------------
# pruning to a minimal presentation
# ---------------------------------------------------------------------------

def _unit_entry(F, vec, nvars):
    """(pos, coeff) of a nonzero constant entry of vec, preferring the last position."""
    unit = (0,) * nvars
    best = None
    ents = vec_entries(vec)
    for pos, terms in ents.items():
        if len(terms) == 1 and unit in terms:
            if best is None or pos > best[0]:
                best = (pos, terms[unit])
    return best


def prune(M, return_map=False):
    """Minimal presentation: eliminate generators through unit entries, then keep a
    minimal generating set of the relations (modulo I).

    With return_map, also return images of the old generators as vectors in the
    new generators.
    """
    ring = M.ring
    F = ring.field
    n = ring.nvars
    rels = [dict(v) for v in M.relations]
    alive = list(range(M.ngens))
    images = {j: {(j,) + (0,) * n: F.one} for j in range(M.ngens)}
    while True:
        hit = None
        for r, v in enumerate(rels):
            u = _unit_entry(F, v, n)
            if u is not None:
                hit = (r, u)
                break
        if hit is None:
            break
        r, (c, u) = hit
        piv = rels.pop(r)
        # e_c = -(1/u) * (piv - u e_c)
        sub = {t: v for t, v in piv.items() if t[0] != c}
        sub = scale_vec(F, sub, F.neg(F.inv(u)))
        newrels = []
        for v in rels:
            v = _substitute(F, v, c, sub)
            v = reduce_mod_I(ring, v)
            if v:
                newrels.append(v)
        rels = newrels
        for j in list(images):
            images[j] = _substitute(F, images[j], c, sub)
        alive.remove(c)
    # renumber surviving generators
    renum = {old: new for new, old in enumerate(alive)}
    degrees = [M.degrees[j] for j in alive]
    rels = [{(renum[t[0]],) + t[1:]: c for t, c in v.items()} for v in rels]
    order = module_order(degrees)
    if rels:
        res = groebner(F, n, rels, order, forced=i_multiples(ring, len(degrees)))
        rels = [rels[i] for i in res.mingens]
        rels.sort(key=lambda v: (vec_wdeg(v, order), order.key(lead_term(v, order))))
    out = FpModule(ring, degrees, rels, graded=M.graded, minimal=M.graded, check=False)
    if return_map:
        imgs = [{(renum[t[0]],) + t[1:]: c for t, c in images[j].items()} for j in range(M.ngens)]
        return out, imgs
    return out


def _substitute(F, vec, c, sub):
    """Replace generator e_c in vec by the vector sub."""
    part = {t: v for t, v in vec.items() if t[0] == c}
    if not part:
        return vec
    rest = {t: v for t, v in vec.items() if t[0] != c}
    poly = {t[1:]: v for t, v in part.items()}
    return add_vec(F, rest, mul_vec_poly(F, sub, poly))
