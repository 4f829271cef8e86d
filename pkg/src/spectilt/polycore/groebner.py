"""Buchberger's algorithm for submodules of free modules A^r.

Ideals are the rank-one case.  A vector is a dict mapping a *term*
``(pos, e_1, ..., e_m)`` to a nonzero coefficient.  Orders on terms are
term-over-position with per-position degree shifts, optionally split into
blocks (a higher block dominates), which is what the syzygy code uses to
eliminate the original coordinates.
"""

import heapq

from ..errors import InputError


class ModuleOrder:
    """Term order on A^r built from a monomial order.

    key(term) = (block[pos], [shift[pos] + deg], monomial key, -pos)
    The degree slot is present only for graded monomial orders.
    """

    def __init__(self, mono_order, shifts=None, blocks=None):
        self.mono = mono_order
        self.shifts = tuple(shifts) if shifts is not None else None
        self.blocks = tuple(blocks) if blocks is not None else None
        self._key = {}
        self._nkey = {}
        self._graded = mono_order.is_graded

    def key(self, t):
        k = self._key.get(t)
        if k is None:
            pos = t[0]
            e = t[1:]
            head = (self.blocks[pos] if self.blocks else 0,)
            if self._graded:
                head += ((self.shifts[pos] if self.shifts else 0) + sum(e),)
            k = head + self.mono.key(e) + (-pos,)
            self._key[t] = k
        return k

    def nkey(self, t):
        k = self._nkey.get(t)
        if k is None:
            k = tuple(-x for x in self.key(t))
            self._nkey[t] = k
        return k

    def wdeg(self, t):
        return (self.shifts[t[0]] if self.shifts else 0) + sum(t[1:])


# ---------------------------------------------------------------------------
# vector helpers
# ---------------------------------------------------------------------------

def lead_term(vec, order):
    return max(vec, key=order.key)


def vec_wdeg(vec, order):
    return max(order.wdeg(t) for t in vec)


def is_homogeneous_vec(vec, order):
    return len({order.wdeg(t) for t in vec}) <= 1


def term_mul(t, m):
    return (t[0],) + tuple(a + b for a, b in zip(t[1:], m))


def term_divides(s, t):
    """Does term s divide term t (same position, exponentwise <=)?"""
    if s[0] != t[0]:
        return False
    for a, b in zip(s[1:], t[1:]):
        if a > b:
            return False
    return True


def term_quot(t, s):
    return tuple(a - b for a, b in zip(t[1:], s[1:]))


def term_lcm(s, t):
    return (s[0],) + tuple(a if a >= b else b for a, b in zip(s[1:], t[1:]))


def scale_vec(F, vec, c):
    if F.characteristic == 0:
        return {t: v * c for t, v in vec.items()}
    return {t: F.mul(v, c) for t, v in vec.items()}


def monic_vec(F, vec, order):
    if not vec:
        return vec
    lc = vec[lead_term(vec, order)]
    if F.is_one(lc):
        return vec
    return scale_vec(F, vec, F.inv(lc))


def add_vec(F, a, b, c=None):
    """a + c*b (c defaults to 1)."""
    out = dict(a)
    zero = F.zero
    if F.characteristic == 0:
        for t, v in b.items():
            w = out.get(t, zero) + (v if c is None else v * c)
            if w:
                out[t] = w
            else:
                out.pop(t, None)
    else:
        for t, v in b.items():
            w = F.add(out.get(t, zero), v if c is None else F.mul(v, c))
            if w:
                out[t] = w
            else:
                out.pop(t, None)
    return out


def mul_vec_poly(F, vec, poly_terms):
    """vec * polynomial (poly given as {exps: coeff})."""
    out = {}
    zero = F.zero
    for e, c in poly_terms.items():
        for t, v in vec.items():
            u = term_mul(t, e)
            w = F.add(out.get(u, zero), F.mul(v, c))
            if w:
                out[u] = w
            else:
                out.pop(u, None)
    return out


# ---------------------------------------------------------------------------
# reduction
# ---------------------------------------------------------------------------

class _LeadIndex:
    """Leading terms of basis elements bucketed by position."""

    def __init__(self):
        self.by_pos = {}

    def add(self, lt, idx):
        self.by_pos.setdefault(lt[0], []).append((lt[1:], idx))

    def remove(self, idx):
        for pos, lst in self.by_pos.items():
            self.by_pos[pos] = [x for x in lst if x[1] != idx]

    def find(self, t):
        lst = self.by_pos.get(t[0])
        if not lst:
            return None
        e = t[1:]
        for le, idx in lst:
            for a, b in zip(le, e):
                if a > b:
                    break
            else:
                return idx
        return None


def _reduce(F, f, basis, leads, index, order, full=True):
    """Remainder of f modulo the monic vectors basis[idx] (lead terms leads[idx])."""
    if not f:
        return {}
    f = dict(f)
    rem = {}
    nkey = order.nkey
    heap = [(nkey(t), t) for t in f]
    heapq.heapify(heap)
    char0 = F.characteristic == 0
    zero = F.zero
    while heap:
        _, t = heapq.heappop(heap)
        c = f.pop(t, None)
        if c is None:
            continue
        idx = index.find(t)
        if idx is None:
            if not full:
                rem[t] = c
                rem.update(f)
                return rem
            rem[t] = c
            continue
        g = basis[idx]
        lt = leads[idx]
        m = term_quot(t, lt)
        # f -= c * m * g, the lead term cancels exactly
        for s, v in g.items():
            if s == lt:
                continue
            u = term_mul(s, m)
            if char0:
                w = f.get(u, zero) - c * v
            else:
                w = F.sub(f.get(u, zero), F.mul(c, v))
            if w:
                if u not in f:
                    heapq.heappush(heap, (nkey(u), u))
                f[u] = w
            else:
                f.pop(u, None)
    return rem


class GroebnerResult:
    """Reduced Gröbner basis of a submodule plus minimal-generator bookkeeping."""

    def __init__(self, field, order, basis, mingens, nvars):
        self.field = field
        self.order = order
        self.basis = basis
        self.leads = [lead_term(g, order) for g in basis]
        self.mingens = mingens
        self.nvars = nvars
        self._index = _LeadIndex()
        for i, lt in enumerate(self.leads):
            self._index.add(lt, i)

    def reduce(self, vec):
        return _reduce(self.field, vec, self.basis, self.leads, self._index, self.order)

    def contains(self, vec):
        return not self.reduce(vec)

    def lead_exponents(self, pos):
        return [lt[1:] for lt in self.leads if lt[0] == pos]

    def __len__(self):
        return len(self.basis)


def groebner(field, nvars, gens, order, forced=(), max_pairs=None):
    """Reduced Gröbner basis of the submodule generated by gens + forced.

    ``mingens`` in the result lists indices into ``gens`` of a generating
    set that is minimal modulo ``forced`` (exactly minimal when all inputs
    are homogeneous for the order's shifts; greedy otherwise).
    """
    char0 = field.characteristic == 0
    rank_one = True
    basis = []
    leads = []
    sugar = []
    active = []
    index = _LeadIndex()
    pairs = []
    counter = 0

    # queue items: (sugar, kind, tiebreak, payload); kind 0 = pair, 1 = forced, 2 = candidate
    for k, g in enumerate(forced):
        if g:
            pairs.append((vec_wdeg(g, order), 1, counter, ("gen", g, None)))
            counter += 1
    for k, g in enumerate(gens):
        if g:
            pairs.append((vec_wdeg(g, order), 2, counter, ("gen", g, k)))
            counter += 1
    positions = {t[0] for g in list(gens) + list(forced) for t in g}
    rank_one = len(positions) <= 1
    heapq.heapify(pairs)
    mingens = []
    live_pairs = set()
    processed = 0

    def insert(h, s):
        nonlocal counter
        h = monic_vec(field, h, order)
        lt = lead_term(h, order)
        j = len(basis)
        basis.append(h)
        leads.append(lt)
        sugar.append(s)
        active.append(True)
        # Gebauer-Moller update
        cands = [i for i in range(j) if active[i] and leads[i][0] == lt[0]]
        lcms = {i: term_lcm(leads[i], lt) for i in cands}
        keep = []
        for n, i in enumerate(cands):
            coprime = rank_one and all(a == 0 or b == 0 for a, b in zip(leads[i][1:], lt[1:]))
            if coprime:
                keep.append((i, True))
                continue
            L = lcms[i]
            dominated = False
            for i2 in cands:
                if i2 == i:
                    continue
                L2 = lcms[i2]
                if term_divides(L2, L) and (L2 != L or i2 < i):
                    dominated = True
                    break
            if not dominated:
                keep.append((i, False))
        # chain criterion on old pairs
        dead = set()
        for pr in list(live_pairs):
            a, b = pr
            if leads[a][0] != lt[0]:
                continue
            Lab = term_lcm(leads[a], leads[b])
            if (term_divides(lt, Lab) and term_lcm(leads[a], lt) != Lab
                    and term_lcm(leads[b], lt) != Lab):
                dead.add(pr)
        live_pairs.difference_update(dead)
        for i, coprime in keep:
            if coprime:
                continue
            L = lcms[i]
            s_pair = max(sugar[i] + sum(L[1:]) - sum(leads[i][1:]), s + sum(L[1:]) - sum(lt[1:]))
            live_pairs.add((i, j))
            heapq.heappush(pairs, (s_pair, 0, counter, ("pair", i, j)))
            counter += 1
        for i in range(j):
            if active[i] and term_divides(lt, leads[i]):
                active[i] = False
        index.add(lt, j)

    while pairs:
        s, kind, _, payload = heapq.heappop(pairs)
        if payload[0] == "pair":
            i, j = payload[1], payload[2]
            if (i, j) not in live_pairs:
                continue
            live_pairs.discard((i, j))
            processed += 1
            if max_pairs is not None and processed > max_pairs:
                from ..errors import BudgetError
                raise BudgetError(f"Gröbner pair budget {max_pairs} exceeded")
            L = term_lcm(leads[i], leads[j])
            mi = term_quot(L, leads[i])
            mj = term_quot(L, leads[j])
            sp = {}
            for t, v in basis[i].items():
                sp[term_mul(t, mi)] = v
            for t, v in basis[j].items():
                u = term_mul(t, mj)
                w = (sp.get(u, field.zero) - v) if char0 else field.sub(sp.get(u, field.zero), v)
                if w:
                    sp[u] = w
                else:
                    sp.pop(u, None)
            h = _reduce(field, sp, basis, leads, index, order)
            if h:
                insert(h, s)
        else:
            g = payload[1]
            h = _reduce(field, g, basis, leads, index, order)
            if h:
                if payload[2] is not None:
                    mingens.append(payload[2])
                insert(h, s)

    # minimal basis, then interreduce tails
    keep = [i for i in range(len(basis)) if active[i]]
    red = [basis[i] for i in keep]
    red_leads = [leads[i] for i in keep]
    final = []
    for n, g in enumerate(red):
        others_idx = _LeadIndex()
        others = []
        olead = []
        for m, h in enumerate(red):
            if m != n:
                others_idx.add(red_leads[m], len(others))
                others.append(h)
                olead.append(red_leads[m])
        lt = red_leads[n]
        tail = {t: v for t, v in g.items() if t != lt}
        tail = _reduce(field, tail, others, olead, others_idx, order)
        tail[lt] = g[lt]
        final.append(monic_vec(field, tail, order))
    final.sort(key=lambda v: order.key(lead_term(v, order)))
    return GroebnerResult(field, order, final, sorted(mingens), nvars)


def check_same_field(polys):
    fields = {p.ring.field for p in polys}
    varsets = {p.ring.variables for p in polys}
    if len(fields) > 1 or len(varsets) > 1:
        raise InputError("polynomials over different fields or variable sets")
