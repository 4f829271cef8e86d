"""Free resolutions over R = A/I."""

import contextvars
from contextlib import contextmanager
from dataclasses import dataclass, field

from ..errors import BudgetError
from .module import FpModule, prune, vec_to_row
from .syz import syzygies, vec_degree


_PD_CAP = contextvars.ContextVar("pd_cap", default=None)


def default_pd_cap(ring):
    cap = _PD_CAP.get()
    return cap if cap is not None else 2 * ring.nvars + 2


@contextmanager
def pd_cap(value):
    """Temporarily override the default resolution length / pd cap."""
    token = _PD_CAP.set(value)
    try:
        yield
    finally:
        _PD_CAP.reset(token)


@dataclass(frozen=True)
class AtLeast:
    """A lower bound reported when a resolution is cut off at the cap."""

    bound: int

    def __str__(self):
        return f">= {self.bound}"

    def to_json(self):
        return {"at_least": self.bound}


@dataclass
class Complex:
    """F_0 <- F_1 <- ... with differentials stored row-wise.

    degrees[i] are the generator degrees of F_i; maps[i] (i >= 1) lists, for
    each basis vector of F_i, its image in F_{i-1} as a vector.
    """

    ring: object
    degrees: list
    maps: list = field(default_factory=list)
    complete: bool = False
    minimal: bool = True

    @property
    def length(self):
        return len(self.degrees) - 1

    def rank(self, i):
        if 0 <= i < len(self.degrees):
            return len(self.degrees[i])
        return 0

    def ranks(self):
        return [len(d) for d in self.degrees]

    def differential(self, i):
        """Images of the basis of F_i in F_{i-1} (empty outside the computed range)."""
        if 1 <= i < len(self.degrees):
            return self.maps[i]
        return []

    def matrix(self, i):
        """Row-convention matrix of d_i: row k = image of the k-th basis vector of F_i."""
        return [vec_to_row(self.ring, v, self.rank(i - 1)) for v in self.differential(i)]

    def pd(self):
        if self.complete:
            nz = [i for i, d in enumerate(self.degrees) if d]
            return nz[-1] if nz else -1
        return AtLeast(self.length)

    def betti_table(self):
        """{(i, j): beta_{i,j}} with j the internal degree."""
        out = {}
        for i, ds in enumerate(self.degrees):
            for d in ds:
                out[(i, d)] = out.get((i, d), 0) + 1
        return out

    def check_complex(self):
        """d_{i-1} d_i = 0 modulo I; raises on failure."""
        from ..errors import InvariantError
        from ..polycore.groebner import add_vec, mul_vec_poly
        from .module import reduce_mod_I, vec_entries

        F = self.ring.field
        for i in range(2, len(self.degrees)):
            prev = self.maps[i - 1]
            for v in self.maps[i]:
                acc = {}
                for pos, terms in vec_entries(v).items():
                    acc = add_vec(F, acc, mul_vec_poly(F, prev[pos], terms))
                if reduce_mod_I(self.ring, acc):
                    raise InvariantError(f"d_{i - 1} d_{i} != 0")
        return True

    def to_dict(self):
        return {
            "ranks": self.ranks(),
            "degrees": [list(d) for d in self.degrees],
            "maps": [[[str(p) for p in row] for row in self.matrix(i)] for i in range(1, len(self.degrees))],
            "complete": self.complete,
            "pd": self.pd() if self.complete else self.pd().to_json(),
        }


def free_resolution(M, length=None, minimal=True):
    """Free resolution F_0..F_length of M (minimal for graded modules).

    When F_length is nonzero one more kernel is computed to decide whether
    the resolution stops there.
    """
    ring = M.ring
    if length is None:
        length = default_pd_cap(ring)
    if length < 0:
        raise BudgetError("resolution length must be >= 0", code="homalg.bad_length")
    P = prune(M) if minimal else M
    degrees = [list(P.degrees)]
    maps = [[]]
    if P.ngens == 0:
        return Complex(ring, degrees, maps, complete=True, minimal=minimal)
    cur_vecs = list(P.relations)
    cur_deg = [vec_degree(v, P.degrees) for v in cur_vecs]
    for i in range(1, length + 1):
        if not cur_vecs:
            break
        degrees.append(cur_deg)
        maps.append(cur_vecs)
        prev_deg = cur_deg
        nxt = syzygies(ring, cur_vecs, cur_deg, len(degrees[i - 1]), degrees[i - 1], minimal=minimal)
        cur_vecs = nxt
        cur_deg = [vec_degree(v, prev_deg) for v in nxt]
    return Complex(ring, degrees, maps, complete=not cur_vecs, minimal=minimal)


def pd(M, cap=None):
    """Projective dimension, or AtLeast(cap) when the resolution does not stop by F_cap."""
    if cap is None:
        cap = default_pd_cap(M.ring)
    return free_resolution(M, cap).pd()


def syzygy_matrix(ring, matrix, degrees=None):
    """Kernel of the free map given by a q x r matrix (acting on columns).

    Returns S as a list of r rows whose columns generate the kernel over R
    (minimally for homogeneous input), so that matrix * S = 0 mod I.
    ``degrees`` are the degrees of the q target basis vectors.
    """
    A = ring.A
    rows = [[A(x) for x in row] for row in matrix]
    q = len(rows)
    r = len(rows[0]) if rows else 0
    vecs = []
    for k in range(r):
        v = {}
        for j in range(q):
            for e, c in rows[j][k].terms.items():
                v[(j,) + e] = c
        vecs.append(v)
    if degrees is None:
        degrees = [0] * q
    src = [vec_degree(v, degrees) if v else 0 for v in vecs]
    syz = syzygies(ring, vecs, src, q, degrees)
    cols = [vec_to_row(ring, s, r) for s in syz]
    return [[col[k] for col in cols] for k in range(r)]


def syzygy_module(M, i, minimal=True):
    """Omega^i M as coker(d_{i+1}) with the degrees of F_i (Omega^0 M = M pruned)."""
    C = free_resolution(M, i + 1, minimal=minimal)
    if i > C.length:
        return FpModule.zero(M.ring)
    return FpModule(M.ring, C.degrees[i], C.differential(i + 1), check=False, minimal=minimal)
