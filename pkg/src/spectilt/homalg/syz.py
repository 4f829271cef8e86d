"""Syzygies over R = A/I and the kernel / homology constructions built on them."""

from ..polycore.groebner import ModuleOrder, groebner, vec_wdeg
from ..polycore.monomial import DEGREVLEX
from .module import FpModule, i_multiples, prune, reduce_mod_I


def syzygies(ring, vecs, src_degrees, target_rank, target_degrees, extra=(), minimal=True):
    """Generators of {s in R^r : sum s_i vecs_i = 0 in A^q / (extra + I A^q)}.

    vecs are r vectors in A^q; src_degrees are the degrees of the source basis
    (the degree of vecs[i] when it is nonzero).  Returns vectors in A^r,
    reduced mod I and, for homogeneous data with minimal=True, forming a
    minimal generating set of the kernel modulo I*A^r.
    """
    r = len(vecs)
    q = target_rank
    F = ring.field
    n = ring.nvars
    if r == 0:
        return []
    one = F.one
    zero_exp = (0,) * n
    aug = []
    for i, v in enumerate(vecs):
        w = dict(v)
        w[(q + i,) + zero_exp] = one
        aug.append(w)
    forced = [dict(v) for v in extra] + i_multiples(ring, q)
    shifts = list(target_degrees) + list(src_degrees)
    blocks = [1] * q + [0] * r
    order = ModuleOrder(DEGREVLEX, shifts=shifts, blocks=blocks)
    res = groebner(F, n, aug, order, forced=forced)
    kernel = []
    for g in res.basis:
        if all(t[0] >= q for t in g):
            kernel.append({(t[0] - q,) + t[1:]: c for t, c in g.items()})
    kernel = [reduce_mod_I(ring, v) for v in kernel]
    kernel = [v for v in kernel if v]
    if not kernel:
        return []
    korder = ModuleOrder(DEGREVLEX, shifts=list(src_degrees))
    if minimal:
        kres = groebner(F, n, kernel, korder, forced=i_multiples(ring, r))
        kernel = [kernel[i] for i in kres.mingens]
    kernel.sort(key=lambda v: (vec_wdeg(v, korder), sorted(korder.key(t) for t in v)[::-1]))
    return kernel


def vec_degree(vec, degrees):
    return vec_wdeg(vec, ModuleOrder(DEGREVLEX, shifts=list(degrees)))


def kernel_of_map(ring, src_degrees, images, tgt_degrees, tgt_relations, minimal=True):
    """Kernel of the map R^p -> coker(tgt) sending e_k to images[k]."""
    p = len(src_degrees)
    if not tgt_degrees:
        zero_exp = (0,) * ring.nvars
        return [{(k,) + zero_exp: ring.field.one} for k in range(p)]
    return syzygies(ring, images, src_degrees, len(tgt_degrees), tgt_degrees,
                    extra=tgt_relations, minimal=minimal)


def subquotient(ring, degrees, gens, rels):
    """Present the submodule generated by ``gens`` of A^p/(rels + I A^p) as a cokernel."""
    if not gens:
        return FpModule.zero(ring)
    gdeg = [vec_degree(v, degrees) for v in gens]
    syz = syzygies(ring, gens, gdeg, len(degrees), degrees, extra=rels)
    return FpModule(ring, gdeg, syz, check=False)


def homology(ring, y_degrees, y_relations, alpha_images, z_degrees, z_relations, beta_images):
    """ker(alpha)/im(beta) for Y = A^p/y_relations --alpha--> Z, X --beta--> Y.

    alpha_images[k]: image in A^q of the k-th basis vector of Y.
    beta_images: vectors in A^p (images of a basis of X).
    Returned pruned.
    """
    if not y_degrees:
        return FpModule.zero(ring)
    K = kernel_of_map(ring, y_degrees, alpha_images, z_degrees, z_relations)
    H = subquotient(ring, y_degrees, K, list(beta_images) + list(y_relations))
    return prune(H)


def module_quotient_generators(M, polys):
    """Submodule {v in A^g : f v in N for all f in polys} of A^g (N = relations + I)."""
    ring = M.ring
    g = M.ngens
    s = len(polys)
    if s == 0:
        zero_exp = (0,) * ring.nvars
        return [{(j,) + zero_exp: ring.field.one} for j in range(g)]
    # map A^g -> (A^g/N)^s, v -> (f_1 v, ..., f_s v)
    images = []
    for j in range(g):
        img = {}
        for b, f in enumerate(polys):
            for e, c in f.terms.items():
                img[(b * g + j,) + e] = c
        images.append(img)
    tgt_deg = []
    tgt_rel = []
    for b, f in enumerate(polys):
        fd = f.degree() if f.is_homogeneous() else 0
        tgt_deg.extend(d + fd for d in M.degrees)
        for v in M.relations:
            tgt_rel.append({(t[0] + b * g,) + t[1:]: c for t, c in v.items()})
    return syzygies(ring, images, M.degrees, s * g, tgt_deg, extra=tgt_rel)
