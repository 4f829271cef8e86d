"""Ext and Tor as finitely presented modules.

Ext^i(M, N) is the homology of Hom(F, N) at F_i and Tor_i(M, N) the homology
of F (x) N at F_i, where F is a (minimal) free resolution of M.  Both complexes
are built as subquotients of free modules over A, so the homology routine in
``syz`` does the work.
"""

import threading

from ..errors import InputError
from .module import FpModule, prune, vec_entries
from .resolution import free_resolution
from .syz import homology

_CACHE = {}
_CACHE_LOCK = threading.Lock()
_RES_CACHE = {}


def clear_cache():
    with _CACHE_LOCK:
        _CACHE.clear()
        _RES_CACHE.clear()


def _resolution(M, length):
    key = (M.key, M.ring)
    with _CACHE_LOCK:
        C = _RES_CACHE.get(key)
    if C is not None and (C.complete or C.length >= length):
        return C
    C = free_resolution(M, length)
    with _CACHE_LOCK:
        _RES_CACHE[key] = C
    return C


def _check(M, N):
    if M.ring != N.ring:
        raise InputError("modules live over different rings", code="homalg.ring_mismatch")


def _blocks(rank, N):
    """Degrees and relations of N^rank (block k holds copy k)."""
    h = N.ngens
    rels = []
    for k in range(rank):
        for v in N.relations:
            rels.append({(t[0] + k * h,) + t[1:]: c for t, c in v.items()})
    return rels


def _hom_degrees(a, N):
    return [dt - ak for ak in a for dt in N.degrees]


def _tensor_degrees(a, N):
    return [ak + dt for ak in a for dt in N.degrees]


def _hom_map(D, rank_src, N):
    """Images of the basis (l, t) of Hom(F_{i-1}, N) in Hom(F_i, N) under D^*.

    D lists images of the basis of F_i in F_{i-1}; (l, t) -> sum_k D[k][l] (k, t).
    """
    h = N.ngens
    images = [dict() for _ in range(rank_src * h)]
    for k, v in enumerate(D):
        for l, terms in vec_entries(v).items():
            for t in range(h):
                img = images[l * h + t]
                for e, c in terms.items():
                    img[(k * h + t,) + e] = c
    return images


def _tensor_map(D, N):
    """Images of the basis (k, t) of F_i (x) N in F_{i-1} (x) N: (k, t) -> sum_l D[k][l] (l, t)."""
    h = N.ngens
    images = []
    for k, v in enumerate(D):
        ents = vec_entries(v)
        for t in range(h):
            img = {}
            for l, terms in ents.items():
                for e, c in terms.items():
                    img[(l * h + t,) + e] = c
            images.append(img)
    return images


def ext_module(i, M, N):
    """Ext^i_R(M, N) as a pruned FpModule."""
    _check(M, N)
    if i < 0:
        return FpModule.zero(M.ring)
    key = ("ext", i, M.key, N.key, id(M.ring))
    with _CACHE_LOCK:
        if key in _CACHE:
            return _CACHE[key]
    ring = M.ring
    Np = prune(N)
    C = _resolution(M, i + 1)
    a_prev = C.degrees[i - 1] if 1 <= i <= C.length + 1 else []
    a_cur = C.degrees[i] if i <= C.length else []
    a_next = C.degrees[i + 1] if i + 1 <= C.length else []
    if not a_cur or Np.ngens == 0:
        out = FpModule.zero(ring)
    else:
        y_deg = _hom_degrees(a_cur, Np)
        y_rel = _blocks(len(a_cur), Np)
        z_deg = _hom_degrees(a_next, Np)
        z_rel = _blocks(len(a_next), Np)
        alpha = _hom_map(C.differential(i + 1), len(a_cur), Np) if a_next else [dict() for _ in y_deg]
        beta = _hom_map(C.differential(i), len(a_prev), Np) if (i >= 1 and a_prev) else []
        out = homology(ring, y_deg, y_rel, alpha, z_deg, z_rel, beta)
    with _CACHE_LOCK:
        _CACHE[key] = out
    return out


def tor_module(i, M, N):
    """Tor_i^R(M, N) as a pruned FpModule (resolving the first argument)."""
    _check(M, N)
    if i < 0:
        return FpModule.zero(M.ring)
    key = ("tor", i, M.key, N.key, id(M.ring))
    with _CACHE_LOCK:
        if key in _CACHE:
            return _CACHE[key]
    ring = M.ring
    Np = prune(N)
    C = _resolution(M, i + 1)
    a_prev = C.degrees[i - 1] if 1 <= i <= C.length + 1 else []
    a_cur = C.degrees[i] if i <= C.length else []
    a_next = C.degrees[i + 1] if i + 1 <= C.length else []
    if not a_cur or Np.ngens == 0:
        out = FpModule.zero(ring)
    else:
        y_deg = _tensor_degrees(a_cur, Np)
        y_rel = _blocks(len(a_cur), Np)
        z_deg = _tensor_degrees(a_prev, Np)
        z_rel = _blocks(len(a_prev), Np)
        alpha = _tensor_map(C.differential(i), Np) if i >= 1 else [dict() for _ in y_deg]
        beta = _tensor_map(C.differential(i + 1), Np) if a_next else []
        out = homology(ring, y_deg, y_rel, alpha, z_deg, z_rel, beta)
    with _CACHE_LOCK:
        _CACHE[key] = out
    return out


def hom_module(M, N):
    return ext_module(0, M, N)


def tensor_module(M, N):
    return tor_module(0, M, N)
