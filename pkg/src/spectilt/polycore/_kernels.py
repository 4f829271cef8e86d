"""Monomial-ideal counting kernels.

Each kernel has a numba ``@njit`` version and a pure-numpy fallback.  The
numpy path is used when numba is missing or when the environment variable
``SPECTILT_PURE_NUMPY`` is set to a non-empty value other than ``0``.
Both paths must return identical results; tests run them side by side.
"""

import os
from functools import lru_cache
from itertools import combinations_with_replacement

import numpy as np

try:
    import numba
    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    NUMBA_AVAILABLE = False


def _flag_pure():
    v = os.environ.get("SPECTILT_PURE_NUMPY", "")
    return v not in ("", "0")


USE_NUMBA = NUMBA_AVAILABLE and not _flag_pure()


@lru_cache(maxsize=None)
def monomials_of_degree(nvars, d):
    """All exponent vectors of total degree d, as an (N, nvars) int64 array."""
    if d < 0:
        return np.zeros((0, nvars), dtype=np.int64)
    if nvars == 0:
        return np.zeros((1 if d == 0 else 0, 0), dtype=np.int64)
    rows = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        rows.append(e)
    arr = np.array(rows, dtype=np.int64).reshape(-1, nvars)
    arr.setflags(write=False)
    return arr


# ---------------------------------------------------------------------------
# standard-monomial mask: rows of C not divisible by any row of L
# ---------------------------------------------------------------------------

def _standard_mask_numpy(C, L):
    if L.shape[0] == 0:
        return np.ones(C.shape[0], dtype=np.bool_)
    if C.shape[0] == 0:
        return np.zeros(0, dtype=np.bool_)
    divisible = (C[:, None, :] >= L[None, :, :]).all(axis=2).any(axis=1)
    return ~divisible


def _standard_mask_loops(C, L):
    n, m = C.shape
    k = L.shape[0]
    out = np.ones(n, dtype=np.bool_)
    for a in range(n):
        for b in range(k):
            div = True
            for j in range(m):
                if C[a, j] < L[b, j]:
                    div = False
                    break
            if div:
                out[a] = False
                break
    return out


# ---------------------------------------------------------------------------
# dimension of k[x]/J for a monomial ideal J given by support bitmasks:
# the largest variable set S with no generator supported inside S
# ---------------------------------------------------------------------------

def _max_independent_numpy(masks, nvars):
    subsets = np.arange(1 << nvars, dtype=np.int64)
    if masks.shape[0] == 0:
        return nvars
    # a generator with empty support means J = (1)
    if (masks == 0).any():
        return -1
    inside = ((masks[None, :] & ~subsets[:, None]) == 0).any(axis=1)
    ok = subsets[~inside]
    if ok.size == 0:
        return -1
    bits = np.zeros(ok.shape[0], dtype=np.int64)
    for j in range(nvars):
        bits += (ok >> j) & 1
    return int(bits.max())


def _max_independent_loops(masks, nvars):
    k = masks.shape[0]
    for i in range(k):
        if masks[i] == 0:
            return -1
    best = -1
    for s in range(1 << nvars):
        good = True
        for i in range(k):
            if masks[i] & ~s == 0:
                good = False
                break
        if good:
            c = 0
            t = s
            while t:
                c += t & 1
                t >>= 1
            if c > best:
                best = c
    return best


if NUMBA_AVAILABLE:
    _standard_mask_jit = numba.njit(cache=False)(_standard_mask_loops)
    _max_independent_jit = numba.njit(cache=False)(_max_independent_loops)
else:  # pragma: no cover
    _standard_mask_jit = None
    _max_independent_jit = None


def standard_mask(C, L, use_numba=None):
    use = USE_NUMBA if use_numba is None else (use_numba and NUMBA_AVAILABLE)
    C = np.ascontiguousarray(C, dtype=np.int64)
    L = np.ascontiguousarray(L, dtype=np.int64).reshape(-1, C.shape[1])
    if use:
        return _standard_mask_jit(C, L)
    return _standard_mask_numpy(C, L)


def count_standard(leads, nvars, d, use_numba=None):
    """Number of degree-d monomials not divisible by any exponent vector in leads."""
    C = monomials_of_degree(nvars, d)
    if C.shape[0] == 0:
        return 0
    if not len(leads):
        return int(C.shape[0])
    L = np.asarray(leads, dtype=np.int64).reshape(-1, nvars)
    return int(standard_mask(C, L, use_numba).sum())


def max_independent(masks, nvars, use_numba=None):
    use = USE_NUMBA if use_numba is None else (use_numba and NUMBA_AVAILABLE)
    masks = np.asarray(masks, dtype=np.int64).reshape(-1)
    if use:
        return int(_max_independent_jit(masks, nvars))
    return _max_independent_numpy(masks, nvars)


def support_masks(exponent_vectors):
    out = []
    for e in exponent_vectors:
        m = 0
        for j, x in enumerate(e):
            if x:
                m |= 1 << j
        out.append(m)
    return out
