"""Shared rings, module suites and independent oracles for the tests."""

from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb

import sympy

from spectilt.homalg import FpModule, direct_sum, residue_module, syzygy_module
from spectilt.polycore import QQ
from spectilt.ringspec import Window, declare_prime, polynomial_ring


@lru_cache(maxsize=None)
def ring(variables):
    return polynomial_ring(QQ, variables, name="R")


def monomial_window(R):
    """All primes generated by subsets of the variables, sorted by height then name."""
    primes = []
    for h in range(R.nvars + 1):
        for sub in combinations(R.variables, h):
            primes.append(declare_prime(R, list(sub)))
    return Window(primes, name="W")


@lru_cache(maxsize=None)
def window(variables):
    return monomial_window(ring(variables))


def quot(R, *gens, degree=0):
    return FpModule.quotient(R, [R.A(g) for g in gens], degree=degree)


def coker(R, rows, degrees=None):
    return FpModule.coker(R, [[R.A(e) for e in row] for row in rows], degrees=degrees)


@lru_cache(maxsize=None)
def suite2():
    R = ring("x,y")
    k = quot(R, "x", "y")
    return [
        ("R", FpModule.free(R)),
        ("R/(x)", quot(R, "x")),
        ("R/(y)", quot(R, "y")),
        ("k", k),
        ("R/(x^2)", quot(R, "x^2")),
        ("R/(x^2,xy)", quot(R, "x^2", "x*y")),
        ("R/(x^2,y^2)", quot(R, "x^2", "y^2")),
        ("R/(xy)", quot(R, "x*y")),
        ("R/(x^2,xy,y^3)", quot(R, "x^2", "x*y", "y^3")),
        ("coker[x y]", coker(R, [["x", "y"]])),
        ("coker[[x,y],[0,x^2]]", coker(R, [["x", "y"], ["0", "x^2"]])),
        ("Omega1(k)", syzygy_module(k, 1)),
        ("R(-1)+R/(x)", direct_sum(FpModule.free(R, 1, [1]), quot(R, "x"))),
    ]


@lru_cache(maxsize=None)
def suite3():
    R = ring("x,y,z")
    return [
        ("R", FpModule.free(R)),
        ("R/(x)", quot(R, "x")),
        ("R/(x,y)", quot(R, "x", "y")),
        ("k", quot(R, "x", "y", "z")),
        ("R/(xy)", quot(R, "x*y")),
        ("R/(xy,xz)", quot(R, "x*y", "x*z")),
        ("R/(x^2,yz)", quot(R, "x^2", "y*z")),
        ("R/(xyz)", quot(R, "x*y*z")),
        ("R/(x,yz)", quot(R, "x", "y*z")),
        ("coker[x y z]", coker(R, [["x", "y", "z"]])),
        ("R/(x^2,y^2,z^2)", quot(R, "x^2", "y^2", "z^2")),
    ]


def full_suite():
    return [("Q[x,y]", n, M) for n, M in suite2()] + [("Q[x,y,z]", n, M) for n, M in suite3()]


def residue(R, gens):
    return residue_module(declare_prime(R, list(gens)))


# ---------------------------------------------------------------------------
# oracle: dual Koszul complex, cohomology dimensions by degreewise linear algebra
# ---------------------------------------------------------------------------

def _monomials(nvars, d):
    if d < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def _delta_matrix(nvars, S, j, d):
    """Matrix of Hom(K_j, R)_d -> Hom(K_{j+1}, R)_d for the Koszul complex on variables S."""
    src = [(T, m) for T in combinations(S, j) for m in _monomials(nvars, d + j)]
    tgt_T = list(combinations(S, j + 1))
    tgt = [(U, m) for U in tgt_T for m in _monomials(nvars, d + j + 1)]
    index = {key: r for r, key in enumerate(tgt)}
    M = sympy.zeros(len(tgt), len(src))
    for c, (T, m) in enumerate(src):
        for t in S:
            if t in T:
                continue
            U = tuple(sorted(T + (t,)))
            sign = (-1) ** U.index(t)
            m2 = list(m)
            m2[t] += 1
            M[index[(U, tuple(m2))], c] += sign
    return M, len(src)


def koszul_ext_dims(nvars, S, j, d):
    """dim_k Ext^j(R/(x_S), R)_d computed from the dual Koszul complex."""
    if j < 0 or j > len(S):
        return 0
    Mj, nsrc = _delta_matrix(nvars, S, j, d)
    kernel = nsrc - (Mj.rank() if Mj.shape[0] and nsrc else 0)
    if j == 0:
        return kernel
    Mprev, nprev = _delta_matrix(nvars, S, j - 1, d)
    image = Mprev.rank() if Mprev.shape[0] and nprev else 0
    return kernel - image


def koszul_bass_oracle(nvars, S, j, degrees=(2, 3)):
    """Generic rank over R/(x_S) of Ext^j(R/(x_S), R): Hilbert function ratio in high degree."""
    free_vars = nvars - len(S)
    ratios = set()
    for d in degrees:
        h = koszul_ext_dims(nvars, S, j, d - j)
        base = comb(d + free_vars - 1, free_vars - 1) if free_vars else (1 if d == 0 else 0)
        if base == 0:
            # R/p is finite length: use total dimension
            ratios.add(h)
        else:
            if h % base:
                raise AssertionError(f"non-integral rank ratio {h}/{base}")
            ratios.add(h // base)
    if len(ratios) != 1:
        raise AssertionError(f"rank ratio not stable: {ratios}")
    return ratios.pop()


def koszul_bass_table(variables, maxi):
    """{prime variable tuple: [mu_0..mu_maxi]} for all monomial primes, via the oracle."""
    n = len(variables)
    out = {}
    for h in range(n + 1):
        for S in combinations(range(n), h):
            if h == n:
                # maximal ideal: finite length, Ext^j(k, R) has total dimension mu_j
                vals = [sum(koszul_ext_dims(n, S, j, d) for d in range(-n - 1, 1)) for j in range(maxi + 1)]
            else:
                vals = [koszul_bass_oracle(n, S, j) for j in range(maxi + 1)]
            out[tuple(variables[i] for i in S)] = vals
    return out


# ---------------------------------------------------------------------------
# oracle: brute-force lattice enumeration for polynomial rings
# ---------------------------------------------------------------------------

def brute_force_sequences(nvars, n):
    """Descending n-tuples of up-closed sets of variable-subset primes with Y_i free of height i-1,
    as tuples of frozensets of variable-index sets."""
    primes = [frozenset(S) for h in range(nvars + 1) for S in combinations(range(nvars), h)]
    N = len(primes)
    sets = []
    for mask in range(1 << N):
        Y = {primes[i] for i in range(N) if mask >> i & 1}
        if all(q in Y for p in Y for q in primes if p <= q):
            sets.append(frozenset(Y))
    out = []

    def rec(i, prev, acc):
        if i == n:
            out.append(tuple(acc))
            return
        for Y in sets:
            if prev is not None and not Y <= prev:
                continue
            if any(len(p) == i for p in Y):
                continue
            rec(i + 1, Y, acc + [Y])

    rec(0, None, [])
    return out


def brute_force_sequence_count(nvars, n):
    """In a polynomial ring mu_{i-1}(p, R) != 0 exactly when ht p = i - 1, and the
    height of the prime generated by a set of variables is its size."""
    return len(brute_force_sequences(nvars, n))
