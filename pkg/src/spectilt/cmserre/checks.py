"""Cohen-Macaulay predicates, intersection multiplicities and candidate K(p) probes.

All local conditions are evaluated at the irrelevant graded maximal ideal
("graded-local").
"""

from ..abtranspose import lp_module
from ..errors import HypothesisError, InputError
from ..homalg import (
    INFINITE,
    AtLeast,
    FpModule,
    depth,
    dim_module,
    kills,
    length,
    pd,
    residue_module,
    tensor_module,
    tor_module,
)
from ..ringspec import Window, ass_in_window, declare_prime


def is_cohen_macaulay(M):
    if M.is_zero():
        raise InputError("the zero module is not Cohen-Macaulay by convention", code="cmserre.zero_module")
    return depth(M) == dim_module(M)


def _require_regular(ring, what):
    if not ring.is_ambient_polynomial:
        raise HypothesisError(f"{what} needs a polynomial (regular) ring", hypothesis="R regular")


def _pd_json(p):
    return p.to_json() if isinstance(p, AtLeast) else p


def cm_translate_check(prime):
    """pd(R/p) >= ht p, with equality exactly when R/p is Cohen-Macaulay."""
    _require_regular(prime.ring, "cm_translate_check")
    U = residue_module(prime)
    p = pd(U)
    h = prime.height
    cm = is_cohen_macaulay(U)
    finite = not isinstance(p, AtLeast)
    inequality = finite and p >= h
    equality_iff_cm = finite and ((p == h) == cm)
    return {
        "prime": prime.name,
        "pd": _pd_json(p),
        "height": h,
        "cohen_macaulay": cm,
        "pd_ge_height": inequality,
        "equality_iff_cm": equality_iff_cm,
        "ok": inequality and equality_iff_cm,
        "caveats": ["graded-local"],
    }


def chi(M, N):
    """sum_i (-1)^i length Tor_i(M, N), defined when M (x) N has finite length."""
    ring = M.ring
    _require_regular(ring, "chi")
    T0 = tensor_module(M, N)
    if dim_module(T0) > 0:
        raise InputError("chi undefined: M (x) N does not have finite length", code="cmserre.chi_undefined")
    total = 0
    for i in range(ring.nvars + 1):
        ell = length(tor_module(i, M, N))
        if ell == INFINITE:
            raise InputError(f"chi undefined: Tor_{i} has infinite length", code="cmserre.chi_undefined")
        total += (-1) ** i * ell
    return total


def serre_check(M, N):
    ring = M.ring
    x = chi(M, N)
    dM, dN, dR = dim_module(M), dim_module(N), ring.dim
    ineq = dM + dN <= dR
    flags = {"dimension_inequality": ineq}
    if dM + dN < dR:
        case = "vanishing"
        flags["vanishing"] = x == 0
    else:
        case = "positivity"
        flags["positivity"] = x > 0
    flags["nonnegative"] = x >= 0
    return {
        "dim_M": dM,
        "dim_N": dN,
        "dim_R": dR,
        "chi": x,
        "case": case,
        "flags": flags,
        "ok": all(flags.values()),
        "caveats": ["graded-local"],
    }


def _probe_window(prime):
    """Primes of the form p + (variables): enough for Ass of monomial data."""
    ring = prime.ring
    primes = [prime]
    if prime.certificate == "monomial":
        used = [v for v in ring.variables if prime.contains(ring.A(v))]
        rest = [v for v in ring.variables if v not in used]
        from itertools import combinations

        for r in range(1, len(rest) + 1):
            for extra in combinations(rest, r):
                primes.append(declare_prime(ring, used + list(extra)))
    return Window(primes, name=f"V({prime.name})")


def hochster_probe(prime, K, window=None, suite=None, names=None):
    """Check the hypotheses on a candidate K(p): p K = 0, Ass K = {p}, pd K = ht p, K Cohen-Macaulay."""
    from ..classify import same_class_check

    ring = prime.ring
    pgens = [g for g in prime.ideal.gb if not ring.I.contains(g)]
    if K.is_zero():
        raise HypothesisError("K is the zero module", hypothesis="K != 0")
    checks = {}
    checks["p_kills_K"] = kills(pgens, K)
    W = window or _probe_window(prime)
    ass = ass_in_window(K, W)
    checks["ass_is_p"] = sorted(W.names(ass)) == [prime.name]
    p = pd(K)
    checks["pd_equals_height"] = (not isinstance(p, AtLeast)) and p == prime.height
    checks["cohen_macaulay"] = is_cohen_macaulay(K)
    ok = all(checks.values())
    rep = {
        "prime": prime.name,
        "height": prime.height,
        "pd": _pd_json(p),
        "ass_in_window": W.names(ass),
        "window": W.name,
        "checks": checks,
        "ok": ok,
        "caveats": ["graded-local", "window-relative"],
    }
    if not checks["p_kills_K"]:
        rep["failed_hypothesis"] = "p K = 0 (Ass K = {p})"
    if ok:
        L = lp_module(prime)
        if suite is None:
            names, suite = _default_suite(ring)
        rep["class_check"] = same_class_check([L], [K], suite, names=names)
    return rep


def _default_suite(ring):
    """R, R/(v) for each variable v, the residue field, and R/(x^2, xy): (names, modules)."""
    A = ring.A
    gens = A.gens()
    pairs = [("R", FpModule.free(ring))]
    for g in gens:
        pairs.append((f"R/({g})", FpModule.quotient(ring, [g])))
    pairs.append(("k", FpModule.quotient(ring, gens)))
    if len(gens) >= 2:
        a, b = gens[0], gens[1]
        pairs.append((f"R/({a ** 2}, {a * b})", FpModule.quotient(ring, [a ** 2, a * b])))
    return [n for n, _ in pairs], [m for _, m in pairs]
