"""Support, associated primes and torsion splittings relative to a window."""

from dataclasses import dataclass

from ..errors import BudgetError
from ..homalg import FpModule, annihilator, bass_invariant, prune
from ..homalg.module import poly_at
from ..homalg.syz import module_quotient_generators, subquotient
from ..polycore import intersect
from .rings import minimal_elements


def supp_in_window(M, W):
    """Window primes containing ann(M)."""
    if M.is_zero():
        return frozenset()
    ann = annihilator(M)
    return frozenset(i for i, p in enumerate(W.primes) if ann.issubset(p.ideal))


def ass_in_window(M, W, jobs=1):
    """Window primes with mu_0(p, M) != 0."""
    if M.is_zero():
        return frozenset()
    if jobs and jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(jobs) as ex:
            vals = list(ex.map(lambda p: bass_invariant(0, p, M), W.primes))
    else:
        vals = [bass_invariant(0, p, M) for p in W.primes]
    return frozenset(i for i, v in enumerate(vals) if v)


@dataclass
class TorsionSplit:
    """0 -> T -> M -> F -> 0 with T = Gamma_J(M).

    ``inclusion`` lists the images of T's generators in M's generators;
    the projection M -> F is the identity on generators.
    """

    T: FpModule
    F: FpModule
    inclusion: list
    steps: int
    ideal: object


def _saturate_submodule(M, polys, cap=64):
    """Generators of (N : J^inf) in A^g, N = relations of M."""
    ring = M.ring
    cur = FpModule(ring, M.degrees, M.relations, check=False)
    for step in range(1, cap + 1):
        gens = module_quotient_generators(cur, polys)
        nxt = FpModule(ring, M.degrees, gens, check=False)
        if all(cur.contains_relation(v) for v in gens):
            return list(cur.relations), step
        cur = nxt
    raise BudgetError(f"module saturation did not stabilise within {cap} steps",
                      code="ringspec.saturation_cap")


def torsion_part(M, W, Y):
    """Split M by the Gabriel topology of the specialization-closed set Y."""
    ring = M.ring
    Ybar = minimal_elements(W, Y)
    if not Ybar:
        return TorsionSplit(FpModule.zero(ring), M, [], 0, None)
    J = None
    for i in sorted(Ybar):
        P = W.primes[i].ideal
        J = P if J is None else intersect(J, P)
    polys = [g for g in J.gb if not ring.I.contains(g)]
    if not polys:
        # J is the zero ideal of R: everything is torsion
        zero = (0,) * ring.nvars
        inc = [{(j,) + zero: ring.field.one} for j in range(M.ngens)]
        return TorsionSplit(M, FpModule.zero(ring), inc, 0, J)
    sat, steps = _saturate_submodule(M, polys)
    T = subquotient(ring, M.degrees, sat, list(M.relations))
    F = prune(FpModule(ring, M.degrees, sat, check=False))
    return TorsionSplit(prune(T), F, sat, steps, J)


def is_divisible(M, prime):
    """p M = M, i.e. R/p (x) M = 0."""
    ring = M.ring
    pgens = [g for g in prime.ideal.gb if not ring.I.contains(g)]
    extra = [poly_at(g, j) for g in pgens for j in range(M.ngens)]
    Q = FpModule(ring, M.degrees, list(M.relations) + extra, graded=M.graded and prime.is_homogeneous(),
                 check=False)
    return Q.is_zero()
