"""Presented rings A/I, certified primes, finite windows into Spec R."""

import re

from ..errors import InputError, InvariantError
from ..polycore import DEGREVLEX, Ideal, PolyRing, krull_dim
from ..polycore.ideal import lead_ideal_is_monomial_prime


class Ring:
    """R = A/I for an ambient polynomial ring A and a proper ideal I."""

    def __init__(self, ambient, relations=(), gorenstein=False, name=None):
        if not isinstance(ambient, PolyRing):
            raise InputError("Ring needs an ambient PolyRing")
        if ambient.order != DEGREVLEX:
            ambient = ambient.with_order(DEGREVLEX)
        self.A = ambient
        self.field = ambient.field
        self.variables = ambient.variables
        self.nvars = ambient.nvars
        self.I = Ideal(ambient, [ambient(r) for r in relations])
        if self.I.is_unit():
            raise InputError("defining ideal is the unit ideal; the quotient ring is zero",
                             code="ringspec.improper")
        self.is_ambient_polynomial = self.I.is_zero()
        # polynomial rings are regular, hence Gorenstein
        self.gorenstein = bool(gorenstein) or self.is_ambient_polynomial
        self.gorenstein_asserted = bool(gorenstein) and not self.is_ambient_polynomial
        self.name = name or "R"
        self.dim = krull_dim(self.I)
        self.is_graded = self.I.is_homogeneous()

    def __repr__(self):
        if self.is_ambient_polynomial:
            return f"{self.A}"
        return f"{self.A}/{self.I}"

    def __eq__(self, other):
        return isinstance(other, Ring) and self.A == other.A and self.I == other.I

    def __hash__(self):
        return hash((self.A, self.I.gb))

    def poly(self, value):
        return self.A(value)

    def reduce(self, value):
        return self.I.normal_form(self.A(value))

    def i_gens(self):
        return self.I.gb

    def maximal_graded_ideal(self):
        return Ideal(self.A, self.A.gens())

    def describe(self):
        return {
            "field": self.field.name,
            "variables": list(self.variables),
            "relations": [str(g) for g in self.I.gb],
            "dim": self.dim,
            "gorenstein": self.gorenstein,
        }


def polynomial_ring(field, variables, name=None):
    if isinstance(variables, str):
        variables = [v.strip() for v in variables.split(",") if v.strip()]
    return Ring(PolyRing(field, variables), name=name)


def quotient_ring(field, variables, relations, gorenstein=False, name=None):
    if isinstance(variables, str):
        variables = [v.strip() for v in variables.split(",") if v.strip()]
    A = PolyRing(field, variables)
    return Ring(A, [A(r) for r in relations], gorenstein=gorenstein, name=name)


# ---------------------------------------------------------------------------
# primes
# ---------------------------------------------------------------------------

CERTIFICATES = ("monomial", "principal", "zero-ideal", "asserted")


def _is_irreducible(f):
    import sympy

    ring = f.ring
    syms = sympy.symbols(list(ring.variables))
    expr = 0
    for e, c in f.terms.items():
        term = sympy.Rational(int(c.numerator), int(c.denominator)) if ring.field.characteristic == 0 else int(c)
        for s, k in zip(syms, e):
            term = term * s ** k
        expr += term
    kwargs = {}
    if ring.field.characteristic:
        kwargs["modulus"] = ring.field.characteristic
    _, factors = sympy.factor_list(expr, *syms, **kwargs)
    nonconst = [(g, m) for g, m in factors if sympy.Poly(g, *syms).total_degree() > 0]
    return len(nonconst) == 1 and nonconst[0][1] == 1


def _certify_ideal(ideal):
    """Certificate that an ideal of the ambient ring is prime, or None."""
    if ideal.is_zero():
        return "zero-ideal"
    if lead_ideal_is_monomial_prime(ideal) is not None:
        return "monomial"
    gb = ideal.gb
    if len(gb) == 1 and not gb[0].is_constant() and _is_irreducible(gb[0]):
        return "principal"
    return None


class Prime:
    """A prime ideal of R, stored as its preimage in the ambient ring."""

    def __init__(self, ring, ideal, certificate, height, name=None, height_override=False):
        self.ring = ring
        self.ideal = ideal
        self.certificate = certificate
        self.height = height
        self.name = name or "(" + ", ".join(self.gens_strings()) + ")"
        self.height_override = height_override

    def display_gens(self):
        return [g for g in reversed(self.ideal.gb) if not self.ring.I.contains(g)]

    @property
    def asserted(self):
        return self.certificate == "asserted"

    def contains(self, f):
        return self.ideal.contains(f)

    def __le__(self, other):
        return self.ideal.issubset(other.ideal)

    def __eq__(self, other):
        return isinstance(other, Prime) and self.ring == other.ring and self.ideal == other.ideal

    def __hash__(self):
        return hash(self.ideal.gb)

    def __repr__(self):
        return f"Prime({self.name}, ht={self.height}, {self.certificate})"

    def is_homogeneous(self):
        return self.ideal.is_homogeneous()

    def gens_strings(self):
        g = self.display_gens()
        return [str(p) for p in g] if g else ["0"]

    def to_dict(self):
        return {
            "name": self.name,
            "gens": self.gens_strings(),
            "height": self.height,
            "certificate": self.certificate,
        }


def declare_prime(R, gens, mode="prove", name=None, height=None):
    """Build a Prime of R from generators, certifying primality in 'prove' mode."""
    if mode not in ("prove", "assert"):
        raise InputError(f"unknown prime declaration mode {mode!r}")
    A = R.A
    gens = [A(g) for g in gens]
    ideal = Ideal(A, list(gens) + list(R.I.gb))
    if ideal.is_unit():
        raise InputError("prime generators give the unit ideal", code="ringspec.improper_prime")
    if ideal == R.I:
        # the zero ideal of R: prime iff R is a certified domain
        cert = "zero-ideal" if _certify_ideal(R.I) is not None else None
    else:
        cert = _certify_ideal(ideal)
    if cert is None:
        if mode == "prove":
            raise InputError(
                "no primality certificate applies (monomial / principal irreducible / "
                "zero ideal of a certified domain); declare with 'assert'",
                code="ringspec.uncertified_prime")
        cert = "asserted"
    if height is None:
        ht = R.dim - krull_dim(ideal)
        override = False
    else:
        ht = int(height)
        override = True
    if ht < 0:
        raise InvariantError(f"negative height {ht} computed for prime")
    return Prime(R, ideal, cert, ht, name=name, height_override=override)


# ---------------------------------------------------------------------------
# windows and subsets
# ---------------------------------------------------------------------------

class Window:
    """A finite set of primes of one ring with its inclusion poset."""

    def __init__(self, primes, name=None, check=True):
        primes = list(primes)
        if not primes:
            raise InputError("a window needs at least one prime")
        ring = primes[0].ring
        for p in primes:
            if p.ring != ring:
                raise InputError("window primes live over different rings")
        self.ring = ring
        self.primes = tuple(primes)
        self.name = name or "W"
        n = len(primes)
        self.leq = tuple(tuple(i == j or primes[i] <= primes[j] for j in range(n)) for i in range(n))
        if check:
            self._check()

    def _check(self):
        n = len(self.primes)
        for i in range(n):
            for j in range(i + 1, n):
                if self.leq[i][j] and self.leq[j][i]:
                    raise InputError(
                        f"window lists the same prime twice: {self.primes[i].name} = {self.primes[j].name}",
                        code="ringspec.duplicate_prime")
        for i in range(n):
            for j in range(n):
                if i != j and self.leq[i][j] and not self.primes[i].height < self.primes[j].height:
                    raise InvariantError(
                        f"height not strictly monotone: {self.primes[i].name} ⊊ {self.primes[j].name} "
                        f"but heights {self.primes[i].height}, {self.primes[j].height}")

    def __len__(self):
        return len(self.primes)

    def index(self, key):
        if isinstance(key, int):
            return key
        if isinstance(key, Prime):
            for i, p in enumerate(self.primes):
                if p == key:
                    return i
            raise InputError(f"prime {key.name} not in window {self.name}")
        for i, p in enumerate(self.primes):
            if p.name == key:
                return i
        raise InputError(f"no prime named {key!r} in window {self.name}")

    def subset(self, keys):
        return frozenset(self.index(k) for k in keys)

    def names(self, subset):
        return [self.primes[i].name for i in sorted(subset)]

    def all(self):
        return frozenset(range(len(self.primes)))

    def lt(self, i, j):
        return i != j and self.leq[i][j]

    def is_upward_closed(self, S):
        return all(j in S for i in S for j in range(len(self.primes)) if self.leq[i][j])

    def up(self, i):
        return frozenset(j for j in range(len(self.primes)) if self.leq[i][j])

    def up_closed_sets(self):
        """All upward-closed subsets, in a deterministic order."""
        n = len(self.primes)
        out = []
        for mask in range(1 << n):
            S = frozenset(i for i in range(n) if mask >> i & 1)
            if self.is_upward_closed(S):
                out.append(S)
        out.sort(key=lambda S: (len(S), sorted(S)))
        return out

    def to_dict(self):
        return {
            "name": self.name,
            "primes": [p.to_dict() for p in self.primes],
            "poset": [list(row) for row in self.leq],
        }


def spec_closure(W, S):
    """Smallest upward-closed subset of the window containing S."""
    out = set()
    for i in S:
        out |= W.up(W.index(i))
    return frozenset(out)


def minimal_elements(W, S):
    S = frozenset(W.index(i) for i in S)
    if not W.is_upward_closed(S):
        raise InputError(f"subset {W.names(S)} is not closed under specialization in {W.name}",
                         code="ringspec.not_upward_closed")
    return frozenset(i for i in S if not any(W.lt(j, i) for j in S))


class SpecSeq:
    """A sequence (Y_1, ..., Y_n) of subsets of a window."""

    def __init__(self, window, subsets, name=None):
        self.window = window
        self.Y = tuple(frozenset(window.index(k) for k in Y) for Y in subsets)
        if not self.Y:
            raise InputError("a sequence needs n >= 1")
        self.name = name

    @property
    def n(self):
        return len(self.Y)

    def __eq__(self, other):
        return isinstance(other, SpecSeq) and self.window is other.window and self.Y == other.Y

    def __hash__(self):
        return hash(self.Y)

    def truncate(self, j):
        """(Y_j, ..., Y_n) for 1 <= j <= n."""
        return SpecSeq(self.window, self.Y[j - 1:], name=None)

    def minimal(self):
        return tuple(minimal_elements(self.window, Y) for Y in self.Y)

    def is_descending(self):
        return all(self.Y[i] >= self.Y[i + 1] for i in range(len(self.Y) - 1))

    def structural_check(self):
        for i, Y in enumerate(self.Y, 1):
            if not self.window.is_upward_closed(Y):
                raise InputError(f"Y{i} is not closed under specialization", code="classify.invalid_sequence")
        if not self.is_descending():
            raise InputError("sequence is not descending", code="classify.invalid_sequence")

    def to_list(self):
        return [self.window.names(Y) for Y in self.Y]

    def label(self):
        return "; ".join(f"Y{i}={','.join(self.window.names(Y))}" for i, Y in enumerate(self.Y, 1))

    def sort_key(self):
        return (tuple(len(Y) for Y in self.Y), tuple(tuple(sorted(Y)) for Y in self.Y))

    @classmethod
    def parse(cls, window, text, name=None):
        """Parse ``"Y1=p1,p3; Y2=p3"`` (empty right-hand sides allowed)."""
        parts = [p.strip() for p in text.split(";") if p.strip()]
        found = {}
        for part in parts:
            m = re.fullmatch(r"Y(\d+)\s*=\s*(.*)", part)
            if not m:
                raise InputError(f"bad sequence component {part!r}; expected Yi=p,q,...")
            i = int(m.group(1))
            names = [s.strip() for s in m.group(2).replace("{", "").replace("}", "").split(",") if s.strip()]
            if i in found:
                raise InputError(f"Y{i} given twice")
            found[i] = names
        if not found:
            raise InputError("empty sequence")
        n = max(found)
        if sorted(found) != list(range(1, n + 1)):
            raise InputError(f"sequence components must be Y1..Y{n}")
        return cls(window, [found[i] for i in range(1, n + 1)], name=name)
