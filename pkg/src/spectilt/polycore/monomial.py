"""Exponent-vector monomials and monomial orders.

A monomial is a tuple of non-negative ints, one slot per ambient variable.
Orders are exposed through a sort key: ``key(a) > key(b)`` iff ``a > b``.
"""

from functools import lru_cache

from ..errors import InputError


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(b, a):
    return all(y <= x for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def mono_gcd_is_one(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


class MonomialOrder:
    """lex or degrevlex, optionally on a permutation of the variables.

    ``perm[0]`` is the largest variable.
    """

    KINDS = ("lex", "degrevlex", "elim")

    def __init__(self, kind="degrevlex", perm=None, nelim=0):
        if kind not in self.KINDS:
            raise InputError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.perm = tuple(perm) if perm is not None else None
        self.nelim = nelim
        if kind == "lex":
            self.key = lru_cache(maxsize=None)(self._lex_key)
        elif kind == "elim":
            self.key = lru_cache(maxsize=None)(self._elim_key)
        else:
            self.key = lru_cache(maxsize=None)(self._drl_key)

    def _lex_key(self, e):
        if self.perm is None:
            return e
        return tuple(e[i] for i in self.perm)

    def _drl_key(self, e):
        if self.perm is None:
            return (sum(e),) + tuple(-x for x in reversed(e))
        return (sum(e),) + tuple(-e[i] for i in reversed(self.perm))

    def _elim_key(self, e):
        # product of two degrevlex orders: the first nelim variables dominate
        k = self.nelim
        a, b = e[:k], e[k:]
        return ((sum(a),) + tuple(-x for x in reversed(a))
                + (sum(b),) + tuple(-x for x in reversed(b)))

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and self.kind == other.kind
                and self.perm == other.perm and self.nelim == other.nelim)

    def __hash__(self):
        return hash((self.kind, self.perm, self.nelim))

    def __repr__(self):
        if self.perm is None:
            return f"MonomialOrder({self.kind!r})"
        return f"MonomialOrder({self.kind!r}, perm={self.perm})"

    @property
    def is_graded(self):
        return self.kind == "degrevlex"


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def elimination_order(nelim):
    """Block order eliminating the first ``nelim`` variables."""
    return MonomialOrder("elim", nelim=nelim)
