"""Multivariate polynomials over QQ or GF(p) and their text grammar."""

import re

from ..errors import InputError
from .field import QQ
from .monomial import DEGREVLEX, mono_mul


class PolyRing:
    """The ambient ring k[x_1..x_m] with a fixed monomial order."""

    def __init__(self, field, variables, order=DEGREVLEX):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise InputError(f"repeated variable names in {variables}")
        for v in variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
                raise InputError(f"bad variable name {v!r}")
        self.field = field
        self.variables = variables
        self.nvars = len(variables)
        self.order = order
        self._index = {v: i for i, v in enumerate(variables)}
        self.unit_exp = (0,) * self.nvars

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.variables == other.variables and self.order == other.order)

    def __hash__(self):
        return hash((self.field, self.variables, self.order))

    def __repr__(self):
        return f"{self.field.name}[{','.join(self.variables)}]"

    def with_order(self, order):
        return PolyRing(self.field, self.variables, order)

    def __call__(self, value):
        if isinstance(value, Poly):
            if value.ring.field != self.field or value.ring.variables != self.variables:
                raise InputError("polynomial from a different ring")
            return Poly(self, value.terms)
        if isinstance(value, str):
            return parse_poly(self, value)
        c = self.field(value)
        return Poly(self, {self.unit_exp: c} if c else {})

    @property
    def zero(self):
        return Poly(self, {})

    @property
    def one(self):
        return Poly(self, {self.unit_exp: self.field.one})

    def gens(self):
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(Poly(self, {tuple(e): self.field.one}))
        return out

    def var(self, name):
        if name not in self._index:
            raise InputError(f"unknown variable {name!r} in {self}")
        e = [0] * self.nvars
        e[self._index[name]] = 1
        return Poly(self, {tuple(e): self.field.one})

    def monomial(self, exps, coeff=None):
        c = self.field.one if coeff is None else self.field(coeff)
        return Poly(self, {tuple(exps): c} if c else {})

    def index(self, name):
        return self._index[name]


class Poly:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- structure -------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self, order=None):
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def lead_monomial(self, order=None):
        if not self.terms:
            raise InputError("zero polynomial has no leading monomial")
        key = (order or self.ring.order).key
        return max(self.terms, key=key)

    def lead_coeff(self, order=None):
        return self.terms[self.lead_monomial(order)]

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_coeff(self):
        return self.terms.get(self.ring.unit_exp, self.ring.field.zero)

    def support(self):
        """Indices of variables occurring in some term."""
        s = set()
        for e in self.terms:
            s.update(i for i, x in enumerate(e) if x)
        return s

    def check_invariants(self):
        for e, c in self.terms.items():
            assert len(e) == self.ring.nvars
            assert all(x >= 0 for x in e)
            assert c, "zero coefficient stored"
        return True

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        return self.ring(other)

    def __add__(self, other):
        other = self._coerce(other)
        F = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = F.add(out.get(e, F.zero), c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Poly(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        F = self.ring.field
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                v = F.add(out.get(e, F.zero), F.mul(c1, c2))
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise InputError("negative polynomial power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        F = self.ring.field
        if not c:
            return self.ring.zero
        return Poly(self.ring, {e: F.mul(v, c) for e, v in self.terms.items()})

    def mul_monomial(self, m, c=None):
        F = self.ring.field
        if c is None:
            return Poly(self.ring, {mono_mul(e, m): v for e, v in self.terms.items()})
        return Poly(self.ring, {mono_mul(e, m): F.mul(v, c) for e, v in self.terms.items()})

    def monic(self, order=None):
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lead_coeff(order)))

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        try:
            return self.terms == self.ring(other).terms
        except Exception:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


# ---------------------------------------------------------------------------
# text grammar
# ---------------------------------------------------------------------------

def _format_monomial(ring, e):
    parts = []
    for v, x in zip(ring.variables, e):
        if x == 1:
            parts.append(v)
        elif x > 1:
            parts.append(f"{v}^{x}")
    return "*".join(parts)


def format_poly(p, order=None):
    """Canonical text form; ``parse_poly(ring, format_poly(p)) == p``."""
    if not p.terms:
        return "0"
    F = p.ring.field
    out = []
    for i, (e, c) in enumerate(p.sorted_terms(order)):
        s = F.format(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        mono = _format_monomial(p.ring, e)
        if mono:
            body = mono if s == "1" else f"{s}*{mono}"
        else:
            body = s
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^|\*|\+|-|/|\(|\)))")


def _tokenize(text):
    pos = 0
    toks = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise InputError(f"unexpected character {text[pos]!r} at column {pos + 1} in {text!r}")
        if m.group(1) is not None:
            toks.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("var", m.group(2), m.start(2)))
        else:
            toks.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    return toks


class _PolyParser:
    # expr := ['+'|'-'] term (('+'|'-') term)*
    # term := factor (('*'|'/') factor)*      ('/' only by a nonzero constant)
    # factor := atom ['^' num]
    # atom := num | var | '(' expr ')'

    def __init__(self, ring, text):
        self.ring = ring
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("eof", "", len(self.text))

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def fail(self, expected):
        kind, val, col = self.peek()
        got = "end of input" if kind == "eof" else repr(val)
        raise InputError(f"expected {expected} at column {col + 1}, got {got} in {self.text!r}")

    def parse(self):
        p = self.expr()
        if self.peek()[0] != "eof":
            self.fail("'+', '-', '*' or end of input")
        return p

    def expr(self):
        sign = 1
        if self.peek()[:2] in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            q = self.factor()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant() or q.is_zero():
                    raise InputError(f"division only by nonzero constants in {self.text!r}")
                p = p.scale(self.ring.field.inv(q.constant_coeff()))
        return p

    def factor(self):
        p = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, val, _ = self.peek()
            if kind != "num":
                self.fail("exponent")
            self.take()
            p = p ** int(val)
        return p

    def atom(self):
        kind, val, _ = self.peek()
        if kind == "num":
            self.take()
            return self.ring(int(val))
        if kind == "var":
            self.take()
            if val not in self.ring._index:
                raise InputError(f"unknown variable {val!r} in {self.text!r} (ring {self.ring})")
            return self.ring.var(val)
        if (kind, val) == ("op", "("):
            self.take()
            p = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("')'")
            self.take()
            return p
        self.fail("number, variable or '('")


def parse_poly(ring, text):
    return _PolyParser(ring, text).parse()


def poly_ring(field=QQ, variables=("x", "y"), order=DEGREVLEX):
    if isinstance(variables, str):
        variables = [v.strip() for v in variables.split(",") if v.strip()]
    return PolyRing(field, variables, order)
