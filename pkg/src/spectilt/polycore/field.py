"""Coefficient fields: the rationals and prime fields.

Elements are plain Python values (``gmpy2.mpq`` for QQ, ``int`` for GF(p))
so the polynomial kernels can work on them without wrapper objects.
"""

from fractions import Fraction

import gmpy2

from ..errors import InputError


class Field:
    characteristic = 0
    name = "?"

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class RationalField(Field):
    """QQ. Values are kept in lowest terms with positive denominator by mpq."""

    characteristic = 0
    name = "QQ"

    def __init__(self):
        self.zero = gmpy2.mpq(0)
        self.one = gmpy2.mpq(1)

    def __call__(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return gmpy2.mpq(value.numerator, value.denominator)
        return gmpy2.mpq(value)

    def parse(self, text):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/")
            if int(den) == 0:
                raise InputError(f"zero denominator in {text!r}")
            return gmpy2.mpq(int(num), int(den))
        return gmpy2.mpq(int(text))

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / a

    def div(self, a, b):
        return a * self.inv(b)

    @staticmethod
    def is_one(a):
        return a == 1

    @staticmethod
    def format(a):
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    @staticmethod
    def to_json(a):
        return RationalField.format(a)


def _is_prime(p):
    return p >= 2 and gmpy2.is_prime(p)


class PrimeField(Field):
    """GF(p) with residues in [0, p)."""

    def __init__(self, p):
        p = int(p)
        if not _is_prime(p):
            raise InputError(f"GF({p}): modulus is not prime")
        self.characteristic = p
        self.p = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1

    def __call__(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (Fraction,)) or hasattr(value, "denominator"):
            num, den = int(value.numerator), int(value.denominator)
            return num * self.inv(den % self.p) % self.p
        return int(value) % self.p

    def parse(self, text):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/")
            den = int(den) % self.p
            if den == 0:
                raise InputError(f"denominator {text!r} vanishes in {self.name}")
            return int(num) * self.inv(den) % self.p
        return int(text) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.name}")
        return pow(int(a), -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    @staticmethod
    def is_one(a):
        return a == 1

    def format(self, a):
        # symmetric representative reads better in printed polynomials
        a = int(a)
        if a > self.p // 2:
            return str(a - self.p)
        return str(a)

    def to_json(self, a):
        return self.format(a)


QQ = RationalField()


def field_from_name(name):
    name = name.strip()
    if name == "QQ":
        return QQ
    for prefix in ("GF(", "ZZ/("):
        if name.startswith(prefix) and name.endswith(")"):
            return PrimeField(int(name[len(prefix):-1]))
    if name.startswith("ZZ/"):
        return PrimeField(int(name[3:]))
    raise InputError(f"unknown coefficient field {name!r}")
