"""Coefficient fields: exact rationals and prime fields GF(p).

Field elements are plain Python objects supporting +, -, *, / and ==.
Rationals are gmpy2.mpq values (fractions.Fraction if gmpy2 is absent),
always in lowest terms with positive denominator.  Prime-field elements
are GFElement instances holding a residue in [0, p).
"""

from __future__ import annotations

from .errors import InputError

try:
    from gmpy2 import mpq as _mpq

    def _rational(num, den=1):
        return _mpq(num, den)

except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _mpq

    def _rational(num, den=1):
        return _mpq(num, den)


DEFAULT_MODULUS = 32003


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class GFElement:
    """Residue class modulo a prime, with field arithmetic."""

    __slots__ = ("p", "v")

    def __init__(self, p: int, v: int):
        self.p = p
        self.v = v % p

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise ValueError("mixed moduli %d and %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return GFElement(self.p, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.p, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.p, self.v - o.v)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.p, o.v - self.v)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.p, self.v * o.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        # Fermat inverse: o^(p-2)
        return GFElement(self.p, self.v * pow(o.v, self.p - 2, self.p))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o.__truediv__(self)

    def __neg__(self):
        return GFElement(self.p, -self.v)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "GF(%d)(%d)" % (self.p, self.v)

    def __str__(self):
        return str(self.v)


class RationalField:
    """The field of exact rational numbers."""

    char = 0

    def of(self, value):
        """Coerce an int (or rational) into the field."""
        return _rational(value)

    @property
    def zero(self):
        return _rational(0)

    @property
    def one(self):
        return _rational(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The finite field GF(p) for a prime modulus p."""

    def __init__(self, p: int = DEFAULT_MODULUS):
        if not is_prime(p):
            raise InputError("modulus %r is not prime" % (p,))
        self.p = p
        self.char = p

    def of(self, value):
        if isinstance(value, GFElement):
            if value.p != self.p:
                raise ValueError("mixed moduli")
            return value
        return GFElement(self.p, int(value))

    @property
    def zero(self):
        return GFElement(self.p, 0)

    @property
    def one(self):
        return GFElement(self.p, 1)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = RationalField()
