"""Rational Poincare-series formulas and exact power-series expansion.

Polynomials in z are integer coefficient lists, ascending powers, no
trailing zeros.  Rational functions are reduced by exact univariate GCD
over the rationals with integer-content normalization, and carry a
denominator with constant term 1 so expansion is a linear recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Sequence

from .errors import InputError

IntPoly = tuple  # integer coefficients, ascending


def _trim(coeffs) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a, b) -> tuple:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(n))


def poly_neg(a) -> tuple:
    return tuple(-x for x in a)


def poly_sub(a, b) -> tuple:
    return poly_add(a, poly_neg(b))


def poly_mul(a, b) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def poly_scale(a, s) -> tuple:
    return _trim(x * s for x in a)


def binomial_power(n: int) -> tuple:
    """(1+z)^n as an integer coefficient tuple."""
    out = (1,)
    for _ in range(n):
        out = poly_mul(out, (1, 1))
    return out


def _divmod_q(a: Sequence[Fraction], b: Sequence[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    while a and not a[-1]:
        a.pop()
    return q, a


def _gcd_q(a, b):
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    while b:
        _, r = _divmod_q(a, b)
        a, b = b, r
    if not a:
        return [Fraction(1)]
    lead = a[-1]
    return [x / lead for x in a]


def _primitive(coeffs_q) -> tuple:
    """Clear denominators and content; positive leading coefficient."""
    from math import lcm
    den = 1
    for c in coeffs_q:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in coeffs_q]
    g = 0
    for c in ints:
        g = int_gcd(g, abs(c))
    g = g or 1
    if ints[-1] < 0:
        g = -g
    return tuple(c // g for c in ints)


def _exact_div(a, b) -> tuple:
    """a / b for integer polys when the division is exact."""
    q, r = _divmod_q([Fraction(x) for x in a], [Fraction(x) for x in b])
    if r:
        raise ArithmeticError("inexact polynomial division")
    out = []
    for c in q:
        if c.denominator != 1:
            raise ArithmeticError("non-integer quotient coefficient")
        out.append(int(c))
    return _trim(out)


def poly_str(coeffs) -> str:
    """Ascending-power rendering like 1-z-12z^2-10z^3."""
    if not coeffs:
        return "0"
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        elif mag == 1:
            body = "z" if i == 1 else "z^%d" % i
        else:
            body = "%dz" % mag if i == 1 else "%dz^%d" % (mag, i)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts)


@dataclass(frozen=True)
class RationalFunctionZ:
    """A reduced fraction of integer polynomials with den(0) = 1."""

    num: tuple
    den: tuple

    @classmethod
    def make(cls, num, den) -> "RationalFunctionZ":
        num = _trim(num)
        den = _trim(den)
        if not den or den[0] == 0:
            raise InputError("denominator must have nonzero constant term")
        if not num:
            return cls((), (1,))
        g = _primitive(_gcd_q(num, den))
        if len(g) > 1 or abs(g[0]) != 1:
            num = _exact_div(num, g)
            den = _exact_div(den, g)
        if den[0] != 1:
            # den(0) = -1 after reduction, or a shared integer factor
            num = _exact_div(num, (den[0],))
            den = _exact_div(den, (den[0],))
        return cls(num, den)

    def __mul__(self, other):
        if isinstance(other, int):
            other = RationalFunctionZ.make((other,), (1,))
        if not isinstance(other, RationalFunctionZ):
            return NotImplemented
        return RationalFunctionZ.make(poly_mul(self.num, other.num),
                                      poly_mul(self.den, other.den))

    __rmul__ = __mul__

    def __add__(self, other):
        if isinstance(other, int):
            other = RationalFunctionZ.make((other,), (1,))
        if not isinstance(other, RationalFunctionZ):
            return NotImplemented
        return RationalFunctionZ.make(
            poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den)),
            poly_mul(self.den, other.den))

    def __str__(self):
        num, e = self.num, 0
        while len(num) > 1:
            try:
                num = _exact_div(num, (1, 1))
            except ArithmeticError:
                break
            e += 1
        if e == 0:
            head = poly_str(num) if len(num) <= 1 else "(%s)" % poly_str(num)
        else:
            factor = "(1+z)" if e == 1 else "(1+z)^%d" % e
            if num == (1,):
                head = factor
            elif len(num) == 1:
                head = "%s*%s" % (poly_str(num), factor)
            else:
                head = "%s*(%s)" % (factor, poly_str(num))
        if self.den == (1,):
            return head
        return "%s/(%s)" % (head, poly_str(self.den))

    def __repr__(self):
        return "<rf %s>" % self


def rf_equal(f: RationalFunctionZ, g: RationalFunctionZ) -> bool:
    return poly_mul(f.num, g.den) == poly_mul(g.num, f.den)


def expand(f: RationalFunctionZ, limit: int) -> list[int]:
    """Power-series coefficients of f through degree limit."""
    out = []
    den = f.den
    for k in range(limit + 1):
        c = f.num[k] if k < len(f.num) else 0
        for m in range(1, min(k, len(den) - 1) + 1):
            c -= den[m] * out[k - m]
        out.append(c)
    return out


def _check_h(h) -> tuple:
    h = _trim(h)
    if not h or h[0] != 1:
        raise InputError("homology Hilbert polynomial must have constant term 1")
    return h


def golod_quotient_series(n: int, h) -> RationalFunctionZ:
    """(1+z)^n / (1 - z(h(z)-1)) for a Golod quotient with homology dims h."""
    h = _check_h(h)
    den = poly_sub((1,), poly_mul((0, 1), poly_sub(h, (1,))))
    return RationalFunctionZ.make(binomial_power(n), den)


def golod_formula_series(n: int, a: int, h) -> RationalFunctionZ:
    """(1+z)^n / (1 - z(h(z)-1) + a z^2 (1+z)^n), top socle rank a >= 1."""
    h = _check_h(h)
    if a < 1:
        raise InputError("the top-power dimension a must be at least 1")
    top = binomial_power(n)
    den = poly_add(poly_sub((1,), poly_mul((0, 1), poly_sub(h, (1,)))),
                   poly_scale(poly_mul((0, 0, 1), top), a))
    return RationalFunctionZ.make(top, den)


def stretched_series(v: int, r: int) -> RationalFunctionZ:
    """Residue-field Poincare series of a stretched artinian ring."""
    if not 1 <= r <= v:
        raise InputError("need 1 <= r <= v, got r=%d v=%d" % (r, v))
    if r == v:
        return RationalFunctionZ.make((1,), (1, -v))
    return RationalFunctionZ.make((1,), (1, -v, 1))
