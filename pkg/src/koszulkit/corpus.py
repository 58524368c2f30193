"""Built-in ring definitions used throughout the test corpus.

Five quotients of a four-variable polynomial ring exercising the
multiplicative-structure checks, plus two small stretched artinian
samples.  Texts are in the standard ring-definition format and parse
round-trip clean.
"""

from __future__ import annotations

from .errors import InputError
from .quotient import QuotientRing
from .ringdef import RingDefinition, parse_ring_definition

_TEXTS = {
    # quadratic, nonlinear strand generated by one class in bidegree (1,2)
    "case66": """\
field Q
vars x,y,z,u
ideal:
x*z
y^2
y*u
z^2
z*u
u^2
""",
    # m^3 = 0; generated by a trivial-product set but not by one class
    "case54": """\
field Q
vars x,y,z,u
ideal:
x^2
x*z
y^2
z^2
y*u + z*u
u^2
""",
    # linear-strand generated yet not Koszul
    "case55": """\
field Q
vars x,y,z,u
ideal:
x^2 + x*y
x*z + y*u
x*u
y^2
z^2
z*u + u^2
""",
    # Koszul, but no trivial-product generating set exists
    "case71v16": """\
field Q
vars x,y,z,u
ideal:
x^2
y^2 + z^2
x*y
y*z
z*u
x*z + u^2
x*u
""",
    # level algebra of socle degree 4, defining ideal generated in degree 3
    "socle4": """\
field Q
vars a,b,c,d
ideal:
a^3
a^2*c
a^2*d
a*c^2
b^3
b^2*c
b^2*d
b*c^2
b*d^2
c^2*d
a*b^2 + c*d^2
a*b*d - c^3
b*c*d + d^3
""",
    # stretched build v=3, r=2, h=3 with a11 = 1
    "stretched32": """\
field Q
vars t,z1,w1
ideal:
w1^2
w1*z1
w1*t
z1*t
t^3 - z1^2
""",
    # stretched build v=2, r=2, h=3 (socle rank equals embedding dimension)
    "stretched22": """\
field Q
vars t,w1
ideal:
w1^2
w1*t
t^4
""",
}

_RINGS: dict[str, QuotientRing] = {}


def names() -> list[str]:
    return list(_TEXTS)


def has(name: str) -> bool:
    return name in _TEXTS


def get_text(name: str) -> str:
    try:
        return _TEXTS[name]
    except KeyError:
        raise InputError("unknown corpus ring %r; available: %s"
                         % (name, ", ".join(_TEXTS))) from None


def get_definition(name: str) -> RingDefinition:
    return parse_ring_definition(get_text(name), label=name)


def get_ring(name: str) -> QuotientRing:
    """A shared, cached ring instance in the default order."""
    ring = _RINGS.get(name)
    if ring is None:
        ring = get_definition(name).build()
        _RINGS[name] = ring
    return ring
