"""Shared helpers for the randomized property checks.

Kept outside conftest so both the property suite and the acceptance
suite can run the same identities without duplicating generators.
"""

from fractions import Fraction
from itertools import combinations
from math import comb

from koszulkit import corpus
from koszulkit.conditions import StretchedSpec
from koszulkit.errors import InputError
from koszulkit.koszul import KoszulElement, homology_algebra
from koszulkit.poly import Polynomial
from koszulkit.quotient import QuotientRing

GRADED_CORPUS = ("case66", "case54", "case55", "case71v16", "socle4")

SEED = 20260823


def random_polynomial(rng, ring, degree):
    out = ring.zero_poly()
    for mono in ring.std_basis(degree):
        c = rng.randint(-3, 3)
        if c:
            out = out + Polynomial.from_monomial(ring.n, ring.field, ring.order,
                                                 mono, ring.field.of(c))
    return out


def random_element(rng, ring, length, degree):
    """At most two terms of the given exterior length; may be zero."""
    subsets = list(combinations(range(ring.n), length))
    el = KoszulElement.zero(ring)
    for key in rng.sample(subsets, k=min(2, len(subsets))):
        p = random_polynomial(rng, ring, degree)
        if p:
            el = el + KoszulElement.term(ring, p, key)
    return el


def assert_dg_identities(rng, ring, rounds=4):
    """d^2 = 0, Leibniz, graded commutativity, associativity."""
    for _ in range(rounds):
        la = rng.randint(0, 2)
        lb = rng.randint(0, 2)
        a = random_element(rng, ring, la, rng.randint(0, 2))
        b = random_element(rng, ring, lb, rng.randint(0, 2))
        c = random_element(rng, ring, rng.randint(0, 2), 1)
        assert a.diff().diff().is_zero()
        ab = a * b
        signed = a * b.diff()
        if la % 2:
            signed = -signed
        assert ab.diff() == a.diff() * b + signed
        ba = b * a
        if la % 2 and lb % 2:
            ba = -ba
        assert ab == ba
        assert (a * b) * c == a * (b * c)


def assert_euler_identity(ring):
    """Strandwise Euler characteristics of K and H agree."""
    alg = homology_algebra(ring)
    jmax = max(j for _i, j in alg.pieces)
    for j in range(jmax + 3):
        chi_complex = sum((-1) ** i * len(ring.std_basis(j - i)) * comb(ring.n, i)
                          for i in range(min(j, ring.n) + 1))
        chi_homology = sum((-1) ** i * alg.dim(i, j)
                           for i in range(ring.n + 1))
        assert chi_complex == chi_homology, (ring.label, j)


def assert_gb_permutation_invariant(rng, name):
    defn = corpus.get_definition(name)
    rels = list(defn.relations)
    rng.shuffle(rels)
    shuffled = QuotientRing(defn.field, defn.var_names, rels, defn.order)
    assert shuffled.groebner_basis == corpus.get_ring(name).groebner_basis


_ORDER_DIMS = {}


def homology_dims_in_order(name, order):
    key = (name, order.value)
    if key not in _ORDER_DIMS:
        ring = corpus.get_definition(name).build(order=order)
        alg = homology_algebra(ring)
        _ORDER_DIMS[key] = {k: p.dim for k, p in alg.pieces.items() if p.dim}
    return _ORDER_DIMS[key]


def random_stretched_spec(rng):
    """p >= 1 so the distinguished cycle exists; resamples singular a."""
    v = rng.randint(2, 4)
    r = rng.randint(1, v - 1)
    p = v - r
    h = rng.choice((3, 4))
    while True:
        rows = [[0] * p for _ in range(p)]
        for i in range(p):
            for j in range(i, p):
                rows[i][j] = rows[j][i] = rng.randint(-2, 2)
        a = tuple(tuple(Fraction(x) for x in row) for row in rows)
        try:
            return StretchedSpec(v, r, h, a=a)
        except InputError:
            continue
