import random

import pytest

from koszulkit import corpus
from koszulkit.poly import MonomialOrder
from koszulkit.series import (RationalFunctionZ, expand, golod_formula_series,
                              rf_equal, stretched_series)

from support import (GRADED_CORPUS, SEED, assert_dg_identities,
                     assert_euler_identity, assert_gb_permutation_invariant,
                     homology_dims_in_order)


def seeded(tag):
    return random.Random("%d:%s" % (SEED, tag))


@pytest.mark.parametrize("name", corpus.names())
def test_dg_identities(name):
    assert_dg_identities(seeded(name), corpus.get_ring(name))


@pytest.mark.parametrize("name", GRADED_CORPUS)
def test_euler_identity(name):
    assert_euler_identity(corpus.get_ring(name))


@pytest.mark.parametrize("name", ["case54", "case71v16", "socle4"])
def test_groebner_basis_ignores_generator_order(name):
    assert_gb_permutation_invariant(seeded("gb:" + name), name)


@pytest.mark.parametrize("name", ["case54", "case66"])
def test_homology_dims_match_across_orders(name):
    lex = homology_dims_in_order(name, MonomialOrder("lex"))
    grevlex = homology_dims_in_order(name, MonomialOrder("grevlex"))
    assert lex == grevlex


def random_rf(rng):
    num = [rng.randint(-4, 4) for _ in range(rng.randint(1, 4))]
    # constant term 1 keeps the fraction inside the integer-coefficient domain
    den = [rng.choice((1, -1))] + [rng.randint(-3, 3)
                                   for _ in range(rng.randint(0, 3))]
    return RationalFunctionZ.make(num, den)


def test_rational_function_ring_identities():
    rng = seeded("rf")
    for _ in range(25):
        a, b, c = (random_rf(rng) for _ in range(3))
        assert rf_equal((a * b) * c, a * (b * c))
        assert rf_equal(a * (b + c), a * b + a * c)
        d = a + b
        assert d.num == (b + a).num and d.den == (b + a).den


def test_series_coefficients_stay_nonnegative():
    for v in range(1, 5):
        for r in range(1, v + 1):
            assert all(x >= 0 for x in expand(stretched_series(v, r), 12))
    golod = golod_formula_series(4, 2, [1, 15, 30, 23, 7])
    coeffs = expand(golod, 10)
    assert all(x > 0 for x in coeffs)
    assert coeffs == sorted(coeffs)
