import pytest

from koszulkit.errors import InputError
from koszulkit.series import (RationalFunctionZ, expand, golod_formula_series,
                              golod_quotient_series, poly_str, rf_equal,
                              stretched_series)


def rf(num, den):
    return RationalFunctionZ.make(num, den)


def test_make_reduces_and_is_idempotent():
    f = rf((1, 2, 1), (1, 1))          # (1+z)^2/(1+z) -> (1+z)/1
    assert f.num == (1, 1) and f.den == (1,)
    g = rf(f.num, f.den)
    assert g.num == f.num and g.den == f.den


def test_make_normalizes_sign_and_content():
    f = rf((-2, -2), (-2,))
    assert f.num == (1, 1) and f.den == (1,)
    with pytest.raises(InputError):
        rf((1,), (0, 1))


def test_rf_equality_across_representations():
    reduced = rf((1,), (1, -2))
    padded = RationalFunctionZ((1, 1), (1, -1, -2))  # (1+z)/((1+z)(1-2z))
    assert rf_equal(reduced, padded)
    assert not rf_equal(reduced, rf((1,), (1, -3)))


def test_multiplication_associative():
    a = rf((1, 1), (1, -1))
    b = rf((2,), (1, 0, 1))
    c = rf((1, 0, -1), (1, 5))
    left = (a * b) * c
    right = a * (b * c)
    assert rf_equal(left, right)
    assert left.num == right.num and left.den == right.den


def test_expand_geometric():
    assert expand(rf((1,), (1, -2)), 6) == [1, 2, 4, 8, 16, 32, 64]
    assert expand(rf((1, 1), (1,)), 3) == [1, 1, 0, 0]


def test_poly_str_layout():
    assert poly_str((1, -1, -12, -10, -1, 2)) == "1-z-12z^2-10z^3-z^4+2z^5"
    assert poly_str((0, 1)) == "z"
    assert poly_str(()) == "0"


def test_str_factors_binomial_numerators():
    f = golod_formula_series(4, 2, [1, 15, 30, 23, 7])
    assert str(f) == "(1+z)^3/(1-z-12z^2-10z^3-z^4+2z^5)"


def test_golod_formula_expansion():
    f = golod_formula_series(4, 2, [1, 15, 30, 23, 7])
    assert expand(f, 5) == [1, 4, 19, 78, 347, 1475]


def test_golod_quotient_series_small():
    f = golod_quotient_series(2, [1, 3, 2])
    assert str(f) == "1/(1-2z)"
    assert expand(f, 5) == [1, 2, 4, 8, 16, 32]


def test_stretched_series_values():
    assert str(stretched_series(3, 2)) == "1/(1-3z+z^2)"
    assert expand(stretched_series(3, 2), 4) == [1, 3, 8, 21, 55]
    assert str(stretched_series(2, 2)) == "1/(1-2z)"
    assert expand(stretched_series(2, 2), 4) == [1, 2, 4, 8, 16]
    assert expand(stretched_series(1, 1), 3) == [1, 1, 1, 1]


def test_h_polynomial_validation():
    with pytest.raises(InputError):
        golod_quotient_series(3, [2, 1])
    with pytest.raises(InputError):
        golod_formula_series(3, 0, [1, 2])
    with pytest.raises(InputError):
        stretched_series(2, 3)
