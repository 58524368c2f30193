import pytest

from koszulkit.errors import InputError
from koszulkit.fields import DEFAULT_MODULUS, PrimeField, QQ, is_prime


def test_rational_arithmetic_is_exact():
    third = QQ.of(1) / QQ.of(3)
    sixth = QQ.of(1) / QQ.of(6)
    assert third + sixth == QQ.of(1) / QQ.of(2)
    assert third * QQ.of(3) == QQ.one
    assert QQ.zero + QQ.one == QQ.one


def test_prime_field_inverses():
    gf = PrimeField(7)
    for v in range(1, 7):
        a = gf.of(v)
        assert a * (gf.one / a) == gf.one
    assert gf.of(7) == gf.zero
    assert gf.of(-1) == gf.of(6)


def test_default_modulus_is_prime():
    assert is_prime(DEFAULT_MODULUS)
    assert PrimeField().p == DEFAULT_MODULUS


def test_non_prime_modulus_rejected():
    with pytest.raises(InputError):
        PrimeField(4)
    with pytest.raises(InputError):
        PrimeField(1)


def test_field_equality_and_hash():
    assert PrimeField(7) == PrimeField(7)
    assert PrimeField(7) != PrimeField(11)
    assert len({PrimeField(7), PrimeField(7), QQ}) == 2
