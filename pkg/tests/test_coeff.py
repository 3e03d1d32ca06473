from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ncrewrite.coeff import (
    Coefficient,
    CoefficientError,
    FieldDescriptor,
    FieldMismatchError,
    RATIONALS,
    ZeroInversionError,
)

F7 = FieldDescriptor(7)


def q(value):
    return RATIONALS.coeff(value)


def test_rational_add():
    assert q(Fraction(1, 2)) + q(Fraction(1, 3)) == q(Fraction(5, 6))


def test_prime_field_mul_wraps():
    assert F7.coeff(3) * F7.coeff(5) == F7.coeff(1)


def test_additive_inverse():
    a = q(Fraction(7, 3))
    assert not (a + (-a))


def test_inv_rational():
    assert q(Fraction(3, 4)).inv() == q(Fraction(4, 3))


def test_inv_prime_field():
    inv = F7.coeff(3).inv()
    assert inv == F7.coeff(5)
    assert F7.coeff(3) * inv == F7.one()


def test_inv_one():
    for field in (RATIONALS, F7):
        assert field.one().inv() == field.one()


def test_inv_zero_raises():
    with pytest.raises(ZeroInversionError):
        RATIONALS.zero().inv()


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        q(1) + F7.coeff(1)


def test_nonprime_modulus_rejected():
    with pytest.raises(CoefficientError):
        FieldDescriptor(6)
    with pytest.raises(CoefficientError):
        FieldDescriptor(1)


rationals = st.fractions(min_value=-10**6, max_value=10**6,
                         max_denominator=10**4).map(q)
residues = st.integers(0, 6).map(F7.coeff)


@given(st.one_of(
    st.tuples(rationals, rationals, rationals),
    st.tuples(residues, residues, residues)))
def test_field_axioms(triple):
    a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == a.field.zero()


@given(st.one_of(rationals, residues))
def test_double_inverse(a):
    if a:
        assert a.inv().inv() == a
