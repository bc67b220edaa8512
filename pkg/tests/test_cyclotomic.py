from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reflect_gkm.cyclotomic import (
    ConductorMismatch,
    CycNum,
    cyclotomic_polynomial,
    euler_phi,
    parse_cyc,
    root_of_unity,
)


def test_cyclotomic_polynomial_table():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_euler_phi():
    assert [euler_phi(m) for m in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_inverse_of_one_plus_zeta3():
    # 1 + zeta_3 has inverse -zeta_3 since (1 + z)(-z) = -z - z^2 = 1 mod z^2+z+1
    a = 1 + root_of_unity(3, 1)
    inv = a.inverse()
    assert inv == -root_of_unity(3, 1)
    assert a * inv == 1


def test_power_sum_cancellation():
    # sum of zeta_m^{kj} over j vanishes unless m divides k
    for m in range(2, 10):
        z = root_of_unity(m, 1)
        for k in range(2 * m):
            total = CycNum.zero(m)
            for j in range(m):
                total = total + z ** (k * j)
            if k % m == 0:
                assert total == m
            else:
                assert total == 0, (m, k)


def test_root_of_unity_conductor_normalization():
    a = root_of_unity(6, 2)
    assert a.conductor == 3
    assert a == root_of_unity(3, 1)
    assert root_of_unity(4, 2) == -1
    assert root_of_unity(4, 2).conductor == 2
    one = root_of_unity(5, 0)
    assert one.conductor == 1 and one == 1


def test_cross_conductor_equality_and_hash():
    z6 = root_of_unity(6, 1)
    z3 = root_of_unity(3, 1)
    assert z6.conductor == 6
    assert z6 == 1 + z3
    assert hash(z6) == hash(1 + z3)
    small = z6.minimal()
    assert small.conductor == 3
    assert small.coeffs == (Fraction(1), Fraction(1))
    half = CycNum.rational(12, Fraction(1, 2))
    assert hash(half) == hash(Fraction(1, 2))
    assert half == Fraction(1, 2)


def test_conductor_mismatch_is_a_fault():
    with pytest.raises(ConductorMismatch):
        CycNum.one(3) + CycNum.one(4)
    with pytest.raises(ConductorMismatch):
        CycNum.one(3) * root_of_unity(4, 1)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        CycNum.zero(5).inverse()
    with pytest.raises(ZeroDivisionError):
        1 / CycNum.zero(4)


def test_negative_powers():
    a = 1 + root_of_unity(3, 1)
    assert a ** (-2) * a**2 == 1
    assert a**0 == 1


def test_text_examples():
    v = CycNum(12, [Fraction(-1), Fraction(0), Fraction(1, 2)])
    assert v.text() == "1/2*z^2 - 1"
    assert parse_cyc(v.text(), 12) == v
    assert parse_cyc("z", 4) == root_of_unity(4, 1)
    assert parse_cyc("-z^3 + 2", 8) == 2 - root_of_unity(8, 3)
    assert parse_cyc("0", 7) == 0
    assert CycNum.zero(9).text() == "0"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_cyc("z^", 4)
    with pytest.raises(ValueError):
        parse_cyc("2**z", 4)
    with pytest.raises(ValueError):
        parse_cyc("", 4)


_coeff = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def _cyc12(coeffs):
    return CycNum(12, coeffs)


@settings(max_examples=60)
@given(st.lists(_coeff, min_size=4, max_size=4), st.lists(_coeff, min_size=4, max_size=4), st.lists(_coeff, min_size=4, max_size=4))
def test_field_axioms(a, b, c):
    x, y, z = _cyc12(a), _cyc12(b), _cyc12(c)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == 0
    if y:
        assert (x / y) * y == x


@settings(max_examples=60)
@given(st.lists(_coeff, min_size=4, max_size=4))
def test_text_round_trip(coeffs):
    v = _cyc12(coeffs)
    assert parse_cyc(v.text(), 12) == v
