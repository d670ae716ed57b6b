"""Factored products of cyclotomics and Pochhammer symbols.

The d = 1 factor stands for 1 - q, not the monic q - 1, so products of
(1 - q^h) factors carry no hidden sign. Everything here leans on that.
"""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcongruence.bigpoly import IntPoly
from qcongruence.cyclotomic import divisors, phi
from qcongruence.exceptions import DomainError
from qcongruence.qseries import (FactoredQ, mul_factored, poch_ratio,
                                 pochhammer, pow_factored, qbinom_int)


def one_minus_q_to_the(h):
    """1 - q^h expanded directly, the reference for factored results."""
    return IntPoly([1] + [0] * (h - 1) + [-1])


def test_factored_one_and_zero():
    one = FactoredQ.one()
    assert one.sign == 1 and one.qexp == 0 and one.factors == ()
    assert not FactoredQ.one().is_zero
    assert FactoredQ.zero().is_zero
    assert repr(FactoredQ.zero()) == "0"


def test_repr_sorted_by_index():
    f = pochhammer(1, 2, 2)  # (1-q)(1-q^3)
    assert repr(f) == "Phi_1^2 * Phi_3"


def test_pochhammer_positive_exponents():
    # (q; q)_3 = (1-q)(1-q^2)(1-q^3)
    f = pochhammer(1, 1, 3)
    assert f.sign == 1 and f.qexp == 0
    assert dict(f.factors) == {1: 3, 2: 1, 3: 1}
    want = one_minus_q_to_the(1) * one_minus_q_to_the(2) * one_minus_q_to_the(3)
    got = f.expand()
    assert got.den == IntPoly(1) and got.shift == 0
    assert got.num == want


def test_pochhammer_zero_factor():
    assert pochhammer(0, 2, 1).is_zero
    assert pochhammer(-4, 2, 3).is_zero  # hits exponent 0 at i = 2
    assert pochhammer(5, 5, 0) == FactoredQ.one()


def test_pochhammer_negative_exponent_sign_flip():
    # (q^-1; q^2)_2 = (1 - q^-1)(1 - q) = -q^-1 (1-q)^2
    f = pochhammer(-1, 2, 2)
    assert f.sign == -1 and f.qexp == -1
    assert dict(f.factors) == {1: 2}


@given(st.integers(1, 15), st.integers(1, 6), st.integers(0, 6))
@settings(max_examples=60, deadline=None)
def test_pochhammer_expand_matches_direct_product(a, m, k):
    f = pochhammer(a, m, k)
    direct = IntPoly(1)
    for i in range(k):
        direct = direct * one_minus_q_to_the(a + i * m)
    got = f.expand()
    assert got.den == IntPoly(1) and got.shift == 0
    assert got.num == direct


def test_mul_and_pow_cancel():
    f = pochhammer(1, 2, 3)
    g = f.inverse()
    assert mul_factored(f, g) == FactoredQ.one()
    assert pow_factored(f, 0) == FactoredQ.one()
    assert pow_factored(f, 2) == mul_factored(f, f)
    assert pow_factored(f, -1) == g


def test_pow_zero_cases():
    assert pow_factored(FactoredQ.zero(), 3).is_zero
    with pytest.raises(ZeroDivisionError):
        pow_factored(FactoredQ.zero(), -1)


def test_value_at_one():
    # (q; q)_2 = (1-q)(1-q^2) vanishes at q = 1
    assert pochhammer(1, 1, 2).value_at_one() == 0
    # Phi_2 * Phi_3 at 1 is 2 * 3
    f = pochhammer(1, 1, 2).inverse() * pochhammer(1, 1, 2)
    assert f.value_at_one() == 1
    with pytest.raises(DomainError):
        pochhammer(1, 1, 2).inverse().value_at_one()


def test_exponent_of():
    f = pochhammer(1, 2, 3)  # (1-q)(1-q^3)(1-q^5)
    assert f.exponent_of(1) == 3
    assert f.exponent_of(3) == 1
    assert f.exponent_of(5) == 1
    assert f.exponent_of(4) == 0


def test_is_laurent_poly():
    assert pochhammer(1, 1, 3).is_laurent_poly
    assert not pochhammer(1, 1, 3).inverse().is_laurent_poly


def test_qbinom_small_table():
    # [4 over 2]_q = 1 + q + 2q^2 + q^3 + q^4
    f = qbinom_int(4, 2)
    assert f.expand().num == IntPoly(1, 1, 2, 1, 1)
    assert f.value_at_one() == 6
    assert qbinom_int(5, 0) == FactoredQ.one()
    assert qbinom_int(3, 5).is_zero


@given(st.integers(0, 12), st.integers(0, 12), st.integers(1, 4))
@settings(max_examples=80, deadline=None)
def test_qbinom_is_polynomial_with_binomial_value(h, k, m):
    f = qbinom_int(h, k, m)
    if k > h:
        assert f.is_zero
        return
    assert f.is_laurent_poly
    expanded = f.expand()
    assert expanded.den == IntPoly(1) and expanded.shift == 0
    assert all(c >= 0 for c in expanded.num.coeffs)
    assert f.value_at_one() == math.comb(h, k)


def test_poch_ratio_frozen_example():
    f = poch_ratio(1, 2, 3)
    assert repr(f) == "Phi_5 * Phi_2^-3 * Phi_4^-1 * Phi_6^-1"
    g = poch_ratio(-5, 3, 7)
    assert g.sign == 1 and g.qexp == -7
    assert g.exponent_of(5) == 1 and g.exponent_of(13) == 1
    assert g.exponent_of(3) == -7


def test_poch_ratio_cross_multiplied():
    # num / den as factored objects: cross-multiply to avoid inversion
    for (r, m, n) in [(1, 2, 3), (2, 3, 4), (-1, 2, 2), (3, 4, 5)]:
        ratio = poch_ratio(r, m, n)
        num = pochhammer(r, m, n)
        den = pochhammer(m, m, n)
        assert mul_factored(ratio, den) == num
