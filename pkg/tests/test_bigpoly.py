"""Dense polynomial layer: exact arithmetic, exact division, Laurent shifts."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcongruence.bigpoly import (NEG_INF, IntPoly, LaurentInt, RatPoly,
                                 _mul_kronecker, _mul_school)
from qcongruence.exceptions import NotDivisible

coeff_lists = st.lists(st.integers(-10**6, 10**6), min_size=0, max_size=40)


def test_construction_trims_and_freezes():
    p = IntPoly(1, 2, 0, 0)
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert IntPoly().is_zero
    assert IntPoly(0, 0).is_zero
    assert IntPoly().degree == NEG_INF


def test_repr_ascending_storage_descending_print():
    assert repr(IntPoly(-1, 0, 1)) == "q^2 - 1"
    assert repr(IntPoly(1, 1)) == "q + 1"
    assert repr(IntPoly()) == "0"
    assert repr(IntPoly(-7)) == "-7"


def test_ring_ops():
    f = IntPoly(1, 1)          # q + 1
    g = IntPoly(-1, 1)         # q - 1
    assert f * g == IntPoly(-1, 0, 1)
    assert f + g == IntPoly(0, 2)
    assert f - g == IntPoly(2)
    assert f ** 3 == IntPoly(1, 3, 3, 1)
    assert f ** 0 == IntPoly(1)
    assert (f * g).evaluate(3) == 8
    assert f.times_q(2) == IntPoly(0, 0, 1, 1)


def test_content_and_lead():
    assert IntPoly(6, -9, 12).content() == 3
    assert IntPoly().content() == 0
    assert IntPoly(2, 0, 5).lead == 5


def test_div_exact_and_failure():
    f = IntPoly(1, 1) * IntPoly(3, 0, 2)
    assert f.div_exact(IntPoly(1, 1)) == IntPoly(3, 0, 2)
    with pytest.raises(NotDivisible):
        IntPoly(1, 0, 1).div_exact(IntPoly(1, 1))


def test_rem_monic():
    # q^2 mod (q^2 + q + 1) folds all the way down
    assert IntPoly(0, 0, 1).rem_monic(IntPoly(1, 1, 1)) == IntPoly(-1, -1)
    assert IntPoly(5).rem_monic(IntPoly(1, 1)) == IntPoly(5)


@given(coeff_lists, coeff_lists)
@settings(max_examples=120, deadline=None)
def test_kronecker_matches_schoolbook(a, b):
    assert _mul_kronecker(a, b) == _mul_school(a, b)


@given(coeff_lists, coeff_lists)
@settings(max_examples=80, deadline=None)
def test_product_evaluates_pointwise(a, b):
    f, g = IntPoly(a), IntPoly(b)
    h = f * g
    for x in (1, 2, -3):
        assert h.evaluate(x) == f.evaluate(x) * g.evaluate(x)


@given(coeff_lists, coeff_lists)
@settings(max_examples=80, deadline=None)
def test_div_exact_roundtrip(a, b):
    f, g = IntPoly(a), IntPoly(b)
    if g.is_zero:
        return
    assert (f * g).div_exact(g) == f


def test_big_operands_cross_multiplier_threshold():
    f = IntPoly([i % 7 - 3 for i in range(400)])
    g = IntPoly([(i * i) % 11 - 5 for i in range(350)])
    h = f * g
    assert h.evaluate(2) == f.evaluate(2) * g.evaluate(2)
    assert h.evaluate(-1) == f.evaluate(-1) * g.evaluate(-1)


def test_ratpoly_divmod_and_monic():
    f = RatPoly(-1, 0, 0, 1)
    g = RatPoly(-1, 1)
    quo, rem = divmod(f, g)
    assert rem.is_zero
    assert quo == RatPoly(1, 1, 1)
    assert RatPoly(2, 2).monic() == RatPoly(1, 1)
    assert IntPoly(2, 2).to_rat() == RatPoly(2, 2)


def test_ratpoly_rem_mod():
    from fractions import Fraction
    f = RatPoly(0, 0, 0, 0, 0, 1)          # q^5
    assert f.rem_mod(RatPoly(1, 1, 1)) == RatPoly(-1, -1)
    g = RatPoly(Fraction(1, 2), Fraction(1, 3))
    num, den = g.clear_denominators()
    assert den == 6
    assert num == IntPoly(3, 2)


def test_laurent_normalization_and_ops():
    x = LaurentInt(IntPoly(0, 0, 1, 1), -1)  # q + q^2 at shift -1
    assert x.shift == 1
    assert x.base == IntPoly(1, 1)
    assert x.min_exp == 1 and x.max_exp == 2
    y = LaurentInt(IntPoly(1), -2)
    assert (x * y).shift == -1
    assert (x + y).evaluate_at_one() == x.evaluate_at_one() + 1
    assert (x - x).base.is_zero


def test_laurent_times_q_can_go_negative():
    x = LaurentInt(IntPoly(1, 1), 0)
    assert x.times_q(-3).shift == -3
    assert x.times_q(-3).base == IntPoly(1, 1)
