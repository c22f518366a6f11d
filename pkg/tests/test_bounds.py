import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from bibazilevic import maminda, operators
from bibazilevic.bounds import theorem
from bibazilevic.operators import ClassParams


def test_identity_operator():
    """k = 0, delta = 0, gamma = 0, B1 = B2 = 2: X = 2, D = 8"""
    params = ClassParams.identity()
    assert theorem.x_factor(params) == 2
    assert theorem.composite_denominator(params, 2, 2) == 8
    assert theorem.bound_a2_squared(params, 2, 2) == 2
    assert theorem.bound_a2(params, 2, 2) == pytest.approx(math.sqrt(2))
    assert theorem.bound_a3_exact(params, 2) == 5


def test_order_zeta_half():
    result = theorem.bound_order(ClassParams.identity(gamma=1), Fraction(1, 2))
    assert result.a2_bound == pytest.approx(math.sqrt(1 / 3))
    assert result.a3_bound == pytest.approx(7 / 12)
    assert f'{result.a2_bound:.6f}' == '0.577350'
    assert f'{result.a3_bound:.6f}' == '0.583333'


def test_order_zeta_zero():
    result = theorem.bound_order(ClassParams.identity(gamma=1), 0)
    assert f'{result.a2_bound:.6f}' == '0.816497'


def test_janowski():
    """A = 1, B = 0: B1 = 1, B2 = 0, D = 4, so |a2| <= sqrt(2)/2"""
    result = theorem.bound_janowski(ClassParams.identity(), 1, 0)
    assert result.a2_bound == pytest.approx(math.sqrt(2) / 2)
    assert result.denom_value == 4
    assert result.printed_denom_value == 0


def test_degenerate_operator():
    params = ClassParams(k=1, lambda_=0)
    result = theorem.evaluate_bounds(params, 1, 1)
    assert result.degenerate
    assert result.flags == (theorem.DEGENERATE_OPERATOR,)
    assert result.a2_bound is None and result.a3_bound is None
    with pytest.raises(operators.DegenerateOperator):
        theorem.bound_a2(params, 1, 1)


def test_zero_denominator():
    """identity operator, B1 = 2: D = 12 - 2 B2 vanishes for B2 = 6"""
    params = ClassParams.identity()
    result = theorem.evaluate_bounds(params, 2, 6)
    assert result.degenerate
    assert result.flags == (theorem.ZERO_DENOMINATOR,)
    assert result.denom_value == 0
    with pytest.raises(theorem.ZeroDenominator):
        theorem.bound_a2_squared(params, 2, 6)


def test_negative_multiplier_is_flagged():
    params = ClassParams(k=1, alpha=Fraction(1, 4), beta=Fraction(1, 4), lambda_=1)
    assert operators.multipliers(params).u3 < 0
    assert theorem.NEGATIVE_MULTIPLIER in theorem.evaluate_bounds(params, 1, 1).flags


def test_invalid_b1():
    with pytest.raises(ValueError):
        theorem.bound_a3(ClassParams.identity(), 0)


@given(st.integers(0, 3), st.integers(0, 3),
       st.fractions(min_value=0, max_value=3, max_denominator=12),
       st.fractions(min_value=Fraction(1, 12), max_value=3, max_denominator=12))
def test_equal_phi_coefficients(k, delta, gamma, b1):
    """With B2 = B1 the a2 bound reduces to sqrt(2 B1 / |X|)"""
    params = ClassParams(k=k, alpha=1, beta=1, lambda_=1, delta=delta, gamma=gamma)
    x = theorem.x_factor(params)
    assume(x != 0)
    assert theorem.bound_a2_squared(params, b1, b1) == 2 * b1 / abs(x)


@given(st.fractions(min_value=Fraction(1, 12), max_value=Fraction(11, 12), max_denominator=12),
       st.fractions(min_value=0, max_value=3, max_denominator=12))
def test_families_use_the_general_bound(zeta, gamma):
    params = ClassParams(k=1, alpha=1, beta=1, lambda_=2, delta=1, gamma=gamma)
    spec = maminda.OrderZeta(zeta)
    b1, b2 = spec.coefficients()
    assert theorem.bound_order(params, zeta) == theorem.evaluate_bounds(params, b1, b2)
