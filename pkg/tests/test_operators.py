from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bibazilevic import operators, series
from bibazilevic.operators import ClassParams
from bibazilevic.series import NormalizedSeries

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=12)


@st.composite
def class_params(draw):
    return ClassParams(k=draw(st.integers(0, 3)),
                       alpha=draw(st.fractions(min_value=Fraction(1, 12), max_value=1, max_denominator=12)),
                       beta=draw(st.fractions(min_value=Fraction(1, 12), max_value=1, max_denominator=12)),
                       lambda_=draw(st.fractions(min_value=0, max_value=3, max_denominator=12)),
                       delta=draw(st.integers(0, 4)),
                       gamma=draw(st.fractions(min_value=0, max_value=3, max_denominator=12)))


def test_invalid_parameters():
    for changes in [{'alpha': 0}, {'beta': Fraction(3, 2)}, {'lambda_': -1}, {'delta': -1},
                    {'gamma': -1}, {'k': -1}, {'k': True}]:
        with pytest.raises(operators.InvalidParameters):
            ClassParams(**changes)


def test_modes():
    assert ClassParams.identity().mode is series.Mode.EXACT
    assert ClassParams(delta=Fraction(1, 2)).mode is series.Mode.FLOATING
    assert ClassParams(gamma=0.5).mode is series.Mode.FLOATING


def test_identity_multipliers():
    assert operators.multipliers(ClassParams.identity()) == operators.MultiplierPair(1, 1)


def test_c_delta():
    assert operators.c_delta(0, 2) == 1
    assert operators.c_delta(1, 2) == 2
    assert operators.c_delta(1, 3) == 3
    assert operators.c_delta(2, 2) == 3
    assert operators.c_delta(0.5, 2) == pytest.approx(1.5)


def test_upsilon():
    params = ClassParams(k=1, alpha=1, beta=1, lambda_=1, delta=1, gamma=2)
    assert operators.upsilon(params, 2) == 1
    assert operators.upsilon(params, 3) == 2
    assert operators.multipliers(params) == operators.MultiplierPair(2, 6)
    assert operators.upsilon(ClassParams(k=0, lambda_=0), 2) == 1


def test_degenerate_operator():
    params = ClassParams(k=1, lambda_=0)
    assert params.degenerate
    assert operators.multipliers(params).degenerate
    assert not ClassParams(k=0, lambda_=0).degenerate


def test_apply_operator():
    params = ClassParams(k=1, alpha=1, beta=1, lambda_=1, delta=1)
    f = NormalizedSeries([0, 1, 1, 1])
    assert operators.apply_operator(params, f) == NormalizedSeries([0, 1, 2, 6])


def test_quotient_of_the_identity_function():
    """f = z has the constant quotient 1"""
    quotient = operators.bazilevic_quotient(ClassParams(gamma=Fraction(1, 2)), NormalizedSeries([0, 1, 0, 0]))
    assert quotient == series.TruncSeries([1, 0, 0])


@given(class_params(), rationals, rationals)
def test_quotient_closed_forms(params, a2, a3):
    """The quotients of f and of f^-1 agree with their closed forms"""
    f = NormalizedSeries.from_coefficients([a2, a3])
    quotient = operators.bazilevic_quotient(params, f)
    q1, q2 = operators.quotient_coefficients(params, a2, a3)
    assert (quotient[0], quotient[1], quotient[2]) == (1, q1, q2)

    inverse_quotient = operators.bazilevic_quotient(params, series.invert(f))
    r1, r2 = operators.inverse_quotient_coefficients(params, a2, a3)
    assert (inverse_quotient[0], inverse_quotient[1], inverse_quotient[2]) == (1, r1, r2)


def test_quotient_needs_order_three():
    with pytest.raises(series.OrderError):
        operators.bazilevic_quotient(ClassParams.identity(), NormalizedSeries([0, 1, 1]))


def test_floating_quotient():
    params = ClassParams(k=1, alpha=1, beta=1, lambda_=1, delta=Fraction(1, 2), gamma=Fraction(1, 2))
    f = NormalizedSeries([0.0, 1.0, 0.5, 0.25])
    quotient = operators.bazilevic_quotient(params, f)
    q1, q2 = operators.quotient_coefficients(params, 0.5, 0.25)
    assert quotient[1] == pytest.approx(q1)
    assert quotient[2] == pytest.approx(q2)


@given(class_params(), st.lists(rationals, min_size=4, max_size=4), st.lists(rationals, min_size=4, max_size=4),
       rationals)
def test_apply_operator_is_linear(params, f_tail, g_tail, weight):
    """D^k of an affine combination of normalized series is the combination of the images"""
    f = NormalizedSeries.from_coefficients(f_tail)
    g = NormalizedSeries.from_coefficients(g_tail)
    h = NormalizedSeries.of(series.add(series.scale(f, weight), series.scale(g, 1 - weight)))
    combined = series.add(series.scale(operators.apply_operator(params, f), weight),
                          series.scale(operators.apply_operator(params, g), 1 - weight))
    assert operators.apply_operator(params, h) == combined


@given(class_params(), st.lists(rationals, min_size=4, max_size=4))
def test_apply_operator_is_the_hadamard_product_with_the_kernel(params, tail):
    f = NormalizedSeries.from_coefficients(tail)
    kernel = operators.convolution_kernel(params, 5)
    for n in range(2, 6):
        assert kernel[n] == operators.upsilon(params, n) * operators.c_delta(params.delta, n)
    transformed = operators.apply_operator(params, f)
    assert transformed == series.hadamard(f, kernel)
    for n in range(2, 6):
        assert transformed[n] == operators.upsilon(params, n) * operators.c_delta(params.delta, n) * f[n]
