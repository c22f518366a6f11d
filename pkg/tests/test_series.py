from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bibazilevic import series
from bibazilevic.series import GaussianRational, Mode, NormalizedSeries, TruncSeries

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=12)


def test_gaussian_rational_arithmetic():
    """Gaussian rationals stay exact through all four operations"""
    z = GaussianRational(1, 2)
    w = GaussianRational(Fraction(1, 2), -1)
    assert z * w == GaussianRational(Fraction(5, 2), 0)
    assert (z / w) * w == z
    assert z - z == 0
    assert Fraction(1, 3) * z == GaussianRational(Fraction(1, 3), Fraction(2, 3))
    assert z ** -1 * z == 1
    assert str(GaussianRational(1, -2)) == '1-2i'


def test_gaussian_rational_rejects_floats():
    with pytest.raises(TypeError):
        GaussianRational(0.5, 0)


def test_mode_inference():
    assert TruncSeries([1, 2, 3]).mode is Mode.EXACT
    assert TruncSeries([1, 2.0, 3]).mode is Mode.FLOATING
    assert TruncSeries([1, 2, 3]).to_floating().mode is Mode.FLOATING


def test_mixed_modes_are_rejected():
    with pytest.raises(series.ModeMismatch):
        series.add(TruncSeries([1, 2]), TruncSeries([1, 2.0]))


def test_orders_never_pad():
    """Binary operations return the smaller order"""
    assert series.mul(TruncSeries([1, 1, 1, 1]), TruncSeries([1, 1])).order == 1
    assert series.add(TruncSeries([1, 1, 1]), TruncSeries([1, 1, 1, 1])).order == 2


def test_divide():
    """1 / (1 - z) = 1 + z + z^2 + z^3"""
    quotient = series.divide(TruncSeries.constant(1, 3), TruncSeries([1, -1], order=3))
    assert quotient == TruncSeries([1, 1, 1, 1])


def test_divide_by_zero_constant_term():
    with pytest.raises(series.ConstantTermError):
        series.divide(TruncSeries([1, 1]), TruncSeries([0, 1]))


def test_pow_real():
    assert series.pow_real(TruncSeries([1, 1, 0]), 2) == TruncSeries([1, 2, 1])
    # (1 + z)^(1/2) = 1 + z/2 - z^2/8
    assert series.pow_real(TruncSeries([1, 1, 0]), Fraction(1, 2)) == TruncSeries([1, Fraction(1, 2), Fraction(-1, 8)])


def test_pow_real_needs_rational_exponent_in_exact_mode():
    with pytest.raises(series.ModeMismatch):
        series.pow_real(TruncSeries([1, 1]), 0.5)


def test_compose():
    outer = TruncSeries([1, 1, 1])
    inner = TruncSeries([0, 1, 1])
    assert series.compose(outer, inner) == TruncSeries([1, 1, 2])


def test_compose_needs_zero_constant_term():
    with pytest.raises(series.ConstantTermError):
        series.compose(TruncSeries([1, 1, 1]), TruncSeries([1, 1, 1]))


def test_invert():
    """z + z^2 has the inverse w - w^2 + 2 w^3 - 5 w^4"""
    f = NormalizedSeries([0, 1, 1, 0, 0])
    assert series.invert(f) == TruncSeries([0, 1, -1, 2, -5])


def test_invert_needs_order_two():
    with pytest.raises(series.OrderError):
        series.invert(NormalizedSeries([0, 1]))


def test_normalized_series_precondition():
    with pytest.raises(series.ConstantTermError):
        NormalizedSeries([0, 2, 1])


@given(rationals, rationals, rationals)
def test_reversion_round_trip(a2, a3, a4):
    """compose(f, invert(f)) = z exactly, with the closed forms of the inverse coefficients"""
    f = NormalizedSeries.from_coefficients([a2, a3, a4])
    g = series.invert(f)
    assert series.residual(series.compose(f, g), TruncSeries.identity(4)) == 0
    assert series.residual(series.compose(g, f), TruncSeries.identity(4)) == 0
    assert g[2] == -a2
    assert g[3] == 2 * a2 ** 2 - a3
    assert g[4] == -(5 * a2 ** 3 - 5 * a2 * a3 + a4)


@given(rationals, rationals, rationals, rationals)
def test_hadamard_is_coefficient_wise(a, b, c, d):
    assert series.hadamard(TruncSeries([0, 1, a, b]), TruncSeries([0, 1, c, d])) == TruncSeries([0, 1, a * c, b * d])


def test_derivative_and_shift_down():
    s = TruncSeries([0, 1, 2, 3])
    assert series.derivative(s) == TruncSeries([1, 4, 9])
    assert series.shift_down(s) == TruncSeries([1, 2, 3])
    with pytest.raises(series.ConstantTermError):
        series.shift_down(TruncSeries([1, 1]))


def test_residual():
    assert series.residual(TruncSeries([1, 2]), TruncSeries([1, 2])) == 0
    assert series.residual(TruncSeries([1, GaussianRational(2, 1)]), TruncSeries([1, 2])) == 1
    assert series.residual(TruncSeries([1.0, 2.0]), TruncSeries([1.0, 2.5])) == pytest.approx(0.5)


def test_magnitude():
    assert series.magnitude(GaussianRational(-3, 2)) == 3
    assert series.magnitude(Fraction(-1, 2)) == Fraction(1, 2)
    assert series.magnitude(3 + 4j) == 5


def test_floating_matches_exact():
    f = NormalizedSeries([0, 1, Fraction(1, 3), Fraction(-1, 2), 1])
    exact = series.invert(f)
    floating = series.invert(NormalizedSeries.of(f.to_floating()))
    assert series.residual(exact.to_floating(), floating) < 1e-12


@st.composite
def unit_series(draw, order=4):
    """1 + c_1 z + ... + c_order z^order with rational coefficients"""
    return TruncSeries([1] + draw(st.lists(rationals, min_size=order, max_size=order)))


@st.composite
def exact_series(draw, order=4):
    return TruncSeries(draw(st.lists(rationals, min_size=order + 1, max_size=order + 1)))


@given(exact_series(), exact_series(), exact_series())
def test_mul_is_a_commutative_ring_product(f, g, h):
    assert series.mul(f, g) == series.mul(g, f)
    assert series.mul(series.mul(f, g), h) == series.mul(f, series.mul(g, h))
    assert series.mul(f, series.add(g, h)) == series.add(series.mul(f, g), series.mul(f, h))


@given(unit_series(), st.integers(1, 3))
def test_integer_powers_are_repeated_products(f, m):
    product = f
    for _ in range(m - 1):
        product = series.mul(product, f)
    assert series.pow_real(f, m) == product


@given(unit_series(), st.sampled_from([Fraction(1, 2), Fraction(2), Fraction(-1)]))
def test_pow_real_round_trip(f, exponent):
    assert series.pow_real(series.pow_real(f, exponent), 1 / exponent) == f


@given(exact_series(), exact_series())
def test_product_rule(f, g):
    assert series.derivative(series.mul(f, g)) == series.add(series.mul(series.derivative(f), g),
                                                              series.mul(f, series.derivative(g)))


@given(st.lists(rationals, min_size=1, max_size=5))
def test_compose_with_the_inverse_is_the_identity(tail):
    f = NormalizedSeries.from_coefficients(tail)
    assert series.compose(f, series.invert(f)) == TruncSeries.identity(f.order)


def test_invert_cubic():
    """z + 2 z^2 + z^3 has the inverse w - 2 w^2 + 7 w^3 - 30 w^4"""
    g = series.invert(NormalizedSeries([0, 1, 2, 1, 0]))
    assert g[2] == GaussianRational(-2, 0)
    assert g[3] == GaussianRational(7, 0)
    assert g[4] == GaussianRational(-30, 0)


def test_pow_real_of_a_quadratic():
    """(1 + z + z^2)^(-1/2) = 1 - z/2 - z^2/8 + 7 z^3/16"""
    power = series.pow_real(TruncSeries([1, 1, 1, 0]), Fraction(-1, 2))
    assert list(power) == [GaussianRational(1, 0), GaussianRational(Fraction(-1, 2), 0),
                           GaussianRational(Fraction(-1, 8), 0), GaussianRational(Fraction(7, 16), 0)]


@given(rationals, rationals, st.fractions(min_value=0, max_value=3, max_denominator=12))
def test_pow_real_matches_the_binomial_series(a2, a3, gamma):
    """(1 + a2 z + a3 z^2)^(gamma - 1) through z^3 against the binomial series"""
    e = gamma - 1
    power = series.pow_real(TruncSeries([1, a2, a3, 0]), e)
    assert power[1] == GaussianRational.coerce(e * a2)
    assert power[2] == GaussianRational.coerce(e * a3 + e * (e - 1) / 2 * a2 ** 2)
    assert power[3] == GaussianRational.coerce(e * (e - 1) * a2 * a3 + e * (e - 1) * (e - 2) / 6 * a2 ** 3)
