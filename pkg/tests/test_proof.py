from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from bibazilevic import config, series
from bibazilevic.bounds import theorem
from bibazilevic.operators import ClassParams
from bibazilevic.series import GaussianRational, TruncSeries
from bibazilevic.verify import proof
from bibazilevic.verify.proof import CaratheodoryTuple

rationals = st.fractions(min_value=-2, max_value=2, max_denominator=12)
gaussians = st.builds(GaussianRational, rationals, rationals)


@st.composite
def non_degenerate_params(draw):
    params = ClassParams(k=draw(st.integers(0, 3)),
                         alpha=draw(st.fractions(min_value=Fraction(1, 2), max_value=1, max_denominator=12)),
                         beta=draw(st.fractions(min_value=Fraction(1, 2), max_value=1, max_denominator=12)),
                         lambda_=draw(st.fractions(min_value=Fraction(1, 12), max_value=3, max_denominator=12)),
                         delta=draw(st.integers(0, 4)),
                         gamma=draw(st.fractions(min_value=0, max_value=3, max_denominator=12)))
    assume(not params.degenerate)
    return params


phi_coefficients = st.tuples(st.fractions(min_value=Fraction(1, 12), max_value=3, max_denominator=12),
                             st.fractions(min_value=-3, max_value=3, max_denominator=12))


def test_tuple_invariants():
    with pytest.raises(proof.InvalidTuple):
        CaratheodoryTuple(1, 0, 1, 0)
    assert CaratheodoryTuple.from_p(2, 2, -2).is_admissible()
    assert not CaratheodoryTuple.from_p(GaussianRational(2, 1), 0, 0).is_admissible()
    assert CaratheodoryTuple.from_p(1, 1, 0).mode is series.Mode.EXACT
    assert CaratheodoryTuple.from_p(1.0, 1, 0).mode is series.Mode.FLOATING


def test_schwarz_from_caratheodory():
    assert proof.schwarz_from_caratheodory(TruncSeries.constant(1, 2)) == TruncSeries([0, 0, 0])
    assert proof.schwarz_from_caratheodory(TruncSeries([1, 2, 2])) == TruncSeries([0, 1, 0])


@given(gaussians, gaussians)
def test_schwarz_round_trip(p1, p2):
    p = TruncSeries([1, p1, p2])
    u = proof.schwarz_from_caratheodory(p)
    assert u[1] == p1 / 2
    assert u[2] == (p2 - p1 * p1 / 2) / 2
    assert proof.caratheodory_from_schwarz(u) == p


def test_schwarz_pair():
    pair = proof.SchwarzPair.of(CaratheodoryTuple.from_p(2, 2, 2))
    assert pair.in_coefficient_body()
    # u1 = 1 leaves no room for u2 = -1
    assert not proof.SchwarzPair.of(CaratheodoryTuple.from_p(2, 0, 0)).in_coefficient_body()


def test_proof_relations_at_the_zero_tuple():
    relations = proof.proof_relations(ClassParams.identity(), 2, 2, CaratheodoryTuple.zero())
    assert relations.a2_from_first == 0
    assert relations.a2_squared_from_sum == 0
    assert relations.a3_from_difference == 0


def test_proof_relations_at_corners():
    params = ClassParams.identity()
    assert proof.proof_relations(params, 2, 2, CaratheodoryTuple.from_p(2, 2, 2)).a2_squared_from_sum == 2
    assert proof.proof_relations(params, 2, 2, CaratheodoryTuple.from_p(2, 2, -2)).a3_from_difference == 5
    assert theorem.bound_a2_squared(params, 2, 2) == 2
    assert theorem.bound_a3_exact(params, 2) == 5


def test_proof_relations_zero_denominator():
    with pytest.raises(theorem.ZeroDenominator):
        proof.proof_relations(ClassParams.identity(), 2, 6, CaratheodoryTuple.zero())


@given(non_degenerate_params(), phi_coefficients, rationals, rationals)
def test_relations_hold_exactly(params, phi, a2, a3):
    """A function with coefficients a2, a3 and its tuple satisfy every relation of the proof"""
    b1, b2 = phi
    if proof.a2_squared_denominator(params, b1, b2) == 0:
        return
    t = proof.tuple_from_coefficients(params, b1, b2, a2, a3)
    residuals = proof.relation_residuals(params, b1, b2, a2, a3, t)
    assert {name: value for name, value in residuals.items() if value != 0} == {}


def test_expansion_check_examples():
    identity = ClassParams.identity()
    assert proof.expansion_check(identity, 2, 2, CaratheodoryTuple.zero()) == 0
    assert proof.expansion_check(identity, 2, 2, CaratheodoryTuple(1, 1, -1, 0)) == 0
    operator = ClassParams(k=1, alpha=1, beta=1, lambda_=1, delta=1, gamma=2)
    assert proof.expansion_check(operator, Fraction(3, 2), Fraction(-1, 2),
                                 CaratheodoryTuple.from_p(Fraction(1, 2), 1, -1)) == 0


def test_inverse_expansion_check_examples():
    assert proof.inverse_expansion_check(ClassParams.identity(), 2, 2, CaratheodoryTuple.zero()) == 0
    assert proof.inverse_expansion_check(ClassParams.identity(), 2, 2,
                                         CaratheodoryTuple.from_p(Fraction(1, 3), -1, Fraction(1, 2))) == 0
    # gamma = 1, the quotient of g is (D g)'
    assert proof.inverse_expansion_check(ClassParams(k=1, alpha=1, beta=1, lambda_=2, gamma=1), 1, Fraction(1, 3),
                                         CaratheodoryTuple.from_p(1, Fraction(1, 2), 2)) == 0


@given(non_degenerate_params(), phi_coefficients, gaussians, gaussians, gaussians)
def test_expansion_checks_are_exact(params, phi, p1, p2, h2):
    b1, b2 = phi
    t = CaratheodoryTuple.from_p(p1, p2, h2)
    assert proof.expansion_check(params, b1, b2, t) == 0
    assert proof.inverse_expansion_check(params, b1, b2, t) == 0


def test_expansion_check_needs_exact_inputs():
    with pytest.raises(series.ModeMismatch):
        proof.expansion_check(ClassParams.identity(), 2.0, 2, CaratheodoryTuple.zero())


def test_fault_injection(monkeypatch):
    """With the sign of a2 flipped the residual is no longer 0"""
    monkeypatch.setattr(config, 'fault_injection', lambda: True)
    assert proof.expansion_check(ClassParams.identity(), 2, 2, CaratheodoryTuple(1, 1, -1, 0)) != 0
