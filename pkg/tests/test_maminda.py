from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from bibazilevic import maminda

unit = st.fractions(min_value=-1, max_value=1, max_denominator=12)


def test_closed_forms():
    assert maminda.Janowski(1, -1).coefficients() == (2, 2)
    assert maminda.Janowski(1, 0).coefficients() == (1, 0)
    assert maminda.OrderZeta(0).coefficients() == (2, 2)
    assert maminda.OrderZeta(Fraction(1, 2)).coefficients() == (1, 1)
    assert maminda.Generic(3, -1).coefficients() == (3, -1)


def test_invalid_specs():
    with pytest.raises(maminda.InvalidPhiSpec):
        maminda.Janowski(0, 1)
    with pytest.raises(maminda.InvalidPhiSpec):
        maminda.OrderZeta(1)
    with pytest.raises(maminda.InvalidPhiSpec):
        maminda.Generic(0, 1)


@given(unit, unit)
def test_janowski_series(a, b):
    """Series division of (1 + A z) / (1 + B z) agrees with (A - B, -B (A - B))"""
    assume(b < a)
    spec = maminda.Janowski(a, b)
    s = maminda.phi_series(spec, 2)
    assert (s[0], s[1], s[2]) == (1, *spec.coefficients())


@given(st.fractions(min_value=0, max_value=Fraction(11, 12), max_denominator=12))
def test_order_zeta_series(zeta):
    spec = maminda.OrderZeta(zeta)
    s = maminda.phi_series(spec, 3)
    assert list(s) == [1, 2 * (1 - zeta), 2 * (1 - zeta), 2 * (1 - zeta)]


def test_generic_series_is_known_to_order_two():
    assert maminda.phi_series(maminda.Generic(2, 1), 5).order == 2


def test_parse_phi():
    assert maminda.parse_phi(b1=2, b2=1) == maminda.Generic(2, 1)
    assert maminda.parse_phi(a=1, b=0) == maminda.Janowski(1, 0)
    assert maminda.parse_phi(zeta=0) == maminda.OrderZeta(0)
    for arguments in [{}, {'b1': 1}, {'a': 1}, {'b1': 1, 'b2': 1, 'zeta': 0}]:
        with pytest.raises(maminda.InvalidPhiSpec):
            maminda.parse_phi(**arguments)


def test_describe():
    assert maminda.Janowski(1, Fraction(-1, 2)).describe() == 'A=1;B=-1/2'
    assert maminda.OrderZeta(0).family == 'order'
