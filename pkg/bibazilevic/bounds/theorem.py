"""
Evaluation of the general coefficient bounds

For the class of bi-Bazilevic functions of type gamma subordinate to phi:

    |a2| <= B1 sqrt(2 B1) / sqrt(|D|)
    |a3| <= B1 / ((gamma+2) u3) + (B1 / ((gamma+1) u2))^2

with u2 = Upsilon^k_2 C(delta,2), u3 = Upsilon^k_3 C(delta,3),
X = 2 (gamma+2) u3 + (gamma-1)(gamma+2) u2^2 and D = B1^2 X - 2 (B2-B1) (gamma+1)^2 u2^2.

The bounds for Janowski functions and for functions of order zeta are obtained by
substituting the phi coefficients, never from the printed special forms.
"""

import dataclasses
import math
import numbers
import typing as t

from .. import maminda
from ..operators import ClassParams, DegenerateOperator, MultiplierPair, multipliers


class ZeroDenominator(ZeroDivisionError):
    """The bound formula divides by zero for these parameters"""


DEGENERATE_OPERATOR = 'degenerate-operator'
ZERO_DENOMINATOR = 'zero-denominator'
NEGATIVE_MULTIPLIER = 'negative-multiplier'


@dataclasses.dataclass(frozen=True)
class BoundResult:
    """
    Evaluated bounds

    Args:
        a2_bound: The bound on |a2|, None when degenerate
        a3_bound: The bound on |a3|, None when degenerate
        denom_value: D, the quantity inside the absolute value of the a2 bound
        degenerate: Whether any required denominator is zero
        flags: Tokens that explain `degenerate` or mark unusual inputs
        printed_denom_value: For Janowski functions, the denominator as printed in the source
    """
    a2_bound: t.Optional[float]
    a3_bound: t.Optional[float]
    denom_value: t.Optional[numbers.Real]
    degenerate: bool = False
    flags: t.Tuple[str, ...] = ()
    printed_denom_value: t.Optional[numbers.Real] = None


def _check_b1(b1):
    if not b1 > 0:
        raise ValueError(f'B1 must be > 0, got {b1}')


def _non_degenerate_multipliers(params: ClassParams) -> MultiplierPair:
    m = multipliers(params)
    if m.degenerate:
        raise DegenerateOperator(f'The multipliers vanish for {params} (u2={m.u2}, u3={m.u3})')
    return m


def x_factor(params: ClassParams) -> numbers.Real:
    """X = 2 (gamma+2) u3 + (gamma-1)(gamma+2) u2^2"""
    m = multipliers(params)
    gamma = params.gamma
    return 2 * (gamma + 2) * m.u3 + (gamma - 1) * (gamma + 2) * m.u2 ** 2


def composite_denominator(params: ClassParams, b1, b2) -> numbers.Real:
    """D = B1^2 X - 2 (B2 - B1) (gamma+1)^2 u2^2"""
    m = multipliers(params)
    return b1 ** 2 * x_factor(params) - 2 * (b2 - b1) * (params.gamma + 1) ** 2 * m.u2 ** 2


def bound_a2_squared(params: ClassParams, b1, b2) -> numbers.Real:
    """2 B1^3 / |D|, exact for rational inputs"""
    _check_b1(b1)
    _non_degenerate_multipliers(params)
    denominator = composite_denominator(params, b1, b2)
    if denominator == 0:
        raise ZeroDenominator(f'The a2 bound is undefined for {params}, B1={b1}, B2={b2}')
    return 2 * b1 ** 3 / abs(denominator)


def bound_a2(params: ClassParams, b1, b2) -> float:
    """B1 sqrt(2 B1) / sqrt(|D|)"""
    return math.sqrt(bound_a2_squared(params, b1, b2))


def bound_a3_exact(params: ClassParams, b1) -> numbers.Real:
    """B1 / ((gamma+2) u3) + (B1 / ((gamma+1) u2))^2 in the arithmetic of the inputs"""
    _check_b1(b1)
    m = _non_degenerate_multipliers(params)
    gamma = params.gamma
    return b1 / ((gamma + 2) * m.u3) + (b1 / ((gamma + 1) * m.u2)) ** 2


def bound_a3(params: ClassParams, b1, b2=None) -> float:
    return float(bound_a3_exact(params, b1))


def evaluate_bounds(params: ClassParams, b1, b2) -> BoundResult:
    """Both bounds, with degenerate inputs reported as flags instead of errors"""
    _check_b1(b1)
    if multipliers(params).degenerate:
        return BoundResult(None, None, None, degenerate=True, flags=(DEGENERATE_OPERATOR,))
    denominator = composite_denominator(params, b1, b2)
    if denominator == 0:
        return BoundResult(None, None, denominator, degenerate=True, flags=(ZERO_DENOMINATOR,))
    flags = (NEGATIVE_MULTIPLIER,) if multipliers(params).u3 < 0 else ()
    return BoundResult(a2_bound=bound_a2(params, b1, b2), a3_bound=bound_a3(params, b1),
                       denom_value=denominator, flags=flags)


def bound_phi(params: ClassParams, spec: maminda.PhiSpec) -> BoundResult:
    b1, b2 = maminda.phi_coefficients(spec)
    return evaluate_bounds(params, b1, b2)


def printed_janowski_denominator(params: ClassParams, a, b) -> numbers.Real:
    """The Janowski denominator as printed: (A-B) X - 2 (B+1) (gamma+1)^2 u2^2"""
    m = multipliers(params)
    return (a - b) * x_factor(params) - 2 * (b + 1) * (params.gamma + 1) ** 2 * m.u2 ** 2


def bound_janowski(params: ClassParams, a, b) -> BoundResult:
    """Bounds for phi = (1 + A z) / (1 + B z) through B1 = A - B, B2 = -B (A - B)"""
    spec = maminda.Janowski(a, b)
    result = bound_phi(params, spec)
    return dataclasses.replace(result, printed_denom_value=printed_janowski_denominator(params, spec.a, spec.b))


def bound_order(params: ClassParams, zeta) -> BoundResult:
    """Bounds for functions of order zeta, B1 = B2 = 2 (1 - zeta)"""
    return bound_phi(params, maminda.OrderZeta(zeta))
