"""The multiplier transform D^k_(alpha,beta,delta,lambda) and the Bazilevic quotient it induces"""

import dataclasses
import fractions
import math
import numbers
import typing as t

import scipy.special

from . import series
from .series import Mode, NormalizedSeries, TruncSeries


class InvalidParameters(ValueError):
    """Operator or class parameters outside of their admissible ranges"""


class DegenerateOperator(ValueError):
    """The multipliers of the operator vanish, so bounds that divide by them are undefined"""


def _is_rational(value) -> bool:
    return isinstance(value, numbers.Rational)


def _is_integral(value) -> bool:
    if _is_rational(value):
        return fractions.Fraction(value).denominator == 1
    return isinstance(value, float) and value.is_integer()


@dataclasses.dataclass(frozen=True)
class ClassParams:
    """
    Parameters of the operator D^k_(alpha,beta,delta,lambda) and the type gamma of the class

    Args:
        k: The power of the multiplier, k = 0, 1, 2, ...
        alpha: 0 < alpha <= 1
        beta: 0 < beta <= 1
        lambda_: lambda >= 0
        delta: delta >= 0, integral for exact evaluation
        gamma: The Bazilevic type, gamma >= 0
    """
    k: int = 0
    alpha: numbers.Real = 1
    beta: numbers.Real = 1
    lambda_: numbers.Real = 1
    delta: numbers.Real = 0
    gamma: numbers.Real = 0

    def __post_init__(self):
        # rationals are kept as fractions so that halving (gamma-1)(gamma+2) stays exact
        for field in ('alpha', 'beta', 'lambda_', 'delta', 'gamma'):
            value = getattr(self, field)
            if _is_rational(value) and not isinstance(value, bool):
                object.__setattr__(self, field, fractions.Fraction(value))
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 0:
            raise InvalidParameters(f'k must be a non-negative integer, got {self.k!r}')
        if not 0 < self.alpha <= 1:
            raise InvalidParameters(f'alpha must be in (0, 1], got {self.alpha}')
        if not 0 < self.beta <= 1:
            raise InvalidParameters(f'beta must be in (0, 1], got {self.beta}')
        if self.lambda_ < 0:
            raise InvalidParameters(f'lambda must be >= 0, got {self.lambda_}')
        if self.delta < 0:
            raise InvalidParameters(f'delta must be >= 0, got {self.delta}')
        if self.gamma < 0:
            raise InvalidParameters(f'gamma must be >= 0, got {self.gamma}')

    @classmethod
    def identity(cls, gamma: numbers.Real = 0) -> 'ClassParams':
        """k = 0 and delta = 0, the operator is the identity"""
        return cls(k=0, alpha=1, beta=1, lambda_=1, delta=0, gamma=gamma)

    @property
    def mode(self) -> Mode:
        """Exact when all real parameters are rationals and delta is integral"""
        if all(_is_rational(value) for value in (self.alpha, self.beta, self.lambda_, self.delta, self.gamma)) \
                and _is_integral(self.delta):
            return Mode.EXACT
        return Mode.FLOATING

    @property
    def degenerate(self) -> bool:
        """lambda (alpha + beta - 1) = 0 with k >= 1 makes all multipliers of order >= 2 vanish"""
        return self.k >= 1 and self.lambda_ * (self.alpha + self.beta - 1) == 0

    def replace(self, **changes) -> 'ClassParams':
        return dataclasses.replace(self, **changes)

    def as_dict(self) -> t.Dict[str, numbers.Real]:
        return {'k': self.k, 'alpha': self.alpha, 'beta': self.beta, 'lambda': self.lambda_,
                'delta': self.delta, 'gamma': self.gamma}


@dataclasses.dataclass(frozen=True)
class MultiplierPair:
    """u2 = Upsilon^k_2 C(delta,2) and u3 = Upsilon^k_3 C(delta,3)"""
    u2: numbers.Real
    u3: numbers.Real

    @property
    def degenerate(self) -> bool:
        return self.u2 == 0 or self.u3 == 0


def upsilon(params: ClassParams, n: int) -> numbers.Real:
    """[lambda (alpha + beta - 1) (n - 1)]^k, with 0^0 = 1"""
    if n < 2:
        raise ValueError(f'Upsilon is defined for n >= 2, got {n}')
    if params.k == 0:
        return 1
    return (params.lambda_ * (params.alpha + params.beta - 1) * (n - 1)) ** params.k


def c_delta(delta: numbers.Real, n: int) -> numbers.Real:
    """
    The binomial C(delta, n) = (n + delta - 1 choose delta) = Gamma(n + delta) / (Gamma(delta + 1) Gamma(n))

    Integral delta gives an exact integer, other values the gamma-function binomial as a float.
    """
    if n < 2:
        raise ValueError(f'C(delta, n) is defined for n >= 2, got {n}')
    if delta < 0:
        raise InvalidParameters(f'delta must be >= 0, got {delta}')
    if _is_integral(delta):
        value = math.comb(n + int(delta) - 1, int(delta))
        return float(value) if isinstance(delta, float) else value
    return float(scipy.special.binom(n + float(delta) - 1, float(delta)))


def multiplier(params: ClassParams, n: int) -> numbers.Real:
    """The factor Upsilon^k_n C(delta, n) of the n-th coefficient"""
    return upsilon(params, n) * c_delta(params.delta, n)


def multipliers(params: ClassParams) -> MultiplierPair:
    return MultiplierPair(u2=multiplier(params, 2), u3=multiplier(params, 3))


def convolution_kernel(params: ClassParams, order: int, mode: t.Optional[Mode] = None) -> NormalizedSeries:
    """z + sum_(n>=2) Upsilon^k_n C(delta, n) z^n, the series the operator convolves with"""
    mode = mode or params.mode
    if mode is Mode.EXACT and params.mode is not Mode.EXACT:
        raise series.ModeMismatch(f'Parameters {params} can not be evaluated exactly')
    coeffs = [0, 1] + [multiplier(params, n) for n in range(2, order + 1)]
    if mode is Mode.FLOATING:
        coeffs = [complex(c) for c in coeffs]
    return NormalizedSeries(coeffs[:order + 1], mode=mode)


def apply_operator(params: ClassParams, f: NormalizedSeries) -> NormalizedSeries:
    """D^k f: the coefficient a_n is replaced by Upsilon^k_n C(delta, n) a_n"""
    kernel = convolution_kernel(params, f.order, f.mode)
    return NormalizedSeries.of(series.hadamard(f, kernel))


def _exponent(params: ClassParams, mode: Mode):
    return params.gamma - 1 if mode is Mode.EXACT else float(params.gamma) - 1.0


def bazilevic_quotient(params: ClassParams, f: NormalizedSeries) -> TruncSeries:
    """
    z^(1-gamma) (D f)'(z) / [D f(z)]^(1-gamma), as (D f)' (D f / z)^(gamma - 1)

    The result has constant term 1 and order f.order - 1. For degenerate parameters D f = z
    and the quotient is the constant 1.
    """
    if f.order < 3:
        raise series.OrderError(f'The quotient needs a series of order >= 3, got {f.order}')
    transformed = apply_operator(params, f)
    return series.mul(series.derivative(transformed),
                      series.pow_real(series.shift_down(transformed), _exponent(params, f.mode)))


def quotient_coefficients(params: ClassParams, a2, a3) -> t.Tuple:
    """q1 and q2 of the quotient of f = z + a2 z^2 + a3 z^3 + ..., in closed form"""
    m = multipliers(params)
    gamma = params.gamma
    q1 = (gamma + 1) * m.u2 * a2
    q2 = (gamma + 2) * m.u3 * a3 + (gamma - 1) * (gamma + 2) / 2 * m.u2 ** 2 * a2 * a2
    return q1, q2


def inverse_quotient_coefficients(params: ClassParams, a2, a3) -> t.Tuple:
    """r1 and r2 of the quotient of g = f^-1, in closed form"""
    m = multipliers(params)
    gamma = params.gamma
    r1 = -(gamma + 1) * m.u2 * a2
    r2 = (2 * (gamma + 2) * m.u3 + (gamma - 1) * (gamma + 2) / 2 * m.u2 ** 2) * a2 * a2 \
        - (gamma + 2) * m.u3 * a3
    return r1, r2
