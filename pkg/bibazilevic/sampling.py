"""Seeded random draws of rationals, Gaussian rationals and points of the disc"""

import fractions
import math
import typing as t

import numpy as np

from .operators import ClassParams
from .series import GaussianRational


def generator(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def spawn(seed: int, n: int) -> t.List[np.random.Generator]:
    """`n` independent generators, the i-th stream only depends on `seed` and i"""
    return [np.random.default_rng(child) for child in np.random.SeedSequence(seed).spawn(n)]


def rational(rng: np.random.Generator, low, high, max_denominator: int) -> fractions.Fraction:
    """
    A random rational p/q in [low, high] with 1 <= q <= max_denominator

    Example:
        rational(generator(1), -3, 3, max_denominator=12)
    """
    low, high = fractions.Fraction(low), fractions.Fraction(high)
    if low > high:
        raise ValueError(f'Empty interval [{low}, {high}]')
    while True:
        q = int(rng.integers(1, max_denominator + 1))
        lowest, highest = math.ceil(low * q), math.floor(high * q)
        if lowest <= highest:
            return fractions.Fraction(int(rng.integers(lowest, highest + 1)), q)


def positive_rational(rng: np.random.Generator, high, max_denominator: int) -> fractions.Fraction:
    """A random rational in (0, high]"""
    while True:
        value = rational(rng, 0, high, max_denominator)
        if value > 0:
            return value


def gaussian_rational(rng: np.random.Generator, bound, max_denominator: int) -> GaussianRational:
    """A random Gaussian rational with real and imaginary part in [-bound, bound]"""
    return GaussianRational(rational(rng, -bound, bound, max_denominator),
                            rational(rng, -bound, bound, max_denominator))


def disc(rng: np.random.Generator, radius: float, size: int) -> np.ndarray:
    """`size` complex numbers, uniformly distributed in the closed disc |z| <= radius"""
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, size))
    theta = rng.uniform(0.0, 2 * np.pi, size)
    return r * np.exp(1j * theta)


def class_params(rng: np.random.Generator, max_denominator: int, gamma=None,
                 k_zero: bool = False, delta_zero: bool = False) -> ClassParams:
    """
    Rational class parameters with integral delta, free unless fixed by the arguments

    alpha and beta are drawn from [1/2, 1], so all multipliers are non-negative.
    """
    return ClassParams(
        k=0 if k_zero else int(rng.integers(0, 4)),
        alpha=rational(rng, fractions.Fraction(1, 2), 1, max_denominator),
        beta=rational(rng, fractions.Fraction(1, 2), 1, max_denominator),
        lambda_=positive_rational(rng, 3, max_denominator),
        delta=0 if delta_zero else int(rng.integers(0, 5)),
        gamma=gamma if gamma is not None else rational(rng, 0, 3, max_denominator))


def non_degenerate_class_params(rng: np.random.Generator, max_denominator: int) -> ClassParams:
    while True:
        params = class_params(rng, max_denominator)
        if not params.degenerate:
            return params
