"""
Maximization of |a2| and |a3| over the relaxed problem of the proof

In the proof a2^2 = K (p2 + h2) and a3 = c (p1^2 + h1^2) + d (p2 - h2), with h1 = -p1 and
|p_k|, |h_k| <= 2. The maxima of these expressions are the formula bounds, attained at
corners of the constraint set. The real grid and the random draws check that nothing
inside the set goes beyond them.
"""

import dataclasses
import enum
import itertools
import typing as t

import numpy as np

from . import proof
from .proof import CaratheodoryTuple
from .. import config, operators, sampling
from ..bounds import theorem
from ..bounds.theorem import ZeroDenominator
from ..operators import ClassParams


class Target(enum.Enum):
    A2 = 'a2'
    A3 = 'a3'


CORNER_P1 = (0, 2, -2)
CORNER_P2 = (2, -2, 2j, -2j)


@dataclasses.dataclass(frozen=True)
class ExtremalReport:
    """
    The result of an extremal search

    Args:
        target: The maximized coefficient
        searched_max: The largest value found
        formula_bound: The bound from the closed form
        argmax: A tuple where `searched_max` is attained, the first one in corner order
        gap: formula_bound - searched_max, 0.0 when within round-off
        attained_at_corner: Whether `argmax` is a corner of the constraint set
        candidates: How many tuples were evaluated
        strict_max: In strict mode, the maximum over tuples of the coefficient body
        strict_argmax: In strict mode, where `strict_max` is attained
        flags: e.g. `negative-multiplier`
    """
    target: Target
    searched_max: float
    formula_bound: float
    argmax: CaratheodoryTuple
    gap: float
    attained_at_corner: bool
    candidates: int
    strict_max: t.Optional[float] = None
    strict_argmax: t.Optional[CaratheodoryTuple] = None
    flags: t.Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        result = {'target': self.target.value,
                  'searched_max': self.searched_max,
                  'formula_bound': self.formula_bound,
                  'gap': self.gap,
                  'argmax': self.argmax.as_dict(),
                  'attained_at_corner': self.attained_at_corner,
                  'candidates': self.candidates,
                  'flags': list(self.flags)}
        if self.strict_max is not None:
            result['strict_max'] = self.strict_max
            result['strict_argmax'] = self.strict_argmax.as_dict()
        return result


@dataclasses.dataclass(frozen=True)
class Candidates:
    """Tuples (p1, p2, -p1, h2) as arrays"""
    p1: np.ndarray
    p2: np.ndarray
    h2: np.ndarray

    def __len__(self):
        return len(self.p1)

    def tuple(self, index: int) -> CaratheodoryTuple:
        return CaratheodoryTuple.from_p(complex(self.p1[index]), complex(self.p2[index]), complex(self.h2[index]))

    def select(self, mask: np.ndarray) -> 'Candidates':
        return Candidates(self.p1[mask], self.p2[mask], self.h2[mask])

    def in_coefficient_body(self) -> np.ndarray:
        """|p2 - p1^2/2| <= 2 - |p1|^2/2 and the same for h, the two-coefficient Caratheodory body"""
        radius = 2 - np.abs(self.p1) ** 2 / 2 + config.float_tolerance()
        return (np.abs(self.p2 - self.p1 ** 2 / 2) <= radius) & (np.abs(self.h2 - self.p1 ** 2 / 2) <= radius)


def corners() -> Candidates:
    """p1 in {0, 2, -2}, p2 and h2 in {2, -2, 2i, -2i}, enumerated in p1, p2, h2 order"""
    points = np.array(list(itertools.product(CORNER_P1, CORNER_P2, CORNER_P2)), dtype=complex)
    return Candidates(points[:, 0], points[:, 1], points[:, 2])


def real_grid(resolution: float) -> Candidates:
    if not resolution > 0:
        raise ValueError(f'resolution must be > 0, got {resolution}')
    axis = np.linspace(-2.0, 2.0, int(round(4.0 / resolution)) + 1)
    p1, p2, h2 = (values.ravel().astype(complex) for values in np.meshgrid(axis, axis, axis, indexing='ij'))
    return Candidates(p1, p2, h2)


def random_polydisc(rng: np.random.Generator, draws: int) -> Candidates:
    """Uniform draws of p1, p2, h2 in the disc of radius 2"""
    return Candidates(sampling.disc(rng, 2.0, draws), sampling.disc(rng, 2.0, draws), sampling.disc(rng, 2.0, draws))


def random_coefficient_body(rng: np.random.Generator, draws: int) -> Candidates:
    """
    Tuples of Caratheodory functions p = (1+u)/(1-u) and h = (1+v)/(1-v) with v1 = -u1

    u1 is uniform in the unit disc, u2 and v2 uniform in the disc of radius 1 - |u1|^2.
    """
    c1 = sampling.disc(rng, 1.0, draws)
    radius = 1 - np.abs(c1) ** 2
    c2 = radius * sampling.disc(rng, 1.0, draws)
    d2 = radius * sampling.disc(rng, 1.0, draws)
    return Candidates(2 * c1, 2 * c2 + 2 * c1 ** 2, 2 * d2 + 2 * c1 ** 2)


def _join(*parts: Candidates) -> Candidates:
    return Candidates(*(np.concatenate([getattr(part, name) for part in parts]) for name in ('p1', 'p2', 'h2')))


def relation_coefficients(params: ClassParams, b1, b2) -> t.Tuple[float, float, float]:
    """K, c and d of a2^2 = K (p2 + h2) and a3 = c (p1^2 + h1^2) + d (p2 - h2)"""
    m = operators.multipliers(params)
    if m.degenerate:
        raise operators.DegenerateOperator(f'The multipliers vanish for {params}')
    denominator = proof.a2_squared_denominator(params, b1, b2)
    if denominator == 0:
        raise ZeroDenominator(f'a2^2 is undefined for {params}, B1={b1}, B2={b2}')
    gamma = params.gamma
    return (float(b1 ** 3 / denominator),
            float(b1 ** 2 / (8 * (gamma + 1) ** 2 * m.u2 ** 2)),
            float(b1 / (4 * (gamma + 2) * m.u3)))


def magnitudes(target: Target, coefficients: t.Tuple[float, float, float], candidates: Candidates) -> np.ndarray:
    k, c, d = coefficients
    if target is Target.A2:
        return np.sqrt(abs(k) * np.abs(candidates.p2 + candidates.h2))
    return np.abs(2 * c * candidates.p1 ** 2 + d * (candidates.p2 - candidates.h2))


def formula_bound(params: ClassParams, b1, b2, target: Target) -> float:
    if target is Target.A2:
        return theorem.bound_a2(params, b1, b2)
    return theorem.bound_a3(params, b1)


def _exceeds(value: float, reference: float) -> bool:
    return value > reference + config.float_tolerance() * max(1.0, abs(reference))


def _maximize(values_corners: np.ndarray, values_sweep: np.ndarray) -> t.Tuple[float, int, bool]:
    """The maximum and its index in corners + sweep; corners win unless the sweep exceeds them"""
    corner_index = int(np.argmax(values_corners)) if len(values_corners) else None
    sweep_index = int(np.argmax(values_sweep)) if len(values_sweep) else None
    if corner_index is not None and (sweep_index is None
                                     or not _exceeds(values_sweep[sweep_index], values_corners[corner_index])):
        return float(values_corners[corner_index]), corner_index, True
    return float(values_sweep[sweep_index]), len(values_corners) + sweep_index, False


def extremal_search(params: ClassParams, b1, b2, target: Target, resolution: t.Optional[float] = None,
                    random_draws: t.Optional[int] = None, seed: t.Optional[int] = None,
                    strict: bool = False) -> ExtremalReport:
    """
    Maximizes |a2| or |a3| over corners, a real grid and random tuples

    Args:
        params: The class parameters
        b1, b2: The phi coefficients
        target: The maximized coefficient
        resolution: The step of the real grid, defaults to `config.search_resolution()`
        random_draws: The number of random tuples, defaults to `config.search_random_draws()`
        seed: Defaults to `config.default_seed()`
        strict: Also maximize over tuples of the two-coefficient Caratheodory body
    """
    resolution = config.search_resolution() if resolution is None else resolution
    random_draws = config.search_random_draws() if random_draws is None else random_draws
    rng = sampling.generator(config.default_seed() if seed is None else seed)

    bound = formula_bound(params, b1, b2, target)
    coefficients = relation_coefficients(params, b1, b2)

    corner_candidates = corners()
    sweep = _join(real_grid(resolution), random_polydisc(rng, random_draws))
    searched_max, index, at_corner = _maximize(magnitudes(target, coefficients, corner_candidates),
                                               magnitudes(target, coefficients, sweep))
    everything = _join(corner_candidates, sweep)

    gap = bound - searched_max
    if abs(gap) <= config.float_tolerance() * max(1.0, bound):
        gap = 0.0

    flags = (theorem.NEGATIVE_MULTIPLIER,) if operators.multipliers(params).u3 < 0 else ()
    strict_max, strict_argmax = None, None
    if strict:
        strict_corners = corner_candidates.select(corner_candidates.in_coefficient_body())
        strict_sweep = sweep.select(sweep.in_coefficient_body())
        strict_sweep = _join(strict_sweep, random_coefficient_body(rng, random_draws))
        strict_max, strict_index, _ = _maximize(magnitudes(target, coefficients, strict_corners),
                                                magnitudes(target, coefficients, strict_sweep))
        strict_argmax = _join(strict_corners, strict_sweep).tuple(strict_index)

    return ExtremalReport(target=target, searched_max=searched_max, formula_bound=bound,
                          argmax=everything.tuple(index), gap=gap, attained_at_corner=at_corner,
                          candidates=len(everything), strict_max=strict_max, strict_argmax=strict_argmax,
                          flags=flags)


@dataclasses.dataclass(frozen=True)
class SoundnessReport:
    """Largest |a2| and |a3| among random admissible tuples, and how often they exceed the bounds"""
    draws: int
    max_a2: float
    max_a3: float
    bound_a2: float
    bound_a3: float
    violations_a2: int
    violations_a3: int

    @property
    def sound(self) -> bool:
        return self.violations_a2 == 0 and self.violations_a3 == 0


def soundness_sweep(params: ClassParams, b1, b2, draws: t.Optional[int] = None,
                    seed: t.Optional[int] = None) -> SoundnessReport:
    """Evaluates both coefficients at random tuples of the relaxed problem"""
    draws = config.soundness_draws() if draws is None else draws
    rng = sampling.generator(config.default_seed() if seed is None else seed)
    coefficients = relation_coefficients(params, b1, b2)
    candidates = random_polydisc(rng, draws)
    values_a2 = magnitudes(Target.A2, coefficients, candidates)
    values_a3 = magnitudes(Target.A3, coefficients, candidates)
    bound_a2, bound_a3 = formula_bound(params, b1, b2, Target.A2), formula_bound(params, b1, b2, Target.A3)
    tolerance = config.float_tolerance()
    return SoundnessReport(draws=draws, max_a2=float(values_a2.max()), max_a3=float(values_a3.max()),
                           bound_a2=bound_a2, bound_a3=bound_a3,
                           violations_a2=int(np.sum(values_a2 > bound_a2 * (1 + tolerance))),
                           violations_a3=int(np.sum(values_a3 > bound_a3 * (1 + tolerance))))
