"""Ma-Minda target functions phi(z) = 1 + B1 z + B2 z^2 + ... and their first two coefficients"""

import abc
import dataclasses
import fractions
import numbers
import typing as t

from . import series
from .series import Mode, TruncSeries


class InvalidPhiSpec(ValueError):
    """Parameters of a Ma-Minda function outside of their admissible ranges"""


def _normalize(value):
    if isinstance(value, numbers.Rational) and not isinstance(value, bool):
        return fractions.Fraction(value)
    return value


def _mode(*values) -> Mode:
    return Mode.EXACT if all(isinstance(value, numbers.Rational) for value in values) else Mode.FLOATING


class PhiSpec(abc.ABC):
    """A family of Ma-Minda functions"""

    family: str = None

    @abc.abstractmethod
    def coefficients(self) -> t.Tuple[numbers.Real, numbers.Real]:
        """The closed forms of B1 and B2"""
        pass

    @abc.abstractmethod
    def series(self, order: int) -> TruncSeries:
        """The Taylor expansion of phi at 0"""
        pass

    @abc.abstractmethod
    def parameters(self) -> t.Dict[str, numbers.Real]:
        """The family parameters by name"""
        pass

    @property
    def mode(self) -> Mode:
        return _mode(*self.parameters().values())

    def describe(self) -> str:
        return ';'.join(f'{name}={value}' for name, value in self.parameters().items())


@dataclasses.dataclass(frozen=True)
class Generic(PhiSpec):
    """phi given by its coefficients B1 > 0 and B2, higher coefficients are unknown"""
    b1: numbers.Real
    b2: numbers.Real
    family = 'generic'

    def __post_init__(self):
        object.__setattr__(self, 'b1', _normalize(self.b1))
        object.__setattr__(self, 'b2', _normalize(self.b2))
        if not self.b1 > 0:
            raise InvalidPhiSpec(f'B1 must be > 0, got {self.b1}')

    def coefficients(self):
        return self.b1, self.b2

    def series(self, order: int) -> TruncSeries:
        # only B1 and B2 are known
        return TruncSeries([1, self.b1, self.b2][:order + 1], mode=self.mode)

    def parameters(self):
        return {'B1': self.b1, 'B2': self.b2}


@dataclasses.dataclass(frozen=True)
class Janowski(PhiSpec):
    """phi(z) = (1 + A z) / (1 + B z) with -1 <= B < A <= 1"""
    a: numbers.Real
    b: numbers.Real
    family = 'janowski'

    def __post_init__(self):
        object.__setattr__(self, 'a', _normalize(self.a))
        object.__setattr__(self, 'b', _normalize(self.b))
        if not -1 <= self.b < self.a <= 1:
            raise InvalidPhiSpec(f'Janowski functions need -1 <= B < A <= 1, got A={self.a}, B={self.b}')

    def coefficients(self):
        return self.a - self.b, -self.b * (self.a - self.b)

    def series(self, order: int) -> TruncSeries:
        mode = self.mode
        return series.divide(TruncSeries([1, self.a], mode=mode, order=order),
                             TruncSeries([1, self.b], mode=mode, order=order))

    def parameters(self):
        return {'A': self.a, 'B': self.b}


@dataclasses.dataclass(frozen=True)
class OrderZeta(PhiSpec):
    """phi(z) = (1 + (1 - 2 zeta) z) / (1 - z) with 0 <= zeta < 1, i.e. Re(...) > zeta"""
    zeta: numbers.Real
    family = 'order'

    def __post_init__(self):
        object.__setattr__(self, 'zeta', _normalize(self.zeta))
        if not 0 <= self.zeta < 1:
            raise InvalidPhiSpec(f'zeta must be in [0, 1), got {self.zeta}')

    def coefficients(self):
        b = 2 * (1 - self.zeta)
        return b, b

    def series(self, order: int) -> TruncSeries:
        mode = self.mode
        return series.divide(TruncSeries([1, 1 - 2 * self.zeta], mode=mode, order=order),
                             TruncSeries([1, -1], mode=mode, order=order))

    def parameters(self):
        return {'zeta': self.zeta}


def phi_series(spec: PhiSpec, order: int) -> TruncSeries:
    if order < 2:
        raise series.OrderError(f'phi series are computed to order >= 2, got {order}')
    return spec.series(order)


def phi_coefficients(spec: PhiSpec) -> t.Tuple[numbers.Real, numbers.Real]:
    return spec.coefficients()


def parse_phi(b1=None, b2=None, a=None, b=None, zeta=None) -> PhiSpec:
    """
    Builds a phi from exactly one family of parameters

    Examples:
        >>> parse_phi(zeta=fractions.Fraction(1, 2))
        OrderZeta(zeta=Fraction(1, 2))
    """
    families = [name for name, given in [('generic', b1 is not None or b2 is not None),
                                         ('janowski', a is not None or b is not None),
                                         ('order', zeta is not None)] if given]
    if len(families) != 1:
        raise InvalidPhiSpec('Give the parameters of exactly one phi family: B1 and B2, A and B, or zeta')
    if families == ['generic']:
        if b1 is None or b2 is None:
            raise InvalidPhiSpec('A generic phi needs both B1 and B2')
        return Generic(b1, b2)
    if families == ['janowski']:
        if a is None or b is None:
            raise InvalidPhiSpec('A Janowski phi needs both A and B')
        return Janowski(a, b)
    return OrderZeta(zeta)
