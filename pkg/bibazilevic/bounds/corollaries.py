"""
The printed special cases of the general bounds, transcribed as data

Each entry evaluates the printed a2 bound squared (so that rational inputs give exact
values) and the printed a3 bound from the symbols of a parameter point. These forms are
only used by the audit; bounds are always computed by substituting the phi coefficients
into the general formulas.
"""

import dataclasses
import numbers
import typing as t

from .. import maminda, operators
from ..operators import ClassParams


@dataclasses.dataclass(frozen=True)
class Symbols:
    """The quantities the printed forms are written in"""
    gamma: numbers.Real
    ups2: numbers.Real
    ups3: numbers.Real
    c2: numbers.Real
    c3: numbers.Real
    b1: numbers.Real
    b2: numbers.Real
    a: t.Optional[numbers.Real] = None
    b: t.Optional[numbers.Real] = None
    zeta: t.Optional[numbers.Real] = None

    @property
    def u2(self):
        return self.ups2 * self.c2

    @property
    def u3(self):
        return self.ups3 * self.c3

    @property
    def x(self):
        """2 (gamma+2) u3 + (gamma-1)(gamma+2) u2^2"""
        return 2 * (self.gamma + 2) * self.u3 + (self.gamma - 1) * (self.gamma + 2) * self.u2 ** 2

    @classmethod
    def of(cls, params: ClassParams, spec: maminda.PhiSpec) -> 'Symbols':
        b1, b2 = maminda.phi_coefficients(spec)
        return cls(gamma=params.gamma,
                   ups2=operators.upsilon(params, 2), ups3=operators.upsilon(params, 3),
                   c2=operators.c_delta(params.delta, 2), c3=operators.c_delta(params.delta, 3),
                   b1=b1, b2=b2,
                   a=getattr(spec, 'a', None), b=getattr(spec, 'b', None), zeta=getattr(spec, 'zeta', None))


@dataclasses.dataclass(frozen=True)
class Regime:
    """
    The parameters a printed statement fixes

    Args:
        gamma: The fixed type, free when None
        k_zero: k = 0, so every Upsilon is 1
        delta_zero: delta = 0, so every C(delta, n) is 1
    """
    gamma: t.Optional[int] = None
    k_zero: bool = False
    delta_zero: bool = False

    def describe(self) -> str:
        fixed = ([f'gamma={self.gamma}'] if self.gamma is not None else []) \
                + (['k=0'] if self.k_zero else []) + (['delta=0'] if self.delta_zero else [])
        return ', '.join(fixed) or 'general'


@dataclasses.dataclass(frozen=True)
class PrintedCorollary:
    """
    A printed statement with its bound forms

    Args:
        id: e.g. "Cor 2.3" or "Thm 3.1"
        family: The phi family, see `maminda.PhiSpec.family`
        regime: The fixed parameters
        a2_form: The printed a2 bound
        a3_form: The printed a3 bound
        a2_squared: Evaluates the square of the printed a2 bound
        a3: Evaluates the printed a3 bound
        defects: Ids of known print defects of the statement that are transcribed corrected
    """
    id: str
    family: str
    regime: Regime
    a2_form: str
    a3_form: str
    a2_squared: t.Callable[[Symbols], numbers.Real]
    a3: t.Callable[[Symbols], numbers.Real]
    defects: t.Tuple[str, ...] = ()


def _d(s: Symbols):
    return s.a - s.b


def _w(s: Symbols):
    return 1 - s.zeta


GENERIC = 'generic'
JANOWSKI = 'janowski'
ORDER = 'order'

CATALOGUE: t.List[PrintedCorollary] = [
    # phi given by B1, B2
    PrintedCorollary(
        'Cor 2.2', GENERIC, Regime(gamma=0),
        'B1 sqrt(B1) / sqrt(|B1^2 (2 ups3 c3 - (ups2 c2)^2) - (B2 - B1) (ups2 c2)^2|)',
        'B1 / (2 ups3 c3) + (B1 / (ups2 c2))^2',
        lambda s: s.b1 ** 3 / abs(s.b1 ** 2 * (2 * s.u3 - s.u2 ** 2) - (s.b2 - s.b1) * s.u2 ** 2),
        lambda s: s.b1 / (2 * s.u3) + (s.b1 / s.u2) ** 2),
    PrintedCorollary(
        'Cor 2.3', GENERIC, Regime(gamma=1),
        'B1 sqrt(B1) / sqrt(|3 B1^2 ups3 c3 - 4 (B2 - B1) (ups2 c2)^2|)',
        'B1 / (3 ups3 c3) + (B1 / (2 ups2 c2))^2',
        lambda s: s.b1 ** 3 / abs(3 * s.b1 ** 2 * s.u3 - 4 * (s.b2 - s.b1) * s.u2 ** 2),
        lambda s: s.b1 / (3 * s.u3) + (s.b1 / (2 * s.u2)) ** 2),
    PrintedCorollary(
        'Cor 2.4', GENERIC, Regime(gamma=0, k_zero=True),
        'B1 sqrt(B1) / sqrt(|B1^2 (2 c3 - c2^2) - (B2 - B1) c2^2|)',
        'B1 / (2 c3) + (B1 / c2)^2',
        lambda s: s.b1 ** 3 / abs(s.b1 ** 2 * (2 * s.c3 - s.c2 ** 2) - (s.b2 - s.b1) * s.c2 ** 2),
        lambda s: s.b1 / (2 * s.c3) + (s.b1 / s.c2) ** 2),
    PrintedCorollary(
        'Cor 2.5', GENERIC, Regime(gamma=1, k_zero=True),
        'B1 sqrt(B1) / sqrt(|3 B1^2 c3 - 4 (B2 - B1) c2^2|)',
        'B1 / (3 c3) + (B1 / (2 c2))^2',
        lambda s: s.b1 ** 3 / abs(3 * s.b1 ** 2 * s.c3 - 4 * (s.b2 - s.b1) * s.c2 ** 2),
        lambda s: s.b1 / (3 * s.c3) + (s.b1 / (2 * s.c2)) ** 2),
    PrintedCorollary(
        'Cor 2.6', GENERIC, Regime(gamma=0, delta_zero=True),
        'B1 sqrt(B1) / sqrt(|B1^2 (2 ups3 - ups2^2) - (B2 - B1) ups2^2|)',
        'B1 / (2 ups3) + (B1 / ups2)^2',
        lambda s: s.b1 ** 3 / abs(s.b1 ** 2 * (2 * s.ups3 - s.ups2 ** 2) - (s.b2 - s.b1) * s.ups2 ** 2),
        lambda s: s.b1 / (2 * s.ups3) + (s.b1 / s.ups2) ** 2),
    PrintedCorollary(
        'Cor 2.7', GENERIC, Regime(gamma=1, delta_zero=True),
        'B1 sqrt(B1) / sqrt(|3 B1^2 ups3 - 4 (B2 - B1) ups2^2|)',
        'B1 / (3 ups3) + (B1 / (2 ups2))^2',
        lambda s: s.b1 ** 3 / abs(3 * s.b1 ** 2 * s.ups3 - 4 * (s.b2 - s.b1) * s.ups2 ** 2),
        lambda s: s.b1 / (3 * s.ups3) + (s.b1 / (2 * s.ups2)) ** 2,
        defects=('cor-2.7-parenthesis',)),
    PrintedCorollary(
        'Cor 2.8', GENERIC, Regime(gamma=0, k_zero=True, delta_zero=True),
        'B1 sqrt(B1) / sqrt(|B1^2 - (B2 - B1)|)',
        'B1 / 2 + B1^2',
        lambda s: s.b1 ** 3 / abs(s.b1 ** 2 - (s.b2 - s.b1)),
        lambda s: s.b1 / 2 + s.b1 ** 2),
    PrintedCorollary(
        'Cor 2.9', GENERIC, Regime(gamma=1, k_zero=True, delta_zero=True),
        'B1 sqrt(B1) / sqrt(|3 B1^2 - 4 (B2 - B1)|)',
        'B1 / 3 + (B1 / 2)^2',
        lambda s: s.b1 ** 3 / abs(3 * s.b1 ** 2 - 4 * (s.b2 - s.b1)),
        lambda s: s.b1 / 3 + (s.b1 / 2) ** 2),

    # Janowski functions
    PrintedCorollary(
        'Thm 3.1', JANOWSKI, Regime(),
        'sqrt(2) (A - B) / sqrt(|(A - B) X - 2 (B + 1) (gamma + 1)^2 (ups2 c2)^2|)',
        '(A - B) / ((gamma + 2) ups3 c3) + ((A - B) / ((gamma + 1) ups2 c2))^2',
        lambda s: 2 * _d(s) ** 2 / abs(_d(s) * s.x - 2 * (s.b + 1) * (s.gamma + 1) ** 2 * s.u2 ** 2),
        lambda s: _d(s) / ((s.gamma + 2) * s.u3) + (_d(s) / ((s.gamma + 1) * s.u2)) ** 2),
    PrintedCorollary(
        'Cor 3.2', JANOWSKI, Regime(gamma=0),
        '(A - B) / sqrt(|(A - B) (2 ups3 c3 - (ups2 c2)^2) - (B + 1) (ups2 c2)^2|)',
        '(A - B) / (2 ups3 c3) + ((A - B) / (ups2 c2))^2',
        lambda s: _d(s) ** 2 / abs(_d(s) * (2 * s.u3 - s.u2 ** 2) - (s.b + 1) * s.u2 ** 2),
        lambda s: _d(s) / (2 * s.u3) + (_d(s) / s.u2) ** 2),
    PrintedCorollary(
        'Cor 3.3', JANOWSKI, Regime(gamma=1),
        '(A - B) / sqrt(|3 (A - B) ups3 c3 - 4 (B + 1) (ups2 c2)^2|)',
        '(A - B) / (3 ups3 c3) + ((A - B) / (2 ups2 c2))^2',
        lambda s: _d(s) ** 2 / abs(3 * _d(s) * s.u3 - 4 * (s.b + 1) * s.u2 ** 2),
        lambda s: _d(s) / (3 * s.u3) + (_d(s) / (2 * s.u2)) ** 2),
    PrintedCorollary(
        'Cor 3.4', JANOWSKI, Regime(gamma=0, k_zero=True),
        '(A - B) / sqrt(|(A - B) (2 c3 - c2^2) - (B + 1) c2^2|)',
        '(A - B) / (2 c3) + ((A - B) / c2)^2',
        lambda s: _d(s) ** 2 / abs(_d(s) * (2 * s.c3 - s.c2 ** 2) - (s.b + 1) * s.c2 ** 2),
        lambda s: _d(s) / (2 * s.c3) + (_d(s) / s.c2) ** 2),
    PrintedCorollary(
        'Cor 3.5', JANOWSKI, Regime(gamma=1, k_zero=True),
        '(A - B) / sqrt(|3 (A - B) c3 - 4 (B + 1) c2^2|)',
        '(A - B) / (3 c3) + ((A - B) / (2 c2))^2',
        lambda s: _d(s) ** 2 / abs(3 * _d(s) * s.c3 - 4 * (s.b + 1) * s.c2 ** 2),
        lambda s: _d(s) / (3 * s.c3) + (_d(s) / (2 * s.c2)) ** 2),
    PrintedCorollary(
        'Cor 3.6', JANOWSKI, Regime(gamma=0, delta_zero=True),
        '(A - B) / sqrt(|(A - B) (2 ups3 - ups2^2) - (B + 1) ups2^2|)',
        '(A - B) / (2 ups3) + ((A - B) / ups2)^2',
        lambda s: _d(s) ** 2 / abs(_d(s) * (2 * s.ups3 - s.ups2 ** 2) - (s.b + 1) * s.ups2 ** 2),
        lambda s: _d(s) / (2 * s.ups3) + (_d(s) / s.ups2) ** 2),
    PrintedCorollary(
        'Cor 3.7', JANOWSKI, Regime(gamma=1, delta_zero=True),
        '(A - B) / sqrt(|3 (A - B) ups3 - 4 (B + 1) ups2^2|)',
        '(A - B) / (3 ups3) + ((A - B) / (2 ups2))^2',
        lambda s: _d(s) ** 2 / abs(3 * _d(s) * s.ups3 - 4 * (s.b + 1) * s.ups2 ** 2),
        lambda s: _d(s) / (3 * s.ups3) + (_d(s) / (2 * s.ups2)) ** 2),
    PrintedCorollary(
        'Cor 3.8', JANOWSKI, Regime(gamma=0, k_zero=True, delta_zero=True),
        '(A - B) / sqrt(|(A - B) - (B + 1)|)',
        '(A - B) / 2 + (A - B)^2',
        lambda s: _d(s) ** 2 / abs(_d(s) - (s.b + 1)),
        lambda s: _d(s) / 2 + _d(s) ** 2),
    PrintedCorollary(
        'Cor 3.9', JANOWSKI, Regime(gamma=1, k_zero=True, delta_zero=True),
        '(A - B) / sqrt(|3 (A - B)^2 - 4 (B + 1)|)',
        '(A - B) / 3 + ((A - B) / 2)^2',
        lambda s: _d(s) ** 2 / abs(3 * _d(s) ** 2 - 4 * (s.b + 1)),
        lambda s: _d(s) / 3 + (_d(s) / 2) ** 2),

    # functions of order zeta
    PrintedCorollary(
        'Thm 3.2', ORDER, Regime(),
        '2 sqrt(1 - zeta) / sqrt(|X|)',
        '2 (1 - zeta) / ((gamma + 2) ups3 c3) + (2 (1 - zeta) / ((gamma + 1) ups2 c2))^2',
        lambda s: 4 * _w(s) / abs(s.x),
        lambda s: 2 * _w(s) / ((s.gamma + 2) * s.u3) + (2 * _w(s) / ((s.gamma + 1) * s.u2)) ** 2,
        defects=('order-zeta-extra-one',)),
    PrintedCorollary(
        'Cor 3.11', ORDER, Regime(gamma=0),
        'sqrt(2 (1 - zeta)) / sqrt(|2 ups3 c3 - (ups2 c2)^2|)',
        '(1 - zeta) / (ups3 c3) + (2 (1 - zeta) / (ups2 c2))^2',
        lambda s: 2 * _w(s) / abs(2 * s.u3 - s.u2 ** 2),
        lambda s: _w(s) / s.u3 + (2 * _w(s) / s.u2) ** 2),
    PrintedCorollary(
        'Cor 3.12', ORDER, Regime(gamma=1),
        'sqrt(2 (1 - zeta) / (3 ups3 c3))',
        '2 (1 - zeta) / (3 ups3 c3) + ((1 - zeta) / (ups2 c2))^2',
        lambda s: 2 * _w(s) / (3 * s.u3),
        lambda s: 2 * _w(s) / (3 * s.u3) + (_w(s) / s.u2) ** 2),
    PrintedCorollary(
        'Cor 3.13', ORDER, Regime(gamma=0, k_zero=True),
        '2 (1 - zeta) / sqrt(|2 c3 - c2^2|)',
        '(1 - zeta) / c3 + (2 (1 - zeta) / c2)^2',
        lambda s: 4 * _w(s) ** 2 / abs(2 * s.c3 - s.c2 ** 2),
        lambda s: _w(s) / s.c3 + (2 * _w(s) / s.c2) ** 2),
    PrintedCorollary(
        'Cor 3.14', ORDER, Regime(gamma=1, k_zero=True),
        'sqrt(2 (1 - zeta) / (3 c3))',
        '2 (1 - zeta) / (3 c3) + ((1 - zeta) / c2)^2',
        lambda s: 2 * _w(s) / (3 * s.c3),
        lambda s: 2 * _w(s) / (3 * s.c3) + (_w(s) / s.c2) ** 2),
    PrintedCorollary(
        'Cor 3.15', ORDER, Regime(gamma=0, delta_zero=True),
        'sqrt(2 (1 - zeta)) / sqrt(|2 ups3 - ups2^2|)',
        '(1 - zeta) / ups3 + (2 (1 - zeta) / ups2)^2',
        lambda s: 2 * _w(s) / abs(2 * s.ups3 - s.ups2 ** 2),
        lambda s: _w(s) / s.ups3 + (2 * _w(s) / s.ups2) ** 2),
    PrintedCorollary(
        'Cor 3.16', ORDER, Regime(gamma=1, delta_zero=True),
        'sqrt(2 (1 - zeta) / (3 ups3))',
        '2 (1 - zeta) / (3 ups3) + ((1 - zeta) / ups2)^2',
        lambda s: 2 * _w(s) / (3 * s.ups3),
        lambda s: 2 * _w(s) / (3 * s.ups3) + (_w(s) / s.ups2) ** 2),
    PrintedCorollary(
        'Cor 3.17', ORDER, Regime(gamma=0, k_zero=True, delta_zero=True),
        'sqrt(2 (1 - zeta))',
        '(1 - zeta) + 4 (1 - zeta)^2',
        lambda s: 2 * _w(s),
        lambda s: _w(s) + 4 * _w(s) ** 2),
    PrintedCorollary(
        'Cor 3.18', ORDER, Regime(gamma=1, k_zero=True, delta_zero=True),
        'sqrt(2 (1 - zeta) / 3)',
        '2 (1 - zeta) / 3 + (1 - zeta)^2',
        lambda s: 2 * _w(s) / 3,
        lambda s: 2 * _w(s) / 3 + _w(s) ** 2),
]


def find(corollary_id: str) -> PrintedCorollary:
    for corollary in CATALOGUE:
        if corollary.id == corollary_id:
            return corollary
    raise KeyError(f'No printed statement "{corollary_id}"')
