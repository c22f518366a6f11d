"""
The proof chain of the general bounds, reproduced with series arithmetic

With u = (p - 1)/(p + 1) and v = (h - 1)/(h + 1) for Caratheodory functions p and h, the
class conditions read

    quotient of f   = phi(u(z)),    quotient of g = f^-1 = phi(v(w))

Comparing the first two coefficients on both sides gives four relations between a2, a3 and
the tuple (p1, p2, h1, h2). The bounds follow by eliminating a3 (sum relation) and a2^2
(difference relation) and bounding |p_k|, |h_k| <= 2.
"""

import dataclasses
import numbers
import typing

from .. import config, operators, series
from ..bounds.theorem import ZeroDenominator, x_factor
from ..operators import ClassParams, DegenerateOperator
from ..series import Mode, NormalizedSeries, TruncSeries


class InvalidTuple(ValueError):
    """A Caratheodory tuple that violates h1 = -p1"""


@dataclasses.dataclass(frozen=True)
class CaratheodoryTuple:
    """
    The first two coefficients of the Caratheodory functions p and h of the proof

    Args:
        p1, p2: Coefficients of p(z) = 1 + p1 z + p2 z^2 + ...
        h1, h2: Coefficients of h(w) = 1 + h1 w + h2 w^2 + ..., with h1 = -p1
    """
    p1: typing.Any
    p2: typing.Any
    h1: typing.Any
    h2: typing.Any

    def __post_init__(self):
        values = (self.p1, self.p2, self.h1, self.h2)
        mode = series.infer_mode(values)
        for name, value in zip(('p1', 'p2', 'h1', 'h2'), values):
            object.__setattr__(self, name, series.coerce_coefficient(value, mode))
        if self.h1 != -self.p1:
            raise InvalidTuple(f'The first coefficients need h1 = -p1, got p1={self.p1}, h1={self.h1}')

    @classmethod
    def from_p(cls, p1, p2, h2) -> 'CaratheodoryTuple':
        return cls(p1, p2, -p1, h2)

    @classmethod
    def zero(cls) -> 'CaratheodoryTuple':
        return cls(0, 0, 0, 0)

    @property
    def mode(self) -> Mode:
        return Mode.FLOATING if isinstance(self.p1, complex) else Mode.EXACT

    def values(self) -> typing.Tuple:
        return self.p1, self.p2, self.h1, self.h2

    def is_admissible(self) -> bool:
        """|p_k| <= 2 and |h_k| <= 2, the bounds on coefficients of Caratheodory functions"""
        if self.mode is Mode.EXACT:
            return all(value.abs_squared() <= 4 for value in self.values())
        return all(abs(value) <= 2 for value in self.values())

    def p(self) -> TruncSeries:
        return TruncSeries([1, self.p1, self.p2], mode=self.mode)

    def h(self) -> TruncSeries:
        return TruncSeries([1, self.h1, self.h2], mode=self.mode)

    def to_floating(self) -> 'CaratheodoryTuple':
        return CaratheodoryTuple(*(complex(value) for value in self.values()))

    def as_dict(self) -> typing.Dict[str, str]:
        return {'p1': str(self.p1), 'p2': str(self.p2), 'h1': str(self.h1), 'h2': str(self.h2)}


@dataclasses.dataclass(frozen=True)
class SchwarzPair:
    """The Schwarz functions u = (p-1)/(p+1) and v = (h-1)/(h+1)"""
    u: TruncSeries
    v: TruncSeries

    def __post_init__(self):
        for name, w in (('u', self.u), ('v', self.v)):
            if w[0] != 0:
                raise series.ConstantTermError(f'Schwarz function {name} needs constant term 0, got {w[0]}')

    @classmethod
    def of(cls, t: CaratheodoryTuple) -> 'SchwarzPair':
        return cls(schwarz_from_caratheodory(t.p()), schwarz_from_caratheodory(t.h()))

    def in_coefficient_body(self) -> bool:
        """|c1| <= 1 and |c2| <= 1 - |c1|^2 for both functions"""
        def inside(w: TruncSeries) -> bool:
            c1 = abs(complex(w[1]))
            c2 = abs(complex(w[2])) if w.order >= 2 else 0.0
            return c1 <= 1 and c2 <= 1 - c1 ** 2
        return inside(self.u) and inside(self.v)


def schwarz_from_caratheodory(p: TruncSeries) -> TruncSeries:
    """u = (p - 1) / (p + 1), with u1 = p1/2 and u2 = (p2 - p1^2/2)/2"""
    if p[0] != 1:
        raise series.ConstantTermError(f'A Caratheodory series needs constant term 1, got {p[0]}')
    return series.divide(p - 1, p + 1)


def caratheodory_from_schwarz(w: TruncSeries) -> TruncSeries:
    """p = (1 + w) / (1 - w)"""
    if w[0] != 0:
        raise series.ConstantTermError(f'A Schwarz series needs constant term 0, got {w[0]}')
    return series.divide(1 + w, 1 - w)


def _non_degenerate(params: ClassParams) -> operators.MultiplierPair:
    m = operators.multipliers(params)
    if m.degenerate:
        raise DegenerateOperator(f'The multipliers vanish for {params}')
    return m


def _phi_side(b1, b2, c1, c2) -> typing.Tuple:
    """The first two coefficients of phi(w) for the Caratheodory coefficients c1, c2 of w"""
    return b1 * c1 / 2, b1 * (c2 - c1 * c1 / 2) / 2 + b2 * c1 * c1 / 4


@dataclasses.dataclass(frozen=True)
class ProofRelations:
    """
    a2 and a3 as the proof determines them from a tuple

    Args:
        a2_from_first: a2 from the first coefficient relation, B1 p1 / (2 (gamma+1) u2)
        a2_squared_from_sum: a2^2 from the sum relation after eliminating p1^2 + h1^2
        a3_from_difference: a3 from the difference relation with a2^2 from the squares relation
        residuals: Relations that have to hold for any tuple, by name
    """
    a2_from_first: typing.Any
    a2_squared_from_sum: typing.Any
    a3_from_difference: typing.Any
    residuals: typing.Dict[str, typing.Any]


def a2_squared_denominator(params: ClassParams, b1, b2):
    """2 B1^2 X - 4 (B2 - B1) (gamma+1)^2 u2^2"""
    m = _non_degenerate(params)
    return 2 * b1 ** 2 * x_factor(params) - 4 * (b2 - b1) * (params.gamma + 1) ** 2 * m.u2 ** 2


def proof_relations(params: ClassParams, b1, b2, t: CaratheodoryTuple) -> ProofRelations:
    m = _non_degenerate(params)
    gamma = params.gamma
    p1, p2, h1, h2 = t.values()

    denominator = a2_squared_denominator(params, b1, b2)
    if denominator == 0:
        raise ZeroDenominator(f'a2^2 is undefined for {params}, B1={b1}, B2={b2}')

    a2 = b1 * p1 / (2 * (gamma + 1) * m.u2)
    a2_squared = b1 ** 3 * (p2 + h2) / denominator
    a3 = b1 ** 2 * (p1 * p1 + h1 * h1) / (8 * (gamma + 1) ** 2 * m.u2 ** 2) + b1 * (p2 - h2) / (4 * (gamma + 2) * m.u3)

    residuals = {
        'inverse-first-coefficient': series.magnitude(-(gamma + 1) * m.u2 * a2 - b1 * h1 / 2),
        'squares-relation': series.magnitude(2 * (gamma + 1) ** 2 * m.u2 ** 2 * a2 * a2
                                             - b1 ** 2 * (p1 * p1 + h1 * h1) / 4),
        # sum relation with p1^2 + h1^2 eliminated through the squares relation
        'sum-relation': series.magnitude(x_factor(params) * a2_squared - b1 * (p2 + h2) / 2
                                         - (b2 - b1) * 2 * (gamma + 1) ** 2 * m.u2 ** 2 * a2_squared / b1 ** 2),
    }
    return ProofRelations(a2_from_first=a2, a2_squared_from_sum=a2_squared, a3_from_difference=a3,
                          residuals=residuals)


def tuple_from_coefficients(params: ClassParams, b1, b2, a2, a3) -> CaratheodoryTuple:
    """The tuple for which a function with coefficients a2, a3 satisfies both coefficient relations"""
    _non_degenerate(params)
    q1, q2 = operators.quotient_coefficients(params, a2, a3)
    r1, r2 = operators.inverse_quotient_coefficients(params, a2, a3)
    p1 = 2 * q1 / b1
    h1 = 2 * r1 / b1
    p2 = 2 * (q2 - b2 * p1 * p1 / 4) / b1 + p1 * p1 / 2
    h2 = 2 * (r2 - b2 * h1 * h1 / 4) / b1 + h1 * h1 / 2
    return CaratheodoryTuple(p1, p2, h1, h2)


def relation_residuals(params: ClassParams, b1, b2, a2, a3, t: CaratheodoryTuple) -> typing.Dict[str, typing.Any]:
    """
    All relations of the proof for a function with coefficients a2, a3 and its tuple

    Every residual is 0 exactly when a2, a3 and the tuple belong together, see `tuple_from_coefficients`.
    """
    m = _non_degenerate(params)
    gamma = params.gamma
    p1, p2, h1, h2 = t.values()
    q1, q2 = operators.quotient_coefficients(params, a2, a3)
    r1, r2 = operators.inverse_quotient_coefficients(params, a2, a3)
    phi_q1, phi_q2 = _phi_side(b1, b2, p1, p2)
    phi_r1, phi_r2 = _phi_side(b1, b2, h1, h2)
    relations = proof_relations(params, b1, b2, t)
    a2_squared = a2 * a2

    residuals = {
        'first-coefficient': series.magnitude(q1 - phi_q1),
        'second-coefficient': series.magnitude(q2 - phi_q2),
        'inverse-first-coefficient': series.magnitude(r1 - phi_r1),
        'inverse-second-coefficient': series.magnitude(r2 - phi_r2),
        'p1-h1-symmetry': series.magnitude(p1 + h1),
        'squares-relation': series.magnitude(2 * (gamma + 1) ** 2 * m.u2 ** 2 * a2_squared
                                             - b1 ** 2 * (p1 * p1 + h1 * h1) / 4),
        'sum-relation': series.magnitude(x_factor(params) * a2_squared - b1 * (p2 + h2) / 2
                                         - (b2 - b1) * (p1 * p1 + h1 * h1) / 4),
        'difference-relation': series.magnitude(2 * (gamma + 2) * m.u3 * (a3 - a2_squared) - b1 * (p2 - h2) / 2),
        'a2-from-first': series.magnitude(a2 - relations.a2_from_first),
        'a2-squared-from-sum': series.magnitude(a2_squared - relations.a2_squared_from_sum),
        'a3-from-difference': series.magnitude(a3 - relations.a3_from_difference),
    }
    residuals.update({f'proof {name}': value for name, value in relations.residuals.items()})
    return residuals


def _exact_inputs(params: ClassParams, b1, b2, t: CaratheodoryTuple):
    if params.mode is not Mode.EXACT or t.mode is not Mode.EXACT \
            or not isinstance(b1, numbers.Rational) or not isinstance(b2, numbers.Rational):
        raise series.ModeMismatch('Expansion checks need rational parameters, integral delta and a rational tuple')


def _a2(params: ClassParams, b1, t: CaratheodoryTuple):
    m = _non_degenerate(params)
    a2 = b1 * t.p1 / (2 * (params.gamma + 1) * m.u2)
    return -a2 if config.fault_injection() else a2


def _normalized(a2, a3, order: int) -> NormalizedSeries:
    return NormalizedSeries([0, 1, a2, a3], mode=Mode.EXACT, order=order)


def _phi(b1, b2) -> TruncSeries:
    # B3 and higher are not needed up to order 2
    return TruncSeries([1, b1, b2], mode=Mode.EXACT)


def expansion_check(params: ClassParams, b1, b2, t: CaratheodoryTuple, order: typing.Optional[int] = None):
    """
    The largest coefficient residual between the quotient of f and phi(u(z)) up to order 2

    f has a2 from the first and a3 from the second coefficient relation, so the residual is
    exactly 0 when the series engine and the relations agree.
    """
    _exact_inputs(params, b1, b2, t)
    m = _non_degenerate(params)
    gamma = params.gamma
    a2 = _a2(params, b1, t)
    target = _phi_side(b1, b2, t.p1, t.p2)[1]
    a3 = (target - (gamma - 1) * (gamma + 2) / 2 * m.u2 ** 2 * a2 * a2) / ((gamma + 2) * m.u3)

    f = _normalized(a2, a3, order or config.expansion_order())
    quotient = operators.bazilevic_quotient(params, f).truncate(2)
    subordinate = series.compose(_phi(b1, b2), schwarz_from_caratheodory(t.p()))
    return series.residual(quotient, subordinate)


def inverse_expansion_check(params: ClassParams, b1, b2, t: CaratheodoryTuple, order: typing.Optional[int] = None):
    """As `expansion_check`, for the quotient of g = f^-1 and phi(v(w)) with a3 from the inverse relations"""
    _exact_inputs(params, b1, b2, t)
    m = _non_degenerate(params)
    gamma = params.gamma
    a2 = _a2(params, b1, t)
    target = _phi_side(b1, b2, t.h1, t.h2)[1]
    a3 = ((2 * (gamma + 2) * m.u3 + (gamma - 1) * (gamma + 2) / 2 * m.u2 ** 2) * a2 * a2 - target) \
        / ((gamma + 2) * m.u3)

    g = series.invert(_normalized(a2, a3, order or config.expansion_order()))
    quotient = operators.bazilevic_quotient(params, g).truncate(2)
    subordinate = series.compose(_phi(b1, b2), schwarz_from_caratheodory(t.h()))
    return series.residual(quotient, subordinate)
