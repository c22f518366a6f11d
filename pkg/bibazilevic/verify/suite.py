"""
The residual suite behind `bibazilevic verify`

Every check evaluates exact residuals at fixed inputs and at seeded random rational draws.
A residual has to be exactly 0; any other value is an engine defect. Print defects of the
source derivation that the inputs confirm are collected as findings.
"""

import dataclasses
import fractions
import typing as t

import more_itertools
import numpy as np

from . import proof
from .. import checks, config, findings, maminda, operators, sampling, series
from ..bounds import audit
from ..operators import ClassParams
from ..series import Mode, NormalizedSeries, TruncSeries
from .proof import CaratheodoryTuple

Fraction = fractions.Fraction


@dataclasses.dataclass
class VerifyReport:
    """
    The outcome of a verification run

    Args:
        draws: Random inputs per check
        seed: The seed of the random draws
        checks: Per check id, description and counts
        failures: Inputs with a nonzero residual or an exception
        findings: Print defects confirmed by the inputs
    """
    draws: int
    seed: int
    checks: t.List[dict]
    failures: t.List[checks.Failure]
    findings: t.List[findings.Finding]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {'passed': self.passed,
                'draws': self.draws,
                'seed': self.seed,
                'checks': self.checks,
                'failures': [failure.to_dict() for failure in self.failures]}


def _rational(rng: np.random.Generator, bound=3):
    return sampling.rational(rng, -bound, bound, config.max_denominator())


def _gaussian(rng: np.random.Generator, bound=2):
    return sampling.gaussian_rational(rng, bound, config.max_denominator())


def _params(rng: np.random.Generator) -> ClassParams:
    return sampling.non_degenerate_class_params(rng, config.max_denominator())


def _generic_phi(rng: np.random.Generator) -> t.Tuple[Fraction, Fraction]:
    return maminda.phi_coefficients(audit.draw_phi(rng, 'generic', config.max_denominator()))


# reversion

def reversion_residuals(a2, a3, a4) -> t.Dict[str, t.Any]:
    f = NormalizedSeries.from_coefficients([a2, a3, a4], mode=Mode.EXACT)
    g = series.invert(f)
    return {'compose': series.residual(series.compose(f, g), TruncSeries.identity(4)),
            'inverse-of-inverse': series.residual(series.invert(g), f),
            'w2': series.magnitude(g[2] + a2),
            'w3': series.magnitude(g[3] - (2 * a2 * a2 - a3)),
            'w4': series.magnitude(g[4] + (5 * a2 ** 3 - 5 * a2 * a3 + a4))}


def reversion_inputs(rng: np.random.Generator, draws: int) -> t.List[dict]:
    fixed = [{'a2': Fraction(0), 'a3': Fraction(0), 'a4': Fraction(0)},
             {'a2': Fraction(1), 'a3': Fraction(1), 'a4': Fraction(1)}]
    return fixed + [{'a2': _rational(rng), 'a3': _rational(rng), 'a4': _rational(rng)} for _ in range(draws)]


def _printed_w4(a2, a3, a4):
    return -(5 * a2 ** 2 - 5 * a2 * a3 + a4)


def _derived_w4(a2, a3, a4):
    return -(5 * a2 ** 3 - 5 * a2 * a3 + a4)


# Schwarz functions

def schwarz_residuals(p1, p2) -> t.Dict[str, t.Any]:
    p = TruncSeries([1, p1, p2], mode=Mode.EXACT)
    u = proof.schwarz_from_caratheodory(p)
    return {'round-trip': series.residual(proof.caratheodory_from_schwarz(u), p),
            'u1': series.magnitude(u[1] - p1 / 2),
            'u2': series.magnitude(u[2] - (p2 - p1 * p1 / 2) / 2)}


def schwarz_inputs(rng: np.random.Generator, draws: int) -> t.List[dict]:
    fixed = [{'p1': series.GaussianRational(0), 'p2': series.GaussianRational(0)},
             {'p1': series.GaussianRational(2), 'p2': series.GaussianRational(2)}]
    return fixed + [{'p1': _gaussian(rng), 'p2': _gaussian(rng)} for _ in range(draws)]


# phi

def phi_residuals(spec: maminda.PhiSpec) -> t.Dict[str, t.Any]:
    s = maminda.phi_series(spec, 2)
    b1, b2 = maminda.phi_coefficients(spec)
    return {'constant': series.magnitude(s[0] - 1),
            'B1': series.magnitude(s[1] - b1),
            'B2': series.magnitude(s[2] - b2)}


def phi_inputs(rng: np.random.Generator, draws: int) -> t.List[dict]:
    fixed = [maminda.Janowski(1, -1), maminda.Janowski(1, 0), maminda.OrderZeta(0), maminda.OrderZeta(Fraction(1, 2))]
    drawn = [audit.draw_phi(rng, family, config.max_denominator())
             for _ in range(draws) for family in ('janowski', 'order')]
    return [{'spec': spec} for spec in fixed + drawn]


def _janowski_remark_b1(spec: maminda.Janowski):
    # (1 + A z) / (1 - A z) = 1 + 2 A z + ...
    return 2 * spec.a


def _printed_order_series(spec: maminda.OrderZeta, extra_one: bool) -> TruncSeries:
    numerator = TruncSeries([1 + (1 - 2 * spec.zeta)], mode=Mode.EXACT, order=2)
    printed = series.divide(numerator, TruncSeries([1, -1], mode=Mode.EXACT, order=2))
    if extra_one:
        printed = 1 + maminda.phi_series(spec, 2)
    return printed


# quotient

def quotient_residuals(params: ClassParams, a2, a3) -> t.Dict[str, t.Any]:
    f = NormalizedSeries.from_coefficients([a2, a3], mode=Mode.EXACT)
    quotient = operators.bazilevic_quotient(params, f)
    inverse_quotient = operators.bazilevic_quotient(params, series.invert(f))
    q1, q2 = operators.quotient_coefficients(params, a2, a3)
    r1, r2 = operators.inverse_quotient_coefficients(params, a2, a3)
    return {'constant': series.magnitude(quotient[0] - 1),
            'q1': series.magnitude(quotient[1] - q1),
            'q2': series.magnitude(quotient[2] - q2),
            'inverse constant': series.magnitude(inverse_quotient[0] - 1),
            'r1': series.magnitude(inverse_quotient[1] - r1),
            'r2': series.magnitude(inverse_quotient[2] - r2)}


def quotient_inputs(rng: np.random.Generator, draws: int) -> t.List[dict]:
    fixed = [{'params': ClassParams.identity(), 'a2': Fraction(1), 'a3': Fraction(1)},
             {'params': ClassParams(k=1, alpha=1, beta=1, lambda_=1, delta=1, gamma=2),
              'a2': Fraction(1, 2), 'a3': Fraction(-1, 3)}]
    return fixed + [{'params': sampling.class_params(rng, config.max_denominator()),
                     'a2': _rational(rng), 'a3': _rational(rng)} for _ in range(draws)]


# proof relations

def relations_inputs(rng: np.random.Generator, draws: int) -> t.List[dict]:
    result = [{'params': ClassParams.identity(), 'b1': Fraction(2), 'b2': Fraction(2),
               'a2': Fraction(1, 2), 'a3': Fraction(1)}]
    while len(result) < draws + 1:
        params = _params(rng)
        b1, b2 = _generic_phi(rng)
        if proof.a2_squared_denominator(params, b1, b2) == 0:
            continue
        result.append({'params': params, 'b1': b1, 'b2': b2, 'a2': _rational(rng), 'a3': _rational(rng)})
    return result


def relations_residuals(params: ClassParams, b1, b2, a2, a3) -> t.Dict[str, t.Any]:
    return proof.relation_residuals(params, b1, b2, a2, a3, proof.tuple_from_coefficients(params, b1, b2, a2, a3))


def _printed_a3(params: ClassParams, b1, tuple_: CaratheodoryTuple):
    # the a2^2 substitution with (gamma+1) instead of (gamma+1)^2
    m = operators.multipliers(params)
    p1, p2, h1, h2 = tuple_.values()
    return b1 ** 2 * (p1 * p1 + h1 * h1) / (8 * (params.gamma + 1) * m.u2 ** 2) \
        + b1 * (p2 - h2) / (4 * (params.gamma + 2) * m.u3)


# proof expansion

def expansion_inputs(rng: np.random.Generator, draws: int, inverse: bool = False) -> t.List[dict]:
    fixed = [
        {'params': ClassParams.identity(), 'b1': Fraction(2), 'b2': Fraction(2), 't': CaratheodoryTuple.zero()},
        {'params': ClassParams.identity(), 'b1': Fraction(2), 'b2': Fraction(2),
         't': CaratheodoryTuple(1, 1, -1, 0)},
        {'params': ClassParams(k=1, alpha=1, beta=1, lambda_=1, delta=1, gamma=2),
         'b1': Fraction(3, 2), 'b2': Fraction(-1, 2), 't': CaratheodoryTuple.from_p(Fraction(1, 2), 1, -1)}]
    if inverse:
        # gamma = 1: the quotient of g is (D g)'
        fixed.append({'params': ClassParams(k=1, alpha=1, beta=1, lambda_=2, delta=0, gamma=1),
                      'b1': Fraction(1), 'b2': Fraction(1, 3), 't': CaratheodoryTuple.from_p(1, Fraction(1, 2), 2)})
    drawn = []
    for _ in range(draws):
        b1, b2 = _generic_phi(rng)
        drawn.append({'params': _params(rng), 'b1': b1, 'b2': b2,
                      't': CaratheodoryTuple.from_p(_gaussian(rng), _gaussian(rng), _gaussian(rng))})
    return fixed + drawn


def suite(draws: int, seed: int) -> checks.CheckSuite:
    """All checks of a verification run, every check draws from its own random stream"""
    ids = ['reversion', 'schwarz_round_trip', 'phi_closed_forms', 'quotient_closed_forms',
           'relations', 'expansion', 'inverse_expansion']
    rngs = dict(zip(ids, sampling.spawn(seed, len(ids))))

    return checks.CheckSuite('verify', 'Exact residuals of the series engine and the proof chain', [
        checks.Check('reversion', 'compose(f, invert(f)) = z and the closed forms of w2, w3, w4',
                     reversion_residuals, lambda: reversion_inputs(rngs['reversion'], draws)),
        checks.Check('schwarz_round_trip', 'u = (p-1)/(p+1), its coefficients and p = (1+u)/(1-u)',
                     schwarz_residuals, lambda: schwarz_inputs(rngs['schwarz_round_trip'], draws)),
        checks.Check('phi_closed_forms', 'B1 and B2 of Janowski and order-zeta functions by series division',
                     phi_residuals, lambda: phi_inputs(rngs['phi_closed_forms'], draws)),
        checks.Check('quotient_closed_forms', 'q1, q2, r1, r2 of the Bazilevic quotients of f and f^-1',
                     quotient_residuals, lambda: quotient_inputs(rngs['quotient_closed_forms'], draws)),
        checks.Check('relations', 'Coefficient relations of the proof for the tuple of a2, a3',
                     relations_residuals, lambda: relations_inputs(rngs['relations'], draws)),
        checks.Check('expansion', 'quotient of f = phi(u(z)) through order 2',
                     proof.expansion_check, lambda: expansion_inputs(rngs['expansion'], draws)),
        checks.Check('inverse_expansion', 'quotient of f^-1 = phi(v(w)) through order 2',
                     proof.inverse_expansion_check,
                     lambda: expansion_inputs(rngs['inverse_expansion'], draws, inverse=True)),
    ])


def _witness(inputs: dict) -> t.Dict[str, str]:
    result = {}
    for name, value in inputs.items():
        if isinstance(value, ClassParams):
            result.update({key: str(item) for key, item in value.as_dict().items()})
        elif isinstance(value, CaratheodoryTuple):
            result.update(value.as_dict())
        elif isinstance(value, maminda.PhiSpec):
            result.update({key: str(item) for key, item in value.parameters().items()})
        else:
            result[name] = str(value)
    return result


def confirmed_findings(suite_: checks.CheckSuite) -> t.List[findings.Finding]:
    """The print defects that the inputs of the checks confirm, with the first confirming input as witness"""
    inputs = {check.id: check.inputs for check in suite_.checks}
    result = []

    reversion = more_itertools.first_true(
        inputs['reversion'], pred=lambda i: _printed_w4(**i) != _derived_w4(**i))
    if reversion:
        result.append(findings.confirm('inverse-series-w4-term', witness=_witness(reversion),
                                       printed=str(_printed_w4(**reversion)), derived=str(_derived_w4(**reversion))))

    schwarz = more_itertools.first_true(inputs['schwarz_round_trip'], pred=lambda i: i['p1'] != 0)
    if schwarz:
        # without "+" the bracket has no linear term
        u = proof.schwarz_from_caratheodory(TruncSeries([1, schwarz['p1'], schwarz['p2']], mode=Mode.EXACT))
        result.append(findings.confirm('schwarz-expansion-missing-plus', witness=_witness(schwarz),
                                       printed='u1=0', derived=f'u1={u[1]}'))

    specs = [i['spec'] for i in inputs['phi_closed_forms']]
    janowski = more_itertools.first_true(
        specs, pred=lambda s: isinstance(s, maminda.Janowski) and _janowski_remark_b1(s) != s.coefficients()[0])
    if janowski:
        result.append(findings.confirm('janowski-remark-form', witness=_witness({'spec': janowski}),
                                       printed=f'B1={_janowski_remark_b1(janowski)}',
                                       derived=f'B1={janowski.coefficients()[0]}'))
    order = more_itertools.first_true(specs, pred=lambda s: isinstance(s, maminda.OrderZeta))
    if order:
        for defect_id, extra_one in (('order-zeta-missing-z', False), ('order-zeta-extra-one', True)):
            printed = _printed_order_series(order, extra_one)
            if printed != maminda.phi_series(order, 2):
                result.append(findings.confirm(defect_id, witness=_witness({'spec': order}),
                                               printed=f'phi(0)={printed[0]}', derived='phi(0)=1'))

    relations = inputs['relations']

    def tuple_of(i: dict) -> CaratheodoryTuple:
        return proof.tuple_from_coefficients(i['params'], i['b1'], i['b2'], i['a2'], i['a3'])

    def printed_a3_differs(i: dict) -> bool:
        return _printed_a3(i['params'], i['b1'], tuple_of(i)) != i['a3']

    a3 = more_itertools.first_true(relations, pred=printed_a3_differs)
    if a3:
        result.append(findings.confirm('a3-display-gamma-square', witness=_witness(a3),
                                       printed=str(_printed_a3(a3['params'], a3['b1'], tuple_of(a3))),
                                       derived=str(a3['a3'])))

    def q1_differs(i: dict) -> bool:
        return operators.quotient_coefficients(i['params'], i['a2'], i['a3'])[0] != tuple_of(i).p1

    symbol = more_itertools.first_true(relations, pred=q1_differs)
    if symbol:
        q1 = operators.quotient_coefficients(symbol['params'], symbol['a2'], symbol['a3'])[0]
        result.append(findings.confirm('sum-relation-symbol', witness=_witness(symbol),
                                       printed=f'q1={q1}', derived=f'p1={tuple_of(symbol).p1}'))
    return result


def run_verify(draws: t.Optional[int] = None, seed: t.Optional[int] = None) -> VerifyReport:
    """
    Runs all checks

    Args:
        draws: Random inputs per check, defaults to `config.verify_draws()`
        seed: Defaults to `config.default_seed()`
    """
    draws = config.verify_draws() if draws is None else draws
    seed = config.default_seed() if seed is None else seed
    if draws < 1:
        raise ValueError(f'draws must be >= 1, got {draws}')

    suite_ = suite(draws, seed)
    suite_.run()
    return VerifyReport(draws=draws, seed=seed,
                        checks=[check.to_dict() for check in suite_.checks],
                        failures=suite_.failures,
                        findings=confirmed_findings(suite_))
