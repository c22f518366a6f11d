"""Comparison of every printed special case with the specialized general bounds"""

import dataclasses
import enum
import math
import numbers
import typing as t

import numpy as np

from . import corollaries, theorem
from .corollaries import PrintedCorollary, Symbols
from .. import config, findings, maminda, parallel, sampling
from ..operators import ClassParams, DegenerateOperator


class AuditStatus(enum.Enum):
    MATCH = 'MATCH'
    MISMATCH = 'MISMATCH'


@dataclasses.dataclass(frozen=True)
class Witness:
    """A parameter point with the printed and the derived bounds, None where a form is undefined"""
    params: t.Dict[str, str]
    printed_a2: t.Optional[float]
    derived_a2: float
    printed_a3: t.Optional[float]
    derived_a3: float

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class AuditEntry:
    """
    The audit result of one printed statement

    Args:
        corollary_id: e.g. "Cor 2.3"
        family: The phi family of the statement
        regime: The fixed parameters, e.g. "gamma=1, k=0"
        printed_a2: The printed a2 form
        printed_a3: The printed a3 form
        a2_status: Whether the printed a2 bound agreed at every sampled point
        a3_status: Whether the printed a3 bound agreed at every sampled point
        witness: The a2 witness, else the a3 witness, else the first sampled point
        samples: How many points were compared
        resampled: How many drawn points were degenerate and replaced
        a2_witness: The first point where the printed a2 bound disagrees
        a3_witness: The first point where the printed a3 bound disagrees
    """
    corollary_id: str
    family: str
    regime: str
    printed_a2: str
    printed_a3: str
    a2_status: AuditStatus
    a3_status: AuditStatus
    witness: Witness
    samples: int
    resampled: int = 0
    a2_witness: t.Optional[Witness] = None
    a3_witness: t.Optional[Witness] = None

    @property
    def status(self) -> AuditStatus:
        if self.a2_status is AuditStatus.MATCH and self.a3_status is AuditStatus.MATCH:
            return AuditStatus.MATCH
        return AuditStatus.MISMATCH

    @property
    def derived_a2(self) -> float:
        return self.witness.derived_a2

    @property
    def derived_a3(self) -> float:
        return self.witness.derived_a3

    def to_dict(self) -> dict:
        return {'corollary_id': self.corollary_id,
                'family': self.family,
                'regime': self.regime,
                'status': self.status.value,
                'a2_status': self.a2_status.value,
                'a3_status': self.a3_status.value,
                'printed_a2': self.printed_a2,
                'printed_a3': self.printed_a3,
                'samples': self.samples,
                'resampled': self.resampled,
                'witness': self.witness.to_dict(),
                'a2_witness': self.a2_witness.to_dict() if self.a2_witness else None,
                'a3_witness': self.a3_witness.to_dict() if self.a3_witness else None}


def _agree(printed, derived) -> bool:
    if printed is None:
        return False
    if isinstance(printed, numbers.Rational) and isinstance(derived, numbers.Rational):
        return printed == derived
    return math.isclose(printed, derived, rel_tol=config.float_tolerance())


def _evaluate(form: t.Callable[[Symbols], numbers.Real], symbols: Symbols) -> t.Optional[numbers.Real]:
    """The printed form at a point, None where it divides by zero"""
    try:
        return form(symbols)
    except ZeroDivisionError:
        return None


def _sqrt(value) -> t.Optional[float]:
    if value is None or value < 0:
        return None
    return math.sqrt(value)


def draw_phi(rng: np.random.Generator, family: str, max_denominator: int) -> maminda.PhiSpec:
    if family == corollaries.GENERIC:
        return maminda.Generic(sampling.positive_rational(rng, 3, max_denominator),
                               sampling.rational(rng, -3, 3, max_denominator))
    if family == corollaries.JANOWSKI:
        while True:
            a, b = (sampling.rational(rng, -1, 1, max_denominator) for _ in range(2))
            if b < a:
                return maminda.Janowski(a, b)
    if family == corollaries.ORDER:
        while True:
            zeta = sampling.rational(rng, 0, 1, max_denominator)
            if zeta < 1:
                return maminda.OrderZeta(zeta)
    raise ValueError(f'Unknown phi family "{family}"')


def draw_params(rng: np.random.Generator, regime: corollaries.Regime, max_denominator: int) -> ClassParams:
    """Rational parameters inside a regime, with non-negative multipliers so that every printed form is real"""
    return sampling.class_params(rng, max_denominator, gamma=regime.gamma,
                                 k_zero=regime.k_zero, delta_zero=regime.delta_zero)


def _witness(params: ClassParams, spec: maminda.PhiSpec, printed_a2_squared, derived_a2_squared,
             printed_a3, derived_a3) -> Witness:
    return Witness(params={**{name: str(value) for name, value in params.as_dict().items()},
                           **{name: str(value) for name, value in spec.parameters().items()}},
                   printed_a2=_sqrt(printed_a2_squared), derived_a2=math.sqrt(derived_a2_squared),
                   printed_a3=None if printed_a3 is None else float(printed_a3), derived_a3=float(derived_a3))


def audit_corollary(corollary: PrintedCorollary, samples: int, rng: np.random.Generator) -> AuditEntry:
    """Compares a printed statement with the general bounds at `samples` random points of its regime"""
    if samples < 1:
        raise ValueError(f'samples must be >= 1, got {samples}')
    max_denominator = config.max_denominator()
    first_witness = a2_witness = a3_witness = None
    resampled, compared = 0, 0
    while compared < samples:
        params = draw_params(rng, corollary.regime, max_denominator)
        spec = draw_phi(rng, corollary.family, max_denominator)
        b1, b2 = maminda.phi_coefficients(spec)
        try:
            derived_a2_squared = theorem.bound_a2_squared(params, b1, b2)
            derived_a3 = theorem.bound_a3_exact(params, b1)
        except (theorem.ZeroDenominator, DegenerateOperator):
            resampled += 1
            continue
        compared += 1

        symbols = Symbols.of(params, spec)
        printed_a2_squared = _evaluate(corollary.a2_squared, symbols)
        printed_a3 = _evaluate(corollary.a3, symbols)
        a2_agrees = _agree(printed_a2_squared, derived_a2_squared)
        a3_agrees = _agree(printed_a3, derived_a3)

        if first_witness is None or (a2_witness is None and not a2_agrees) \
                or (a3_witness is None and not a3_agrees):
            witness = _witness(params, spec, printed_a2_squared, derived_a2_squared, printed_a3, derived_a3)
            first_witness = first_witness or witness
            if a2_witness is None and not a2_agrees:
                a2_witness = witness
            if a3_witness is None and not a3_agrees:
                a3_witness = witness

    return AuditEntry(corollary_id=corollary.id, family=corollary.family, regime=corollary.regime.describe(),
                      printed_a2=corollary.a2_form, printed_a3=corollary.a3_form,
                      a2_status=AuditStatus.MATCH if a2_witness is None else AuditStatus.MISMATCH,
                      a3_status=AuditStatus.MATCH if a3_witness is None else AuditStatus.MISMATCH,
                      witness=a2_witness or a3_witness or first_witness,
                      samples=samples, resampled=resampled, a2_witness=a2_witness, a3_witness=a3_witness)


def _audit_entry(task: t.Tuple[int, int, int]) -> AuditEntry:
    # runs in a worker process, so the statement is looked up by its index
    index, samples, seed = task
    rng = sampling.spawn(seed, len(corollaries.CATALOGUE))[index]
    return audit_corollary(corollaries.CATALOGUE[index], samples, rng)


def audit_corollaries(samples: int, seed: t.Optional[int] = None,
                      max_number_of_parallel_tasks: t.Optional[int] = None) -> t.List[AuditEntry]:
    """
    Audits all printed statements, in catalogue order

    Every statement draws from its own random stream, so the result does not depend on the
    number of worker processes.
    """
    if samples < 1:
        raise ValueError(f'samples must be >= 1, got {samples}')
    seed = config.default_seed() if seed is None else seed
    tasks = [(index, samples, seed) for index in range(len(corollaries.CATALOGUE))]
    return parallel.parallel_map(_audit_entry, tasks, max_number_of_parallel_tasks)


def audit_findings(entries: t.List[AuditEntry]) -> t.List[findings.Finding]:
    """
    A finding per disagreeing bound, and the catalogued defects of statements that agree
    once the defect is read corrected
    """
    result = []
    for entry in entries:
        if entry.a2_witness:
            result.append(findings.audit_mismatch(entry.corollary_id, 'a2', entry.a2_witness.printed_a2,
                                                  entry.a2_witness.derived_a2, entry.a2_witness.params))
        if entry.a3_witness:
            result.append(findings.audit_mismatch(entry.corollary_id, 'a3', entry.a3_witness.printed_a3,
                                                  entry.a3_witness.derived_a3, entry.a3_witness.params))
        if entry.status is AuditStatus.MATCH:
            result.extend(findings.confirm(defect_id, witness=entry.witness.params)
                          for defect_id in corollaries.find(entry.corollary_id).defects)
    return result
