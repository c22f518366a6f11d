"""
Print defects of the source derivation, reported as first-class run output

A finding is only emitted when a run confirms the defect by computation.
"""

import typing as t

from . import events


class PrintDefect(t.NamedTuple):
    location: str
    description: str
    printed: str
    derived: str


PRINT_DEFECTS: t.Dict[str, PrintDefect] = {
    'inverse-series-w4-term': PrintDefect(
        location='inverse series g = f^-1',
        description='The w^4 coefficient of the inverse series has a2 squared where reversion gives a2 cubed',
        printed='-(5 a2^2 - 5 a2 a3 + a4)',
        derived='-(5 a2^3 - 5 a2 a3 + a4)'),
    'schwarz-expansion-missing-plus': PrintDefect(
        location='expansions of u = (p-1)/(p+1) and v = (h-1)/(h+1)',
        description='The linear and the quadratic term are printed without "+" between them',
        printed='1/2 [p1 z (p2 - p1^2/2) z^2 + ...]',
        derived='1/2 [p1 z + (p2 - p1^2/2) z^2 + ...]'),
    'a3-display-gamma-square': PrintDefect(
        location='a3 estimate after the difference relation',
        description='The a2^2 substitution needs (gamma+1)^2, the display has (gamma+1)',
        printed='B1^2 (p1^2 + h1^2) / (8 (gamma+1) u2^2)',
        derived='B1^2 (p1^2 + h1^2) / (8 (gamma+1)^2 u2^2)'),
    'sum-relation-symbol': PrintDefect(
        location='sum relation',
        description='The sum relation writes q1 where p1 is meant',
        printed='q1',
        derived='p1'),
    'janowski-remark-form': PrintDefect(
        location='Janowski functions',
        description='The prose form of the Janowski function swaps the sign and the parameter order',
        printed='(1 + A z) / (1 - A z), -1 <= A < B <= 1',
        derived='(1 + A z) / (1 + B z), -1 <= B < A <= 1'),
    'order-zeta-missing-z': PrintDefect(
        location='functions of order zeta',
        description='The numerator of phi is printed without z',
        printed='(1 + (1 - 2 zeta)) / (1 - z)',
        derived='(1 + (1 - 2 zeta) z) / (1 - z)'),
    'order-zeta-extra-one': PrintDefect(
        location='functions of order zeta, Thm 3.2',
        description='phi is printed with an additional summand 1, which gives phi(0) = 2',
        printed='1 + (1 + (1 - 2 zeta) z) / (1 - z)',
        derived='(1 + (1 - 2 zeta) z) / (1 - z)'),
    'cor-2.7-parenthesis': PrintDefect(
        location='Cor 2.7',
        description='A parenthesis of the a2 denominator is not closed',
        printed='4 (B2 - B1 [ups2]^2',
        derived='4 (B2 - B1) [ups2]^2'),
    'negative-multiplier': PrintDefect(
        location='a3 bound',
        description='With a negative third multiplier the a3 bound is below the maximum of the relaxed problem',
        printed='B1 / ((gamma+2) u3) + (B1 / ((gamma+1) u2))^2',
        derived='B1 / ((gamma+2) |u3|) + (B1 / ((gamma+1) u2))^2'),
}


class Finding(events.Event):
    """
    A print defect confirmed by a run

    Args:
        id: The catalogue id, or `<corollary id> a2|a3` for audit mismatches
        location: Where the defect is printed
        description: What is wrong
        printed: The printed form or value
        derived: The derived form or value
        witness: The inputs that confirm the defect
    """
    def __init__(self, id: str, location: str, description: str, printed: t.Any, derived: t.Any,
                 witness: t.Optional[dict] = None) -> None:
        super().__init__()
        self.id = id
        self.location = location
        self.description = description
        self.printed = printed
        self.derived = derived
        self.witness = witness or {}

    def __repr__(self):
        return f'<Finding "{self.id}">'


def confirm(defect_id: str, witness: t.Optional[dict] = None, printed=None, derived=None) -> Finding:
    """A finding for a catalogued defect, optionally with the values a run computed"""
    defect = PRINT_DEFECTS[defect_id]
    return Finding(id=defect_id, location=defect.location, description=defect.description,
                   printed=defect.printed if printed is None else printed,
                   derived=defect.derived if derived is None else derived,
                   witness=witness)


def audit_mismatch(corollary_id: str, coefficient: str, printed, derived, witness: dict) -> Finding:
    return Finding(id=f'{corollary_id} {coefficient}', location=corollary_id,
                   description=f'The printed {coefficient} bound differs from the specialized general bound',
                   printed=printed, derived=derived, witness=witness)
