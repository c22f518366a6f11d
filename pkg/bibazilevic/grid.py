"""Bound tables over parameter grids, written as CSV or JSON"""

import csv
import dataclasses
import fractions
import itertools
import json
import math
import numbers
import typing as t

from . import maminda, parallel
from .bounds import theorem
from .logging import run_report
from .operators import ClassParams

COLUMNS = ['k', 'alpha', 'beta', 'lambda', 'delta', 'gamma', 'phi_family', 'phi_params',
           'B1', 'B2', 'a2_bound', 'a3_bound', 'denom', 'flags']

CLASS_AXES = ['k', 'alpha', 'beta', 'lambda', 'delta', 'gamma']
PHI_AXES = {'generic': ['B1', 'B2'], 'janowski': ['A', 'B'], 'order': ['zeta']}

ERROR = 'error'


class InvalidGrid(ValueError):
    """A grid axis that can not be parsed or leaves the admissible parameter ranges"""


def parse_rational(text: str) -> fractions.Fraction:
    """'1/3', '0.5' or '2' as an exact rational"""
    try:
        return fractions.Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidGrid(f'"{text}" is not a rational number')


def parse_axis(name: str, text: str) -> t.List[fractions.Fraction]:
    """
    A single value, or `start:stop:steps` for `steps` equally spaced values from start to stop

    Examples:
        >>> parse_axis('zeta', '0:1/2:2')
        [Fraction(0, 1), Fraction(1, 2)]
    """
    parts = str(text).split(':')
    if len(parts) == 1:
        return [parse_rational(parts[0])]
    if len(parts) != 3:
        raise InvalidGrid(f'Axis {name}: expected a value or start:stop:steps, got "{text}"')
    start, stop = parse_rational(parts[0]), parse_rational(parts[1])
    try:
        steps = int(parts[2])
    except ValueError:
        raise InvalidGrid(f'Axis {name}: the number of steps must be an integer, got "{parts[2]}"')
    if steps < 1:
        raise InvalidGrid(f'Axis {name}: the number of steps must be >= 1, got {steps}')
    if steps == 1:
        return [start]
    return [start + (stop - start) * i / (steps - 1) for i in range(steps)]


def _k(value: fractions.Fraction) -> int:
    if value.denominator != 1:
        raise InvalidGrid(f'k must be an integer, got {value}')
    return int(value)


@dataclasses.dataclass(frozen=True)
class GridSpec:
    """
    Values per class parameter and per parameter of one phi family

    Args:
        axes: The values of k, alpha, beta, lambda, delta and gamma
        phi_family: generic, janowski or order
        phi_axes: The values of B1 and B2, A and B, or zeta
        format: csv or json
    """
    axes: t.Dict[str, t.List[fractions.Fraction]]
    phi_family: str
    phi_axes: t.Dict[str, t.List[fractions.Fraction]]
    format: str = 'csv'

    @classmethod
    def parse(cls, class_axes: t.Dict[str, str], phi_axes: t.Dict[str, t.Optional[str]],
              format: str = 'csv') -> 'GridSpec':
        """
        Builds a grid from axis strings, see `parse_axis`

        Args:
            class_axes: Axis per class parameter, missing ones take the values of the identity operator
            phi_axes: Axes of exactly one phi family, the others None
        """
        defaults = {'k': '0', 'alpha': '1', 'beta': '1', 'lambda': '1', 'delta': '0', 'gamma': '0'}
        axes = {name: parse_axis(name, class_axes.get(name) or defaults[name]) for name in CLASS_AXES}

        given = [family for family, names in PHI_AXES.items()
                 if any(phi_axes.get(name) is not None for name in names)]
        if len(given) != 1:
            raise InvalidGrid('Give the axes of exactly one phi family: B1 and B2, A and B, or zeta')
        family = given[0]
        missing = [name for name in PHI_AXES[family] if phi_axes.get(name) is None]
        if missing:
            raise InvalidGrid(f'The {family} family needs the axes {", ".join(missing)}')

        grid = cls(axes=axes, phi_family=family,
                   phi_axes={name: parse_axis(name, phi_axes[name]) for name in PHI_AXES[family]},
                   format=format)
        grid.points()
        return grid

    @property
    def size(self) -> int:
        return math.prod(len(values) for values in itertools.chain(self.axes.values(), self.phi_axes.values()))

    def points(self) -> t.List[t.Tuple[ClassParams, maminda.PhiSpec]]:
        """All grid points in lexicographic order of the parameter indices"""
        result = []
        for values in itertools.product(*self.axes.values(), *self.phi_axes.values()):
            k, alpha, beta, lambda_, delta, gamma, *phi = values
            try:
                params = ClassParams(k=_k(k), alpha=alpha, beta=beta, lambda_=lambda_, delta=delta, gamma=gamma)
                spec = _phi(self.phi_family, phi)
            except ValueError as e:
                raise InvalidGrid(str(e))
            result.append((params, spec))
        return result


def _phi(family: str, values: t.List[fractions.Fraction]) -> maminda.PhiSpec:
    if family == 'generic':
        return maminda.Generic(*values)
    if family == 'janowski':
        return maminda.Janowski(*values)
    return maminda.OrderZeta(*values)


def evaluate_row(point: t.Tuple[ClassParams, maminda.PhiSpec]) -> dict:
    """One table row, bounds of degenerate points are None"""
    params, spec = point
    b1, b2 = maminda.phi_coefficients(spec)
    try:
        result = theorem.bound_phi(params, spec)
        a2_bound, a3_bound, denominator, flags = result.a2_bound, result.a3_bound, result.denom_value, result.flags
    except (ArithmeticError, ValueError):
        a2_bound, a3_bound, denominator, flags = None, None, None, (ERROR,)
    return {'k': params.k, 'alpha': params.alpha, 'beta': params.beta, 'lambda': params.lambda_,
            'delta': params.delta, 'gamma': params.gamma, 'phi_family': spec.family,
            'phi_params': spec.describe(), 'B1': b1, 'B2': b2, 'a2_bound': a2_bound, 'a3_bound': a3_bound,
            'denom': denominator, 'flags': list(flags)}


def evaluate_grid(grid: GridSpec, report: t.Optional[run_report.RunReport] = None,
                  max_number_of_parallel_tasks: t.Optional[int] = None) -> t.List[dict]:
    """All rows of the grid in point order, counted in `report` when given"""
    rows = parallel.parallel_map(evaluate_row, grid.points(), max_number_of_parallel_tasks)
    if report:
        for row in rows:
            if ERROR in row['flags']:
                report.count(run_report.ERRORS)
            elif row['a2_bound'] is None:
                report.count(run_report.DEGENERATE)
            else:
                report.count(run_report.EVALUATED)
    return rows


def _cell(value) -> str:
    if value is None:
        return ''
    if isinstance(value, list):
        return ';'.join(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(rows: t.List[dict], file: t.TextIO):
    """A header row and one line per row; empty cells for degenerate bounds, full float precision"""
    writer = csv.DictWriter(file, fieldnames=COLUMNS, lineterminator='\n')
    writer.writeheader()
    for row in rows:
        writer.writerow({column: _cell(row[column]) for column in COLUMNS})


def _json_cell(value):
    if isinstance(value, numbers.Rational) and not isinstance(value, int):
        return str(value)
    return value


def to_json(rows: t.List[dict], report: run_report.RunReport) -> str:
    return json.dumps({'meta': report.to_dict(),
                       'rows': [{column: _json_cell(row[column]) for column in COLUMNS} for row in rows]},
                      indent=2)


def read_csv(file: t.TextIO) -> t.List[dict]:
    """Parses a table written by `write_csv`, numbers as exact rationals or floats"""
    rows = []
    for record in csv.DictReader(file):
        row = dict(record)
        row['k'] = int(row['k'])
        for column in ('alpha', 'beta', 'lambda', 'delta', 'gamma', 'B1', 'B2'):
            row[column] = parse_rational(row[column])
        for column in ('a2_bound', 'a3_bound'):
            row[column] = float(row[column]) if row[column] else None
        row['flags'] = row['flags'].split(';') if row['flags'] else []
        rows.append(row)
    return rows
