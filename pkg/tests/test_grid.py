import io
from fractions import Fraction

import pytest

from bibazilevic import grid, maminda
from bibazilevic.bounds import theorem
from bibazilevic.logging import run_report
from bibazilevic.operators import ClassParams


def test_parse_axis():
    assert grid.parse_axis('zeta', '1/2') == [Fraction(1, 2)]
    assert grid.parse_axis('zeta', '0:1/2:2') == [0, Fraction(1, 2)]
    assert grid.parse_axis('gamma', '0:2:5') == [0, Fraction(1, 2), 1, Fraction(3, 2), 2]
    assert grid.parse_axis('gamma', '1:2:1') == [1]
    for text in ['x', '0:1', '0:1:0', '0:1:x']:
        with pytest.raises(grid.InvalidGrid):
            grid.parse_axis('gamma', text)


def test_row_order_and_size():
    spec = grid.GridSpec.parse({'k': '0:1:2', 'gamma': '0:2:3'}, {'zeta': '0:1/2:2'})
    assert spec.size == 12
    points = spec.points()
    assert len(points) == 12
    # the last axis varies fastest
    assert [(params.k, params.gamma, phi.zeta) for params, phi in points[:3]] == [(0, 0, 0), (0, 0, Fraction(1, 2)),
                                                                                (0, 1, 0)]


def test_invalid_grids():
    for class_axes, phi_axes in [({}, {}),
                                 ({}, {'zeta': '0', 'B1': '1', 'B2': '1'}),
                                 ({}, {'B1': '1'}),
                                 ({'alpha': '0:1:2'}, {'zeta': '0'}),
                                 ({'k': '1/2'}, {'zeta': '0'}),
                                 ({}, {'zeta': '0:1:2'})]:
        with pytest.raises(grid.InvalidGrid):
            grid.GridSpec.parse(class_axes, phi_axes)


def test_order_zeta_rows():
    spec = grid.GridSpec.parse({'gamma': '1'}, {'zeta': '0:1/2:2'})
    rows = grid.evaluate_grid(spec, max_number_of_parallel_tasks=1)
    assert [f'{row["a2_bound"]:.6f}' for row in rows] == ['0.816497', '0.577350']


def test_single_point_equals_bounds():
    spec = grid.GridSpec.parse({}, {'A': '1', 'B': '0'})
    [row] = grid.evaluate_grid(spec, max_number_of_parallel_tasks=1)
    result = theorem.bound_phi(ClassParams.identity(), maminda.Janowski(1, 0))
    assert (row['a2_bound'], row['a3_bound'], row['denom']) == (result.a2_bound, result.a3_bound, result.denom_value)


def test_degenerate_rows_are_counted():
    report = run_report.RunReport('grid', '0')
    spec = grid.GridSpec.parse({'k': '1', 'lambda': '0:1:2'}, {'B1': '1', 'B2': '1'})
    rows = grid.evaluate_grid(spec, report, max_number_of_parallel_tasks=1)
    assert rows[0]['flags'] == [theorem.DEGENERATE_OPERATOR]
    assert report.counts == {'evaluated': 1, 'degenerate': 1, 'errors': 0}
    assert report.total == spec.size


def test_csv():
    spec = grid.GridSpec.parse({'k': '1', 'lambda': '0:1:2'}, {'B1': '1', 'B2': '1'})
    rows = grid.evaluate_grid(spec, max_number_of_parallel_tasks=1)
    file = io.StringIO()
    grid.write_csv(rows, file)
    lines = file.getvalue().splitlines()
    assert lines[0] == ','.join(grid.COLUMNS)
    assert lines[1].endswith(',,,,degenerate-operator')
    assert len(lines) == 3


def test_csv_round_trip():
    """Parsed rows carry the exact parameters and the full float precision of the bounds"""
    spec = grid.GridSpec.parse({'k': '0:2:3', 'delta': '0:1:2', 'gamma': '0:3:4'}, {'A': '1', 'B': '-1:0:3'})
    rows = grid.evaluate_grid(spec, max_number_of_parallel_tasks=1)
    file = io.StringIO()
    grid.write_csv(rows, file)
    file.seek(0)
    parsed = grid.read_csv(file)
    assert len(parsed) == len(rows) == spec.size
    for row, parsed_row in zip(rows, parsed):
        assert [parsed_row[column] for column in grid.CLASS_AXES] == [row[column] for column in grid.CLASS_AXES]
        assert (parsed_row['B1'], parsed_row['B2']) == (row['B1'], row['B2'])
        assert (parsed_row['a2_bound'], parsed_row['a3_bound']) == (row['a2_bound'], row['a3_bound'])
        assert parsed_row['flags'] == row['flags']


def test_csv_rows_re_evaluate():
    """Bounds recomputed from the parameters of a parsed row agree within 1e-12"""
    spec = grid.GridSpec.parse({'k': '0:2:3', 'delta': '0:2:3', 'gamma': '0:2:3'}, {'zeta': '0:1/2:2'})
    file = io.StringIO()
    grid.write_csv(grid.evaluate_grid(spec, max_number_of_parallel_tasks=1), file)
    file.seek(0)
    rows = [row for row in grid.read_csv(file) if row['a2_bound'] is not None]
    assert rows
    for row in rows:
        params = ClassParams(k=row['k'], alpha=row['alpha'], beta=row['beta'], lambda_=row['lambda'],
                             delta=row['delta'], gamma=row['gamma'])
        result = theorem.evaluate_bounds(params, row['B1'], row['B2'])
        assert result.a2_bound == pytest.approx(row['a2_bound'], rel=1e-12)
        assert result.a3_bound == pytest.approx(row['a3_bound'], rel=1e-12)


def test_json():
    spec = grid.GridSpec.parse({}, {'zeta': '1/2'})
    report = run_report.RunReport('grid --zeta 1/2', '0')
    text = grid.to_json(grid.evaluate_grid(spec, report, max_number_of_parallel_tasks=1), report)
    assert text.startswith('{\n  "meta": {\n    "command": "grid --zeta 1/2"')
    assert '"zeta=1/2"' in text
