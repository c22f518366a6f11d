"""Command line interface: bound tables, corollary audits, verification runs and extremal searches"""

import fractions
import json
import sys
import typing as t

import click

from . import config, findings, grid as grid_, maminda
from .bounds import audit as audit_, theorem
from .logging import logger, run_report
from .operators import ClassParams, DegenerateOperator

EXIT_USAGE = 1
EXIT_DEGENERATE = 2
EXIT_VERIFY_FAILED = 3


class RationalType(click.ParamType):
    """Numbers as exact rationals: '1/3', '0.5', '2'"""
    name = 'rational'

    def convert(self, value, param, ctx):
        if isinstance(value, fractions.Fraction):
            return value
        try:
            return fractions.Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            self.fail(f'"{value}" is not a rational number', param, ctx)


RATIONAL = RationalType()


class _Group(click.Group):
    """Reports usage errors with exit code 1"""

    def main(self, *args, **kwargs):
        kwargs['standalone_mode'] = False
        try:
            return super().main(*args, **kwargs)
        except click.ClickException as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.Abort:
            print('Aborted!', file=sys.stderr)
            sys.exit(EXIT_USAGE)


def _version() -> str:
    from . import __version__
    return __version__


def _command_echo(ctx: click.Context) -> str:
    """The command line with all set options in declaration order, e.g. `bounds --k 0 ... --B1 2 --B2 2`"""
    options = []
    for param in ctx.command.params:
        value = ctx.params.get(param.name)
        if value is None or value is False:
            continue
        options.append(param.opts[0] if value is True else f'{param.opts[0]} {value}')
    return ' '.join([ctx.info_name] + options)


def _start(ctx: click.Context) -> run_report.RunReport:
    report = run_report.RunReport(command=_command_echo(ctx), version=_version())
    logger.log(f'bibazilevic {report.command}')
    return report


def _number(value) -> str:
    if value is None:
        return ''
    return f'{float(value):.{config.output_decimals()}f}'


def class_options(function):
    """The options of the class parameters"""
    for option in reversed([
        click.option('--k', type=int, default=0, show_default=True, help='The power k of the multiplier.'),
        click.option('--alpha', type=RATIONAL, default='1', show_default=True, help='0 < alpha <= 1'),
        click.option('--beta', type=RATIONAL, default='1', show_default=True, help='0 < beta <= 1'),
        click.option('--lambda', 'lambda_', type=RATIONAL, default='1', show_default=True, help='lambda >= 0'),
        click.option('--delta', type=RATIONAL, default='0', show_default=True, help='delta >= 0'),
        click.option('--gamma', type=RATIONAL, default='0', show_default=True, help='The type gamma >= 0.'),
    ]):
        function = option(function)
    return function


def phi_options(function):
    """The options of exactly one Ma-Minda family"""
    for option in reversed([
        click.option('--B1', 'b1', type=RATIONAL, help='B1 > 0 of a generic phi.'),
        click.option('--B2', 'b2', type=RATIONAL, help='B2 of a generic phi.'),
        click.option('--A', 'a', type=RATIONAL, help='A of the Janowski function (1 + A z) / (1 + B z).'),
        click.option('--B', 'b', type=RATIONAL, help='B of the Janowski function, -1 <= B < A <= 1.'),
        click.option('--zeta', type=RATIONAL, help='Order zeta in [0, 1) of (1 + (1 - 2 zeta) z) / (1 - z).'),
    ]):
        function = option(function)
    return function


def _parse_inputs(k, alpha, beta, lambda_, delta, gamma, b1, b2, a, b, zeta) \
        -> t.Tuple[ClassParams, maminda.PhiSpec]:
    try:
        return (ClassParams(k=k, alpha=alpha, beta=beta, lambda_=lambda_, delta=delta, gamma=gamma),
                maminda.parse_phi(b1=b1, b2=b2, a=a, b=b, zeta=zeta))
    except ValueError as e:
        raise click.UsageError(str(e))


def _negative_multiplier(report: run_report.RunReport, params: ClassParams, spec: maminda.PhiSpec,
                         printed=None, derived=None):
    report.report_finding(findings.confirm(
        theorem.NEGATIVE_MULTIPLIER,
        witness={**{name: str(value) for name, value in params.as_dict().items()},
                 **{name: str(value) for name, value in spec.parameters().items()}},
        printed=printed, derived=derived))


def _json(meta: run_report.RunReport, key: str, value) -> str:
    return json.dumps({'meta': meta.to_dict(), key: value}, indent=2, default=str)


# -----------------------------------------------------------------------------


@click.group(cls=_Group)
def bibazilevic():
    """Coefficient bounds of bi-Bazilevic functions subordinate to Ma-Minda functions"""
    pass


@bibazilevic.command()
@class_options
@phi_options
@click.option('--format', 'format_', type=click.Choice(['text', 'json']), default='text', show_default=True)
@click.pass_context
def bounds(ctx, k, alpha, beta, lambda_, delta, gamma, b1, b2, a, b, zeta, format_):
    """Evaluates the bounds on |a2| and |a3|"""
    params, spec = _parse_inputs(k, alpha, beta, lambda_, delta, gamma, b1, b2, a, b, zeta)
    report = _start(ctx)

    if isinstance(spec, maminda.Janowski):
        result = theorem.bound_janowski(params, spec.a, spec.b)
    else:
        result = theorem.bound_phi(params, spec)
    report.count(run_report.DEGENERATE if result.degenerate else run_report.EVALUATED)
    if theorem.NEGATIVE_MULTIPLIER in result.flags:
        _negative_multiplier(report, params, spec)

    if format_ == 'json':
        click.echo(_json(report, 'result', {'a2_bound': result.a2_bound,
                                           'a3_bound': result.a3_bound,
                                           'denom': result.denom_value,
                                           'printed_denom': result.printed_denom_value,
                                           'flags': list(result.flags)}))
    else:
        click.echo(f'a2={_number(result.a2_bound)}')
        click.echo(f'a3={_number(result.a3_bound)}')
        click.echo(f'denom={"" if result.denom_value is None else result.denom_value}')
        if result.printed_denom_value is not None:
            click.echo(f'printed_denom={result.printed_denom_value}')
        if result.flags:
            click.echo(f'flags={";".join(result.flags)}')

    report.log_summary()
    if result.degenerate:
        logger.log(f'degenerate input: {", ".join(result.flags)}', is_error=True)
        sys.exit(EXIT_DEGENERATE)


@bibazilevic.command()
@click.option('--k', help='Axis of k, a value or start:stop:steps.')
@click.option('--alpha', help='Axis of alpha.')
@click.option('--beta', help='Axis of beta.')
@click.option('--lambda', 'lambda_', help='Axis of lambda.')
@click.option('--delta', help='Axis of delta.')
@click.option('--gamma', help='Axis of gamma.')
@click.option('--B1', 'b1', help='Axis of B1 of a generic phi.')
@click.option('--B2', 'b2', help='Axis of B2 of a generic phi.')
@click.option('--A', 'a', help='Axis of A of Janowski functions.')
@click.option('--B', 'b', help='Axis of B of Janowski functions.')
@click.option('--zeta', help='Axis of zeta of functions of order zeta.')
@click.option('--format', 'format_', type=click.Choice(['csv', 'json']), default='csv', show_default=True)
@click.pass_context
def grid(ctx, k, alpha, beta, lambda_, delta, gamma, b1, b2, a, b, zeta, format_):
    """Bound table over a parameter grid, rows in lexicographic order of the parameter indices"""
    try:
        spec = grid_.GridSpec.parse({'k': k, 'alpha': alpha, 'beta': beta, 'lambda': lambda_,
                                     'delta': delta, 'gamma': gamma},
                                    {'B1': b1, 'B2': b2, 'A': a, 'B': b, 'zeta': zeta}, format=format_)
    except grid_.InvalidGrid as e:
        raise click.UsageError(str(e))
    report = _start(ctx)
    logger.log(f'{spec.size} grid points', format=logger.Format.ITALICS)

    rows = grid_.evaluate_grid(spec, report)
    if format_ == 'json':
        click.echo(grid_.to_json(rows, report))
    else:
        grid_.write_csv(rows, sys.stdout)
    report.log_summary()


@bibazilevic.command()
@click.option('--samples', type=click.IntRange(min=1), help='Random points per statement.')
@click.option('--seed', type=int, help='The seed of the random draws.')
@click.option('--format', 'format_', type=click.Choice(['text', 'json']), default='text', show_default=True)
@click.pass_context
def audit(ctx, samples, seed, format_):
    """Compares every printed special case with the specialized general bounds"""
    report = _start(ctx)
    samples = config.audit_samples() if samples is None else samples
    seed = config.default_seed() if seed is None else seed

    entries = audit_.audit_corollaries(samples, seed)
    report.count(run_report.EVALUATED, sum(entry.samples for entry in entries))
    for finding in audit_.audit_findings(entries):
        report.report_finding(finding)

    if format_ == 'json':
        click.echo(_json(report, 'entries', [entry.to_dict() for entry in entries]))
    else:
        for entry in entries:
            click.echo(f'{entry.corollary_id:<9} {entry.status.value:<8} '
                       f'a2={entry.a2_status.value} a3={entry.a3_status.value}  [{entry.regime}]')
            for coefficient, witness in [('a2', entry.a2_witness), ('a3', entry.a3_witness)]:
                if witness:
                    printed = getattr(witness, f'printed_{coefficient}')
                    derived = getattr(witness, f'derived_{coefficient}')
                    click.echo(f'          printed {coefficient}={_number(printed)} '
                               f'derived {coefficient}={_number(derived)} '
                               f'at {", ".join(f"{name}={value}" for name, value in witness.params.items())}')
    mismatches = sum(entry.status is audit_.AuditStatus.MISMATCH for entry in entries)
    logger.log(f'{len(entries) - mismatches} MATCH, {mismatches} MISMATCH')
    report.log_summary()


@bibazilevic.command()
@click.option('--draws', type=click.IntRange(min=1), help='Random inputs per check.')
@click.option('--seed', type=int, help='The seed of the random draws.')
@click.option('--format', 'format_', type=click.Choice(['text', 'json']), default='text', show_default=True)
@click.pass_context
def verify(ctx, draws, seed, format_):
    """Exact residuals of the series engine and of the proof chain, exit code 3 on any nonzero residual"""
    from .verify import suite

    report = _start(ctx)
    result = suite.run_verify(draws, seed)
    evaluated = sum(check['evaluated'] for check in result.checks)
    report.count(run_report.ERRORS, len(result.failures))
    report.count(run_report.EVALUATED, evaluated - len(result.failures))
    for finding in result.findings:
        report.report_finding(finding)

    if format_ == 'json':
        click.echo(_json(report, 'report', result.to_dict()))
    else:
        for check in result.checks:
            click.echo(f'{check["id"]:<22} {check["evaluated"]:>5} inputs {check["failures"]:>5} failures')
        for failure in result.failures:
            click.echo(f'FAIL {failure.check}: {failure.residuals} at '
                       + ', '.join(f'{name}={value}' for name, value in failure.inputs.items()))
        click.echo('PASS' if result.passed else 'FAIL')

    report.log_summary()
    if not result.passed:
        logger.log(f'{len(result.failures)} inputs with nonzero residuals', is_error=True)
        sys.exit(EXIT_VERIFY_FAILED)


@bibazilevic.command()
@class_options
@phi_options
@click.option('--target', type=click.Choice(['a2', 'a3', 'both']), default='both', show_default=True)
@click.option('--resolution', type=click.FloatRange(min=0, min_open=True), help='Step of the real grid.')
@click.option('--draws', type=click.IntRange(min=0), help='Random tuples of the search.')
@click.option('--seed', type=int, help='The seed of the random draws.')
@click.option('--strict', is_flag=True, default=False, help='Also search the two-coefficient Caratheodory body.')
@click.option('--format', 'format_', type=click.Choice(['text', 'json']), default='text', show_default=True)
@click.pass_context
def extremal(ctx, k, alpha, beta, lambda_, delta, gamma, b1, b2, a, b, zeta, target, resolution, draws, seed,
             strict, format_):
    """Maximizes |a2| and |a3| over the relaxed problem of the proof and compares with the bounds"""
    from .verify import extremal as extremal_

    params, spec = _parse_inputs(k, alpha, beta, lambda_, delta, gamma, b1, b2, a, b, zeta)
    report = _start(ctx)
    b1, b2 = maminda.phi_coefficients(spec)
    targets = [extremal_.Target.A2, extremal_.Target.A3] if target == 'both' else [extremal_.Target(target)]

    try:
        results = [extremal_.extremal_search(params, b1, b2, target_, resolution=resolution, random_draws=draws,
                                             seed=seed, strict=strict)
                   for target_ in targets]
    except (DegenerateOperator, theorem.ZeroDenominator) as e:
        report.count(run_report.DEGENERATE)
        report.log_summary()
        logger.log(f'degenerate input: {e}', is_error=True)
        sys.exit(EXIT_DEGENERATE)

    report.count(run_report.EVALUATED, len(results))
    for result in results:
        if theorem.NEGATIVE_MULTIPLIER in result.flags and result.target is extremal_.Target.A3 \
                and result.gap < 0:
            _negative_multiplier(report, params, spec, printed=result.formula_bound, derived=result.searched_max)

    if format_ == 'json':
        click.echo(_json(report, 'reports', [result.to_dict() for result in results]))
    else:
        for result in results:
            argmax = ', '.join(f'{name}={value}' for name, value in result.argmax.as_dict().items())
            click.echo(f'{result.target.value}: searched_max={_number(result.searched_max)} '
                       f'formula_bound={_number(result.formula_bound)} gap={_number(result.gap)} '
                       f'argmax=({argmax})')
            if result.strict_max is not None:
                click.echo(f'{result.target.value}: strict_max={_number(result.strict_max)}')
            if result.flags:
                click.echo(f'{result.target.value}: flags={";".join(result.flags)}')
    report.log_summary()


def main():
    bibazilevic()
