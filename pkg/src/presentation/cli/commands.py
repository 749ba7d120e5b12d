# src/presentation/cli/commands.py

import functools
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

import click
from tabulate import tabulate

from config.logging import setup_logging
from config.settings import settings
from src.application.run_config import RunConfig
from src.application.use_cases import (
    AnalyzeBoundaryUseCase,
    ClassifyGroupUseCase,
    ComputeDistanceUseCase,
    GenerateReportUseCase,
    VerifyIdentitiesUseCase,
)
from src.infrastructure.repositories.report_repository import JsonCsvReportRepository
from src.shared.constants import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    Command,
    DistanceMethod,
    LemmaName,
)
from src.shared.utils.exceptions import (
    BudgetExceededError,
    EstimationError,
    SpectraException,
    ValidationError,
)
from src.shared.utils.formatting import format_float, format_point, format_status, format_word
from src.shared.validators import parse_tolerance_overrides, validate_window

logger = logging.getLogger(__name__)


def exit_code_for(error: SpectraException) -> int:
    """Budget overruns exit 2, failed estimates 1, bad input and configuration 64."""
    if isinstance(error, BudgetExceededError):
        return EXIT_BUDGET
    if isinstance(error, EstimationError):
        return EXIT_VERIFICATION_FAILED
    return EXIT_USAGE


class SpectraGroup(click.Group):
    """Click group that maps usage errors and domain errors onto the exit-code contract."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            result = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
            code = result if isinstance(result, int) else EXIT_OK
        except click.UsageError as e:
            e.show()
            code = EXIT_USAGE
        except click.ClickException as e:
            e.show()
            code = EXIT_USAGE
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = EXIT_VERIFICATION_FAILED
        except SpectraException as e:
            click.secho(f"✗ Error: {e}", fg='red', err=True)
            logger.debug("Command failed", exc_info=True)
            code = exit_code_for(e)
        if standalone_mode:
            sys.exit(code)
        return code


def tolerance_option(func):
    return click.option('--tol', 'tol', multiple=True, metavar='KEY=VAL',
                        help='Override a tolerance (TOL_DET, TOL_CLASS, TOL_PT, TOL_JORG, TOL_CR)')(func)


def meta_option(func):
    return click.option('--no-meta', is_flag=True, default=False,
                        help='Omit the timestamped meta block (byte-reproducible output)')(func)


def with_tolerances(func):
    """Run the command body with --tol overrides active."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            overrides = parse_tolerance_overrides(kwargs.get('tol') or ())
        except ValidationError as e:
            raise click.BadParameter(str(e), param_hint="--tol")
        with settings.override_tolerances(**overrides):
            return func(*args, overrides=overrides, **kwargs)
    return wrapper


def _emit(config: RunConfig, body: Dict[str, Any], out: Optional[str], no_meta: bool) -> None:
    report = GenerateReportUseCase().execute(config, body, include_meta=not no_meta)
    JsonCsvReportRepository().save_json(report, Path(out) if out else None)


@click.group(cls=SpectraGroup)
@click.option('--log-level', default=settings.LOG_LEVEL, show_default=True,
              type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                                case_sensitive=False))
@click.pass_context
def cli(ctx, log_level):
    """Thurston and length-spectrum distances between marked Fuchsian groups."""
    setup_logging(log_level=log_level, log_dir=str(settings.LOG_DIR),
                  log_to_console=settings.LOG_TO_CONSOLE, log_to_file=settings.LOG_TO_FILE)
    ctx.ensure_object(dict)


@cli.command()
@click.argument('group')
@click.option('--out', '-o', default=None, help='Report path (stdout when omitted)')
@meta_option
@tolerance_option
@with_tolerances
def classify(group, out, no_meta, tol, overrides):
    """Classify the generators and peripherals of GROUP."""
    body = ClassifyGroupUseCase().execute(group)
    config = RunConfig(Command.CLASSIFY, (group,), tolerance_overrides=overrides,
                       output=Path(out) if out else None)

    rows = [[f"g{g['index']}", g['kind'], format_float(g['trace']), format_float(g['lambda']),
             format_float(g.get('omega')), g.get('attracting', g.get('fixed', '-'))]
            for g in body['generators']]
    rows += [[format_word(p['word']), p['kind'], format_float(p['trace']), '-',
              format_float(p.get('omega')), p.get('fixed', '-')]
             for p in body['peripherals']]
    click.echo(tabulate(rows, headers=['Element', 'Kind', 'Trace', 'λ', 'ω', 'Fixed / attracting'],
                        tablefmt='simple'), err=True)

    _emit(config, body, out, no_meta)
    return EXIT_OK


@cli.command()
@click.argument('source')
@click.argument('target')
@click.option('--max-len', default=settings.DEFAULT_MAX_LEN, show_default=True,
              type=click.IntRange(min=1), help='Word-length cutoff')
@click.option('--depth', default=settings.DEFAULT_DEPTH, show_default=True,
              type=click.IntRange(min=1), help='Power depth for rho')
@click.option('--method', default=DistanceMethod.DELTA.value, show_default=True,
              type=click.Choice([m.value for m in DistanceMethod]))
@click.option('--workers', default=settings.MAX_WORKERS, show_default=True,
              type=click.IntRange(min=1))
@click.option('--format', 'fmt', default='json', type=click.Choice(['json', 'csv']),
              help='csv writes the convergence table to --out')
@click.option('--out', '-o', default=None, help='Report path (stdout when omitted)')
@click.option('--trace-out', default=None, help='Convergence CSV path')
@meta_option
@tolerance_option
@with_tolerances
def distance(source, target, max_len, depth, method, workers, fmt, out, trace_out, no_meta,
             tol, overrides):
    """Estimate d_L(SOURCE, TARGET) in both directions and d_ls."""
    if fmt == 'csv' and not out:
        raise click.UsageError("--format csv needs --out")
    config = RunConfig(Command.DISTANCE, (source, target), max_len=max_len, depth=depth,
                       tolerance_overrides=overrides, output=Path(out) if out else None,
                       format=fmt, options={'method': method, 'workers': workers})
    use_case = ComputeDistanceUseCase(workers=workers)
    report = use_case.execute(source, target, max_len, depth, DistanceMethod(method))

    click.echo(tabulate(
        [['d_L forward', format_float(report.d_L_forward)],
         ['d_L backward', format_float(report.d_L_backward)],
         ['d_ls', format_float(report.d_ls)],
         ['gap', format_float(report.gap)]],
        headers=['Quantity', 'Value'], tablefmt='simple'), err=True)

    repository = JsonCsvReportRepository()
    rows = use_case.trace_rows(report)
    if trace_out:
        repository.save_trace_csv(rows, Path(trace_out))
    if fmt == 'csv':
        repository.save_trace_csv(rows, Path(out))
    else:
        _emit(config, report.to_dict(), out, no_meta)
    return EXIT_OK


@cli.group()
def verify():
    """Check the identities behind the estimators on synthetic maps."""
    pass


def _run_verification(lemma: LemmaName, params: Dict[str, Any], out: Optional[str],
                      no_meta: bool, overrides: Dict[str, float]) -> int:
    report = VerifyIdentitiesUseCase().execute(lemma, params)
    status = format_status(report.passed)
    click.secho(f"{lemma.value}: {status} (max residual {report.residual:.3g})",
                fg='green' if report.passed else 'red', err=True)
    config = RunConfig(Command.VERIFY, (), tolerance_overrides=overrides,
                       options={'lemma': lemma.value, **params})
    _emit(config, report.to_dict(), out, no_meta)
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def _verify_output_options(func):
    func = click.option('--out', '-o', default=None)(func)
    return tolerance_option(meta_option(func))


@verify.command('tr')
@click.option('--lsrc', required=True, type=float, help='Source multiplier')
@click.option('--ltgt', required=True, type=float, help='Target multiplier')
@click.option('--nmax', default=20, show_default=True, type=click.IntRange(min=2))
@_verify_output_options
@with_tolerances
def verify_tr(lsrc, ltgt, nmax, out, no_meta, tol, overrides):
    """Trace exponents of powers tend to the multiplier exponent."""
    return _run_verification(LemmaName.TRACE, {'lsrc': lsrc, 'ltgt': ltgt, 'nmax': nmax},
                             out, no_meta, overrides)


@verify.command('square')
@click.option('--omega', required=True, type=float)
@click.option('--fixed', required=True, type=float)
@_verify_output_options
@with_tolerances
def verify_square(omega, fixed, out, no_meta, tol, overrides):
    """Signed square law for the parabolic with vector OMEGA fixing FIXED."""
    return _run_verification(LemmaName.SQUARE, {'omega': omega, 'fixed': fixed}, out, no_meta,
                             overrides)


@verify.command('eq2')
@click.option('--omega', required=True, type=float)
@click.option('--fixed', required=True, type=float)
@_verify_output_options
@with_tolerances
def verify_eq2(omega, fixed, out, no_meta, tol, overrides):
    """Trace of the unit translation composed with a parabolic."""
    return _run_verification(LemmaName.TRACE_SUM, {'omega': omega, 'fixed': fixed}, out, no_meta,
                             overrides)


@verify.command('eq3')
@click.option('--lambda', 'lam', required=True, type=float)
@click.option('--N', 'repelling', required=True, type=float)
@click.option('--n', 'n', required=True, type=click.IntRange(min=1))
@_verify_output_options
@with_tolerances
def verify_eq3(lam, repelling, n, out, no_meta, tol, overrides):
    """Closed form for the translation vector of gⁿ g₀ g⁻ⁿ."""
    return _run_verification(LemmaName.CONJUGATE, {'lambda': lam, 'N': repelling, 'n': n},
                             out, no_meta, overrides)


@verify.command('bn')
@click.option('--lsrc', required=True, type=float)
@click.option('--ltgt', required=True, type=float)
@click.option('--nsrc', default=1.0, show_default=True, type=float, help='Source repelling point')
@click.option('--ntgt', default=1.0, show_default=True, type=float, help='Target repelling point')
@click.option('--nmax', default=20, show_default=True, type=click.IntRange(min=2))
@_verify_output_options
@with_tolerances
def verify_bn(lsrc, ltgt, nsrc, ntgt, nmax, out, no_meta, tol, overrides):
    """Parabolic exponents b_n approach the multiplier exponent."""
    params = {'lsrc': lsrc, 'ltgt': ltgt, 'nsrc': nsrc, 'ntgt': ntgt, 'nmax': nmax}
    return _run_verification(LemmaName.EXPONENT_LIMIT, params, out, no_meta, overrides)


@cli.command()
@click.argument('source')
@click.argument('target')
@click.option('--max-len', default=settings.DEFAULT_MAX_LEN, show_default=True,
              type=click.IntRange(min=1))
@click.option('--anchor', 'anchors', multiple=True, type=click.IntRange(min=0),
              help='Sample index for a Hölder fit (repeatable; evenly spaced when omitted)')
@click.option('--window', default=settings.HOLDER_WINDOW, show_default=True, type=float)
@click.option('--norm', is_flag=True, default=False, help='Estimate cross-ratio norms')
@click.option('--seed', default=None, type=int, help='Sampling seed (required with --norm)')
@click.option('--n-tuples', default=settings.DEFAULT_N_TUPLES, show_default=True,
              type=click.IntRange(min=1))
@click.option('--workers', default=settings.MAX_WORKERS, show_default=True,
              type=click.IntRange(min=1))
@click.option('--format', 'fmt', default='json', type=click.Choice(['json', 'csv']),
              help='csv writes the sample table to --out')
@click.option('--samples-out', default=None, help='Sample CSV path')
@click.option('--out', '-o', default=None, help='Report path (stdout when omitted)')
@meta_option
@tolerance_option
@with_tolerances
def boundary(source, target, max_len, anchors, window, norm, seed, n_tuples, workers, fmt,
             samples_out, out, no_meta, tol, overrides):
    """Sample the boundary map SOURCE → TARGET and fit its regularity."""
    if norm and seed is None:
        raise click.UsageError("--norm requires --seed")
    if fmt == 'csv' and not out:
        raise click.UsageError("--format csv needs --out")
    try:
        window = validate_window(window, "--window")
    except ValidationError as e:
        raise click.BadParameter(str(e), param_hint="--window")

    config = RunConfig(Command.BOUNDARY, (source, target), max_len=max_len, seed=seed,
                       tolerance_overrides=overrides, output=Path(out) if out else None,
                       format=fmt, options={'anchors': list(anchors), 'window': window,
                                            'norm': norm, 'n_tuples': n_tuples})
    analysis = AnalyzeBoundaryUseCase(workers=workers).execute(
        source, target, max_len, anchors, window, norm, seed, n_tuples)

    _print_fits(analysis.profile.fits)
    click.echo(f"monotone: {analysis.monotone}, compatible: {analysis.compatibility.compatible}, "
               f"max 1/α: {format_float(analysis.profile.max_inv_alpha)}, "
               f"exp(d_ls): {format_float(analysis.profile.reference)}", err=True)

    repository = JsonCsvReportRepository()
    if samples_out:
        repository.save_samples_csv(analysis.samples, Path(samples_out))
    if fmt == 'csv':
        repository.save_samples_csv(analysis.samples, Path(out))
    else:
        _emit(config, analysis.to_dict(), out, no_meta)
    return EXIT_OK


def _print_fits(fits: Sequence) -> None:
    if not fits:
        click.secho("No anchor had enough samples for a Hölder fit", fg='yellow', err=True)
        return
    rows = [[format_point(fit.anchor), format_float(fit.alpha_est, 6),
             format_float(fit.inv_alpha_est, 6), format_float(fit.constant_C, 6), fit.n_samples]
            for fit in fits]
    click.echo(tabulate(rows, headers=['Anchor', 'α', '1/α', 'C', 'Samples'], tablefmt='simple'),
               err=True)


if __name__ == '__main__':
    cli()
