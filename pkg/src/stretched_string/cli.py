"""
Command-line front-end, installed as the console script `stretched-string`.

Subcommands
-----------
period :
    Periods from the selected engines, the bounds, R and the sandwich verdict of one configuration
sweep :
    One row per grid value of a single parameter (CSV or JSON)
trajectory :
    The simulated (t, y, v, E) samples (CSV)
verify :
    The seeded randomized invariant suite
convergence :
    Relative error of Rayleigh's period over an amplitude grid and the fitted log-log slope

Data goes to stdout, diagnostics to stderr. Exit codes: 0 ok, 1 invalid input,
2 numerical engine failure, 3 invariant violation (verify only).
"""
import argparse
import logging
import sys

from .analysis.convergence import convergence_study, default_amplitudes
from .analysis.sweep import (
    SWEEP_AXES,
    build_grid,
    build_oscillations,
    evaluate_row,
    records_to_frame,
    rows_to_frame,
    rows_to_records,
    run_sweep,
    summarize_sweep,
    write_csv,
    write_json,
)
from .analysis.verify import run_verification
from .constants.defaults import CONVERGENCE_SLOPE, CONVERGENCE_SLOPE_TOL, SIM_N_PERIODS, VERIFY_SAMPLES
from .constants.methods import CLI_METHODS, ExitCode, PeriodMethod
from .model.string_params import Oscillation, StringParams
from .period.odesim import SimConfig, measure_period, simulate
from .utils.config_helpers import Settings, get_settings_from_env
from .utils.errors import DegenerateAmplitude, DomainError, InvalidParameters, NumericalFailure

logger = logging.getLogger(__name__)

PACKAGE_LOGGER = 'stretched_string'
LOG_FORMAT = '%(message)s'
DEBUG_LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'

_PARAM_FLAGS = {'l0': 'half-length of the unstretched wire',
                'l': 'half-length of the stretched wire at equilibrium',
                'sigma': 'spring constant (force units)',
                'mass': 'the attached mass',
                'y0': 'initial displacement, released from rest'}


class _ArgumentParser(argparse.ArgumentParser):
    # Usage errors are invalid input (exit 1), not argparse's exit 2
    def error(self, message):
        raise InvalidParameters(f'{self.prog}: {message}')


def _add_param_flags(parser: argparse.ArgumentParser, skip: tuple = ()) -> None:
    for name, help_text in _PARAM_FLAGS.items():
        if name not in skip:
            parser.add_argument(f'--{name}', type=float, help=help_text)


def _add_method_flag(parser: argparse.ArgumentParser, default: str, allow_all: bool = True) -> None:
    choices = (*CLI_METHODS, 'all') if allow_all else CLI_METHODS
    parser.add_argument('--method', choices=choices, default=default,
                        help='period engine(s) to run (default: %(default)s)')


def _parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = _ArgumentParser(prog='stretched-string',
                             description='Exact period and a-priori bounds of the stretched-string oscillator.')
    parser.add_argument('--verbose', action='store_true', help='debug logging on stderr')
    parser.add_argument('--env-file', default=None,
                        help='.env file with SSP_REL_TOL / SSP_SEED (default: search from the working directory)')
    commands = parser.add_subparsers(dest='command', required=True, parser_class=_ArgumentParser)

    period = commands.add_parser('period', help='periods, bounds and verdict of one configuration')
    _add_param_flags(period)
    _add_method_flag(period, 'all')
    period.add_argument('--tol', type=float, help='relative tolerance of the engines')
    period.add_argument('--format', choices=('text', 'csv', 'json'), default='text')

    sweep = commands.add_parser('sweep', help='rows over a grid of one parameter')
    _add_param_flags(sweep)
    _add_method_flag(sweep, 'quadrature')
    sweep.add_argument('--tol', type=float)
    sweep.add_argument('--sweep', dest='axis', choices=SWEEP_AXES, required=True, help='the parameter to vary')
    sweep.add_argument('--from', dest='start', type=float, required=True)
    sweep.add_argument('--to', dest='stop', type=float, required=True)
    sweep.add_argument('--points', type=int, required=True)
    sweep.add_argument('--log', action='store_true', help='geometric instead of linear spacing')
    sweep.add_argument('--workers', type=int, default=1, help='threads computing rows (output order is kept)')
    sweep.add_argument('--format', choices=('csv', 'json'), default='csv')

    trajectory = commands.add_parser('trajectory', help='simulated samples t,y,v,E as CSV')
    _add_param_flags(trajectory)
    trajectory.add_argument('--tol', type=float, help='relative tolerance of the step control')
    trajectory.add_argument('--periods', type=int, default=SIM_N_PERIODS)
    trajectory.add_argument('--stride', type=int, default=1, help='keep every n-th accepted step')

    verify = commands.add_parser('verify', help='randomized invariant suite')
    verify.add_argument('--samples', type=int, default=VERIFY_SAMPLES)
    verify.add_argument('--seed', type=int, default=None, help='default: SSP_SEED, or the built-in seed')

    convergence = commands.add_parser('convergence', help='relative error against amplitude, log-log slope')
    _add_param_flags(convergence, skip=('y0',))
    _add_method_flag(convergence, 'quadrature', allow_all=False)
    convergence.add_argument('--tol', type=float)
    convergence.add_argument('--from', dest='start', type=float, help='smallest y0 of a geometric grid')
    convergence.add_argument('--to', dest='stop', type=float, help='largest y0 of a geometric grid')
    convergence.add_argument('--points', type=int)
    convergence.add_argument('--format', choices=('csv', 'json'), default='csv')

    return parser.parse_args(argv)


def _configure_logging(verbose: bool) -> None:
    package_logger = logging.getLogger(PACKAGE_LOGGER)
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(DEBUG_LOG_FORMAT if verbose else LOG_FORMAT))
    package_logger.addHandler(handler)
    package_logger.setLevel(logging.DEBUG if verbose else logging.INFO)
    package_logger.propagate = False


def _require(args: argparse.Namespace, names) -> dict:
    missing = [f'--{name}' for name in names if getattr(args, name) is None]
    if missing:
        raise InvalidParameters(f'{args.command} needs {", ".join(missing)}')
    return {name: getattr(args, name) for name in names}


def _string_params(values: dict) -> StringParams:
    return StringParams(L0=values['l0'], L=values['l'], sigma=values['sigma'], m=values['mass'])


def _methods(choice: str) -> tuple[PeriodMethod, ...]:
    names = CLI_METHODS if choice == 'all' else (choice,)
    return tuple(PeriodMethod(name) for name in names)


def _tolerances(args: argparse.Namespace, settings: Settings) -> dict:
    """
    --tol applies to every engine; SSP_REL_TOL only replaces the quadrature and elliptic defaults
    """
    if args.tol is not None:
        return {method: args.tol for method in _methods('all')}
    if settings.rel_tol is not None:
        return {PeriodMethod.QUADRATURE: settings.rel_tol, PeriodMethod.ELLIPTIC: settings.rel_tol}
    return {}


def _period_text(row) -> list[str]:
    lines = [f'L0={row.l0:.8g} L={row.l:.8g} sigma={row.sigma:.8g} m={row.mass:.8g} y0={row.y0:.8g}']
    for column, value in row.periods.items():
        engine = row.methods[column]
        lines.append(f'period ({engine}): {value:.8g}' if value is not None else f'period: {column} failed')
    lines.append(f'upper bound (Rayleigh): {row.upper:.8g}')
    lines.append(f'lower bound (corrected): {row.lower_corrected:.8g}')
    lines.append(f'lower bound (printed): {row.lower_printed:.8g}')
    if row.R is not None:
        lines.append(f'R: {row.R:.8g} (bound {row.R_bound_corrected:.8g} <= R <= 0)')
    lines.append(f'sandwich: {"pass" if row.passed else "FAIL"}')
    if row.error is not None:
        lines.append(f'errors: {row.error}')
    return lines


def cmd_period(args: argparse.Namespace, settings: Settings) -> int:
    values = _require(args, _PARAM_FLAGS)
    osc = Oscillation(_string_params(values), values['y0'])
    row = evaluate_row(osc, _methods(args.method), _tolerances(args, settings))

    if args.format == 'text':
        sys.stdout.write('\n'.join(_period_text(row)) + '\n')
    elif args.format == 'csv':
        write_csv(rows_to_frame([row]), sys.stdout)
    else:
        write_json(rows_to_records([row]), sys.stdout)
    return ExitCode.ENGINE_FAILURE if row.error else ExitCode.OK


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    base = _require(args, [name for name in _PARAM_FLAGS if name != args.axis])
    grid = build_grid(args.start, args.stop, args.points, log=args.log)
    oscillations = build_oscillations(base, args.axis, grid)

    rows = run_sweep(oscillations, _methods(args.method), _tolerances(args, settings), workers=args.workers)
    if args.format == 'csv':
        write_csv(rows_to_frame(rows), sys.stdout)
    else:
        write_json(rows_to_records(rows), sys.stdout)
    for line in summarize_sweep(rows):
        logger.info(line)
    return ExitCode.ENGINE_FAILURE if any(row.error for row in rows) else ExitCode.OK


def cmd_trajectory(args: argparse.Namespace, settings: Settings) -> int:
    values = _require(args, _PARAM_FLAGS)
    osc = Oscillation(_string_params(values), values['y0'])
    cfg = SimConfig(n_periods=args.periods, sample_stride=args.stride,
                    **({'rel_tol': args.tol} if args.tol is not None else {}))

    traj = simulate(osc, cfg)
    write_csv(traj.to_frame(), sys.stdout)
    logger.info('Samples: %d, measured period: %.8g, max relative energy drift: %.3g',
                len(traj.t), measure_period(traj).value, traj.max_energy_drift())
    return ExitCode.OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    seed = settings.seed if args.seed is None else args.seed
    report = run_verification(args.samples, seed)
    sys.stdout.write('\n'.join(report.describe()) + '\n')
    return ExitCode.OK if report.passed else ExitCode.INVARIANT_VIOLATION


def cmd_convergence(args: argparse.Namespace, settings: Settings) -> int:
    values = _require(args, [name for name in _PARAM_FLAGS if name != 'y0'])
    params = _string_params(values)
    grid_flags = (args.start, args.stop, args.points)
    if all(flag is None for flag in grid_flags):
        amplitudes = default_amplitudes(params)
    elif any(flag is None for flag in grid_flags):
        raise InvalidParameters('convergence needs all of --from, --to, --points, or none of them')
    else:
        amplitudes = build_grid(args.start, args.stop, args.points, log=True)
    method = PeriodMethod(args.method)
    rows, slope = convergence_study(params, amplitudes, _tolerances(args, settings).get(method), method)

    records = [row.as_record() for row in rows]
    if args.format == 'csv':
        write_csv(records_to_frame(records), sys.stdout)
    else:
        write_json({'rows': records, 'slope': slope}, sys.stdout)
    logger.info('Fitted log-log slope of |R|: %.6f', slope)
    if abs(slope - CONVERGENCE_SLOPE) > CONVERGENCE_SLOPE_TOL:
        logger.warning('slope %.6f is outside %s +- %s', slope, CONVERGENCE_SLOPE, CONVERGENCE_SLOPE_TOL)
    return ExitCode.OK


_COMMANDS = {
    'period': cmd_period,
    'sweep': cmd_sweep,
    'trajectory': cmd_trajectory,
    'verify': cmd_verify,
    'convergence': cmd_convergence,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = _parse_args(argv)
    except InvalidParameters as exc:
        _configure_logging(False)
        logger.error('%s', exc)
        return ExitCode.INVALID_INPUT
    _configure_logging(args.verbose)

    try:
        settings = get_settings_from_env(args.env_file)
        return int(_COMMANDS[args.command](args, settings))
    except (InvalidParameters, DomainError, DegenerateAmplitude) as exc:
        logger.error('invalid input: %s', exc)
        return ExitCode.INVALID_INPUT
    except NumericalFailure as exc:
        logger.error('numerical engine failure: %s', exc)
        return ExitCode.ENGINE_FAILURE
