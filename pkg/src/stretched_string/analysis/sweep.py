"""
This module contains the functions behind the period and sweep commands: one row of periods,
bounds and verdicts per Oscillation, and the tabular output of those rows.

Classes
-------
SweepRow :
    The inputs, the requested periods, the bounds and the sandwich verdict of one Oscillation

Functions
---------
build_grid :
    Linear or geometric grid of sweep values

build_oscillations :
    One Oscillation per grid value, with a single parameter varied

evaluate_row :
    Computes one SweepRow. Engine failures are recorded in the row.

run_sweep :
    evaluate_row over a list of Oscillations, optionally on a thread pool, in input order

rows_to_frame, rows_to_records, records_to_frame :
    Tabular forms of the rows (pandas DataFrame for CSV, plain dicts for JSON)

write_csv, write_json :
    Serialize rows with 17 significant digits

summarize_sweep :
    Human-readable summary lines (pass count, failures)
"""
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import TextIO

import numpy as np
import pandas as pd

from ..bounds import check_sandwich, period_bounds, relative_error
from ..constants.methods import PeriodMethod
from ..model.string_params import Oscillation, StringParams
from ..period import PeriodEstimate, compute_period
from ..utils.errors import InvalidParameters, NumericalFailure

logger = logging.getLogger(__name__)

# Sweep axis names, as the CLI flags spell them
SWEEP_AXES = ('l0', 'l', 'sigma', 'mass', 'y0')

CSV_FLOAT_FORMAT = '%.17g'

_PERIOD_COLUMNS = {
    PeriodMethod.QUADRATURE: 'period_quadrature',
    PeriodMethod.ELLIPTIC: 'period_elliptic',
    PeriodMethod.ODE_SIM: 'period_ode',
}


@dataclass(frozen=True)
class SweepRow:
    """
    Attributes
    ----------
    l0, l, sigma, mass, y0 : float
        The inputs
    periods : dict
        Requested period columns (period_quadrature, period_elliptic, period_ode) to values.
        None when that engine failed.
    methods : dict
        The same keys to the PeriodMethod value that produced each period
        (elliptic requests may be answered by the quadrature fallback)
    upper, lower_corrected, lower_printed : float
        The bounds
    R : float or None
        Relative error of Rayleigh's period against the quadrature period
    R_bound_corrected : float
        The corrected lower limit of R
    passed : bool
        lower_corrected - slack <= period_quadrature <= upper + slack (False when quadrature failed)
    error : str or None
        Messages of the engines that failed on this row
    """
    l0: float
    l: float
    sigma: float
    mass: float
    y0: float
    upper: float
    lower_corrected: float
    lower_printed: float
    R_bound_corrected: float
    R: float | None = None
    passed: bool = False
    periods: dict = field(default_factory=dict)
    methods: dict = field(default_factory=dict)
    error: str | None = None

    def as_record(self) -> dict:
        """
        Flat dict in output column order. The verdict is exported under the name "pass".
        """
        record = {'l0': self.l0, 'l': self.l, 'sigma': self.sigma, 'mass': self.mass, 'y0': self.y0}
        record.update(self.periods)
        record.update({
            'upper': self.upper,
            'lower_corrected': self.lower_corrected,
            'lower_printed': self.lower_printed,
            'R': self.R,
            'R_bound_corrected': self.R_bound_corrected,
            'pass': self.passed,
        })
        if self.error is not None:
            record['error'] = self.error
        return record


def build_grid(start: float, stop: float, points: int, log: bool = False) -> np.ndarray:
    """
    points values from start to stop inclusive, equally spaced or (log=True) geometrically spaced.
    A single point is just start.

    Raises
    ------
    InvalidParameters
        If points < 1, an endpoint is not finite, or log is requested with a non-positive endpoint
    """
    if points < 1:
        raise InvalidParameters(f'points must be at least 1, got {points}')
    if not (np.isfinite(start) and np.isfinite(stop)):
        raise InvalidParameters(f'grid endpoints must be finite, got {start}, {stop}')
    if log:
        if not (start > 0 and stop > 0):
            raise InvalidParameters(f'a logarithmic grid needs positive endpoints, got {start}, {stop}')
        return np.geomspace(start, stop, points)
    return np.linspace(start, stop, points)


def build_oscillations(base: dict, axis: str, values) -> list[Oscillation]:
    """
    Parameters
    ----------
    base : dict
        Values of all of l0, l, sigma, mass, y0
    axis : str
        The one name in SWEEP_AXES that takes the grid values
    values : iterable of float
        The grid

    Raises
    ------
    InvalidParameters
        If axis is unknown or any grid point gives an invalid configuration
    """
    if axis not in SWEEP_AXES:
        raise InvalidParameters(f'sweep axis must be one of {", ".join(SWEEP_AXES)}, got {axis!r}')
    oscillations = []
    for value in values:
        point = dict(base, **{axis: float(value)})
        params = StringParams(L0=point['l0'], L=point['l'], sigma=point['sigma'], m=point['mass'])
        oscillations.append(Oscillation(params, point['y0']))
    return oscillations


def _try_period(osc: Oscillation, method: PeriodMethod, tol: float | None,
                errors: list) -> PeriodEstimate | None:
    try:
        return compute_period(osc, method, tol)
    except NumericalFailure as exc:
        logger.warning('%s engine failed for %r: %s', method.value, osc, exc)
        errors.append(f'{method.value}: {exc}')
        return None


def evaluate_row(osc: Oscillation, methods=(PeriodMethod.QUADRATURE,), tols: dict | None = None) -> SweepRow:
    '''
    Computes the requested periods, the bounds and the sandwich verdict of one Oscillation.
    The quadrature period is always computed since R and the verdict are defined against it.

    Parameters
    ----------
    osc : Oscillation
        The problem instance
    methods : sequence of PeriodMethod
        Engines to report, in column order
    tols : dict, optional
        PeriodMethod to relative tolerance; missing methods use the engine default

    Returns
    -------
    SweepRow
        The row. Engine failures leave the period empty and are listed in row.error.
    '''
    tols = tols or {}
    errors = []
    estimates = {}
    for method in dict.fromkeys((PeriodMethod.QUADRATURE, *methods)):
        estimates[method] = _try_period(osc, method, tols.get(method), errors)

    bounds = period_bounds(osc)
    reference = estimates[PeriodMethod.QUADRATURE]
    periods = {_PERIOD_COLUMNS[m]: (estimates[m].value if estimates[m] else None) for m in methods}
    used = {_PERIOD_COLUMNS[m]: (estimates[m].method.value if estimates[m] else None) for m in methods}

    params = osc.params
    return SweepRow(
        l0=params.L0, l=params.L, sigma=params.sigma, mass=params.m, y0=osc.y0,
        upper=bounds.upper,
        lower_corrected=bounds.lower_corrected,
        lower_printed=bounds.lower_printed,
        R_bound_corrected=bounds.rel_error_bound_corrected,
        R=relative_error(reference.value, params) if reference else None,
        passed=check_sandwich(osc, reference).bounds_ok if reference else False,
        periods=periods,
        methods=used,
        error='; '.join(errors) if errors else None,
    )


def run_sweep(oscillations: list[Oscillation], methods=(PeriodMethod.QUADRATURE,),
              tols: dict | None = None, workers: int = 1) -> list[SweepRow]:
    """
    evaluate_row for every Oscillation. With workers > 1 rows are computed on a thread pool;
    the result is in input order either way.
    """
    if workers < 1:
        raise InvalidParameters(f'workers must be at least 1, got {workers}')

    def evaluate(osc):
        return evaluate_row(osc, methods, tols)

    if workers == 1 or len(oscillations) < 2:
        return [evaluate(osc) for osc in oscillations]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(evaluate, oscillations))


def rows_to_records(rows: list[SweepRow]) -> list[dict]:
    return [row.as_record() for row in rows]


def records_to_frame(records: list[dict]) -> pd.DataFrame:
    return pd.DataFrame.from_records(records)


def rows_to_frame(rows: list[SweepRow]) -> pd.DataFrame:
    return records_to_frame(rows_to_records(rows))


def write_csv(frame: pd.DataFrame, stream: TextIO) -> None:
    """
    Comma separated, header row, '\\n' line endings, floats with 17 significant digits
    """
    frame.to_csv(stream, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator='\n')


def write_json(payload, stream: TextIO) -> None:
    """
    json.dumps of plain Python values; floats use the shortest repr that round-trips
    """
    stream.write(json.dumps(payload, allow_nan=False))
    stream.write('\n')


def summarize_sweep(rows: list[SweepRow]) -> list[str]:
    """
    Summary lines for the diagnostics stream
    """
    n_pass = sum(row.passed for row in rows)
    summary = [f'Rows: {len(rows)}, sandwich pass: {n_pass}/{len(rows)}']
    failed = [row for row in rows if row.error is not None]
    if failed:
        summary.append(f'Rows with engine failures: {len(failed)}')
    return summary
