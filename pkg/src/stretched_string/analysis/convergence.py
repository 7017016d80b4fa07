"""
This module contains the convergence study of Rayleigh's approximation: the relative error R of
Rayleigh's period over a geometric grid of amplitudes, and the slope of log|R| against log(y0),
which is 2 for the quadratic error law.

Functions
---------
default_amplitudes :
    y0 = L * (0.01, 0.02, 0.05, 0.1, 0.2)

convergence_study :
    Rows (y0, P, R, R_bound_corrected) and the fitted slope

fit_log_log_slope :
    Least-squares slope of log|y| against log(x)
"""
import logging
from dataclasses import asdict, dataclass

import numpy as np

from ..bounds import relative_error, relative_error_bounds
from ..constants.defaults import CONVERGENCE_Y0_FRACTIONS
from ..constants.methods import PeriodMethod
from ..model.string_params import Oscillation, StringParams
from ..period import compute_period
from ..utils.errors import InvalidParameters

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConvergenceRow:
    y0: float
    P: float
    R: float
    R_bound_corrected: float

    def as_record(self) -> dict:
        return asdict(self)


def default_amplitudes(params: StringParams) -> np.ndarray:
    return params.L * np.array(CONVERGENCE_Y0_FRACTIONS)


def fit_log_log_slope(x, y) -> float:
    """
    Slope of the least-squares line through (log x, log |y|)

    Raises
    ------
    InvalidParameters
        With fewer than 2 points, or a non-positive x or zero y (the logarithm is undefined)

    Examples
    --------
    >>> round(fit_log_log_slope([1.0, 2.0, 4.0], [3.0, 12.0, 48.0]), 12)
    2.0
    """
    x = np.asarray(x, dtype=float)
    y = np.abs(np.asarray(y, dtype=float))
    if x.size < 2 or x.size != y.size:
        raise InvalidParameters(f'need at least 2 matching points, got {x.size} and {y.size}')
    if np.any(x <= 0) or np.any(y == 0):
        raise InvalidParameters('log-log fit needs positive x and non-zero y')
    slope, _intercept = np.polyfit(np.log(x), np.log(y), 1)
    return float(slope)


def convergence_study(params: StringParams, amplitudes=None, tol: float | None = None,
                      method: PeriodMethod = PeriodMethod.QUADRATURE) -> tuple[list[ConvergenceRow], float]:
    '''
    Relative error of Rayleigh's period over a grid of amplitudes

    Parameters
    ----------
    params : StringParams
        The configuration
    amplitudes : sequence of float, optional
        Positive amplitudes; default_amplitudes(params) when None
    tol : float, optional
        Relative tolerance of the period engine
    method : PeriodMethod
        The engine computing P

    Returns
    -------
    tuple
        The rows in grid order, and the slope of log|R| against log(y0). Rows with R = 0 (amplitudes
        below the degeneracy threshold) are kept but left out of the fit.

    Raises
    ------
    InvalidParameters
        If fewer than 2 rows have a non-zero R
    '''
    amplitudes = default_amplitudes(params) if amplitudes is None else np.asarray(amplitudes, dtype=float)
    rows = []
    for y0 in amplitudes:
        osc = Oscillation(params, float(y0))
        period = compute_period(osc, method, tol).value
        rows.append(ConvergenceRow(
            y0=osc.y0,
            P=period,
            R=relative_error(period, params),
            R_bound_corrected=relative_error_bounds(osc)[0],
        ))
    fitted = [row for row in rows if row.R != 0.0]
    if len(fitted) < len(rows):
        logger.warning("left %d of %d amplitudes out of the slope fit: R = 0, P equals Rayleigh's period",
                       len(rows) - len(fitted), len(rows))
    if len(fitted) < 2:
        raise InvalidParameters(f'only {len(fitted)} of {len(rows)} amplitudes give a non-zero relative error; '
                                'the slope needs at least 2, choose larger amplitudes')
    slope = fit_log_log_slope([row.y0 for row in fitted], [row.R for row in fitted])
    logger.debug('convergence study over %d amplitudes: slope %.6f', len(rows), slope)
    return rows, slope
