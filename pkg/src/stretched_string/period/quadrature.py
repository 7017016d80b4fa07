"""
This module computes the exact period by numerical quadrature of the period integral

    P = 4 sqrt(m/(2 sigma)) * int_0^y0 dy / (sqrt(y0^2 - y^2) sqrt(g(y))),
    g(y) = 1/L0 - 2/(sqrt(L^2 + y^2) + sqrt(L^2 + y0^2)).

The substitution y = y0 sin(theta) turns dy / sqrt(y0^2 - y^2) into d(theta), which leaves the
smooth, bounded integrand 1/sqrt(g(y0 sin(theta))) on [0, pi/2] (g > 0 there because L > L0).
The integral is evaluated with scipy.integrate.quad (QUADPACK, adaptive Gauss-Kronrod).

Classes
-------
QuadratureConfig :
    Tolerances and the refinement cap of the adaptive engine

PeriodEstimate :
    A period value tagged with the method that produced it and its estimated absolute error

Functions
---------
radicand_g, speed, theta_integrand, direct_integrand :
    The pieces of the period integral

exact_period :
    The exact period by adaptive quadrature of the theta form

time_from_release :
    Time taken to move from y0 down to y during the first quarter oscillation

simpson_period, richardson_simpson_period :
    Fixed-panel composite Simpson on the theta form, and its Richardson extrapolation.
    Used as an independent reference value.

truncated_direct_period :
    The untransformed y form integrated on [0, fraction * y0]
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from ..constants.defaults import DEGENERACY_THRESHOLD, QUADRATURE_MAX_REFINEMENTS, QUADRATURE_REL_TOL
from ..constants.methods import PeriodMethod
from ..model.physics import rayleigh_period
from ..model.string_params import Oscillation
from ..utils.errors import ConvergenceFailure, DomainError, InvalidParameters

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadratureConfig:
    """
    Settings of the adaptive quadrature engine

    Attributes
    ----------
    rel_tol : float
        Relative tolerance requested from the engine
    max_refinements : int
        Cap on the number of subintervals the adaptive scheme may create
    abs_tol : float, optional
        Absolute tolerance. When None, rel_tol times a trapezoid estimate of the integral is used,
        which keeps the control purely relative whatever the scale of P.
    """
    rel_tol: float = QUADRATURE_REL_TOL
    max_refinements: int = QUADRATURE_MAX_REFINEMENTS
    abs_tol: float | None = None

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise InvalidParameters(f'rel_tol must be positive, got {self.rel_tol}')
        if self.max_refinements < 1:
            raise InvalidParameters(f'max_refinements must be at least 1, got {self.max_refinements}')
        if self.abs_tol is not None and not self.abs_tol >= 0:
            raise InvalidParameters(f'abs_tol must be non-negative, got {self.abs_tol}')


@dataclass(frozen=True)
class PeriodEstimate:
    """
    A period value and where it came from

    Attributes
    ----------
    value : float
        The period
    method : PeriodMethod
        The engine that produced the value
    err_estimate : float
        Estimated absolute numerical error. Heuristic, not a rigorous bound.
    """
    value: float
    method: PeriodMethod
    err_estimate: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.value) and self.value > 0):
            raise InvalidParameters(f'period must be positive and finite, got {self.value}')
        if not self.err_estimate >= 0:
            raise InvalidParameters(f'err_estimate must be non-negative, got {self.err_estimate}')


def radicand_g(osc: Oscillation, y):
    """
    g(y) = 1/L0 - 2/(sqrt(L^2 + y^2) + sqrt(L^2 + y0^2)), for 0 <= y <= y0.

    Evaluated as ((s - L0) + (z0 - L0)) / (L0 (s + z0)) with s = sqrt(L^2 + y^2), which avoids
    subtracting two nearly equal reciprocals when L is close to L0.

    Examples
    --------
    >>> from stretched_string.model import StringParams
    >>> osc = Oscillation(StringParams(L0=1.0, L=1.25, sigma=1.0, m=1.0), y0=0.5)
    >>> round(float(radicand_g(osc, 0.0)), 7)
    0.2296704
    """
    params = osc.params
    s = np.hypot(params.L, y)
    z0 = osc.z0
    return ((s - params.L0) + (z0 - params.L0)) / (params.L0 * (s + z0))


def speed(osc: Oscillation, y):
    """
    |dy/dt| = sqrt((2 sigma/m) (y0^2 - y^2) g(y)) at displacement y.
    Zero at the turning points y = +-y0 and largest at y = 0.

    Raises
    ------
    DomainError
        If |y| > y0
    """
    y = np.asarray(y, dtype=float)
    if np.any(np.abs(y) > osc.y0):
        raise DomainError(f'speed is defined for |y| <= y0 = {osc.y0}')
    params = osc.params
    y_abs = np.abs(y)
    amplitude_term = (osc.y0 - y_abs) * (osc.y0 + y_abs)
    result = np.sqrt((2.0 * params.sigma / params.m) * amplitude_term * radicand_g(osc, y_abs))
    return result[()] if result.ndim == 0 else result


def theta_integrand(osc: Oscillation, theta):
    """
    1/sqrt(g(y0 sin(theta))), the integrand of the period integral after y = y0 sin(theta)
    """
    return 1.0 / np.sqrt(radicand_g(osc, osc.y0 * np.sin(theta)))


def direct_integrand(osc: Oscillation, y):
    """
    1/(sqrt(y0^2 - y^2) sqrt(g(y))), the untransformed integrand (singular at y = y0)
    """
    amplitude_term = (osc.y0 - y) * (osc.y0 + y)
    return 1.0 / (np.sqrt(amplitude_term) * np.sqrt(radicand_g(osc, y)))


def _prefactor(osc: Oscillation) -> float:
    return math.sqrt(osc.params.m / (2.0 * osc.params.sigma))


def _integrate(func, lower: float, upper: float, cfg: QuadratureConfig) -> tuple[float, float]:
    """
    Runs scipy.integrate.quad and converts a non-converged run into ConvergenceFailure
    """
    if upper == lower:
        return 0.0, 0.0
    crude = 0.5 * (upper - lower) * (float(func(lower)) + float(func(upper)))
    abs_tol = cfg.abs_tol if cfg.abs_tol is not None else cfg.rel_tol * abs(crude)

    result = integrate.quad(func, lower, upper, epsabs=abs_tol, epsrel=cfg.rel_tol,
                            limit=cfg.max_refinements, full_output=1)
    # quad appends a message to the tuple only when QUADPACK reports a problem
    if len(result) > 3:
        raise ConvergenceFailure(f'quadrature did not reach rel_tol={cfg.rel_tol} '
                                 f'within {cfg.max_refinements} subintervals: {result[3]}')
    value, abserr, info = result
    logger.debug('quad on [%g, %g]: value=%.17g abserr=%.3g neval=%d subintervals=%d',
                 lower, upper, value, abserr, info['neval'], info['last'])
    return value, abserr


def exact_period(osc: Oscillation, cfg: QuadratureConfig | None = None) -> PeriodEstimate:
    """
    The exact period, 4 sqrt(m/(2 sigma)) * int_0^(pi/2) d(theta) / sqrt(g(y0 sin(theta))).

    Amplitudes below the degeneracy threshold (y0 < 1e-9 L) return Rayleigh's period with a zero
    error estimate: the integrand is constant to machine precision there.

    Parameters
    ----------
    osc : Oscillation
        The problem instance
    cfg : QuadratureConfig, optional
        Engine settings. Defaults to QuadratureConfig().

    Returns
    -------
    PeriodEstimate
        The period tagged PeriodMethod.QUADRATURE, with the engine's error estimate

    Raises
    ------
    ConvergenceFailure
        If the adaptive scheme cannot meet rel_tol within max_refinements subintervals

    Examples
    --------
    >>> from stretched_string.model import StringParams
    >>> osc = Oscillation(StringParams(L0=1.0, L=1.25, sigma=1.0, m=1.0), y0=0.5)
    >>> 8.39625 < exact_period(osc).value < 9.93459
    True
    """
    cfg = cfg or QuadratureConfig()
    if osc.is_degenerate(DEGENERACY_THRESHOLD):
        return PeriodEstimate(rayleigh_period(osc.params), PeriodMethod.QUADRATURE, 0.0)

    integral, abserr = _integrate(lambda theta: theta_integrand(osc, theta), 0.0, 0.5 * math.pi, cfg)
    prefactor = 4.0 * _prefactor(osc)
    return PeriodEstimate(prefactor * integral, PeriodMethod.QUADRATURE, prefactor * abserr)


def time_from_release(osc: Oscillation, y: float, cfg: QuadratureConfig | None = None) -> float:
    """
    Time the mass needs to move from y0 down to y (0 <= y <= y0) in the first quarter oscillation,
    sqrt(m/(2 sigma)) * int_(arcsin(y/y0))^(pi/2) d(theta) / sqrt(g(y0 sin(theta))).

    time_from_release(osc, 0) is a quarter of the exact period.

    Raises
    ------
    DomainError
        If y is outside [0, y0]
    """
    cfg = cfg or QuadratureConfig()
    if not 0.0 <= y <= osc.y0:
        raise DomainError(f'time_from_release is defined for 0 <= y <= y0 = {osc.y0}, got {y}')
    if osc.is_degenerate(DEGENERACY_THRESHOLD):
        phase = 0.5 * math.pi if osc.y0 == 0 else math.acos(y / osc.y0)
        return rayleigh_period(osc.params) * phase / (2.0 * math.pi)

    lower = math.asin(min(1.0, y / osc.y0))
    integral, _ = _integrate(lambda theta: theta_integrand(osc, theta), lower, 0.5 * math.pi, cfg)
    return _prefactor(osc) * integral


def simpson_period(osc: Oscillation, panels: int) -> float:
    """
    Composite Simpson rule with a fixed, even number of panels on the theta form
    """
    if panels < 2 or panels % 2:
        raise InvalidParameters(f'panels must be a positive even number, got {panels}')
    theta = np.linspace(0.0, 0.5 * math.pi, panels + 1)
    integral = integrate.simpson(theta_integrand(osc, theta), x=theta)
    return 4.0 * _prefactor(osc) * float(integral)


def richardson_simpson_period(osc: Oscillation, panels: int = 2 ** 20) -> float:
    """
    Richardson extrapolation of simpson_period from panels/2 and panels panels (h^4 error term)
    """
    fine = simpson_period(osc, panels)
    coarse = simpson_period(osc, panels // 2)
    return fine + (fine - coarse) / 15.0


def truncated_direct_period(osc: Oscillation, fraction: float, max_refinements: int = 500,
                            rel_tol: float = 1e-11) -> float:
    """
    4 sqrt(m/(2 sigma)) * int_0^(fraction * y0) of the untransformed integrand.
    Tends to exact_period as fraction tends to 1.
    """
    if not 0.0 < fraction < 1.0:
        raise InvalidParameters(f'fraction must lie in (0, 1), got {fraction}')
    cfg = QuadratureConfig(rel_tol=rel_tol, max_refinements=max_refinements)
    integral, _ = _integrate(lambda y: direct_integrand(osc, y), 0.0, fraction * osc.y0, cfg)
    return 4.0 * _prefactor(osc) * integral
