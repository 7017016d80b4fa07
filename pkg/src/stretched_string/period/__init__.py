"""
This package contains the three independent period engines.

Modules
-------
quadrature :
    Adaptive quadrature of the period integral after the substitution y = y0 sin(theta).
    Also the period-integral pieces (g, speed), the time from release and the Simpson reference.

carlson :
    Carlson's symmetric elliptic integrals R_F, R_J, R_C by the duplication algorithm,
    and the complete elliptic integrals K and Pi built from them.

elliptic :
    The z-space form of the period, its quartic, and the period from K and Pi.

odesim :
    Time integration of the equation of motion and the period measured from turning points.

Functions
---------
compute_period :
    Dispatches to one engine by PeriodMethod
"""
import logging

from ..constants.methods import PeriodMethod
from ..model.physics import rayleigh_period
from ..model.string_params import Oscillation
from ..utils.errors import InvalidParameters
from .quadrature import PeriodEstimate, QuadratureConfig, exact_period
from .elliptic import period_elliptic
from .odesim import SimConfig, period_ode

logger = logging.getLogger(__name__)

__all__ = [
    'PeriodEstimate',
    'QuadratureConfig',
    'SimConfig',
    'exact_period',
    'period_elliptic',
    'period_ode',
    'compute_period',
]


def compute_period(osc: Oscillation, method: PeriodMethod | str = PeriodMethod.QUADRATURE,
                   tol: float | None = None) -> PeriodEstimate:
    '''
    Computes the period of osc with the engine named by method

    Parameters
    ----------
    osc : Oscillation
        The problem instance
    method : PeriodMethod or str
        PeriodMethod.QUADRATURE, ELLIPTIC, ODE_SIM or RAYLEIGH_APPROX, or their values
        ('quadrature', 'elliptic', 'ode', 'rayleigh')
    tol : float, optional
        Relative tolerance handed to the engine. The engine's own default when None.

    Returns
    -------
    PeriodEstimate
        The estimate, tagged with the method that actually produced it

    Raises
    ------
    InvalidParameters
        If method is not a known method, or is ELLIPTIC_FALLBACK (a result tag, not a request)
    '''
    try:
        method = PeriodMethod(method)
    except ValueError as exc:
        raise InvalidParameters(f'unknown period method {method!r}') from exc
    logger.debug('computing %s period for %r', method.value, osc)

    match method:
        case PeriodMethod.QUADRATURE:
            cfg = QuadratureConfig() if tol is None else QuadratureConfig(rel_tol=tol)
            return exact_period(osc, cfg)
        case PeriodMethod.ELLIPTIC:
            if tol is None:
                return period_elliptic(osc)
            return period_elliptic(osc, tol=tol, quadrature_cfg=QuadratureConfig(rel_tol=tol))
        case PeriodMethod.ODE_SIM:
            cfg = SimConfig() if tol is None else SimConfig(rel_tol=tol)
            return period_ode(osc, cfg)
        case PeriodMethod.RAYLEIGH_APPROX:
            return PeriodEstimate(rayleigh_period(osc.params), PeriodMethod.RAYLEIGH_APPROX, 0.0)
        case _:
            raise InvalidParameters(f'{method.value} is a result tag and cannot be requested')
