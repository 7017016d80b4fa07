"""
This module contains the a-priori bounds on the period, the bracket on the relative error of
Rayleigh's approximation, and the checker that places a computed period inside the bounds.

With the rest frequency w^2 = 2T/(mL) the bounds read

    2 pi / sqrt(w^2 + sigma y0^2/(m L0 L^2))  <=  P  <=  2 pi / w,

and the relative error R = (P - P_rayleigh) / P of Rayleigh's period satisfies

    -sigma y0^2 / (4 T L0 L)  <=  R  <=  0.

The upper bound comes from the smallest value of g on [0, y0] (at y = 0), the lower bounds from
its largest value (at y = y0), followed by sqrt(L^2 + y0^2) <= L + y0^2/(2L) and then
sqrt(L^2 + y0^2) >= L. The intermediate step is kept as lower_bound_chain.

The lower bound term and the error constant are also available as usually printed,
sigma y0^2/(L L0) and y0^2 m/(4 T L0). Those depend on the unit system and are never used in a check.
"""
import logging
import math
from dataclasses import dataclass

from ..constants.defaults import BOUND_REL_SLACK
from ..constants.methods import BoundVariant
from ..model.physics import linear_coefficient, rayleigh_period
from ..model.string_params import Oscillation, StringParams
from ..period.quadrature import PeriodEstimate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PeriodBounds:
    """
    The bounds of one Oscillation

    Attributes
    ----------
    upper : float
        Rayleigh's period
    lower_corrected : float
        The lower bound used by every check
    lower_printed : float
        The lower bound as usually printed, for reproduction
    lower_chain : float
        The sharper intermediate lower bound, lower_corrected <= lower_chain <= P
    rel_error_bound_corrected : float
        Lower limit of R, -sigma y0^2 / (4 T L0 L)
    rel_error_bound_printed : float
        Lower limit of R as usually printed, -y0^2 m / (4 T L0)
    """
    upper: float
    lower_corrected: float
    lower_printed: float
    lower_chain: float
    rel_error_bound_corrected: float
    rel_error_bound_printed: float


@dataclass(frozen=True)
class SandwichReport:
    """
    Outcome of check_sandwich. Failures are recorded here, never raised.

    Attributes
    ----------
    value, lower, upper, slack : float
        The compared quantities; slack = 1e-9 * upper + err_estimate of the period
    lower_ok : bool
        lower - slack <= value
    upper_ok : bool
        value <= upper + slack
    strict_upper_ok : bool or None
        value < upper. None when the largest possible gap below the upper bound,
        upper * |R bound|, does not exceed slack; the strict check cannot be resolved there.
    """
    value: float
    lower: float
    upper: float
    slack: float
    lower_ok: bool
    upper_ok: bool
    strict_upper_ok: bool | None

    @property
    def bounds_ok(self) -> bool:
        return self.lower_ok and self.upper_ok

    @property
    def passed(self) -> bool:
        return self.bounds_ok and self.strict_upper_ok is not False

    def describe(self) -> str:
        verdict = 'pass' if self.passed else 'FAIL'
        return (f'{verdict}: {self.lower:.7g} <= {self.value:.7g} <= {self.upper:.7g} '
                f'(slack {self.slack:.3g}, strict upper {self.strict_upper_ok})')


def upper_bound(params: StringParams) -> float:
    """
    2 pi / sqrt(2T/(mL)). The same computation as model.rayleigh_period, so the two agree exactly.
    """
    return rayleigh_period(params)


def lower_bound_corrected(osc: Oscillation) -> float:
    """
    2 pi / sqrt(2T/(mL) + sigma y0^2/(m L0 L^2)); equals upper_bound at y0 = 0

    Examples
    --------
    >>> from stretched_string.model import StringParams
    >>> osc = Oscillation(StringParams(L0=1.0, L=1.25, sigma=1.0, m=1.0), y0=0.5)
    >>> round(lower_bound_corrected(osc), 7)
    8.3962595
    """
    params = osc.params
    extra = params.sigma * osc.y0 ** 2 / (params.m * params.L0 * params.L ** 2)
    return 2.0 * math.pi / math.sqrt(linear_coefficient(params) + extra)


def lower_bound_printed(osc: Oscillation) -> float:
    """
    2 pi / sqrt(2T/(mL) + sigma y0^2/(L L0)), with all quantities taken as raw numbers.
    Not guaranteed to lie below the period.
    """
    params = osc.params
    extra = params.sigma * osc.y0 ** 2 / (params.L * params.L0)
    return 2.0 * math.pi / math.sqrt(linear_coefficient(params) + extra)


def lower_bound_chain(osc: Oscillation) -> float:
    """
    2 pi sqrt(m/(2 sigma)) / sqrt(1/L0 - 1/sqrt(L^2 + y0^2)), from the largest value of g
    """
    params = osc.params
    g_max = (osc.z0 - params.L0) / (params.L0 * osc.z0)
    return 2.0 * math.pi * math.sqrt(params.m / (2.0 * params.sigma)) / math.sqrt(g_max)


def lower_bound(osc: Oscillation, variant: BoundVariant = BoundVariant.CORRECTED) -> float:
    if BoundVariant(variant) is BoundVariant.PRINTED:
        return lower_bound_printed(osc)
    return lower_bound_corrected(osc)


def relative_error_bounds(osc: Oscillation,
                          variant: BoundVariant = BoundVariant.CORRECTED) -> tuple[float, float]:
    """
    The bracket (low, high) on R = (P - P_rayleigh) / P. high is always 0.

    The corrected low, -sigma y0^2/(4 T L0 L), follows from the corrected lower bound and
    sqrt(1 + d) - 1 <= d/2. The printed low is -y0^2 m/(4 T L0).

    Examples
    --------
    >>> from stretched_string.model import StringParams
    >>> osc = Oscillation(StringParams(L0=1.0, L=1.25, sigma=1.0, m=1.0), y0=0.5)
    >>> relative_error_bounds(osc)
    (-0.2, 0.0)
    """
    params = osc.params
    if BoundVariant(variant) is BoundVariant.PRINTED:
        low = -osc.y0 ** 2 * params.m / (4.0 * params.T * params.L0)
    else:
        low = -params.sigma * osc.y0 ** 2 / (4.0 * params.T * params.L0 * params.L)
    return low + 0.0, 0.0


def relative_error(period: float, params: StringParams) -> float:
    """
    R = (P - P_rayleigh) / P
    """
    return (period - rayleigh_period(params)) / period


def period_bounds(osc: Oscillation) -> PeriodBounds:
    return PeriodBounds(
        upper=upper_bound(osc.params),
        lower_corrected=lower_bound_corrected(osc),
        lower_printed=lower_bound_printed(osc),
        lower_chain=lower_bound_chain(osc),
        rel_error_bound_corrected=relative_error_bounds(osc, BoundVariant.CORRECTED)[0],
        rel_error_bound_printed=relative_error_bounds(osc, BoundVariant.PRINTED)[0],
    )


def check_sandwich(osc: Oscillation, p: PeriodEstimate, rel_slack: float = BOUND_REL_SLACK) -> SandwichReport:
    '''
    Checks lower_bound_corrected(osc) <= p.value <= upper_bound(osc.params)

    Parameters
    ----------
    osc : Oscillation
        The problem instance p was computed for
    p : PeriodEstimate
        A period from any engine
    rel_slack : float
        Relative slack on top of p.err_estimate, applied to both inequalities

    Returns
    -------
    SandwichReport
        Both non-strict checks, plus the strict upper check p.value < upper when the expected gap
        upper * |R bound| is larger than the slack

    Examples
    --------
    >>> from stretched_string.model import StringParams
    >>> from stretched_string.constants.methods import PeriodMethod
    >>> osc = Oscillation(StringParams(L0=1.0, L=1.25, sigma=1.0, m=1.0), y0=0.5)
    >>> check_sandwich(osc, PeriodEstimate(upper_bound(osc.params) * 1.01, PeriodMethod.QUADRATURE)).passed
    False
    '''
    upper = upper_bound(osc.params)
    lower = lower_bound_corrected(osc)
    slack = rel_slack * upper + p.err_estimate
    margin = upper * abs(relative_error_bounds(osc)[0])
    strict = p.value < upper if margin > slack else None

    report = SandwichReport(
        value=p.value,
        lower=lower,
        upper=upper,
        slack=slack,
        lower_ok=lower - slack <= p.value,
        upper_ok=p.value <= upper + slack,
        strict_upper_ok=strict,
    )
    if not report.passed:
        logger.debug('sandwich violated for %r by %s: %s', osc, p.method.value, report.describe())
    return report
