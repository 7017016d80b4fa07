"""
This module evaluates the period from its z-space form, z^2 = L^2 + y^2, z0^2 = L^2 + y0^2.

After the change of variables the period integral becomes

    P = 4 sqrt(m L0/(2 sigma)) * int_L^z0 z dz / sqrt((z0 - z)(z - L)(z - b)(z + L)),  b = 2 L0 - z0,

whose radicand is a quartic with the four real roots -L < b < L < z0. Written with the
normalization -(1/(2 L0)) * prod(z - r_i) (z^3 coefficient 1) the quartic is half of the radicand
that the substitution produces, hence the factor L0 rather than 2 L0 under the root above.

Between the two largest roots the integral reduces to complete elliptic integrals. With roots
a < b < c < d and sn^2(u) = (d - b)(z - c) / ((d - c)(z - b)):

    z = b + (c - b) / (1 - alpha^2 sn^2(u)),   alpha^2 = (d - c)/(d - b),
    int_c^d z dz / sqrt(...) = g * (b K(k) + (c - b) Pi(alpha^2, k)),
    g = 2 / sqrt((d - b)(c - a)),   k^2 = (d - c)(b - a) / ((d - b)(c - a)),

and K, Pi are evaluated through Carlson's R_F and R_J.

Classes
-------
QuarticRoots :
    The four roots (ascending) and the leading coefficient of the quartic

Functions
---------
to_z_space :
    The z-space integration interval (L, z0)

quartic_roots :
    Closed-form roots {-L, 2 L0 - z0, L, z0}

quartic_coefficients, printed_quartic_coefficients, numeric_quartic_roots :
    Expanded coefficients, the coefficients as commonly printed, and numpy.roots on the expansion

period_elliptic :
    The period from the complete elliptic integrals
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from ..constants.defaults import CARLSON_REL_TOL, DEGENERACY_THRESHOLD
from ..constants.methods import PeriodMethod
from ..model.string_params import Oscillation
from ..utils.errors import DegenerateAmplitude, NonstandardOrdering
from .carlson import complete_first_kind, complete_third_kind
from .quadrature import PeriodEstimate, QuadratureConfig, exact_period

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuarticRoots:
    """
    Roots of the quartic -(1/(2 L0)) (z - L)(z + L)(z - z0)(z - (2 L0 - z0))

    Attributes
    ----------
    roots : tuple of float
        The four real roots in ascending order
    leading : float
        Leading coefficient, -1/(2 L0)
    """
    roots: tuple[float, float, float, float]
    leading: float

    def evaluate(self, z):
        """
        leading * prod(z - r_i)
        """
        z = np.asarray(z, dtype=float)
        product = np.ones_like(z)
        for root in self.roots:
            product = product * (z - root)
        return self.leading * product


def to_z_space(osc: Oscillation) -> tuple[float, float]:
    """
    The integration interval in z space, (L, sqrt(L^2 + y0^2))

    Raises
    ------
    DegenerateAmplitude
        If y0 is below the degeneracy threshold, where the interval collapses to (L, L)
    """
    if osc.is_degenerate(DEGENERACY_THRESHOLD):
        raise DegenerateAmplitude(f'y0 = {osc.y0} is below {DEGENERACY_THRESHOLD} * L; '
                                  'the z-space interval collapses')
    return osc.params.L, osc.z0


def quartic_roots(osc: Oscillation) -> QuarticRoots:
    """
    Closed-form roots {-L, 2 L0 - z0, L, z0} of the z-space quartic, in ascending order.

    The factorization follows from writing y0^2 - y^2 = z0^2 - z^2 and
    g = (z + z0 - 2 L0) / (L0 (z + z0)) in the speed formula. The roots always include +-L, and
    2 L0 - z0 < L because z0 >= L > L0.

    Examples
    --------
    >>> from stretched_string.model import StringParams
    >>> osc = Oscillation(StringParams(L0=1.0, L=1.25, sigma=1.0, m=1.0), y0=0.5)
    >>> [round(r, 7) for r in quartic_roots(osc).roots]
    [-1.25, 0.6537088, 1.25, 1.3462912]
    """
    params = osc.params
    z0 = osc.z0
    roots = sorted((-params.L, 2.0 * params.L0 - z0, params.L, z0))
    return QuarticRoots(roots=tuple(roots), leading=-1.0 / (2.0 * params.L0))


def quartic_coefficients(osc: Oscillation) -> np.ndarray:
    """
    Coefficients, highest power first, of (1/(2 L0)) (z^2 - L^2)(z0 - z)(z + z0 - 2 L0):

        [-1/(2 L0), 1, (L^2 + z0^2)/(2 L0) - z0, -L^2, L^2 z0 - L^2 z0^2/(2 L0)]
    """
    L0, L = osc.params.L0, osc.params.L
    z0 = osc.z0
    return np.array([
        -1.0 / (2.0 * L0),
        1.0,
        (L * L + z0 * z0) / (2.0 * L0) - z0,
        -L * L,
        L * L * z0 - L * L * z0 * z0 / (2.0 * L0),
    ])


def printed_quartic_coefficients(osc: Oscillation) -> np.ndarray:
    """
    The quartic coefficients in their commonly printed form, reading the undefined lowercase "l"
    of the z^2 coefficient as L:

        [-1/(2 L0), 1, L^2/(2 L0) - z0, -L^2, L^2 z0 + L^2/(2 L0)]

    The z^2 and constant coefficients disagree with quartic_coefficients; this form is kept for
    reproduction only and is never used to compute a period.
    """
    L0, L = osc.params.L0, osc.params.L
    z0 = osc.z0
    return np.array([
        -1.0 / (2.0 * L0),
        1.0,
        L * L / (2.0 * L0) - z0,
        -L * L,
        L * L * z0 + L * L / (2.0 * L0),
    ])


def numeric_quartic_roots(osc: Oscillation) -> np.ndarray:
    """
    Roots of quartic_coefficients found by numpy.roots, sorted ascending (real parts)
    """
    return np.sort(np.real(np.roots(quartic_coefficients(osc))))


def is_standard_ordering(osc: Oscillation) -> bool:
    """
    True when z0 < 2 L0 + L, so that -L < 2 L0 - z0 and the roots keep the order the reduction uses
    """
    return osc.z0 < 2.0 * osc.params.L0 + osc.params.L


def period_elliptic(osc: Oscillation, tol: float = CARLSON_REL_TOL, fallback: bool = True,
                    quadrature_cfg: QuadratureConfig | None = None) -> PeriodEstimate:
    """
    The exact period through complete elliptic integrals of the first and third kind.

    Parameters
    ----------
    osc : Oscillation
        The problem instance
    tol : float
        Relative tolerance of each Carlson integral
    fallback : bool
        What to do outside the reduction's regime (tiny amplitude, or z0 >= 2 L0 + L).
        If True, answer with the quadrature engine and tag the result
        PeriodMethod.ELLIPTIC_FALLBACK; if False, raise.
    quadrature_cfg : QuadratureConfig, optional
        Settings of the quadrature engine used for the fallback

    Returns
    -------
    PeriodEstimate
        The period tagged PeriodMethod.ELLIPTIC, with err_estimate = 10 * tol * P

    Raises
    ------
    NonstandardOrdering
        If z0 >= 2 L0 + L and fallback is False
    DegenerateAmplitude
        If y0 is below the degeneracy threshold and fallback is False
    ConvergenceFailure
        From the Carlson iteration
    """
    if osc.is_degenerate(DEGENERACY_THRESHOLD) or not is_standard_ordering(osc):
        if not fallback:
            if not is_standard_ordering(osc):
                raise NonstandardOrdering(f'z0 = {osc.z0} >= 2 L0 + L = {2.0 * osc.params.L0 + osc.params.L}')
            to_z_space(osc)
        logger.debug('elliptic reduction not applicable to %r; falling back to quadrature', osc)
        estimate = exact_period(osc, quadrature_cfg)
        return PeriodEstimate(estimate.value, PeriodMethod.ELLIPTIC_FALLBACK, estimate.err_estimate)

    a, b, c, d = quartic_roots(osc).roots
    scale = 2.0 / math.sqrt((d - b) * (c - a))
    k2 = (d - c) * (b - a) / ((d - b) * (c - a))
    alpha2 = (d - c) / (d - b)

    first = complete_first_kind(k2, rel_tol=tol)
    third = complete_third_kind(alpha2, k2, rel_tol=tol)
    integral = scale * (b * first + (c - b) * third)

    params = osc.params
    period = 4.0 * math.sqrt(params.m * params.L0 / (2.0 * params.sigma)) * integral
    logger.debug('elliptic: k^2=%.6g alpha^2=%.6g K=%.17g Pi=%.17g P=%.17g', k2, alpha2, first, third, period)
    return PeriodEstimate(period, PeriodMethod.ELLIPTIC, 10.0 * tol * period)
