"""
This module contains Carlson's symmetric elliptic integrals for real, non-negative arguments,
computed by the duplication algorithm.

    R_F(x, y, z)    = 1/2 int_0^inf dt / sqrt((t+x)(t+y)(t+z))
    R_J(x, y, z, p) = 3/2 int_0^inf dt / ((t+p) sqrt((t+x)(t+y)(t+z)))
    R_C(x, y)       = R_F(x, y, y)

Each duplication step replaces the arguments by (arg + lambda)/4; once the arguments agree to the
requested relative tolerance, a fifth-order Taylor expansion about their mean finishes the job.

Functions
---------
elliprc, elliprf, elliprj :
    The integrals themselves

complete_first_kind, complete_third_kind :
    K(k) and Pi(n, k) in terms of R_F and R_J (parameter convention: m = k^2)
"""
import math

from ..constants.defaults import CARLSON_MAX_ITERATIONS, CARLSON_REL_TOL
from ..utils.errors import ConvergenceFailure, DomainError


def elliprc(x: float, y: float) -> float:
    """
    R_C(x, y) for x >= 0, y > 0, in closed form: atan for x < y, a logarithm for x > y

    Examples
    --------
    >>> round(elliprc(0.0, 1.0), 12) == round(math.pi / 2, 12)
    True
    """
    if x < 0 or not y > 0:
        raise DomainError(f'elliprc needs x >= 0 and y > 0, got x={x}, y={y}')
    if x == y:
        return 1.0 / math.sqrt(x)
    if x == 0:
        return 0.5 * math.pi / math.sqrt(y)
    if x < y:
        root = math.sqrt(y - x)
        return math.atan(root / math.sqrt(x)) / root
    # log((sqrt(x) + sqrt(x - y)) / sqrt(y)), written with log1p so x close to y keeps its digits
    root = math.sqrt(x - y)
    excess = (x - y) / (math.sqrt(x) + math.sqrt(y)) + root
    return math.log1p(excess / math.sqrt(y)) / root


def _check_arguments(name: str, *args: float):
    if any(a < 0 or not math.isfinite(a) for a in args):
        raise DomainError(f'{name} needs finite non-negative arguments, got {args}')


def elliprf(x: float, y: float, z: float, rel_tol: float = CARLSON_REL_TOL,
            max_iterations: int = CARLSON_MAX_ITERATIONS) -> float:
    """
    Carlson's R_F(x, y, z)

    Parameters
    ----------
    x, y, z : float
        Non-negative arguments, at most one of them zero
    rel_tol : float
        Relative tolerance of the duplication stopping rule
    max_iterations : int
        Cap on the number of duplication steps

    Returns
    -------
    float
        The integral

    Raises
    ------
    DomainError
        If an argument is negative, or more than one argument is zero
    ConvergenceFailure
        If the arguments did not coalesce within max_iterations steps

    Examples
    --------
    >>> round(elliprf(0.0, 1.0, 1.0), 12) == round(math.pi / 2, 12)
    True
    """
    _check_arguments('elliprf', x, y, z)
    if (x == 0) + (y == 0) + (z == 0) > 1:
        raise DomainError('elliprf needs at most one zero argument')

    xm, ym, zm = x, y, z
    a0 = am = (x + y + z) / 3.0
    q = (3.0 * rel_tol) ** (-1.0 / 6.0) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    pow4 = 1.0
    for _ in range(max_iterations):
        if pow4 * q < abs(am):
            break
        sx, sy, sz = math.sqrt(xm), math.sqrt(ym), math.sqrt(zm)
        lam = sx * sy + sx * sz + sy * sz
        xm, ym, zm = 0.25 * (xm + lam), 0.25 * (ym + lam), 0.25 * (zm + lam)
        am = 0.25 * (am + lam)
        pow4 *= 0.25
    else:
        raise ConvergenceFailure(f'elliprf did not converge in {max_iterations} iterations '
                                 f'for ({x}, {y}, {z})')

    t = pow4 / am
    dx = (a0 - x) * t
    dy = (a0 - y) * t
    dz = -dx - dy
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / math.sqrt(am)


def elliprj(x: float, y: float, z: float, p: float, rel_tol: float = CARLSON_REL_TOL,
            max_iterations: int = CARLSON_MAX_ITERATIONS) -> float:
    """
    Carlson's R_J(x, y, z, p) for x, y, z >= 0 (at most one zero) and p > 0

    Raises
    ------
    DomainError
        If the arguments are outside the domain above
    ConvergenceFailure
        If the arguments did not coalesce within max_iterations steps
    """
    _check_arguments('elliprj', x, y, z, p)
    if not p > 0:
        raise DomainError(f'elliprj needs p > 0, got p={p}')
    if (x == 0) + (y == 0) + (z == 0) > 1:
        raise DomainError('elliprj needs at most one zero among x, y, z')

    xm, ym, zm, pm = x, y, z, p
    a0 = am = (x + y + z + 2.0 * p) / 5.0
    delta = (p - x) * (p - y) * (p - z)
    q = (0.25 * rel_tol) ** (-1.0 / 6.0) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z), abs(a0 - p))
    pow4 = 1.0
    tail = 0.0
    for _ in range(max_iterations):
        if pow4 * q < abs(am):
            break
        sx, sy, sz, sp = math.sqrt(xm), math.sqrt(ym), math.sqrt(zm), math.sqrt(pm)
        lam = sx * sy + sx * sz + sy * sz
        dm = (sp + sx) * (sp + sy) * (sp + sz)
        em = delta * pow4 ** 3 / (dm * dm)
        tail += pow4 / dm * _rc_one(em)
        xm, ym, zm, pm = 0.25 * (xm + lam), 0.25 * (ym + lam), 0.25 * (zm + lam), 0.25 * (pm + lam)
        am = 0.25 * (am + lam)
        pow4 *= 0.25
    else:
        raise ConvergenceFailure(f'elliprj did not converge in {max_iterations} iterations '
                                 f'for ({x}, {y}, {z}, {p})')

    t = pow4 / am
    dx = (a0 - x) * t
    dy = (a0 - y) * t
    dz = (a0 - z) * t
    dp = -0.5 * (dx + dy + dz)
    e2 = dx * dy + dx * dz + dy * dz - 3.0 * dp * dp
    e3 = dx * dy * dz + 2.0 * e2 * dp + 4.0 * dp ** 3
    e4 = (2.0 * dx * dy * dz + e2 * dp + 3.0 * dp ** 3) * dp
    e5 = dx * dy * dz * dp * dp
    series = (24024.0 - 5148.0 * e2 + 2457.0 * e2 * e2 + 4004.0 * e3 - 4158.0 * e2 * e3
              - 3276.0 * e4 + 2772.0 * e5) / 24024.0
    return pow4 * am ** -1.5 * series + 6.0 * tail


def _rc_one(e: float) -> float:
    # R_C(1, 1 + e) without the cancellation of acos near 1
    if e == 0:
        return 1.0
    if e > 0:
        root = math.sqrt(e)
        return math.atan(root) / root
    root = math.sqrt(-e)
    return math.atanh(root) / root


def complete_first_kind(m: float, rel_tol: float = CARLSON_REL_TOL) -> float:
    """
    K(m) = R_F(0, 1 - m, 1), for parameter m = k^2 < 1
    """
    return elliprf(0.0, 1.0 - m, 1.0, rel_tol=rel_tol)


def complete_third_kind(n: float, m: float, rel_tol: float = CARLSON_REL_TOL) -> float:
    """
    Pi(n, m) = int_0^(pi/2) d(theta) / ((1 - n sin^2) sqrt(1 - m sin^2)), for n < 1, m < 1,
    as K(m) + (n/3) R_J(0, 1 - m, 1, 1 - n)
    """
    return (complete_first_kind(m, rel_tol=rel_tol)
            + n / 3.0 * elliprj(0.0, 1.0 - m, 1.0, 1.0 - n, rel_tol=rel_tol))
