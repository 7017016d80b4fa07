"""
This module contains the randomized invariant suite run by the verify command.

Parameter sets are drawn log-uniformly with L0 = 1 and m = 1:
L/L0 in [1.01, 10], y0/L in [1e-4, 3], sigma/m in [1e-2, 1e2].
The same seed always produces the same parameter sets and the same report.

Classes
-------
CheckResult :
    Outcome of one named check over its cases

VerificationReport :
    All check results of one run

Functions
---------
sample_oscillations :
    The random parameter sets of a run

run_verification :
    Runs every check and returns the report
"""
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from ..bounds import (
    check_sandwich,
    lower_bound_chain,
    lower_bound_corrected,
    relative_error,
    relative_error_bounds,
    upper_bound,
)
from ..constants.defaults import (
    BOUND_REL_SLACK,
    CONVERGENCE_SLOPE,
    CONVERGENCE_SLOPE_TOL,
    ELLIPTIC_AGREEMENT,
    REFERENCE_PARAMS,
)
from ..model.physics import rayleigh_period
from ..model.string_params import Oscillation, StringParams
from ..period import PeriodEstimate, exact_period, period_elliptic
from ..period.carlson import elliprc, elliprf, elliprj
from ..period.elliptic import numeric_quartic_roots, quartic_coefficients, quartic_roots
from ..utils.errors import InvalidParameters
from .convergence import convergence_study

logger = logging.getLogger(__name__)

L_RATIO_RANGE = (1.01, 10.0)
Y0_FRACTION_RANGE = (1e-4, 3.0)
SIGMA_OVER_M_RANGE = (1e-2, 1e2)

# Cases of the cheaper algebraic checks
QUARTIC_CASES = 100
CARLSON_CASES = 100
CARLSON_AGREEMENT = 1e-12
QUARTIC_AGREEMENT = 1e-12

# Amplitude of the limit checks, in units of the reference L0
COALESCENCE_Y0 = 1e-4
COALESCENCE_GAP = 1e-8
RAYLEIGH_LIMIT_Y0_FRACTION = 1e-8
RAYLEIGH_LIMIT_AGREEMENT = 1e-12

# Failures listed per check in the report
MAX_REPORTED = 5


@dataclass
class CheckResult:
    """
    Attributes
    ----------
    name : str
        What was checked
    n_checked : int
        Number of cases
    failures : list of str
        One description per failed case
    """
    name: str
    n_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, detail: str) -> None:
        self.n_checked += 1
        if not ok:
            self.failures.append(detail)

    def describe(self) -> list[str]:
        status = 'ok' if self.passed else 'FAILED'
        lines = [f'{self.name}: {status} ({self.n_checked - len(self.failures)}/{self.n_checked})']
        lines.extend(f'    {failure}' for failure in self.failures[:MAX_REPORTED])
        if len(self.failures) > MAX_REPORTED:
            lines.append(f'    ... {len(self.failures) - MAX_REPORTED} more')
        return lines


@dataclass
class VerificationReport:
    seed: int
    samples: int
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def describe(self) -> list[str]:
        lines = [f'Invariant suite: seed {self.seed}, {self.samples} samples']
        for check in self.checks:
            lines.extend(check.describe())
        lines.append('All invariants hold' if self.passed else 'Invariant violations found')
        return lines


def _log_uniform(rng: np.random.Generator, bounds: tuple[float, float], size: int) -> np.ndarray:
    low, high = bounds
    return np.exp(rng.uniform(math.log(low), math.log(high), size))


def _seed_sequences(seed: int) -> tuple[np.random.SeedSequence, np.random.SeedSequence]:
    sample_seq, carlson_seq = np.random.SeedSequence(seed).spawn(2)
    return sample_seq, carlson_seq


def sample_oscillations(samples: int, seed: int) -> list[Oscillation]:
    """
    The random parameter sets of a run; identical for identical (samples, seed)

    Raises
    ------
    InvalidParameters
        If samples < 1
    """
    if samples < 1:
        raise InvalidParameters(f'samples must be at least 1, got {samples}')
    rng = np.random.default_rng(_seed_sequences(seed)[0])
    ratios = _log_uniform(rng, L_RATIO_RANGE, samples)
    fractions = _log_uniform(rng, Y0_FRACTION_RANGE, samples)
    sigmas = _log_uniform(rng, SIGMA_OVER_M_RANGE, samples)
    return [Oscillation(StringParams(L0=1.0, L=float(ratio), sigma=float(sigma), m=1.0), float(fraction * ratio))
            for ratio, fraction, sigma in zip(ratios, fractions, sigmas)]


def _check_bounds(oscillations: list[Oscillation], periods: list[PeriodEstimate]) -> list[CheckResult]:
    sandwich = CheckResult('sandwich lower_corrected <= P <= upper')
    strict = CheckResult('strict upper P < upper where the gap exceeds the slack')
    chain = CheckResult('lower_corrected <= lower_chain <= P')
    bracket = CheckResult('relative error bracket R_bound <= R <= 0')
    for osc, p in zip(oscillations, periods):
        report = check_sandwich(osc, p)
        sandwich.record(report.bounds_ok, f'{osc!r}: {report.describe()}')
        if report.strict_upper_ok is not None:
            strict.record(report.strict_upper_ok, f'{osc!r}: P={p.value!r} upper={report.upper!r}')

        lower, middle = lower_bound_corrected(osc), lower_bound_chain(osc)
        chain.record(lower <= middle + report.slack and middle <= p.value + report.slack,
                     f'{osc!r}: {lower!r} <= {middle!r} <= {p.value!r}')

        low, high = relative_error_bounds(osc)
        r = relative_error(p.value, osc.params)
        bracket.record(low - BOUND_REL_SLACK <= r <= high + BOUND_REL_SLACK, f'{osc!r}: R={r!r} low={low!r}')
    return [sandwich, strict, chain, bracket]


def _check_elliptic(oscillations: list[Oscillation], periods: list[PeriodEstimate]) -> CheckResult:
    result = CheckResult(f'elliptic agrees with quadrature to {ELLIPTIC_AGREEMENT:g}')
    for osc, p in zip(oscillations, periods):
        elliptic = period_elliptic(osc)
        gap = abs(elliptic.value - p.value) / p.value
        result.record(gap <= ELLIPTIC_AGREEMENT, f'{osc!r}: {elliptic.method.value} {elliptic.value!r} '
                                                 f'vs quadrature {p.value!r} (rel {gap:.3g})')
    return result


def _root_tolerance(coefficients: np.ndarray, roots) -> np.ndarray:
    # First-order perturbation bound of each root under coefficient rounding
    degree = len(coefficients) - 1
    tolerances = []
    for i, root in enumerate(roots):
        others = [r for j, r in enumerate(roots) if j != i]
        derivative = abs(coefficients[0] * np.prod([root - r for r in others]))
        magnitude = sum(abs(c) * abs(root) ** (degree - k) for k, c in enumerate(coefficients))
        tolerances.append(64.0 * np.finfo(float).eps * magnitude / derivative if derivative else np.inf)
    return np.array(tolerances)


def _check_quartic(oscillations: list[Oscillation]) -> CheckResult:
    result = CheckResult('closed-form quartic roots match the numeric roots, root sum = 2 L0')
    for osc in oscillations[:QUARTIC_CASES]:
        closed = quartic_roots(osc)
        numeric = numeric_quartic_roots(osc)
        coefficients = quartic_coefficients(osc)
        scale = osc.params.L
        tolerance = np.maximum(QUARTIC_AGREEMENT * scale, _root_tolerance(coefficients, closed.roots))
        roots_ok = bool(np.all(np.abs(numeric - np.array(closed.roots)) <= tolerance))
        sum_ok = abs(sum(closed.roots) - 2.0 * osc.params.L0) <= QUARTIC_AGREEMENT * osc.z0

        nodes = np.linspace(-osc.z0, osc.z0, 5)
        expanded = np.polyval(coefficients, nodes)
        factored = closed.evaluate(nodes)
        magnitude = np.polyval(np.abs(coefficients), np.abs(nodes))
        poly_ok = bool(np.all(np.abs(expanded - factored) <= 1e-12 * magnitude))
        result.record(roots_ok and sum_ok and poly_ok,
                      f'{osc!r}: closed {closed.roots} numeric {numeric.tolist()}')
    return result


def _check_carlson(seed_sequence: np.random.SeedSequence) -> CheckResult:
    result = CheckResult('Carlson homogeneity R_F(lx) = l^-1/2 R_F(x), R_J(lx) = l^-3/2 R_J(x); '
                         'R_C(x, y) = R_F(x, y, y)')
    rng = np.random.default_rng(seed_sequence)
    for i in range(CARLSON_CASES):
        x, y, z, p = _log_uniform(rng, (1e-3, 1e3), 4)
        scale = float(_log_uniform(rng, (1e-3, 1e3), 1)[0])
        if i % 2:
            x = 0.0
        rf, rf_scaled = elliprf(x, y, z), elliprf(scale * x, scale * y, scale * z)
        rj, rj_scaled = elliprj(x, y, z, p), elliprj(scale * x, scale * y, scale * z, scale * p)
        rf_gap = abs(rf_scaled * math.sqrt(scale) - rf) / rf
        rj_gap = abs(rj_scaled * scale ** 1.5 - rj) / rj
        rc = elliprc(x, y)
        rc_gap = abs(rc - elliprf(x, y, y)) / rc
        result.record(max(rf_gap, rj_gap, rc_gap) <= CARLSON_AGREEMENT,
                      f'({x}, {y}, {z}, {p}) scale {scale}: R_F rel {rf_gap:.3g}, R_J rel {rj_gap:.3g}, '
                      f'R_C rel {rc_gap:.3g}')
    return result


def _check_limits(params: StringParams) -> CheckResult:
    result = CheckResult('small-amplitude limits')
    osc = Oscillation(params, COALESCENCE_Y0 * params.L0)
    gap = 1.0 - lower_bound_corrected(osc) / upper_bound(params)
    result.record(0.0 <= gap < COALESCENCE_GAP, f'1 - lower/upper at y0={osc.y0!r} is {gap:.3g}')

    tiny = Oscillation(params, RAYLEIGH_LIMIT_Y0_FRACTION * params.L)
    period = exact_period(tiny).value
    gap = abs(period - rayleigh_period(params)) / rayleigh_period(params)
    result.record(gap < RAYLEIGH_LIMIT_AGREEMENT, f'P at y0={tiny.y0!r} differs from Rayleigh by {gap:.3g}')
    return result


def _check_slope(params: StringParams) -> CheckResult:
    result = CheckResult(f'log-log slope of |R| is {CONVERGENCE_SLOPE} +- {CONVERGENCE_SLOPE_TOL}')
    rows, slope = convergence_study(params)
    result.record(abs(slope - CONVERGENCE_SLOPE) <= CONVERGENCE_SLOPE_TOL, f'slope {slope:.6f}')
    for row in rows:
        result.record(row.R_bound_corrected - BOUND_REL_SLACK <= row.R <= BOUND_REL_SLACK,
                      f'y0={row.y0!r}: R={row.R!r} below {row.R_bound_corrected!r}')
    return result


def run_verification(samples: int, seed: int) -> VerificationReport:
    '''
    Runs the invariant suite

    Parameters
    ----------
    samples : int
        Number of random parameter sets for the bound and cross-method checks
    seed : int
        Seed of all random draws

    Returns
    -------
    VerificationReport
        One CheckResult per invariant; report.passed is True when none failed

    Raises
    ------
    InvalidParameters
        If samples < 1
    NumericalFailure
        If an engine fails on a sampled parameter set
    '''
    oscillations = sample_oscillations(samples, seed)
    _, carlson_seq = _seed_sequences(seed)
    logger.info('Running the invariant suite on %d parameter sets (seed %d)', samples, seed)

    periods = [exact_period(osc) for osc in oscillations]
    reference = StringParams(**REFERENCE_PARAMS)

    report = VerificationReport(seed=seed, samples=samples)
    report.checks.extend(_check_bounds(oscillations, periods))
    report.checks.append(_check_elliptic(oscillations, periods))
    report.checks.append(_check_quartic(oscillations))
    report.checks.append(_check_carlson(carlson_seq))
    report.checks.append(_check_limits(reference))
    report.checks.append(_check_slope(reference))
    return report
