import dataclasses
import math

import pytest
from hypothesis import given, settings, strategies as st

from stretched_string.analysis.sweep import evaluate_row
from stretched_string.bounds import (
    PeriodBounds,
    check_sandwich,
    lower_bound,
    lower_bound_chain,
    lower_bound_corrected,
    lower_bound_printed,
    period_bounds,
    relative_error,
    relative_error_bounds,
    upper_bound,
)
from stretched_string.constants.methods import BoundVariant, PeriodMethod
from stretched_string.model import Oscillation, StringParams, rayleigh_period
from stretched_string.period import PeriodEstimate
from stretched_string.period.quadrature import exact_period

l_ratios = st.floats(min_value=1.001, max_value=10.0)
y0_fractions = st.floats(min_value=1e-3, max_value=3.0)
sigmas = st.floats(min_value=1e-2, max_value=1e2)


def test_upper_bound_is_rayleigh(reference_params):
    assert upper_bound(reference_params) == rayleigh_period(reference_params)
    assert upper_bound(reference_params) == pytest.approx(9.9345883, abs=1e-7)


def test_reference_lower_bounds(reference_osc):
    assert lower_bound_corrected(reference_osc) == pytest.approx(8.3962595, abs=1e-7)
    assert lower_bound_printed(reference_osc) == pytest.approx(8.1115562, abs=1e-7)
    assert lower_bound(reference_osc) == lower_bound_corrected(reference_osc)
    assert lower_bound(reference_osc, BoundVariant.PRINTED) == lower_bound_printed(reference_osc)
    assert lower_bound(reference_osc, 'printed') == lower_bound_printed(reference_osc)


def test_bounds_meet_at_zero_amplitude(reference_params):
    osc = Oscillation(reference_params, 0.0)
    upper = upper_bound(reference_params)
    assert lower_bound_corrected(osc) == upper
    assert lower_bound_printed(osc) == upper
    assert relative_error_bounds(osc) == (0.0, 0.0)


def test_reference_relative_error_bounds(reference_osc):
    assert relative_error_bounds(reference_osc) == pytest.approx((-0.2, 0.0))
    low, high = relative_error_bounds(reference_osc, BoundVariant.PRINTED)
    assert low == pytest.approx(-0.25)
    assert high == 0.0


def test_relative_error_of_rayleigh_is_zero(reference_params):
    assert relative_error(rayleigh_period(reference_params), reference_params) == 0.0


def test_period_bounds(reference_osc):
    bounds = period_bounds(reference_osc)
    assert isinstance(bounds, PeriodBounds)
    assert bounds.lower_corrected <= bounds.lower_chain <= bounds.upper
    assert {field.name for field in dataclasses.fields(bounds)} == {
        'upper', 'lower_corrected', 'lower_printed', 'lower_chain',
        'rel_error_bound_corrected', 'rel_error_bound_printed',
    }


def test_reference_sandwich(reference_osc):
    report = check_sandwich(reference_osc, exact_period(reference_osc))
    assert report.passed
    assert report.strict_upper_ok is True
    assert report.describe().startswith('pass')


def test_sandwich_rejects_period_above_upper(reference_osc):
    too_long = PeriodEstimate(1.01 * upper_bound(reference_osc.params), PeriodMethod.QUADRATURE)
    report = check_sandwich(reference_osc, too_long)
    assert not report.passed
    assert not report.upper_ok
    assert report.describe().startswith('FAIL')


def test_sandwich_rejects_period_below_lower(reference_osc):
    too_short = PeriodEstimate(0.99 * lower_bound_corrected(reference_osc), PeriodMethod.QUADRATURE)
    assert not check_sandwich(reference_osc, too_short).lower_ok


def test_error_estimate_widens_slack(reference_osc):
    value = 1.001 * upper_bound(reference_osc.params)
    report = check_sandwich(reference_osc, PeriodEstimate(value, PeriodMethod.ODE_SIM, 0.02))
    assert report.upper_ok
    assert report.strict_upper_ok is False
    assert not report.passed


def test_degenerate_amplitude_skips_strict_check(reference_params):
    osc = Oscillation(reference_params, 0.0)
    report = check_sandwich(osc, exact_period(osc))
    assert report.strict_upper_ok is None
    assert report.passed


def test_tiny_amplitude_passes_without_strict_check(reference_params):
    osc = Oscillation(reference_params, 1e-8 * reference_params.L)
    report = check_sandwich(osc, exact_period(osc))
    assert report.strict_upper_ok is None
    assert report.bounds_ok
    assert report.passed
    assert evaluate_row(osc).passed


@settings(max_examples=50, deadline=None)
@given(l_ratios, y0_fractions, sigmas)
def test_bounds_hold(ratio, fraction, sigma):
    params = StringParams(L0=1.0, L=ratio, sigma=sigma, m=1.0)
    osc = Oscillation(params, fraction * ratio)
    period = exact_period(osc)
    assert check_sandwich(osc, period).passed
    assert lower_bound_chain(osc) <= period.value * (1 + 1e-9)
    assert lower_bound_corrected(osc) <= lower_bound_chain(osc) * (1 + 1e-12)
    low, high = relative_error_bounds(osc)
    r = relative_error(period.value, params)
    assert low - 1e-9 <= r <= high + 1e-9


def test_relative_error_bracket_widens_with_amplitude(reference_params):
    lows = [relative_error_bounds(Oscillation(reference_params, y0))[0] for y0 in (0.1, 0.2, 0.4, 0.8)]
    assert lows == sorted(lows, reverse=True)


def test_bounds_coalesce_at_small_amplitude(reference_params):
    osc = Oscillation(reference_params, 1e-4 * reference_params.L0)
    gap = 1 - lower_bound_corrected(osc) / upper_bound(reference_params)
    assert 0 < gap < 1e-8


def test_printed_and_corrected_agree_for_unit_tension_length():
    # With m = 1 and L = 1 the two expressions coincide
    params = StringParams(L0=0.5, L=1.0, sigma=1.0, m=1.0)
    osc = Oscillation(params, 0.3)
    assert lower_bound_printed(osc) == pytest.approx(lower_bound_corrected(osc), rel=1e-15)
    assert math.isfinite(lower_bound_printed(osc))
