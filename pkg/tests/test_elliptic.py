import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from grids import GRID, grid_oscillation
from stretched_string.constants.methods import PeriodMethod
from stretched_string.model import Oscillation, StringParams, rayleigh_period
from stretched_string.period.elliptic import (
    is_standard_ordering,
    numeric_quartic_roots,
    period_elliptic,
    printed_quartic_coefficients,
    quartic_coefficients,
    quartic_roots,
    to_z_space,
)
from stretched_string.period.quadrature import exact_period
from stretched_string.utils.errors import DegenerateAmplitude, NonstandardOrdering


def test_reference_roots(reference_osc):
    roots = quartic_roots(reference_osc)
    np.testing.assert_allclose(roots.roots, [-1.25, 0.6537088, 1.25, 1.3462912], atol=1e-7)
    assert roots.leading == -0.5
    assert sum(roots.roots) == pytest.approx(2.0 * reference_osc.params.L0, abs=1e-12)


def test_closed_form_roots_match_numeric(reference_osc):
    np.testing.assert_allclose(numeric_quartic_roots(reference_osc), quartic_roots(reference_osc).roots,
                               rtol=0.0, atol=1e-12 * reference_osc.params.L)


@settings(max_examples=100)
@given(st.floats(min_value=1.01, max_value=10.0), st.floats(min_value=0.05, max_value=3.0))
def test_factored_and_expanded_quartic_agree(ratio, fraction):
    osc = Oscillation(StringParams(L0=1.0, L=ratio, sigma=1.0, m=1.0), fraction * ratio)
    coefficients = quartic_coefficients(osc)
    z = np.linspace(-osc.z0, osc.z0, 9)
    magnitude = np.polyval(np.abs(coefficients), np.abs(z))
    np.testing.assert_array_less(np.abs(np.polyval(coefficients, z) - quartic_roots(osc).evaluate(z)),
                                 1e-12 * magnitude + 1e-300)
    assert coefficients[1] == 1.0


def test_quartic_vanishes_at_turning_point(reference_osc):
    roots = quartic_roots(reference_osc)
    assert roots.evaluate(reference_osc.z0) == 0.0
    assert roots.evaluate(reference_osc.params.L) == 0.0
    # Positive between the two largest roots, where the period integral lives
    assert roots.evaluate(0.5 * (reference_osc.params.L + reference_osc.z0)) > 0


def test_printed_coefficients_differ(reference_osc):
    derived = quartic_coefficients(reference_osc)
    printed = printed_quartic_coefficients(reference_osc)
    np.testing.assert_array_equal(printed[[0, 1, 3]], derived[[0, 1, 3]])
    assert printed[2] != pytest.approx(derived[2])
    assert printed[4] != pytest.approx(derived[4])


def test_to_z_space(reference_osc):
    assert to_z_space(reference_osc) == (1.25, reference_osc.z0)
    with pytest.raises(DegenerateAmplitude):
        to_z_space(reference_osc.with_y0(0.0))


def test_reference_period(reference_osc, reference_period):
    estimate = period_elliptic(reference_osc)
    assert estimate.method is PeriodMethod.ELLIPTIC
    assert estimate.value == pytest.approx(reference_period, rel=1e-10)


@pytest.mark.parametrize('ratio, fraction, sigma', GRID)
def test_agrees_with_quadrature(ratio, fraction, sigma):
    osc = grid_oscillation(ratio, fraction, sigma)
    assert period_elliptic(osc).value == pytest.approx(exact_period(osc).value, rel=1e-9)


def test_small_amplitude_limit(reference_params):
    osc = Oscillation(reference_params, 1e-6 * reference_params.L)
    assert period_elliptic(osc).value == pytest.approx(rayleigh_period(reference_params), rel=1e-11)


def test_nonstandard_ordering_falls_back(reference_params):
    osc = Oscillation(reference_params, 5.0)
    assert not is_standard_ordering(osc)
    estimate = period_elliptic(osc)
    assert estimate.method is PeriodMethod.ELLIPTIC_FALLBACK
    assert estimate.value == exact_period(osc).value
    with pytest.raises(NonstandardOrdering):
        period_elliptic(osc, fallback=False)


def test_degenerate_amplitude_falls_back(reference_params):
    osc = Oscillation(reference_params, 0.0)
    estimate = period_elliptic(osc)
    assert estimate.method is PeriodMethod.ELLIPTIC_FALLBACK
    assert estimate.value == rayleigh_period(reference_params)
    with pytest.raises(DegenerateAmplitude):
        period_elliptic(osc, fallback=False)


def test_standard_ordering_boundary(reference_params):
    # z0 = 2 L0 + L exactly, where 2 L0 - z0 meets -L
    y0 = np.sqrt((2.0 + 1.25) ** 2 - 1.25 ** 2)
    assert is_standard_ordering(Oscillation(reference_params, 0.99 * y0))
    assert not is_standard_ordering(Oscillation(reference_params, 1.01 * y0))
