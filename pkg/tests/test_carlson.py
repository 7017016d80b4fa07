import math

import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate, special

from stretched_string.period.carlson import (
    complete_first_kind,
    complete_third_kind,
    elliprc,
    elliprf,
    elliprj,
)
from stretched_string.utils.errors import ConvergenceFailure, DomainError

positive = st.floats(min_value=1e-3, max_value=1e3)


@settings(max_examples=100)
@given(positive, positive, positive)
def test_elliprf_matches_scipy(x, y, z):
    assert elliprf(x, y, z) == pytest.approx(special.elliprf(x, y, z), rel=1e-12)


@settings(max_examples=100)
@given(positive, positive, positive, positive)
def test_elliprj_matches_scipy(x, y, z, p):
    assert elliprj(x, y, z, p) == pytest.approx(special.elliprj(x, y, z, p), rel=1e-12)


@given(positive, positive)
def test_elliprj_with_zero_argument(y, p):
    assert elliprj(0.0, y, 1.0, p) == pytest.approx(special.elliprj(0.0, y, 1.0, p), rel=1e-12)


@given(st.floats(min_value=0.0, max_value=1e3), positive)
def test_elliprc_matches_scipy(x, y):
    assert elliprc(x, y) == pytest.approx(special.elliprc(x, y), rel=1e-13)


@pytest.mark.parametrize('x, y', [
    (93.76527321771825, 0.001),
    (1e3, 1e-3),
    (1.0 + 1e-9, 1.0),
    (2.0, 1.0),
])
def test_elliprc_above_diagonal(x, y):
    assert elliprc(x, y) == pytest.approx(special.elliprc(x, y), rel=1e-13)
    assert elliprc(x, y) == pytest.approx(elliprf(x, y, y), rel=1e-12)


@settings(max_examples=50)
@given(positive, positive, positive, positive, st.floats(min_value=1e-3, max_value=1e3))
def test_homogeneity(x, y, z, p, scale):
    assert elliprf(scale * x, scale * y, scale * z) * math.sqrt(scale) == pytest.approx(elliprf(x, y, z), rel=1e-12)
    assert elliprj(scale * x, scale * y, scale * z, scale * p) * scale ** 1.5 == \
        pytest.approx(elliprj(x, y, z, p), rel=1e-12)


def test_special_values():
    assert elliprf(0.0, 1.0, 1.0) == pytest.approx(math.pi / 2, rel=1e-14)
    assert elliprf(2.0, 2.0, 2.0) == pytest.approx(1.0 / math.sqrt(2.0), rel=1e-14)
    assert elliprj(2.0, 2.0, 2.0, 2.0) == pytest.approx(2.0 ** -1.5, rel=1e-14)
    assert elliprc(1.0, 1.0) == 1.0


@pytest.mark.parametrize('m', [0.0, 0.1, 0.5, 0.9, 0.999, 1.0 - 1e-9])
def test_complete_first_kind(m):
    assert complete_first_kind(m) == pytest.approx(special.ellipk(m), rel=1e-12)


@pytest.mark.parametrize('n, m', [(0.0, 0.5), (0.3, 0.2), (0.9, 0.5), (-2.0, 0.7), (1e-8, 1e-8)])
def test_complete_third_kind_matches_integral(n, m):
    def integrand(theta):
        s2 = math.sin(theta) ** 2
        return 1.0 / ((1.0 - n * s2) * math.sqrt(1.0 - m * s2))
    expected, _ = integrate.quad(integrand, 0.0, 0.5 * math.pi, epsabs=0.0, epsrel=1e-13)
    assert complete_third_kind(n, m) == pytest.approx(expected, rel=1e-11)


def test_third_kind_reduces_to_first_kind():
    assert complete_third_kind(0.0, 0.4) == complete_first_kind(0.4)


@pytest.mark.parametrize('args', [(-1.0, 1.0, 1.0), (0.0, 0.0, 1.0), (1.0, float('inf'), 1.0)])
def test_elliprf_domain(args):
    with pytest.raises(DomainError):
        elliprf(*args)


def test_elliprj_domain():
    with pytest.raises(DomainError):
        elliprj(1.0, 1.0, 1.0, 0.0)
    with pytest.raises(DomainError):
        elliprj(0.0, 0.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        elliprc(1.0, 0.0)


def test_iteration_cap():
    with pytest.raises(ConvergenceFailure):
        elliprf(1e-3, 1.0, 1e3, max_iterations=1)
    with pytest.raises(ConvergenceFailure):
        elliprj(1e-3, 1.0, 1e3, 2.0, max_iterations=1)
