import pytest

from stretched_string.model import Oscillation, StringParams
from stretched_string.period.quadrature import richardson_simpson_period


@pytest.fixture
def reference_params():
    return StringParams(L0=1.0, L=1.25, sigma=1.0, m=1.0)


@pytest.fixture
def reference_osc(reference_params):
    return Oscillation(reference_params, 0.5)


@pytest.fixture(scope='session')
def reference_period():
    # Extrapolated fixed-panel Simpson, independent of the adaptive engines
    osc = Oscillation(StringParams(L0=1.0, L=1.25, sigma=1.0, m=1.0), 0.5)
    return richardson_simpson_period(osc, panels=2 ** 16)
