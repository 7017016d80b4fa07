"""
Parameter grid shared by the cross-method tests: L0 = 1 and m = 1, with
L/L0, y0/L and sigma/m taken from the products below.
"""
import itertools

from stretched_string.model import Oscillation, StringParams

GRID_L_RATIOS = (1.05, 1.25, 1.5, 2.0, 4.0)
GRID_Y0_FRACTIONS = (0.05, 0.2, 0.5, 1.0, 2.0)
GRID_SIGMAS = (0.1, 1.0, 10.0)

GRID = list(itertools.product(GRID_L_RATIOS, GRID_Y0_FRACTIONS, GRID_SIGMAS))


def grid_oscillation(ratio, fraction, sigma):
    return Oscillation(StringParams(L0=1.0, L=ratio, sigma=sigma, m=1.0), fraction * ratio)
