"""
Python package for the period of the Rayleigh stretched-string oscillator.

A mass is tied to the midpoint of an elastic wire of unstretched length 2*L0 that has been
stretched to length 2*L, and oscillates on the line through the midpoint perpendicular to the wire.
The package computes the exact period three independent ways, evaluates Rayleigh's harmonic
approximation and checks the a-priori upper and lower period bounds.

Packages
--------
constants : Enum classes and default values shared across the package
utils : Exception classes and the dotenv-backed settings loader
model : Physical parameter types and the pointwise physics
period : The period engines (quadrature, elliptic integrals, ODE simulation)
bounds : The a-priori period bounds, the relative-error bracket and the sandwich checker
analysis : Parameter sweeps, the convergence study and the randomized invariant suite

Modules
-------
cli : Command-line front-end (console script `stretched-string`)
"""
from .model import StringParams, Oscillation
from .period import PeriodEstimate, compute_period
from .bounds import PeriodBounds, period_bounds, check_sandwich

__all__ = [
    'StringParams',
    'Oscillation',
    'PeriodEstimate',
    'compute_period',
    'PeriodBounds',
    'period_bounds',
    'check_sandwich',
]
