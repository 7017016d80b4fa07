"""
This package contains the physical parameter types and the pointwise physics of the oscillator.

Modules
-------
string_params :
    The StringParams and Oscillation classes. StringParams validates the configuration once,
    at construction, so every function downstream can assume L > L0 > 0, sigma > 0 and m > 0.

physics :
    Tension, restoring force, acceleration, energy and Rayleigh's harmonic approximation.
"""
from .string_params import StringParams, Oscillation
from .physics import (
    tension,
    vertical_force,
    acceleration,
    energy,
    first_integral_printed,
    linear_coefficient,
    rayleigh_acceleration,
    rayleigh_period,
    rayleigh_solution,
)
