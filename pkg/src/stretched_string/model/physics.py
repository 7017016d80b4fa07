"""
This module contains the pointwise physics of the stretched-string oscillator.

All functions accept a float or a numpy array for the displacement (and velocity) and are
pure functions of their inputs.

Functions
---------
tension :
    Hooke-law tension of each half of the wire at displacement y

vertical_force :
    Vertical component of the total force exerted by both halves

acceleration :
    Right-hand side of the equation of motion, vertical_force / m

energy :
    The first integral v^2/2 + (2 sigma/m)(y^2/(2 L0) - sqrt(L^2 + y^2)), conserved along solutions

first_integral_printed :
    The same first integral with the prefactor sigma/(2m) as it is usually printed.
    Kept for reproduction only: it is not conserved.

linear_coefficient, rayleigh_acceleration, rayleigh_period, rayleigh_solution :
    Rayleigh's constant-tension linearization y'' + (2T/(mL)) y = 0 and its solution
"""
import math

import numpy as np

from .string_params import StringParams


def tension(params: StringParams, y):
    """
    Magnitude of the tension of each half of the wire, sigma * (sqrt(L^2 + y^2) - L0) / L0.
    Always positive, since L > L0.

    Parameters
    ----------
    params : StringParams
        The physical configuration
    y : float or np.ndarray
        Vertical displacement of the mass

    Returns
    -------
    float or np.ndarray
        The tension, in force units

    Examples
    --------
    >>> params = StringParams(L0=1.0, L=1.25, sigma=1.0, m=1.0)
    >>> float(tension(params, 0.0))
    0.25
    """
    return params.sigma * (np.hypot(params.L, y) - params.L0) / params.L0


def vertical_force(params: StringParams, y):
    """
    Vertical component of the total force on the mass,
    -2 sigma * ((sqrt(L^2 + y^2) - L0) / L0) * (y / sqrt(L^2 + y^2)).
    Odd in y, with the sign opposite to y.
    """
    stretched = np.hypot(params.L, y)
    return -2.0 * tension(params, y) * y / stretched


def acceleration(params: StringParams, y):
    """
    Acceleration of the mass at displacement y, vertical_force / m
    """
    return vertical_force(params, y) / params.m


def energy(params: StringParams, y, v):
    """
    Specific energy E(y, v) = v^2/2 + (2 sigma/m) (y^2/(2 L0) - sqrt(L^2 + y^2)).

    The potential part is an antiderivative of -acceleration, so E is constant along every
    exact solution of the equation of motion.

    Parameters
    ----------
    params : StringParams
        The physical configuration
    y : float or np.ndarray
        Displacement
    v : float or np.ndarray
        Velocity

    Returns
    -------
    float or np.ndarray
        The specific energy (energy per unit mass)
    """
    potential = (2.0 * params.sigma / params.m) * (y * y / (2.0 * params.L0) - np.hypot(params.L, y))
    return 0.5 * v * v + potential


def first_integral_printed(params: StringParams, y, v):
    """
    The first integral with the prefactor sigma/(2m) in place of 2 sigma/m.

    Re-deriving the first integral from the equation of motion gives 2 sigma/m, and the
    velocity formula that the period integral is built on agrees with 2 sigma/m. This variant
    exists to reproduce the printed expression; it drifts along exact trajectories.
    """
    potential = (params.sigma / (2.0 * params.m)) * (y * y / (2.0 * params.L0) - np.hypot(params.L, y))
    return 0.5 * v * v + potential


def linear_coefficient(params: StringParams) -> float:
    """
    Squared angular frequency of the linearized equation, 2T/(mL)
    """
    return 2.0 * params.T / (params.m * params.L)


def rayleigh_acceleration(params: StringParams, y):
    """
    Acceleration of the linearized (constant tension) system, -(2T/(mL)) y
    """
    return -linear_coefficient(params) * y


def rayleigh_period(params: StringParams) -> float:
    """
    Rayleigh's approximate period, 2 pi / sqrt(2T/(mL)). Independent of the amplitude.

    Examples
    --------
    >>> params = StringParams(L0=1.0, L=1.25, sigma=1.0, m=1.0)
    >>> round(rayleigh_period(params), 7)
    9.9345883
    """
    return 2.0 * math.pi / math.sqrt(linear_coefficient(params))


def rayleigh_solution(params: StringParams, y0: float, t):
    """
    Rayleigh's harmonic solution y(t) = y0 cos(sqrt(2T/(mL)) t)

    Parameters
    ----------
    params : StringParams
        The physical configuration
    y0 : float
        Initial displacement, released from rest
    t : float or np.ndarray
        Time

    Returns
    -------
    float or np.ndarray
        The displacement at time t
    """
    return y0 * np.cos(math.sqrt(linear_coefficient(params)) * t)
