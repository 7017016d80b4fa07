"""
This module contains the classes describing one stretched-string oscillator.

The package is unit-agnostic: any coherent unit system works (for example SI), and no unit
conversion is performed anywhere.

Classes
-------
StringParams :
    The wire and the mass: half-lengths L0 and L, spring constant sigma, mass m

Oscillation :
    A StringParams together with the initial displacement y0 (released from rest)
"""
import math

from ..utils.errors import InvalidParameters


class StringParams:
    """
    A class to store the physical configuration of the stretched string

    Attributes
    ----------
    L0 : float
        Half-length of the unstretched wire
    L : float
        Half-length of the stretched wire at equilibrium, L > L0
    sigma : float
        Spring constant, in force units (Hooke law T = sigma * stretch / original length)
    m : float
        The attached mass
    epsilon : float
        The stretch of each half at equilibrium, L - L0
    T : float
        Tension of each half at equilibrium, sigma * (L - L0) / L0

    Raises
    ------
    InvalidParameters
        If a value is not finite, or L0 > 0, L > L0, sigma > 0, m > 0 does not hold.
        The message names the violated condition.

    Examples
    --------
    >>> params = StringParams(L0=1.0, L=1.25, sigma=1.0, m=1.0)
    >>> params.T
    0.25
    """
    def __init__(self, L0: float, L: float, sigma: float, m: float):
        values = {'L0': L0, 'L': L, 'sigma': sigma, 'm': m}
        for name, value in values.items():
            if not math.isfinite(value):
                raise InvalidParameters(f'{name} must be finite, got {value}')
        if not L0 > 0:
            raise InvalidParameters(f'L0 must be positive, got L0={L0}')
        if not L > L0:
            raise InvalidParameters(f'L must exceed L0 (the wire must be stretched), got L={L}, L0={L0}')
        if not sigma > 0:
            raise InvalidParameters(f'sigma must be positive, got sigma={sigma}')
        if not m > 0:
            raise InvalidParameters(f'm must be positive, got m={m}')

        self._L0 = float(L0)
        self._L = float(L)
        self._sigma = float(sigma)
        self._m = float(m)

    @property
    def L0(self) -> float:
        return self._L0

    @property
    def L(self) -> float:
        return self._L

    @property
    def sigma(self) -> float:
        return self._sigma

    @property
    def m(self) -> float:
        return self._m

    @property
    def epsilon(self) -> float:
        return self._L - self._L0

    @property
    def T(self) -> float:
        # Same arithmetic path as physics.tension at y = 0
        return self._sigma * (self._L - self._L0) / self._L0

    def scaled(self, sigma_factor: float = 1.0, m_factor: float = 1.0) -> 'StringParams':
        """
        Returns a copy with sigma and m multiplied by the given factors
        """
        return StringParams(self._L0, self._L, self._sigma * sigma_factor, self._m * m_factor)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StringParams):
            return NotImplemented
        return (self._L0, self._L, self._sigma, self._m) == (other._L0, other._L, other._sigma, other._m)

    def __hash__(self) -> int:
        return hash((self._L0, self._L, self._sigma, self._m))

    def __repr__(self) -> str:
        return f'StringParams(L0={self._L0!r}, L={self._L!r}, sigma={self._sigma!r}, m={self._m!r})'


class Oscillation:
    """
    A class to store a complete problem instance: the configuration and the initial displacement.
    The mass is released from rest, v(0) = 0.

    Attributes
    ----------
    params : StringParams
        The physical configuration
    y0 : float
        The initial displacement. Negative inputs are stored as |y0|, since the force is odd in y
        and the period is even in y0.
    """
    def __init__(self, params: StringParams, y0: float):
        if not isinstance(params, StringParams):
            raise InvalidParameters(f'params must be a StringParams, got {type(params).__name__}')
        if not math.isfinite(y0):
            raise InvalidParameters(f'y0 must be finite, got {y0}')
        self._params = params
        self._y0 = abs(float(y0))

    @property
    def params(self) -> StringParams:
        return self._params

    @property
    def y0(self) -> float:
        return self._y0

    @property
    def z0(self) -> float:
        """z-space image of the amplitude, sqrt(L^2 + y0^2)"""
        return math.hypot(self._params.L, self._y0)

    def is_degenerate(self, threshold: float) -> bool:
        """True when y0 < threshold * L"""
        return self._y0 < threshold * self._params.L

    def with_y0(self, y0: float) -> 'Oscillation':
        return Oscillation(self._params, y0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Oscillation):
            return NotImplemented
        return self._params == other._params and self._y0 == other._y0

    def __hash__(self) -> int:
        return hash((self._params, self._y0))

    def __repr__(self) -> str:
        return f'Oscillation(params={self._params!r}, y0={self._y0!r})'
