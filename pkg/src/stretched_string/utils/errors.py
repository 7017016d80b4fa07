"""
This module contains the exceptions raised by the stretched_string package.

Every exception derives from StretchedStringError. Input problems also derive from ValueError,
engine problems from RuntimeError, so callers that do not care about this package can still
catch them with the builtin types.

Classes
-------
StretchedStringError :
    Base class of all exceptions in the package

InvalidParameters, DomainError, DegenerateAmplitude :
    Bad input (CLI exit code 1)

NumericalFailure :
    Base class of engine failures (CLI exit code 2), with the subclasses ConvergenceFailure,
    NonstandardOrdering, StepFailure, MaxStepsExceeded and InsufficientEvents
"""


class StretchedStringError(Exception):
    pass


class InvalidParameters(StretchedStringError, ValueError):
    """A construction invariant or a grid definition is invalid."""


class DomainError(StretchedStringError, ValueError):
    """A pointwise evaluation was requested outside its domain."""


class DegenerateAmplitude(StretchedStringError, ValueError):
    """The amplitude is below the degeneracy threshold, so the z-space interval collapses."""


class NumericalFailure(StretchedStringError, RuntimeError):
    pass


class ConvergenceFailure(NumericalFailure):
    """An adaptive scheme or an iteration did not reach its tolerance within its cap."""


class NonstandardOrdering(NumericalFailure):
    """The quartic roots are not in the order the elliptic reduction assumes."""


class StepFailure(NumericalFailure):
    """The ODE step size underflowed."""


class MaxStepsExceeded(NumericalFailure):
    pass


class InsufficientEvents(NumericalFailure):
    """Fewer turning events than needed to measure a period."""
