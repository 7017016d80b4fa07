"""
This file contains the Enum classes naming the period methods, the bound variants and the CLI exit codes.

Classes
-------
PeriodMethod :
    Tags recording which engine produced a period value

BoundVariant :
    Selects the corrected or the as-printed lower bound

ExitCode :
    Process exit codes of the command-line front-end
"""
from enum import Enum, IntEnum


class PeriodMethod(Enum):
    """
    Access using PeriodMethod.<name>.value

    ELLIPTIC_FALLBACK marks an elliptic request answered by the quadrature engine
        (tiny amplitude, or the amplitude regime where 2*L0 - z0 drops below -L).
    """
    QUADRATURE: str = 'quadrature'
    ELLIPTIC: str = 'elliptic'
    ELLIPTIC_FALLBACK: str = 'elliptic-fallback'
    ODE_SIM: str = 'ode'
    RAYLEIGH_APPROX: str = 'rayleigh'


# Choices accepted by the --method flag, in output order
CLI_METHODS = ('quadrature', 'elliptic', 'ode')


class ExitCode(IntEnum):
    OK = 0
    INVALID_INPUT = 1
    ENGINE_FAILURE = 2
    INVARIANT_VIOLATION = 3


class BoundVariant(Enum):
    """
    CORRECTED is the dimensionally consistent lower bound and error bracket, used everywhere by default.
    PRINTED reproduces the expressions as they are usually printed; never part of an invariant check.
    """
    CORRECTED: str = 'corrected'
    PRINTED: str = 'printed'
