"""
This package contains the a-priori period bounds.

Modules
-------
theorem :
    Upper and lower period bounds, the relative-error bracket of Rayleigh's approximation
    and the sandwich checker. The corrected forms are the defaults; the as-printed forms are
    selected with BoundVariant.PRINTED.
"""
from .theorem import (
    PeriodBounds,
    SandwichReport,
    upper_bound,
    lower_bound_corrected,
    lower_bound_printed,
    lower_bound_chain,
    lower_bound,
    relative_error_bounds,
    relative_error,
    period_bounds,
    check_sandwich,
)
