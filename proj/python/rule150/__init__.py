"""Rule 150 counts and its singular function, in exact arithmetic."""

from ._core import (
    QSqrt5,
    F,
    F_enclosure,
    F_k,
    F_recursive,
    boxcount_slope,
    check,
    cum,
    cum_pow2,
    cum_pow2_closed,
    derivative_zero_sample,
    dimension,
    left_quotient,
    num,
    prefractal_pbm,
    right_quotient,
    simulate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
