from .bigreal import (
    BigReal,
    MIN_PRECISION,
    GUARD_BITS,
    pi,
    pi_squared,
    sqrt,
    log,
    exp,
    cosh,
    sinh,
    acosh,
)
from .dilog import li2, li2_series, rogers

__all__ = [
    "BigReal",
    "MIN_PRECISION",
    "GUARD_BITS",
    "pi",
    "pi_squared",
    "sqrt",
    "log",
    "exp",
    "cosh",
    "sinh",
    "acosh",
    "li2",
    "li2_series",
    "rogers",
]
