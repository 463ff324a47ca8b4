"""
Dilogarithm Li2 and the Rogers dilogarithm L on the real interval.

The direct power series is only used for |x| <= 1/2; larger arguments are
reflected (x > 1/2) or sent through Landen's transform (x < -1/2) so that
every series converges at least like 2**-n.
"""
import logging

from mpmath.libmp import (
    fhalf,
    fnone,
    fone,
    fzero,
    from_int,
    mpf_abs,
    mpf_add,
    mpf_div,
    mpf_gt,
    mpf_le,
    mpf_log,
    mpf_lt,
    mpf_mul,
    mpf_neg,
    mpf_shift,
    mpf_sub,
)

from ..exceptions import NumericDomainError
from .bigreal import GUARD_BITS, ROUNDING, BigReal, _pi_raw, _wrap

logger = logging.getLogger(__name__)


def _zeta2_raw(wp: int) -> tuple:
    pi_raw = _pi_raw(wp)
    return mpf_div(mpf_mul(pi_raw, pi_raw, wp, ROUNDING), from_int(6), wp, ROUNDING)


def _series_raw(x: tuple, wp: int) -> tuple:
    # sum x^n / n^2 until the next power drops below 2^-(wp+8)
    total = fzero
    power = x
    n = 1
    cutoff = -wp - 8
    while power[1]:
        total = mpf_add(total, mpf_div(power, from_int(n * n), wp, ROUNDING), wp, ROUNDING)
        power = mpf_mul(power, x, wp, ROUNDING)
        if power[2] + power[3] < cutoff:
            break
        n += 1
    return total


def _log_product_raw(x: tuple, wp: int) -> tuple:
    """ln(x) * ln(1 - x) for 0 < x < 1; 1 - x is formed exactly."""
    return mpf_mul(mpf_log(x, wp, ROUNDING), mpf_log(mpf_sub(fone, x), wp, ROUNDING), wp, ROUNDING)


def _li2_raw(x: tuple, wp: int) -> tuple:
    if x == fzero:
        return fzero
    if x == fone:
        return _zeta2_raw(wp)
    if x == fnone:
        return mpf_neg(mpf_shift(_zeta2_raw(wp), -1))
    if mpf_le(mpf_abs(x), fhalf):
        return _series_raw(x, wp)
    if mpf_gt(x, fzero):
        y = mpf_sub(fone, x)
        tail = mpf_add(_log_product_raw(x, wp), _series_raw(y, wp), wp, ROUNDING)
        return mpf_sub(_zeta2_raw(wp), tail, wp, ROUNDING)
    # Landen: Li2(x) = -Li2(x/(x-1)) - ln(1-x)^2 / 2, with x/(x-1) in [1/3, 1/2]
    z = mpf_div(x, mpf_sub(x, fone), wp, ROUNDING)
    lg = mpf_log(mpf_sub(fone, x), wp, ROUNDING)
    half_square = mpf_shift(mpf_mul(lg, lg, wp, ROUNDING), -1)
    return mpf_neg(mpf_add(_series_raw(z, wp), half_square, wp, ROUNDING))


def li2(x: BigReal) -> BigReal:
    """Li2(x) for -1 <= x <= 1 with absolute error below 2^-(precision-8)."""
    if mpf_lt(x.raw, fnone) or mpf_gt(x.raw, fone):
        raise NumericDomainError(f"li2 is evaluated on [-1, 1], got {x!r}")
    return _wrap(_li2_raw(x.raw, x.precision + GUARD_BITS), x.precision)


def li2_series(x: BigReal) -> BigReal:
    """Li2(x) by plain power-series summation, for |x| < 1 (slow near 1)."""
    if not mpf_lt(mpf_abs(x.raw), fone):
        raise NumericDomainError(f"li2_series needs |x| < 1, got {x!r}")
    if mpf_gt(mpf_abs(x.raw), fhalf):
        logger.debug(f"li2_series: slow convergence for |x| > 1/2 ({float(x):.3g})")
    return _wrap(_series_raw(x.raw, x.precision + GUARD_BITS), x.precision)


def rogers(x: BigReal) -> BigReal:
    """
    Rogers dilogarithm L(x) = Li2(x) + ln(x) ln(1-x) / 2 on [0, 1].

    L(0) = 0 and L(1) = pi^2/6 are returned without evaluating the log term.
    For x > 1/2 the reflection L(x) = pi^2/6 - L(1-x) is used.
    """
    raw = x.raw
    if mpf_lt(raw, fzero) or mpf_gt(raw, fone):
        raise NumericDomainError(f"rogers is evaluated on [0, 1], got {x!r}")
    wp = x.precision + GUARD_BITS
    if raw == fzero:
        return BigReal.zero(x.precision)
    if raw == fone:
        return _wrap(_zeta2_raw(wp), x.precision)
    half_product = mpf_shift(_log_product_raw(raw, wp), -1)
    if mpf_le(raw, fhalf):
        value = mpf_add(_series_raw(raw, wp), half_product, wp, ROUNDING)
    else:
        reflected = mpf_add(_series_raw(mpf_sub(fone, raw), wp), half_product, wp, ROUNDING)
        value = mpf_sub(_zeta2_raw(wp), reflected, wp, ROUNDING)
    return _wrap(value, x.precision)
