"""
High-precision summation of an identity against its closed form.

Each series is summed until its current L-value drops below
tolerance / (10 * #series); slow (quadratic) series additionally need
their integral tail bound below that threshold. Tail estimates are
heuristic:

* geometric series: last * r / (1 - r) * 2 with r the ratio of the last two values;
* quadratic series:  weight * 2c (2 + ln N + |ln c|/2) / N for terms close to c/k^2.

A doubling check compares S(N) with the prefix S(M) at the largest power
of two M <= N/2: S(N) - S(M) must not exceed tail(M) + tolerance/10.
"""
import logging
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

from ..config import get_default_max_terms, get_default_precision, get_default_tolerance
from ..exceptions import ArgumentRangeError, InvalidParameterError, NonDecreasingTermsError, NumericDomainError
from ..numerics import GUARD_BITS, BigReal, log, rogers
from ..types import VerificationReport
from .base import Argument, Decay, Identity, NumericArgument, Series

logger = logging.getLogger(__name__)

MIN_TERMS = 4
MIN_MAX_TERMS = 8
SLOW_RATIO = Fraction(9, 10)

Tolerance = Union[str, BigReal, Fraction, int]


def evaluate_argument(argument: Argument, precision: int) -> BigReal:
    """Range-check an argument (0 < x <= 1) and round it to a BigReal."""
    if isinstance(argument, NumericArgument):
        value = argument.evaluate(precision)
        if not (value.sign() > 0 and value <= 1):
            raise ArgumentRangeError(f"numeric argument {argument} = {value!r} is outside (0, 1]")
        return value
    if argument.is_rational:
        x = argument.rational_part
        if not 0 < x <= 1:
            raise ArgumentRangeError(f"argument {argument} is outside (0, 1]")
        return BigReal.from_fraction(x, precision)
    if not 0 < argument <= 1:
        raise ArgumentRangeError(f"argument {argument} is outside (0, 1]")
    return argument.to_real(precision)


def _as_tolerance(tolerance: Tolerance, precision: int) -> BigReal:
    if isinstance(tolerance, BigReal):
        value = tolerance.with_precision(precision)
    elif isinstance(tolerance, (int, Fraction)):
        value = BigReal.from_fraction(tolerance, precision)
    else:
        try:
            value = BigReal.from_decimal(tolerance, precision)
        except NumericDomainError as e:
            raise InvalidParameterError(f"tolerance must be a decimal literal, got {tolerance!r}") from e
    if value.sign() <= 0:
        raise InvalidParameterError(f"tolerance must be positive, got {tolerance}")
    return value


def _geometric_tail(last: BigReal, previous: Optional[BigReal]) -> Optional[BigReal]:
    """None when no decreasing ratio is available yet."""
    if previous is None or previous.is_zero():
        return None
    ratio = last / previous
    if ratio >= 1:
        return None
    return last * ratio / (1 - ratio) * 2


def _integral_tail(series: Series, count: int, precision: int) -> BigReal:
    c = BigReal.from_fraction(Fraction(series.coefficient), precision)
    n = BigReal.from_int(count, precision)
    return series.weight * (2 * c * (2 + log(n) + abs(log(c)) / 2) / n)


def _integral_tail_estimate(series: Series, count: int) -> float:
    c = series.coefficient
    return float(series.weight) * 2 * c * (2 + math.log(count) + abs(math.log(c)) / 2) / count


@dataclass
class SeriesSum:
    name: str
    count: int
    total: BigReal
    tail: BigReal
    doubling_ok: bool
    checkpoints: Dict[int, Tuple[BigReal, Optional[BigReal]]] = field(default_factory=dict)


def _doubling_check(outcome: SeriesSum, tolerance: BigReal) -> bool:
    n = outcome.count
    if n < 4:
        return True
    m = 1 << ((n // 2).bit_length() - 1)
    prefix, tail = outcome.checkpoints.get(m, (None, None))
    if prefix is None or tail is None:
        return True
    return outcome.total - prefix <= tail + tolerance / 10


def sum_series(series: Series, precision: int, threshold: BigReal, max_terms: int,
               tolerance: BigReal) -> SeriesSum:
    """Weighted partial sum of one series with its tail estimate and doubling check."""
    slow = series.decay == Decay.QUADRATIC
    weighted = series.weight != 1
    total = BigReal.zero(precision)
    previous: Optional[BigReal] = None
    value: Optional[BigReal] = None
    last_rise: Optional[int] = None
    checkpoints: Dict[int, Tuple[BigReal, Optional[BigReal]]] = {}
    count = 0
    for count in range(1, max_terms + 1):
        n = series.start + count - 1
        previous, value = value, rogers(evaluate_argument(series.term(n), precision))
        if weighted:
            value = series.weight * value
        if previous is not None and value >= previous:
            last_rise = count
        total = total + value
        if count & (count - 1) == 0:
            tail = _integral_tail(series, count, precision) if slow else _geometric_tail(value, previous)
            checkpoints[count] = (total, tail)
        if count >= MIN_TERMS and value < threshold:
            if not slow or _integral_tail_estimate(series, count) < float(threshold):
                break

    if last_rise is not None and last_rise > count // 2:
        raise NonDecreasingTermsError(
            f"{series.name}: term {last_rise} of {count} does not decrease; check the generator")
    if slow:
        tail = _integral_tail(series, count, precision)
    else:
        ratio = value / previous
        if ratio >= 1:
            raise NonDecreasingTermsError(f"{series.name}: ratio {float(ratio):.4g} >= 1 at term {count}")
        if ratio >= SLOW_RATIO:
            logger.warning(f"{series.name}: slow ratio {float(ratio):.4g} at term {count}; "
                           f"geometric tail estimate is unreliable")
        tail = _geometric_tail(value, previous)
    outcome = SeriesSum(series.name, count, total, tail, True, checkpoints)
    outcome.doubling_ok = _doubling_check(outcome, tolerance)
    logger.debug(f"{series.name}: {count} terms, last={float(value):.3e}, tail={float(tail):.3e}, "
                 f"doubling={'ok' if outcome.doubling_ok else 'FAILED'}")
    return outcome


def verify(identity: Identity, precision: Optional[int] = None, tolerance: Optional[Tolerance] = None,
           max_terms: Optional[int] = None) -> VerificationReport:
    """
    Sum every series and finite term of ``identity`` and compare with its right-hand side.

    Parameters
    ----------
    identity : Identity
        A freshly instantiated catalog entry.
    precision : int, optional
        Bits; defaults to the configured precision.
    tolerance : str, BigReal or Fraction, optional
        Positive; decimal strings such as ``"1e-30"`` are parsed exactly.
    max_terms : int, optional
        Per-series cap, at least 8.

    Returns
    -------
    VerificationReport
        ``converged`` holds iff abs_error <= tolerance + tail_estimate and
        every doubling check passed.
    """
    precision = precision or get_default_precision()
    max_terms = get_default_max_terms() if max_terms is None else max_terms
    if max_terms < MIN_MAX_TERMS:
        raise InvalidParameterError(f"max_terms must be at least {MIN_MAX_TERMS}, got {max_terms}")
    working = precision + GUARD_BITS
    tol = _as_tolerance(get_default_tolerance() if tolerance is None else tolerance, working)
    threshold = tol / (10 * max(len(identity.series), 1))

    started = time.perf_counter()
    total = BigReal.zero(working)
    tail = BigReal.zero(working)
    terms_used: Dict[str, int] = {}
    doubling: Dict[str, bool] = {}
    for series in identity.series:
        outcome = sum_series(series, working, threshold, max_terms, tol)
        total = total + outcome.total
        tail = tail + outcome.tail
        terms_used[series.name] = outcome.count
        doubling[series.name] = outcome.doubling_ok
    for term in identity.finite_terms:
        total = total + term.weight * rogers(evaluate_argument(term.argument, working))

    rhs = identity.rhs.evaluate(working)
    error = abs(total - rhs)
    converged = error <= tol + tail and all(doubling.values())
    kinds = {s.decay for s in identity.series}
    tail_kind = "integral" if kinds == {Decay.QUADRATIC} else "mixed" if len(kinds) > 1 else "geometric"
    elapsed = (time.perf_counter() - started) * 1000
    logger.info(f"{identity.id} [{identity.describe_parameters()}]: "
                f"{'converged' if converged else 'FAILED'} with error {float(error):.3e} "
                f"after {sum(terms_used.values())} terms in {elapsed:.0f} ms")
    return VerificationReport(
        identity_id=identity.id,
        parameters=identity.describe_parameters(),
        precision=precision,
        terms_used=terms_used,
        partial_sum=total.with_precision(precision),
        rhs_value=rhs.with_precision(precision),
        abs_error=error.with_precision(precision),
        tail_estimate=tail.with_precision(precision),
        converged=converged,
        elapsed_ms=elapsed,
        tail_kind=tail_kind,
        doubling_checks=doubling,
    )
