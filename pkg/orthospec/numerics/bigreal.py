"""
Arbitrary-precision reals on top of mpmath's raw ``libmp`` layer.

Values carry their own precision, so nothing here touches the global
``mpmath.mp`` context and BigReal can be shared freely between threads.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Union

from mpmath import libmp
from mpmath.libmp import (
    ComplexResult,
    fone,
    fzero,
    from_int,
    from_rational,
    from_str,
    mpf_abs,
    mpf_acosh,
    mpf_add,
    mpf_cmp,
    mpf_cosh_sinh,
    mpf_div,
    mpf_exp,
    mpf_log,
    mpf_mul,
    mpf_neg,
    mpf_pi,
    mpf_pos,
    mpf_pow_int,
    mpf_sign,
    mpf_sqrt,
    mpf_sub,
    prec_to_dps,
    to_float,
    to_str,
)

from ..exceptions import NumericDomainError

MIN_PRECISION = 64
GUARD_BITS = 32
ROUNDING = libmp.round_nearest

Scalar = Union["BigReal", int, Fraction]


@total_ordering
@dataclass(frozen=True, eq=False)
class BigReal:
    """A binary floating-point real with an explicit mantissa precision."""
    raw: tuple
    precision: int

    def __post_init__(self):
        if self.precision < MIN_PRECISION:
            raise NumericDomainError(
                f"precision must be at least {MIN_PRECISION} bits, got {self.precision}"
            )

    @classmethod
    def from_int(cls, value: int, precision: int) -> "BigReal":
        return cls(from_int(int(value), precision, ROUNDING), precision)

    @classmethod
    def from_fraction(cls, value: Union[Fraction, int], precision: int) -> "BigReal":
        if not isinstance(value, (int, Fraction)):
            value = Fraction(value)
        return cls(from_rational(value.numerator, value.denominator, precision, ROUNDING), precision)

    @classmethod
    def from_decimal(cls, text: str, precision: int) -> "BigReal":
        """Parse a decimal literal such as ``"1e-30"``; non-finite input is rejected."""
        try:
            raw = from_str(str(text), precision, ROUNDING)
        except ValueError as e:
            raise NumericDomainError(f"Not a decimal literal: {text!r}") from e
        if not raw[1] and raw != fzero:
            raise NumericDomainError(f"Non-finite literal: {text!r}")
        return cls(raw, precision)

    @classmethod
    def zero(cls, precision: int) -> "BigReal":
        return cls(fzero, precision)

    @classmethod
    def one(cls, precision: int) -> "BigReal":
        return cls(fone, precision)

    def _operand(self, other):
        if isinstance(other, BigReal):
            return other.raw, min(self.precision, other.precision)
        if isinstance(other, bool):
            return NotImplemented, None
        if isinstance(other, int):
            return from_int(other), self.precision
        if isinstance(other, Fraction):
            return from_rational(other.numerator, other.denominator,
                                 self.precision + GUARD_BITS, ROUNDING), self.precision
        return NotImplemented, None

    def __add__(self, other):
        raw, prec = self._operand(other)
        if raw is NotImplemented:
            return NotImplemented
        return BigReal(mpf_add(self.raw, raw, prec, ROUNDING), prec)

    __radd__ = __add__

    def __sub__(self, other):
        raw, prec = self._operand(other)
        if raw is NotImplemented:
            return NotImplemented
        return BigReal(mpf_sub(self.raw, raw, prec, ROUNDING), prec)

    def __rsub__(self, other):
        raw, prec = self._operand(other)
        if raw is NotImplemented:
            return NotImplemented
        return BigReal(mpf_sub(raw, self.raw, prec, ROUNDING), prec)

    def __mul__(self, other):
        raw, prec = self._operand(other)
        if raw is NotImplemented:
            return NotImplemented
        return BigReal(mpf_mul(self.raw, raw, prec, ROUNDING), prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        raw, prec = self._operand(other)
        if raw is NotImplemented:
            return NotImplemented
        if not raw[1]:
            raise NumericDomainError("division by zero")
        return BigReal(mpf_div(self.raw, raw, prec, ROUNDING), prec)

    def __rtruediv__(self, other):
        raw, prec = self._operand(other)
        if raw is NotImplemented:
            return NotImplemented
        if self.is_zero():
            raise NumericDomainError("division by zero")
        return BigReal(mpf_div(raw, self.raw, prec, ROUNDING), prec)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0 and self.is_zero():
            raise NumericDomainError("zero to a negative power")
        return BigReal(mpf_pow_int(self.raw, exponent, self.precision, ROUNDING), self.precision)

    def __neg__(self):
        return BigReal(mpf_neg(self.raw), self.precision)

    def __abs__(self):
        return BigReal(mpf_abs(self.raw), self.precision)

    def __eq__(self, other):
        raw, _ = self._operand(other)
        if raw is NotImplemented:
            return NotImplemented
        return mpf_cmp(self.raw, raw) == 0

    def __lt__(self, other):
        raw, _ = self._operand(other)
        if raw is NotImplemented:
            return NotImplemented
        return mpf_cmp(self.raw, raw) < 0

    def __hash__(self):
        return hash(self.raw)

    def __float__(self):
        return to_float(self.raw)

    def sign(self) -> int:
        return mpf_sign(self.raw)

    def is_zero(self) -> bool:
        return self.raw == fzero

    def with_precision(self, precision: int) -> "BigReal":
        return BigReal(mpf_pos(self.raw, precision, ROUNDING), precision)

    def to_decimal(self, digits: int = None) -> str:
        """Decimal string with ``digits`` significant digits (default: all the precision holds)."""
        return to_str(self.raw, digits or prec_to_dps(self.precision))

    def __str__(self):
        return self.to_decimal()

    def __repr__(self):
        return f"BigReal('{self.to_decimal(20)}', precision={self.precision})"


def _wrap(raw, precision):
    return BigReal(mpf_pos(raw, precision, ROUNDING), precision)


@lru_cache(maxsize=None)
def _pi_raw(working: int) -> tuple:
    return mpf_pi(working, ROUNDING)


def pi(precision: int) -> BigReal:
    """π rounded to ``precision`` bits, computed once per precision."""
    return BigReal(_pi_raw(precision), precision)


def pi_squared(precision: int) -> BigReal:
    wp = precision + GUARD_BITS
    pi_raw = _pi_raw(wp)
    return _wrap(mpf_mul(pi_raw, pi_raw, wp, ROUNDING), precision)


def sqrt(x: BigReal) -> BigReal:
    if x.sign() < 0:
        raise NumericDomainError("square root of a negative number")
    return BigReal(mpf_sqrt(x.raw, x.precision, ROUNDING), x.precision)


def log(x: BigReal) -> BigReal:
    if x.sign() <= 0:
        raise NumericDomainError("logarithm of a non-positive number")
    return BigReal(mpf_log(x.raw, x.precision, ROUNDING), x.precision)


def exp(x: BigReal) -> BigReal:
    return BigReal(mpf_exp(x.raw, x.precision, ROUNDING), x.precision)


def cosh(x: BigReal) -> BigReal:
    c, _ = mpf_cosh_sinh(x.raw, x.precision + GUARD_BITS, ROUNDING)
    return _wrap(c, x.precision)


def sinh(x: BigReal) -> BigReal:
    _, s = mpf_cosh_sinh(x.raw, x.precision + GUARD_BITS, ROUNDING)
    return _wrap(s, x.precision)


def acosh(x: BigReal) -> BigReal:
    if x < 1:
        raise NumericDomainError("acosh is defined on [1, oo)")
    try:
        return _wrap(mpf_acosh(x.raw, x.precision + GUARD_BITS, ROUNDING), x.precision)
    except ComplexResult as e:
        raise NumericDomainError(str(e)) from e
