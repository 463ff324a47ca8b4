"""
Exact elements (a + b*sqrt(d))/c of a real quadratic field.

Rationals are the special case b = 0, d = 1. Internally a value is kept as
two Fractions x + y*sqrt(d) with d squarefree, which makes equality a
component-wise comparison.
"""
import math
import re
from fractions import Fraction
from typing import Optional, Tuple, Union

from mpmath.libmp import from_int, from_rational, mpf_add, mpf_div, mpf_mul, mpf_sqrt, mpf_sub

from ..exceptions import ExactArithmeticError, FieldMismatchError, SurdParseError
from ..numerics.bigreal import GUARD_BITS, ROUNDING, BigReal, _wrap

Rational = Union[int, Fraction]

_ZERO = Fraction(0)


def split_square(n: int) -> Tuple[int, int]:
    """Write n > 0 as s*s*core with core squarefree; returns (s, core)."""
    if n <= 0:
        raise ExactArithmeticError(f"split_square needs a positive integer, got {n}")
    root = math.isqrt(n)
    if root * root == n:
        return root, 1
    s, core = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                core *= p
        p += 1 if p == 2 else 2
    return s, core * n


def fraction_sqrt(value: Fraction) -> Optional[Fraction]:
    """Exact square root of a non-negative rational, or None if irrational."""
    value = Fraction(value)
    if value < 0:
        return None
    num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


class QuadNum:
    """
    Exact real quadratic number (a + b*sqrt(d))/c.

    Parameters
    ----------
    a, b : int or Fraction
        Rational and irrational coefficients before division by c.
    c : int, default=1
        Common denominator, must be non-zero.
    d : int, default=1
        Positive radicand; its square part is extracted (sqrt(20) -> 2*sqrt(5)).
    """
    __slots__ = ("_x", "_y", "_d")

    def __init__(self, a: Rational = 0, b: Rational = 0, c: int = 1, d: int = 1):
        if c == 0:
            raise ExactArithmeticError("zero denominator")
        if d <= 0:
            raise ExactArithmeticError(f"radicand must be positive, got {d}")
        x, y = Fraction(a) / c, Fraction(b) / c
        s, core = split_square(d)
        self._set(x, y * s, core)

    def _set(self, x: Fraction, y: Fraction, d: int):
        if d == 1:
            if y:
                x = x + y
            y = _ZERO
        elif not y:
            y, d = _ZERO, 1
        object.__setattr__(self, "_x", x)
        object.__setattr__(self, "_y", y)
        object.__setattr__(self, "_d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadNum is immutable")

    @classmethod
    def _make(cls, x: Fraction, y: Fraction, d: int) -> "QuadNum":
        # d already squarefree
        obj = object.__new__(cls)
        obj._set(x, y, d)
        return obj

    @classmethod
    def from_rational(cls, value: Rational) -> "QuadNum":
        if not isinstance(value, Fraction):
            value = Fraction(value)
        return cls._make(value, _ZERO, 1)

    @classmethod
    def sqrt_of(cls, value: Rational) -> "QuadNum":
        """Exact sqrt(P/Q) = sqrt(P*Q)/Q of a non-negative rational."""
        value = Fraction(value)
        if value < 0:
            raise ExactArithmeticError(f"square root of negative rational {value}")
        if value == 0:
            return cls.from_rational(0)
        s, core = split_square(value.numerator * value.denominator)
        return cls._make(Fraction(0), Fraction(s, value.denominator), core)

    @classmethod
    def parse(cls, text: str) -> "QuadNum":
        return parse_surd(text)

    # components

    @property
    def rational_part(self) -> Fraction:
        return self._x

    @property
    def irrational_part(self) -> Fraction:
        return self._y

    @property
    def c(self) -> int:
        return self._x.denominator * self._y.denominator // math.gcd(self._x.denominator, self._y.denominator)

    @property
    def a(self) -> int:
        return self._x.numerator * (self.c // self._x.denominator)

    @property
    def b(self) -> int:
        return self._y.numerator * (self.c // self._y.denominator)

    @property
    def d(self) -> int:
        return self._d

    @property
    def is_rational(self) -> bool:
        return self._d == 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ExactArithmeticError(f"{self} is irrational")
        return self._x

    # arithmetic

    @staticmethod
    def _coerce(other) -> Optional["QuadNum"]:
        if isinstance(other, QuadNum):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadNum.from_rational(other)
        return None

    def _field(self, other: "QuadNum") -> int:
        if self._d == other._d or other._d == 1:
            return self._d
        if self._d == 1:
            return other._d
        raise FieldMismatchError(f"Q(sqrt({self._d})) and Q(sqrt({other._d})) do not mix")

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadNum._make(self._x + other._x, self._y + other._y, self._field(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadNum._make(-self._x, -self._y, self._d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadNum._make(self._x - other._x, self._y - other._y, self._field(other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self._field(other)
        x = self._x * other._x + self._y * other._y * d
        y = self._x * other._y + self._y * other._x
        return QuadNum._make(x, y, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadNum":
        norm = self.norm()
        if norm == 0:
            raise ExactArithmeticError("division by zero")
        return QuadNum._make(self._x / norm, -self._y / norm, self._d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other._y == 0:
            if other._x == 0:
                raise ExactArithmeticError("division by zero")
            return QuadNum._make(self._x / other._x, self._y / other._x, self._d)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        n = abs(exponent)
        result = QuadNum.from_rational(1)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "QuadNum":
        return QuadNum._make(self._x, -self._y, self._d)

    def norm(self) -> Fraction:
        return self._x * self._x - self._y * self._y * self._d

    def trace(self) -> Fraction:
        return 2 * self._x

    def sign(self) -> int:
        """Exact sign of x + y*sqrt(d), by comparing x^2 with y^2*d."""
        sx = (self._x > 0) - (self._x < 0)
        sy = (self._y > 0) - (self._y < 0)
        if sy == 0 or sx == sy:
            return sx or sy
        if sx == 0:
            return sy
        return sx if self._x * self._x > self._y * self._y * self._d else sy

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def sqrt(self) -> "QuadNum":
        """Non-negative exact square root inside the field, if there is one."""
        if self.sign() < 0:
            raise ExactArithmeticError(f"square root of negative number {self}")
        if self.is_rational:
            return QuadNum.sqrt_of(self._x)
        # (p + q sqrt d)^2 = self  =>  p^2 = (X +- sqrt(norm)) / 2
        root_norm = fraction_sqrt(self.norm())
        if root_norm is not None:
            for p_squared in ((self._x + root_norm) / 2, (self._x - root_norm) / 2):
                p = fraction_sqrt(p_squared)
                if not p:
                    continue
                candidate = QuadNum._make(p, self._y / (2 * p), self._d)
                if candidate.sign() < 0:
                    candidate = -candidate
                if candidate * candidate == self:
                    return candidate
        raise ExactArithmeticError(f"{self} has no square root in Q(sqrt({self._d}))")

    # comparison

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._x == other._x and self._y == other._y and self._d == other._d

    def _compare(self, other: "QuadNum") -> int:
        if self._d == 1 and other._d == 1:
            return (self._x > other._x) - (self._x < other._x)
        return (self - other).sign()

    def __lt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._compare(other) < 0

    def __le__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._compare(other) <= 0

    def __gt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._compare(other) > 0

    def __ge__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._compare(other) >= 0

    def __hash__(self):
        if self._d == 1:
            return hash(self._x)
        return hash((self._x, self._y, self._d))

    def __bool__(self):
        return self._x != 0 or self._y != 0

    # conversion

    def __float__(self):
        return float(self._x) + float(self._y) * math.sqrt(self._d)

    def to_real(self, precision: int) -> BigReal:
        """Round to a BigReal; cancellation in x + y*sqrt(d) is avoided via the conjugate."""
        if self._d == 1:
            return BigReal.from_fraction(self._x, precision)
        wp = precision + GUARD_BITS
        x = from_rational(self._x.numerator, self._x.denominator, wp, ROUNDING)
        y = from_rational(self._y.numerator, self._y.denominator, wp, ROUNDING)
        y_root = mpf_mul(y, mpf_sqrt(from_int(self._d), wp, ROUNDING), wp, ROUNDING)
        if self._x == 0 or (self._x > 0) == (self._y > 0):
            return _wrap(mpf_add(x, y_root, wp, ROUNDING), precision)
        norm = self.norm()
        conjugate = mpf_sub(x, y_root, wp, ROUNDING)
        return _wrap(mpf_div(from_rational(norm.numerator, norm.denominator, wp, ROUNDING),
                             conjugate, wp, ROUNDING), precision)

    def __str__(self):
        if self._d == 1:
            return str(self._x)
        a, b, c = self.a, self.b, self.c
        op = "+" if b > 0 else "-"
        return f"({a}{op}{abs(b)}*sqrt({self._d}))/{c}"

    def __repr__(self):
        return f"QuadNum('{self}')"


PHI = QuadNum(1, 1, 2, 5)


_RATIONAL = re.compile(r"(?P<num>[+-]?\d+)(?:/(?P<den>\d+))?")
_QUOTIENT = re.compile(r"(?P<num>.+?)(?:/(?P<den>\d+))?")
_SURD = re.compile(
    r"(?:(?P<a>[+-]?\d+)(?P<op>[+-])|(?P<lead>[+-]?))(?P<b>\d+)?\*?sqrt\((?P<d>\d+)\)"
)


def parse_surd(text: str) -> QuadNum:
    """
    Parse ``INT``, ``INT/INT`` or ``(INT+INT*sqrt(INT))/INT``, ignoring whitespace.

    Shorter surd spellings such as ``sqrt(5)``, ``2*sqrt(3)`` or
    ``(1-sqrt(5))/2`` are accepted as well.
    """
    compact = re.sub(r"\s+", "", str(text))
    match = _RATIONAL.fullmatch(compact)
    if match:
        den = int(match["den"] or 1)
        if den == 0:
            raise SurdParseError(f"zero denominator in {text!r}")
        return QuadNum.from_rational(Fraction(int(match["num"]), den))
    match = _QUOTIENT.fullmatch(compact)
    numerator = match["num"] if match else ""
    den = int(match["den"] or 1) if match else 1
    if numerator.startswith("(") and numerator.endswith(")"):
        numerator = numerator[1:-1]
    surd = _SURD.fullmatch(numerator)
    if surd is None or den == 0:
        raise SurdParseError(f"Cannot parse surd literal {text!r}")
    a = int(surd["a"]) if surd["a"] else 0
    sign = surd["op"] if surd["a"] else surd["lead"]
    b = int(surd["b"] or 1) * (-1 if sign == "-" else 1)
    return QuadNum(a, b, den, int(surd["d"]))


def as_quad(value) -> QuadNum:
    """Coerce an int, Fraction, surd string or QuadNum into a QuadNum."""
    if isinstance(value, QuadNum):
        return value
    if isinstance(value, str):
        return parse_surd(value)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return QuadNum.from_rational(value)
    raise ExactArithmeticError(f"Cannot interpret {value!r} as an exact number")


_OPERATIONS = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "div": lambda x, y: x / y,
}


def quad_arith(x: QuadNum, y: QuadNum, op: str) -> QuadNum:
    try:
        return _OPERATIONS[op](as_quad(x), as_quad(y))
    except KeyError:
        raise ExactArithmeticError(f"Unknown operation {op!r}") from None


def galois_conjugate(x: QuadNum) -> QuadNum:
    return as_quad(x).conjugate()


def to_real(x: QuadNum, precision: int) -> BigReal:
    return as_quad(x).to_real(precision)
