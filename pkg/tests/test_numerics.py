import random
from fractions import Fraction

import pytest

from orthospec.exact import PHI
from orthospec.exceptions import NumericDomainError
from orthospec.numerics import BigReal, li2, li2_series, log, pi_squared, rogers

PREC = 256


def close(a: BigReal, b: BigReal, bits: int = 240) -> bool:
    return abs(a - b) < BigReal.from_fraction(Fraction(1, 2 ** bits), PREC)


def test_bigreal_arithmetic_with_exact_operands():
    x = BigReal.from_fraction(Fraction(1, 3), PREC)
    assert close(x * 3, BigReal.one(PREC))
    assert close(1 - x, BigReal.from_fraction(Fraction(2, 3), PREC))
    assert close(x + Fraction(2, 3), BigReal.one(PREC))
    assert x < Fraction(1, 2)
    assert (-x).sign() == -1
    assert BigReal.zero(PREC).is_zero()


def test_from_decimal_parses_tolerances():
    tol = BigReal.from_decimal("1e-30", PREC)
    assert tol.sign() == 1
    assert float(tol) == pytest.approx(1e-30)


@pytest.mark.parametrize("text", ["abc", "inf", "nan"])
def test_from_decimal_rejects_non_finite(text):
    with pytest.raises(NumericDomainError):
        BigReal.from_decimal(text, PREC)


def test_precision_floor():
    with pytest.raises(NumericDomainError):
        BigReal.from_int(1, 32)


def test_division_by_zero():
    with pytest.raises(NumericDomainError):
        BigReal.one(PREC) / BigReal.zero(PREC)


def test_li2_special_values():
    """Li2 at 1, -1 and 1/2 against their closed forms."""
    zeta2 = pi_squared(PREC) / 6
    half = BigReal.from_fraction(Fraction(1, 2), PREC)
    ln2 = log(BigReal.from_int(2, PREC))
    assert close(li2(BigReal.one(PREC)), zeta2)
    assert close(li2(-BigReal.one(PREC)), -zeta2 / 2)
    assert close(li2(half), pi_squared(PREC) / 12 - ln2 * ln2 / 2)


@pytest.mark.parametrize("value", [Fraction(3, 10), Fraction(-2, 5), Fraction(1, 7)])
def test_li2_series_agrees_with_li2(value):
    x = BigReal.from_fraction(value, PREC)
    assert close(li2_series(x), li2(x))


def test_li2_domain():
    with pytest.raises(NumericDomainError):
        li2(BigReal.from_int(2, PREC))
    with pytest.raises(NumericDomainError):
        li2_series(BigReal.one(PREC))


def test_rogers_endpoints_and_golden_values():
    """L(0), L(1), L(1/2) and the golden-ratio values pi^2/10, pi^2/15."""
    p2 = pi_squared(PREC)
    assert rogers(BigReal.zero(PREC)).is_zero()
    assert close(rogers(BigReal.one(PREC)), p2 / 6)
    assert close(rogers(BigReal.from_fraction(Fraction(1, 2), PREC)), p2 / 12)
    assert close(rogers((PHI ** -1).to_real(PREC)), p2 / 10)
    assert close(rogers((PHI ** -2).to_real(PREC)), p2 / 15)


def test_rogers_reflection_at_random_points():
    """L(x) + L(1-x) = pi^2/6 to within 2^-240 at 256 bits."""
    rng = random.Random(20240611)
    target = pi_squared(PREC) / 6
    for _ in range(1000):
        x = BigReal.from_fraction(Fraction(rng.randint(1, 10 ** 12 - 1), 10 ** 12), PREC)
        assert close(rogers(x) + rogers(1 - x), target)


def test_rogers_domain():
    with pytest.raises(NumericDomainError):
        rogers(BigReal.from_fraction(Fraction(3, 2), PREC))
    with pytest.raises(NumericDomainError):
        rogers(BigReal.from_fraction(Fraction(-1, 2), PREC))


def test_rogers_is_increasing():
    grid = [BigReal.from_fraction(Fraction(k, 64), PREC) for k in range(65)]
    values = [rogers(x) for x in grid]
    assert all(a < b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("x", [Fraction(1, 2 ** j) for j in range(20, 201, 20)]
                         + [Fraction(1, 1000), Fraction(1, 3), Fraction(1, 2), Fraction(9, 10), Fraction(1)])
def test_rogers_small_argument_bound(x):
    """L(x) <= 2x(1 + |log x|); near zero L(x) behaves like x(1 + |log x|/2)."""
    value = BigReal.from_fraction(x, PREC)
    bound = value * 2 * (abs(log(value)) + 1) if x < 1 else BigReal.from_fraction(2, PREC)
    assert rogers(value) <= bound
