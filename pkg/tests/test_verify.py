import logging
import os
from fractions import Fraction
from unittest.mock import patch

import pytest

from orthospec.exact import QuadNum
from orthospec.exceptions import ArgumentRangeError, InvalidParameterError, NonDecreasingTermsError
from orthospec.identities import (
    CATALOG,
    Decay,
    Identity,
    NumericArgument,
    PiMultiple,
    Series,
    instantiate,
    verify,
)
from orthospec.identities.verify import evaluate_argument
from orthospec.numerics import BigReal, pi_squared
from orthospec.types import ReportRecord

TOL = BigReal.from_decimal("1e-30", 256)


def make_identity(term, start=1, decay=Decay.GEOMETRIC) -> Identity:
    return Identity(id="custom", parameters={}, series=[Series("custom", term, start=start, decay=decay)],
                    finite_terms=[], rhs=PiMultiple(Fraction(1, 6)))


@pytest.mark.parametrize("id", ["eq-5.8a", "eq-5.8b", "eq-4.7"])
def test_golden_identities_to_thirty_digits(id):
    report = verify(instantiate(id), precision=256, tolerance="1e-30", max_terms=40)
    assert report.converged
    assert report.abs_error < TOL
    assert report.tail_kind == "geometric"
    assert all(report.doubling_checks.values())


def test_golden_pair_sums_to_zeta_two():
    """The squares and products halves add up to pi^2/6."""
    a = verify(instantiate("eq-5.8a"), precision=256, tolerance="1e-30", max_terms=40)
    b = verify(instantiate("eq-5.8b"), precision=256, tolerance="1e-30", max_terms=40)
    assert abs(a.partial_sum + b.partial_sum - pi_squared(256) / 6) < 2 * TOL


def test_pi_squared_over_ten():
    report = verify(instantiate("eq-12.3"), precision=256, tolerance="1e-30", max_terms=200)
    assert report.converged
    assert abs(report.partial_sum - pi_squared(256) / 10) < TOL


@pytest.mark.parametrize("n", [1, 2, 3])
def test_fibonacci_matrix_powers(n):
    report = verify(instantiate("eq-8.7", n=n), precision=256, tolerance="1e-40", max_terms=40)
    assert report.converged


def test_geometric_ratio_reaches_pi_squared_over_twelve():
    report = verify(instantiate("eq-7.1", n=2), precision=256, tolerance="1e-25", max_terms=120)
    assert report.converged
    assert abs(report.rhs_value - pi_squared(256) / 12) < TOL
    assert report.abs_error < BigReal.from_decimal("1e-25", 256)


def test_slow_series_uses_integral_tail():
    """A capped Basel run still converges because the integral tail covers the remainder."""
    report = verify(instantiate("eq-13.3"), precision=64, tolerance="1e-2", max_terms=2000)
    assert report.terms_used == {"1/k^2": 2000}
    assert report.tail_kind == "integral"
    assert report.converged
    assert report.abs_error <= report.tail_estimate


@pytest.mark.skipif(not os.getenv("ORTHOSPEC_SLOW"), reason="set ORTHOSPEC_SLOW=1 for the million-term run")
def test_basel_million_terms():
    report = verify(instantiate("eq-13.3"), precision=128, tolerance="1e-4", max_terms=10 ** 6)
    assert report.converged
    assert report.abs_error < BigReal.from_decimal("1e-4", 128)


@pytest.mark.parametrize("template", CATALOG, ids=lambda t: t.id)
def test_every_entry_converges(template):
    """Default parameters verify at moderate settings."""
    report = verify(template.instantiate(), precision=128, tolerance="1e-12", max_terms=2000)
    assert report.converged, report.text()


def test_max_terms_floor():
    with pytest.raises(InvalidParameterError):
        verify(instantiate("eq-5.8a"), max_terms=7)


@pytest.mark.parametrize("tolerance", ["0", "-1e-5", "abc"])
def test_bad_tolerance(tolerance):
    with pytest.raises(InvalidParameterError):
        verify(instantiate("eq-5.8a"), tolerance=tolerance, max_terms=40)


def test_argument_out_of_range():
    with pytest.raises(ArgumentRangeError):
        verify(make_identity(lambda n: QuadNum.from_rational(2)), precision=64, max_terms=8)
    with pytest.raises(ArgumentRangeError):
        verify(make_identity(lambda n: QuadNum.from_rational(0)), precision=64, max_terms=8)


def test_numeric_argument_out_of_range():
    bad = NumericArgument(lambda precision: BigReal.from_fraction(Fraction(3, 2), precision), label="3/2")
    with pytest.raises(ArgumentRangeError):
        verify(make_identity(lambda n: bad), precision=64, max_terms=8)


def test_non_decreasing_terms():
    with pytest.raises(NonDecreasingTermsError):
        verify(make_identity(lambda n: QuadNum.from_rational(Fraction(1, 2))), precision=64, max_terms=8)


def test_slow_ratio_is_logged(caplog):
    """Ratios above 9/10 make the geometric tail unreliable and are reported."""
    identity = make_identity(lambda n: QuadNum.from_rational(Fraction(19, 20) ** n))
    with caplog.at_level(logging.WARNING, logger="orthospec.identities.verify"):
        verify(identity, precision=64, tolerance="1e-3", max_terms=2000)
    assert any("slow ratio" in record.getMessage() for record in caplog.records)


def test_report_record_round_trip():
    report = verify(instantiate("eq-5.8a"), precision=128, tolerance="1e-20", max_terms=40)
    record = report.to_record()
    assert record.precision_bits == 128
    assert record.converged
    again = ReportRecord.from_json(record.to_json())
    assert again == record
    assert again.to_json() == record.to_json()
    assert float(record.abs_error) < 1e-20


def test_report_text_has_no_timing():
    first = verify(instantiate("eq-5.8a"), precision=128, tolerance="1e-20", max_terms=40)
    second = verify(instantiate("eq-5.8a"), precision=128, tolerance="1e-20", max_terms=40)
    assert first.text() == second.text()
    assert "converged" in first.text()
    row = first.to_record().csv_row()
    assert row[0] == "eq-5.8a"
    assert row[2] == f"1/f_{{2k}}^2={first.terms_used['1/f_{2k}^2']}"
    assert row[-1] == "true"


def test_rational_arguments_skip_surd_evaluation():
    argument = QuadNum.from_rational(Fraction(1, 9))
    with patch.object(QuadNum, "to_real", side_effect=AssertionError("surd path")):
        assert evaluate_argument(argument, 128) == BigReal.from_fraction(Fraction(1, 9), 128)
        with pytest.raises(ArgumentRangeError):
            evaluate_argument(QuadNum.from_rational(Fraction(9, 8)), 128)


def test_surd_arguments_are_rounded():
    argument = QuadNum.sqrt_of(5) - 2
    assert evaluate_argument(argument, 128) == argument.to_real(128)
