from fractions import Fraction

import pytest

from orthospec.exact import PHI, QuadNum
from orthospec.exceptions import InvalidParameterError, UnknownIdentityError
from orthospec.identities import (
    CATALOG,
    NumericArgument,
    PiMultiple,
    RogersOf,
    catalog,
    evaluate_argument,
    get_template,
    instantiate,
)
from orthospec.numerics import BigReal, pi_squared

PREC = 256


def test_catalog_size_and_unique_ids():
    ids = [template.id for template in catalog()]
    assert len(ids) == 38
    assert len(set(ids)) == len(ids)
    assert catalog() == list(CATALOG)


@pytest.mark.parametrize("template", CATALOG, ids=lambda t: t.id)
def test_every_entry_instantiates_with_defaults(template):
    """Default parameters give arguments inside (0, 1]."""
    identity = template.instantiate()
    assert identity.id == template.id
    assert identity.reference == template.reference
    for series in identity.series:
        for argument in series.arguments(3):
            evaluate_argument(argument, 128)
    for term in identity.finite_terms:
        evaluate_argument(term.argument, 128)


def test_unknown_identity():
    with pytest.raises(UnknownIdentityError):
        get_template("eq-99.9")
    with pytest.raises(UnknownIdentityError):
        instantiate("nope")


@pytest.mark.parametrize("id, params", [
    ("eq-5.3", {"t": "2"}),
    ("eq-5.3", {"t": "1/2"}),
    ("eq-5.3", {"t": "abc"}),
    ("eq-5.3", {"s": "3"}),
    ("eq-7.1", {"n": "1"}),
    ("eq-7.3a", {"x": "1"}),
    ("eq-8.4", {"a": 2, "b": 1, "c": 1, "d": 2}),
    ("eq-10.1", {"k": -1}),
    ("eq-13.2", {"vertices": "1/2,1/3"}),
    ("eq-13.5", {"p": 5, "q": 2}),
    ("prop-15.1", {"cf": "1,0"}),
])
def test_invalid_parameters(id, params):
    with pytest.raises(InvalidParameterError):
        instantiate(id, params)


def test_parameter_overrides_by_keyword():
    identity = instantiate("eq-5.3", t="10/3")
    assert identity.parameters["t"] == Fraction(10, 3)
    assert identity.series[0].term(1) == Fraction(9, 100)
    assert identity.describe_parameters() == "t=10/3"


def test_fresh_instances_do_not_share_state():
    first, second = instantiate("eq-5.3"), instantiate("eq-5.3")
    assert first.series[0].term is not second.series[0].term


def test_geometric_ratio_arguments():
    """n = 2 gives 2^k / (2^{k+1} - 1)^2."""
    identity = instantiate("eq-7.1", n=2)
    assert identity.series[0].arguments(4) == [
        Fraction(2 ** k, (2 ** (k + 1) - 1) ** 2) for k in range(1, 5)]
    assert identity.rhs == RogersOf(QuadNum.from_rational(Fraction(1, 2)))


def test_start_indices_give_expected_first_terms():
    assert instantiate("prop-4.1").series[1].term(0) == Fraction(1, 2)
    assert instantiate("eq-5.3b").series[0].term(1) == Fraction(1, 2)
    assert instantiate("eq-7.3b").series[0].term(1) == Fraction(2, 3)


def test_sinh_form_matches_trace_squares():
    """sinh^2(log u)/sinh^2(k log u) equals 1/q_{k-1}^2 term by term."""
    bound = BigReal.from_fraction(Fraction(1, 2 ** 240), PREC)
    for t in (3, 7):
        numeric = instantiate("eq-5.4", t=t).series[0]
        exact = instantiate("eq-5.2", t=t).series[0]
        assert numeric.start == exact.start
        for k in range(numeric.start, numeric.start + 30):
            argument = numeric.term(k)
            assert isinstance(argument, NumericArgument)
            assert abs(argument.evaluate(PREC) - exact.term(k).to_real(PREC)) < bound


def test_sinh_form_is_flagged_numeric():
    assert instantiate("eq-5.4").has_numeric_arguments
    assert not instantiate("eq-5.2").has_numeric_arguments


@pytest.mark.parametrize("n", [1, 2, 3])
def test_fibonacci_matrix_arguments_are_unit_fractions(n):
    identity = instantiate("eq-8.7", n=n)
    for argument in identity.series[0].arguments(10):
        assert argument.to_fraction().numerator == 1
    assert identity.rhs == RogersOf(PHI ** (-4 * n))
    assert identity.link.parameters["a"] * identity.link.parameters["d"] - \
        identity.link.parameters["b"] * identity.link.parameters["c"] == 1


@pytest.mark.parametrize("k", [0, 1])
def test_lucas_form_splits_the_h_series(k):
    """The two Lucas/Fibonacci series of the Lucas form reproduce 1/(t^2 H_n^2), n <= 2N."""
    count = 12
    split = instantiate("eq-11.1", k=k).series[0].arguments(2 * count)
    lucas_form = instantiate("eq-11.4", k=k).series
    pieces = lucas_form[0].arguments(count) + lucas_form[1].arguments(count)
    assert sorted(pieces) == sorted(split)
    assert lucas_form[2].arguments(count) == instantiate("eq-11.1", k=k).series[1].arguments(count)


@pytest.mark.parametrize("k", [0, 1])
def test_surd_form_splits_the_k_series(k):
    """The leading and trailing surd series reproduce 1/K_n^2, n <= 2N."""
    count = 12
    split = instantiate("eq-11.1", k=k).series[1].arguments(2 * count)
    surd_form = instantiate("eq-11.5", k=k).series
    pieces = surd_form[1].arguments(count) + surd_form[2].arguments(count)
    assert sorted(pieces) == sorted(split)


def test_rotated_numerators_match_determinants():
    """The rotated-numerator form gives the same argument as the determinant form in every family."""
    rotated = instantiate("thm-15.3", cf="1,2,3,1,2,3")
    determinant = instantiate("prop-15.1", cf="1,2,3,1,2,3")
    assert [s.name for s in rotated.series] == [s.name for s in determinant.series]
    for a, b in zip(rotated.series, determinant.series):
        assert a.start == b.start
        assert a.arguments(20) == b.arguments(20)
    assert [t.argument for t in rotated.finite_terms] == [t.argument for t in determinant.finite_terms]


def test_rhs_values():
    assert instantiate("eq-12.3").rhs == PiMultiple(Fraction(1, 10))
    assert instantiate("eq-13.2", vertices="1/3,1/2").rhs == PiMultiple(Fraction(1))
    assert str(instantiate("eq-8.4").rhs) == "pi^2/3"
    value = instantiate("eq-13.3").rhs.evaluate(PREC)
    assert abs(value - pi_squared(PREC) / 6) < BigReal.from_fraction(Fraction(1, 2 ** 250), PREC)
