from fractions import Fraction
from itertools import repeat

import pytest

from orthospec.contfrac import PeriodicCF
from orthospec.exact import INF, QuadNum
from orthospec.exceptions import InvalidParameterError, ModelMismatchError
from orthospec.geometry import (
    MODELS,
    CrownI,
    CrownII,
    DoubleCrownI,
    DoubleCrownII,
    EvenPeriodCF,
    Parabolic,
    Geodesic,
    OrbitModel,
    SurfaceDescriptor,
    ThirdPair,
    build_model,
    distance_to_cross_ratio,
    enumerate_terms,
)
from orthospec.numerics import BigReal


def test_registry_covers_every_model():
    assert set(MODELS) == {"double_crown_i", "crown_i", "double_crown_ii", "crown_ii",
                           "third_pair", "parabolic", "even_period_cf"}


def test_double_crown_families():
    """At t = 3 family i is 1/q_{n-1}^2 and family iv starts at (t-2)/(t-1)."""
    enumeration = DoubleCrownI(3).enumerate(3)
    assert enumeration.families["i"] == [Fraction(1, 9), Fraction(1, 64), Fraction(1, 441)]
    assert enumeration.families["iv"][:2] == [Fraction(1, 2), Fraction(1, 5)]
    assert enumeration.finite_terms == [Fraction(1, 2)]
    assert enumeration.rhs_coefficient == Fraction(1, 3)
    assert enumeration.term_count == 13


def test_crown_axis_term():
    """The axis [1/u, u] against [t, oo] gives 1 - 1/u^2."""
    model = CrownI(3)
    u = QuadNum(3, 1, 2, 5)
    enumeration = model.enumerate(2)
    assert list(enumeration.families) == ["i"]
    assert enumeration.finite_terms == [1 - 1 / u ** 2]
    assert enumeration.rhs_coefficient == Fraction(1, 6)


def test_third_pair_values():
    enumeration = ThirdPair(3).enumerate(1)
    assert enumeration.families["i"] == [Fraction(1, 9)]
    assert enumeration.families["ii"] == [Fraction(1, 9)]
    assert enumeration.families["iii"] == [Fraction(5, 9)]
    assert enumeration.families["iv"] == [Fraction(5, 54)]
    assert enumeration.finite_terms == [Fraction(5, 14)]


def test_double_crown_ii_values():
    """A = [[2, 1], [1, 1]]: squares 1/9 in both i families, products 1/5 and 1/2, finite bc/ad."""
    enumeration = DoubleCrownII(2, 1, 1, 1).enumerate(1)
    assert enumeration.families["i_inf"] == [Fraction(1, 9)]
    assert enumeration.families["i_zero"] == [Fraction(1, 9)]
    assert enumeration.families["ii_a"] == [Fraction(1, 5)]
    assert enumeration.families["ii_b"] == [Fraction(1, 2)]
    assert enumeration.finite_terms == [Fraction(1, 2)]


def test_crown_ii_has_single_family():
    enumeration = CrownII(2, 1, 1, 1).enumerate(2)
    assert list(enumeration.families) == ["i_inf"]
    assert len(enumeration.finite_terms) == 1


def test_parabolic_basel_orbit():
    """The shared-endpoint translate moves to the finite terms as L(1)."""
    enumeration = Parabolic().enumerate(3)
    assert enumeration.families["1,1"] == [Fraction(1, 4), Fraction(1, 9), Fraction(1, 16)]
    assert enumeration.finite_terms == [1]
    assert enumeration.rhs_coefficient == Fraction(1, 3)


def test_parabolic_rational_vertex():
    enumeration = Parabolic("2/5").enumerate(2)
    assert enumeration.families["1,1"] == [Fraction(4, 25), Fraction(4, 100)]
    assert enumeration.families["1,2"][0] == Fraction(6, 7 * 8)
    assert sorted(enumeration.finite_terms) == [1, 1]
    assert enumeration.rhs_coefficient == Fraction(2, 3)


def test_parabolic_rejects_unordered_vertices():
    with pytest.raises(InvalidParameterError):
        Parabolic("1/2,1/3")
    with pytest.raises(InvalidParameterError):
        Parabolic("3/2")


def test_even_period_model():
    model = EvenPeriodCF("1,2,3")
    assert model.cf.period == 6
    model.feasible_pair().validate()
    enumeration = model.enumerate(2)
    assert set(enumeration.families) == {f"{i},{j}" for i in range(3) for j in range(3)}
    assert all(0 < v <= 1 for v in enumeration.terms)
    assert enumeration.rhs_coefficient == 1


def test_even_period_accepts_periodic_cf():
    assert EvenPeriodCF(PeriodicCF([1, 2])).cf == PeriodicCF([1, 2])


def test_invalid_parameters():
    with pytest.raises(InvalidParameterError):
        DoubleCrownI(2)
    with pytest.raises(InvalidParameterError):
        DoubleCrownII(2, 1, 1, 2)
    with pytest.raises(InvalidParameterError):
        DoubleCrownI(3).enumerate(0)


def test_build_model_and_enumerate_terms():
    pair = build_model("double_crown_i", t=3).feasible_pair()
    enumeration = enumerate_terms(pair, "double_crown_i", 2)
    assert enumeration.families["i"][0] == Fraction(1, 9)
    with pytest.raises(ModelMismatchError):
        enumerate_terms(pair, "crown_i", 2)
    with pytest.raises(ModelMismatchError):
        build_model("nope")


def test_lengths_invert_cross_ratios():
    enumeration = DoubleCrownI(3).enumerate(2)
    lengths = enumeration.lengths(128)
    assert set(lengths) == {"finite", "i", "ii", "iii", "iv"}
    back = distance_to_cross_ratio(lengths["i"][0])
    assert abs(back - BigReal.from_fraction(Fraction(1, 9), 128)) < BigReal.from_fraction(Fraction(1, 2 ** 100), 128)


class TouchingOrbit(OrbitModel):
    """A family whose every representative shares an endpoint."""
    kind = "touching"

    def feasible_pair(self):
        return DoubleCrownI(3).feasible_pair()

    def surface(self):
        return SurfaceDescriptor(Fraction(-1), 2)

    def families(self):
        return {"stuck": repeat((Geodesic(0, 1), Geodesic(1, INF)))}

    def finite_pairs(self):
        return []


def test_endless_shared_endpoints_are_a_model_mismatch():
    with pytest.raises(ModelMismatchError):
        TouchingOrbit().enumerate(3)


@pytest.mark.parametrize("model", [Parabolic(), EvenPeriodCF(PeriodicCF([1, 2]))], ids=["parabolic", "even_period"])
def test_adjacent_pair_is_the_only_shared_endpoint(model):
    enumeration = model.enumerate(10)
    assert all(len(values) == 10 for values in enumeration.families.values())
