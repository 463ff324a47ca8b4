from fractions import Fraction

import pytest

from orthospec.exact import INF, QuadNum, as_quad
from orthospec.exceptions import (
    CrossingGeodesicsError,
    DegenerateCrossRatioError,
    FieldExtensionError,
    GeometryError,
    InfeasiblePairError,
    NonHyperbolicError,
)
from orthospec.geometry import (
    DoubleCrownI,
    FeasiblePair,
    Geodesic,
    Mobius,
    SurfaceDescriptor,
    cross_ratio4,
    cross_ratio_to_distance,
    distance_to_cross_ratio,
    geodesic_cross_ratio,
    geodesic_distance,
    in_open_arc,
    rhs_constant,
)
from orthospec.numerics import BigReal


@pytest.fixture
def trace_three():
    return Mobius(3, -1, 1, 0)


def test_mobius_action(trace_three):
    assert trace_three.apply(INF) == 3
    assert trace_three.apply(0) is INF
    assert trace_three(as_quad(2)) == Fraction(5, 2)
    assert Mobius(1, 0, 0, 1).apply(INF) is INF


def test_mobius_powers_and_inverse(trace_three):
    assert trace_three.power(3) == trace_three * trace_three * trace_three
    assert trace_three * trace_three.inverse() == Mobius.identity()
    assert trace_three.power(-2) * trace_three.power(2) == Mobius.identity()
    assert trace_three.det == 1
    assert trace_three.trace == 3


def test_singular_matrix():
    with pytest.raises(GeometryError):
        Mobius(1, 2, 2, 4)


def test_fixed_points(trace_three):
    """(larger, smaller) fixed points of z -> 3 - 1/z are (3 +- sqrt 5)/2."""
    assert trace_three.fixed_points() == (QuadNum(3, 1, 2, 5), QuadNum(3, -1, 2, 5))


def test_fixed_points_need_hyperbolic():
    with pytest.raises(NonHyperbolicError):
        Mobius(1, 1, 0, 1).fixed_points()
    with pytest.raises(NonHyperbolicError):
        Mobius(1, -1, 1, 0).fixed_points()


def test_fixed_points_outside_the_field():
    """t = 1 + sqrt 5 gives fixed points in a biquadratic extension."""
    t = QuadNum(1, 1, 1, 5)
    with pytest.raises(FieldExtensionError):
        Mobius(t, -1, 1, 0).fixed_points()


def test_cross_ratio_with_infinity():
    assert cross_ratio4(0, 1, 2, INF) == Fraction(1, 2)
    assert cross_ratio4(INF, 0, 1, 2) == cross_ratio4(2, 1, 0, INF)
    with pytest.raises(DegenerateCrossRatioError):
        cross_ratio4(1, 1, 2, 2)


def test_geodesic_normalizes_endpoints():
    g = Geodesic(INF, 3)
    assert g.endpoints == (3, INF)
    assert Geodesic(2, 1) == Geodesic(1, 2)
    with pytest.raises(DegenerateCrossRatioError):
        Geodesic(1, 1)


def test_geodesic_cross_ratio():
    assert geodesic_cross_ratio(Geodesic(0, 1), Geodesic(2, INF)) == Fraction(1, 2)
    assert geodesic_cross_ratio(Geodesic(2, INF), Geodesic(0, 1)) == Fraction(1, 2)
    assert geodesic_cross_ratio(Geodesic(0, 1), Geodesic(1, INF)) == 1
    with pytest.raises(CrossingGeodesicsError):
        geodesic_cross_ratio(Geodesic(0, 2), Geodesic(1, INF))
    with pytest.raises(DegenerateCrossRatioError):
        geodesic_cross_ratio(Geodesic(0, 1), Geodesic(0, 1))


def test_cross_ratio_is_mobius_invariant(trace_three):
    g1, g2 = Geodesic(1, 2), Geodesic(3, INF)
    assert geodesic_cross_ratio(g1.image(trace_three), g2.image(trace_three)) == geodesic_cross_ratio(g1, g2)


def test_distance_round_trip():
    value = BigReal.from_fraction(Fraction(1, 9), 128)
    length = cross_ratio_to_distance(value)
    assert abs(distance_to_cross_ratio(length) - value) < BigReal.from_fraction(Fraction(1, 2 ** 110), 128)
    direct = geodesic_distance(Geodesic(0, 1), Geodesic(2, INF), 128)
    assert abs(direct - cross_ratio_to_distance(BigReal.from_fraction(Fraction(1, 2), 128))) < \
        BigReal.from_fraction(Fraction(1, 2 ** 110), 128)


def test_open_arc_wraps_through_infinity():
    assert in_open_arc(as_quad(5), as_quad(3), INF)
    assert in_open_arc(as_quad(-5), as_quad(3), as_quad(1))
    assert not in_open_arc(as_quad(2), as_quad(3), as_quad(1))


def test_feasible_pair_validates():
    DoubleCrownI(3).feasible_pair().validate()
    DoubleCrownI(QuadNum.sqrt_of(5)).feasible_pair().validate()


def test_infeasible_pairs():
    vertices = (as_quad(1), as_quad(2), as_quad(3), INF)
    with pytest.raises(InfeasiblePairError):
        FeasiblePair(Mobius.identity(), vertices, (3, 1), kind="broken").validate()
    with pytest.raises(InfeasiblePairError):
        FeasiblePair(Mobius(3, -1, 1, 0), (as_quad(2), as_quad(1), as_quad(3), INF), (3, 1), kind="broken").validate()


@pytest.mark.parametrize("surface, expected", [
    (SurfaceDescriptor(Fraction(-1), 2), Fraction(1, 3)),
    (SurfaceDescriptor(Fraction(-1, 2), 1), Fraction(1, 6)),
    (SurfaceDescriptor(Fraction(-1, 2), 1, enlarged_convention=True), Fraction(1, 3)),
    (SurfaceDescriptor(Fraction(-3, 2), 3, enlarged_convention=True), Fraction(1)),
])
def test_rhs_constant(surface, expected):
    assert rhs_constant(surface) == expected
