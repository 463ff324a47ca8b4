"""
Cross ratios of boundary points and of geodesics.

[z1, z2, z3, z4] = (z1 - z2)(z4 - z3) / ((z1 - z3)(z4 - z2)); a factor that
contains infinity cancels against the other one, so the value is the
algebraic limit.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from ..exceptions import CrossingGeodesicsError, DegenerateCrossRatioError
from ..exact import INF, BoundaryPoint, QuadNum, as_boundary_point
from ..numerics import BigReal, acosh, cosh, sqrt
from .mobius import Mobius


def _difference(z: BoundaryPoint, w: BoundaryPoint) -> Optional[QuadNum]:
    """z - w, or None for an infinite factor."""
    if z is INF and w is INF:
        return QuadNum.from_rational(0)
    if z is INF or w is INF:
        return None
    return z - w


def cross_ratio4(z1, z2, z3, z4) -> QuadNum:
    points = [as_boundary_point(z) for z in (z1, z2, z3, z4)]
    if len(set(points)) < 3:
        raise DegenerateCrossRatioError(f"cross ratio of {points} needs three distinct points")
    z1, z2, z3, z4 = points
    numerator = [_difference(z1, z2), _difference(z4, z3)]
    denominator = [_difference(z1, z3), _difference(z4, z2)]
    infinite_num = numerator.count(None)
    infinite_den = denominator.count(None)
    if infinite_num > infinite_den:
        raise DegenerateCrossRatioError(f"cross ratio of {points} is infinite")
    if infinite_num < infinite_den:
        return QuadNum.from_rational(0)
    top, bottom = QuadNum.from_rational(1), QuadNum.from_rational(1)
    for factor in numerator:
        if factor is not None:
            top = top * factor
    for factor in denominator:
        if factor is not None:
            bottom = bottom * factor
    if bottom == 0:
        raise DegenerateCrossRatioError(f"cross ratio of {points} is infinite")
    return top / bottom


@dataclass(frozen=True, init=False)
class Geodesic:
    """The geodesic [x, y]; endpoints are unordered and stored sorted (infinity last)."""
    start: BoundaryPoint
    end: BoundaryPoint

    def __init__(self, x, y):
        x, y = as_boundary_point(x), as_boundary_point(y)
        if x == y:
            raise DegenerateCrossRatioError(f"geodesic endpoints coincide at {x}")
        if y < x:
            x, y = y, x
        object.__setattr__(self, "start", x)
        object.__setattr__(self, "end", y)

    @property
    def endpoints(self) -> Tuple[BoundaryPoint, BoundaryPoint]:
        return self.start, self.end

    def image(self, m: Mobius) -> "Geodesic":
        return Geodesic(m.apply(self.start), m.apply(self.end))

    def shares_endpoint(self, other: "Geodesic") -> bool:
        return bool(set(self.endpoints) & set(other.endpoints))

    def __str__(self):
        return f"[{self.start}, {self.end}]"


def geodesic_cross_ratio(g1: Geodesic, g2: Geodesic) -> QuadNum:
    """
    Cross ratio of two disjoint geodesics, in (0, 1].

    The four endpoints are put in cyclic boundary order starting with g1's
    pair; geodesics with a common endpoint give exactly 1.
    """
    if g1 == g2:
        raise DegenerateCrossRatioError(f"cross ratio of {g1} with itself")
    if g1.shares_endpoint(g2):
        return QuadNum.from_rational(1)
    ordered = sorted(g1.endpoints + g2.endpoints)
    positions = {ordered.index(p) for p in g1.endpoints}
    if positions in ({0, 2}, {1, 3}):
        raise CrossingGeodesicsError(f"geodesics {g1} and {g2} cross")
    start = {frozenset({0, 1}): 0, frozenset({1, 2}): 1,
             frozenset({2, 3}): 2, frozenset({0, 3}): 3}[frozenset(positions)]
    return cross_ratio4(*(ordered[(start + k) % 4] for k in range(4)))


def cross_ratio_to_distance(value: BigReal) -> BigReal:
    """l with 1/cosh^2(l/2) = value."""
    return 2 * acosh(1 / sqrt(value))


def distance_to_cross_ratio(length: BigReal) -> BigReal:
    half = cosh(length / 2)
    return 1 / (half * half)


def geodesic_distance(g1: Geodesic, g2: Geodesic, precision: int) -> BigReal:
    """Length of the common perpendicular, 2 arccosh(1/sqrt(cr))."""
    return cross_ratio_to_distance(geodesic_cross_ratio(g1, g2).to_real(precision))
