"""Feasible pairs (T, P) and the surface data that fixes an identity's total."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from ..exceptions import InfeasiblePairError
from ..exact import BoundaryPoint
from .cross_ratio import Geodesic
from .mobius import Mobius


def in_open_arc(x: BoundaryPoint, start: BoundaryPoint, end: BoundaryPoint) -> bool:
    """Whether x lies strictly inside the boundary arc running upward from start to end."""
    if start < end:
        return start < x < end
    return x > start or x < end


@dataclass(frozen=True)
class SurfaceDescriptor:
    euler_characteristic: Fraction
    boundary_cusps: int
    enlarged_convention: bool = False

    @property
    def rhs_coefficient(self) -> Fraction:
        """Coefficient of pi^2 in the identity's total."""
        chi = Fraction(self.euler_characteristic)
        sign = -1 if self.enlarged_convention else 1
        return -(6 * chi + sign * self.boundary_cusps) / 12


def rhs_constant(surface: SurfaceDescriptor) -> Fraction:
    return surface.rhs_coefficient


@dataclass(frozen=True)
class FeasiblePair:
    """
    A transformation T together with an ideal polygon P.

    ``vertices`` are listed in increasing cyclic order; side i joins vertex i
    to vertex i+1 (mod n). ``paired_sides = (i, j)`` means T maps side i onto
    side j, and every other vertex of P lands in the open arc outside side j.
    """
    transform: Mobius
    vertices: Tuple[BoundaryPoint, ...]
    paired_sides: Tuple[int, int]
    kind: str
    parameters: Dict[str, Any] = field(default_factory=dict, compare=False)
    axis: Optional[Geodesic] = None

    def side(self, index: int) -> Tuple[BoundaryPoint, BoundaryPoint]:
        n = len(self.vertices)
        return self.vertices[index % n], self.vertices[(index + 1) % n]

    def validate(self) -> None:
        vertices = self.vertices
        n = len(vertices)
        if n < 3 or len(set(vertices)) != n:
            raise InfeasiblePairError(f"{self.kind}: polygon needs at least three distinct vertices")
        descents = sum(1 for i in range(n) if vertices[(i + 1) % n] < vertices[i])
        if descents != 1:
            raise InfeasiblePairError(f"{self.kind}: vertices are not in cyclic order")

        source, target = self.paired_sides
        start, end = self.side(target)
        image = {self.transform.apply(v) for v in self.side(source)}
        if image != {start, end}:
            raise InfeasiblePairError(
                f"{self.kind}: side {source} is not mapped onto side {target}")
        on_source = set(self.side(source))
        for v in vertices:
            if v in on_source:
                continue
            if not in_open_arc(self.transform.apply(v), start, end):
                raise InfeasiblePairError(
                    f"{self.kind}: T({v}) falls inside the polygon's boundary arcs")

        if self.axis is not None:
            for endpoint in self.axis.endpoints:
                if self.transform.apply(endpoint) != endpoint:
                    raise InfeasiblePairError(f"{self.kind}: axis endpoint {endpoint} is not fixed")
