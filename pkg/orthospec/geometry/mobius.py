"""2x2 exact matrices acting on the extended boundary line."""
from typing import Tuple

from ..exceptions import ExactArithmeticError, FieldExtensionError, GeometryError, NonHyperbolicError
from ..exact import INF, BoundaryPoint, QuadNum, as_quad


class Mobius:
    """
    z -> (a z + b) / (c z + d) with exact entries and ad - bc != 0.

    Products compose actions: ``(m * n)(z) == m(n(z))``.
    """
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        a, b, c, d = (as_quad(v) for v in (a, b, c, d))
        if a * d - b * c == 0:
            raise GeometryError(f"singular matrix [[{a}, {b}], [{c}, {d}]]")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Mobius is immutable")

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, shift=1) -> "Mobius":
        return cls(1, shift, 0, 1)

    @property
    def entries(self) -> Tuple[QuadNum, QuadNum, QuadNum, QuadNum]:
        return self.a, self.b, self.c, self.d

    @property
    def det(self) -> QuadNum:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> QuadNum:
        return self.a + self.d

    def __mul__(self, other: "Mobius") -> "Mobius":
        if not isinstance(other, Mobius):
            return NotImplemented
        return Mobius(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Mobius":
        # adjugate; acts identically to the true inverse
        return Mobius(self.d, -self.b, -self.c, self.a)

    def power(self, n: int) -> "Mobius":
        base = self if n >= 0 else self.inverse()
        result = Mobius.identity()
        n = abs(n)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def apply(self, point: BoundaryPoint) -> BoundaryPoint:
        if point is INF:
            return INF if self.c == 0 else self.a / self.c
        denominator = self.c * point + self.d
        if denominator == 0:
            return INF
        return (self.a * point + self.b) / denominator

    __call__ = apply

    def is_hyperbolic(self) -> bool:
        det = self.det
        return det > 0 and self.trace * self.trace > 4 * det

    def fixed_points(self) -> Tuple[QuadNum, QuadNum]:
        """(larger, smaller) real fixed points of a hyperbolic transformation."""
        if not self.is_hyperbolic():
            raise NonHyperbolicError(f"{self!r} is not hyperbolic (trace {self.trace}, det {self.det})")
        if self.c == 0:
            raise GeometryError(f"{self!r} fixes infinity")
        discriminant = (self.a - self.d) ** 2 + 4 * self.b * self.c
        try:
            root = discriminant.sqrt()
            plus = (self.a - self.d + root) / (2 * self.c)
            minus = (self.a - self.d - root) / (2 * self.c)
        except ExactArithmeticError as e:
            raise FieldExtensionError(f"fixed points of {self!r} leave the quadratic field") from e
        return (plus, minus) if plus > minus else (minus, plus)

    def __eq__(self, other):
        if not isinstance(other, Mobius):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Mobius([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


def apply(m: Mobius, point: BoundaryPoint) -> BoundaryPoint:
    return m.apply(point)


def fixed_points(m: Mobius) -> Tuple[QuadNum, QuadNum]:
    return m.fixed_points()
