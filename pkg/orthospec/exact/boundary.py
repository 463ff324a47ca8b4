"""Points of the extended real line: QuadNums plus a single point at infinity."""
from typing import Union

from .quadnum import QuadNum, as_quad


class Infinity:
    """The point at infinity; there is exactly one instance, ``INF``."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("orthospec.inf")

    # Ordering only: infinity sorts after every finite point.
    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __str__(self):
        return "oo"

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

BoundaryPoint = Union[QuadNum, Infinity]


def is_infinite(point) -> bool:
    return point is INF


def as_boundary_point(value) -> BoundaryPoint:
    """Coerce exact scalars and the spellings ``oo``/``inf`` into a BoundaryPoint."""
    if value is INF:
        return INF
    if isinstance(value, str) and value.strip().lower() in ("oo", "inf", "infinity"):
        return INF
    return as_quad(value)
