from .quadnum import (
    QuadNum,
    PHI,
    as_quad,
    parse_surd,
    quad_arith,
    galois_conjugate,
    to_real,
    split_square,
    fraction_sqrt,
)
from .boundary import INF, Infinity, BoundaryPoint, is_infinite, as_boundary_point

__all__ = [
    "QuadNum",
    "PHI",
    "as_quad",
    "parse_surd",
    "quad_arith",
    "galois_conjugate",
    "to_real",
    "split_square",
    "fraction_sqrt",
    "INF",
    "Infinity",
    "BoundaryPoint",
    "is_infinite",
    "as_boundary_point",
]
