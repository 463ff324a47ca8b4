from .mobius import Mobius, apply, fixed_points
from .cross_ratio import (
    Geodesic,
    cross_ratio4,
    geodesic_cross_ratio,
    geodesic_distance,
    cross_ratio_to_distance,
    distance_to_cross_ratio,
)
from .feasible import FeasiblePair, SurfaceDescriptor, rhs_constant, in_open_arc
from .base import OrbitModel
from .models import (
    DoubleCrownI,
    CrownI,
    DoubleCrownII,
    CrownII,
    ThirdPair,
    Parabolic,
    EvenPeriodCF,
    MODELS,
    build_model,
    enumerate_terms,
)

__all__ = [
    "Mobius",
    "apply",
    "fixed_points",
    "Geodesic",
    "cross_ratio4",
    "geodesic_cross_ratio",
    "geodesic_distance",
    "cross_ratio_to_distance",
    "distance_to_cross_ratio",
    "FeasiblePair",
    "SurfaceDescriptor",
    "rhs_constant",
    "in_open_arc",
    "OrbitModel",
    "DoubleCrownI",
    "CrownI",
    "DoubleCrownII",
    "CrownII",
    "ThirdPair",
    "Parabolic",
    "EvenPeriodCF",
    "MODELS",
    "build_model",
    "enumerate_terms",
]
