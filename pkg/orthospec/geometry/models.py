"""
Orbit models: the feasible pairs whose cross-ratio sets produce the catalog.

Each model names its infinite families the way the identities refer to them,
so an identity's series can be matched family by family.
"""
import logging
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Type, Union

from ..contfrac import PeriodicCF
from ..exceptions import InvalidParameterError, ModelMismatchError
from ..exact import INF, QuadNum, as_quad
from ..types.orbit import OrbitEnumeration
from .base import GeodesicPair, OrbitModel
from .cross_ratio import Geodesic
from .feasible import FeasiblePair, SurfaceDescriptor
from .mobius import Mobius

logger = logging.getLogger(__name__)


def _pairs_with_fixed(moving: Iterator[Geodesic], fixed: Geodesic, moving_first: bool) -> Iterator[GeodesicPair]:
    for g in moving:
        yield (g, fixed) if moving_first else (fixed, g)


def _require_trace_parameter(t) -> QuadNum:
    t = as_quad(t)
    if not t > 2:
        raise InvalidParameterError(f"t must be > 2, got {t}")
    return t


class DoubleCrownI(OrbitModel):
    """T = [[t, -1], [1, 0]] acting on the polygon {1, t-1, t, oo}."""
    kind = "double_crown_i"

    def __init__(self, t):
        t = _require_trace_parameter(t)
        super().__init__(t=t)
        self.t = t
        self.transform = Mobius(t, -1, 1, 0)
        self.e1 = Geodesic(1, t - 1)
        self.e_inf = Geodesic(t, INF)

    def feasible_pair(self) -> FeasiblePair:
        return FeasiblePair(self.transform, (as_quad(1), self.t - 1, self.t, INF),
                            paired_sides=(3, 1), kind=self.kind, parameters=self.parameters)

    def surface(self) -> SurfaceDescriptor:
        return SurfaceDescriptor(Fraction(-1), 2)

    def families(self) -> Dict[str, Iterator[GeodesicPair]]:
        T = self.transform
        return {
            "i": _pairs_with_fixed(self.orbit(T, self.e_inf, 2), self.e_inf, True),
            "ii": _pairs_with_fixed(self.orbit(T, self.e1, 2), self.e1, False),
            "iii": _pairs_with_fixed(self.orbit(T, self.e_inf, 1), self.e1, False),
            "iv": _pairs_with_fixed(self.orbit(T, self.e1, 1), self.e_inf, True),
        }

    def finite_pairs(self) -> List[GeodesicPair]:
        return [(self.e1, self.e_inf)]


class CrownI(DoubleCrownI):
    """The same T with the tine collapsed to its axis [1/u, u]."""
    kind = "crown_i"

    def __init__(self, t):
        super().__init__(t)
        u, u_inverse = self.transform.fixed_points()
        self.axis = Geodesic(u_inverse, u)

    def feasible_pair(self) -> FeasiblePair:
        pair = super().feasible_pair()
        return FeasiblePair(pair.transform, pair.vertices, pair.paired_sides,
                            kind=self.kind, parameters=self.parameters, axis=self.axis)

    def surface(self) -> SurfaceDescriptor:
        return SurfaceDescriptor(Fraction(-1, 2), 1)

    def families(self) -> Dict[str, Iterator[GeodesicPair]]:
        return {"i": _pairs_with_fixed(self.orbit(self.transform, self.e_inf, 2), self.e_inf, True)}

    def finite_pairs(self) -> List[GeodesicPair]:
        return [(self.axis, self.e_inf)]


class DoubleCrownII(OrbitModel):
    """A = [[a, c], [b, d]] in SL(2, Z) with positive entries, polygon {0, c/d, a/b, oo}."""
    kind = "double_crown_ii"

    def __init__(self, a, b, c, d):
        a, b, c, d = (int(v) for v in (a, b, c, d))
        if min(a, b, c, d) < 1:
            raise InvalidParameterError(f"entries must be positive, got {(a, b, c, d)}")
        if a * d - b * c != 1:
            raise InvalidParameterError(f"ad - bc must be 1, got {a * d - b * c}")
        if a + d <= 2:
            raise InvalidParameterError(f"trace must exceed 2, got {a + d}")
        super().__init__(a=a, b=b, c=c, d=d)
        self.transform = Mobius(a, c, b, d)
        self.e0 = Geodesic(0, Fraction(c, d))
        self.e_inf = Geodesic(Fraction(a, b), INF)

    def feasible_pair(self) -> FeasiblePair:
        p = self.parameters
        vertices = (as_quad(0), as_quad(Fraction(p["c"], p["d"])), as_quad(Fraction(p["a"], p["b"])), INF)
        return FeasiblePair(self.transform, vertices, paired_sides=(3, 1),
                            kind=self.kind, parameters=self.parameters)

    def surface(self) -> SurfaceDescriptor:
        return SurfaceDescriptor(Fraction(-1), 2)

    def families(self) -> Dict[str, Iterator[GeodesicPair]]:
        A = self.transform
        return {
            "i_inf": _pairs_with_fixed(self.orbit(A, self.e_inf, 2), self.e_inf, True),
            "i_zero": _pairs_with_fixed(self.orbit(A, self.e0, 2), self.e0, False),
            "ii_a": _pairs_with_fixed(self.orbit(A, self.e_inf, 1), self.e0, False),
            "ii_b": _pairs_with_fixed(self.orbit(A, self.e0, 1), self.e_inf, True),
        }

    def finite_pairs(self) -> List[GeodesicPair]:
        return [(self.e0, self.e_inf)]


class CrownII(DoubleCrownII):
    kind = "crown_ii"

    def __init__(self, a, b, c, d):
        super().__init__(a, b, c, d)
        w, w_bar = self.transform.fixed_points()
        self.axis = Geodesic(w_bar, w)

    def feasible_pair(self) -> FeasiblePair:
        pair = super().feasible_pair()
        return FeasiblePair(pair.transform, pair.vertices, pair.paired_sides,
                            kind=self.kind, parameters=self.parameters, axis=self.axis)

    def surface(self) -> SurfaceDescriptor:
        return SurfaceDescriptor(Fraction(-1, 2), 1)

    def families(self) -> Dict[str, Iterator[GeodesicPair]]:
        return {"i_inf": _pairs_with_fixed(self.orbit(self.transform, self.e_inf, 2), self.e_inf, True)}

    def finite_pairs(self) -> List[GeodesicPair]:
        return [(self.axis, self.e_inf)]


class ThirdPair(OrbitModel):
    """T = [[t, -1], [1, 0]] on the polygon {2/t, t/2, t, oo}."""
    kind = "third_pair"

    def __init__(self, t):
        t = _require_trace_parameter(t)
        super().__init__(t=t)
        self.t = t
        self.transform = Mobius(t, -1, 1, 0)
        self.e2 = Geodesic(2 / t, t / 2)
        self.e_inf = Geodesic(t, INF)

    def feasible_pair(self) -> FeasiblePair:
        t = self.t
        return FeasiblePair(self.transform, (2 / t, t / 2, t, INF), paired_sides=(3, 1),
                            kind=self.kind, parameters=self.parameters)

    def surface(self) -> SurfaceDescriptor:
        return SurfaceDescriptor(Fraction(-1), 2)

    def families(self) -> Dict[str, Iterator[GeodesicPair]]:
        T = self.transform
        return {
            "i": _pairs_with_fixed(self.orbit(T, self.e_inf, 2), self.e_inf, True),
            "ii": _pairs_with_fixed(self.orbit(T, self.e2, 2), self.e2, False),
            "iii": _pairs_with_fixed(self.orbit(T, self.e2, 1), self.e_inf, True),
            "iv": _pairs_with_fixed(self.orbit(T, self.e_inf, 1), self.e2, False),
        }

    def finite_pairs(self) -> List[GeodesicPair]:
        return [(self.e2, self.e_inf)]


def _parse_vertices(vertices) -> tuple:
    if isinstance(vertices, str):
        vertices = [part for part in vertices.replace(" ", "").split(",") if part]
    return tuple(as_quad(v) for v in vertices)


class Parabolic(OrbitModel):
    """
    Translation x -> x + 1 on 0 = v_1 < ... < v_{n-1} = 1 < oo.

    ``vertices`` are the interior vertices strictly between 0 and 1. Family
    "i,j" pairs side [v_i, v_{i+1}] with the translates of side [v_j, v_{j+1}].
    """
    kind = "parabolic"

    def __init__(self, vertices: Union[str, Iterable] = ()):
        interior = _parse_vertices(vertices)
        previous = as_quad(0)
        for v in interior:
            if not previous < v < 1:
                raise InvalidParameterError(
                    f"interior vertices must increase strictly inside (0, 1), got {list(map(str, interior))}")
            previous = v
        super().__init__(vertices=interior)
        self.points = (as_quad(0),) + interior + (as_quad(1),)
        self.transform = Mobius.translation(1)
        self.sides = [Geodesic(self.points[i], self.points[i + 1]) for i in range(len(self.points) - 1)]

    @property
    def polygon_size(self) -> int:
        return len(self.points) + 1

    def feasible_pair(self) -> FeasiblePair:
        n = self.polygon_size
        return FeasiblePair(self.transform, self.points + (INF,), paired_sides=(n - 1, n - 2),
                            kind=self.kind, parameters=self.parameters)

    def surface(self) -> SurfaceDescriptor:
        n = self.polygon_size
        return SurfaceDescriptor(Fraction(2 - n, 2), n - 2, enlarged_convention=True)

    def families(self) -> Dict[str, Iterator[GeodesicPair]]:
        result = {}
        for i, side_i in enumerate(self.sides, start=1):
            for j, side_j in enumerate(self.sides, start=1):
                result[f"{i},{j}"] = _pairs_with_fixed(self.orbit(self.transform, side_j, 1), side_i, False)
        return result

    def finite_pairs(self) -> List[GeodesicPair]:
        return [(self.sides[i], self.sides[j])
                for i in range(len(self.sides)) for j in range(i)]


class EvenPeriodCF(OrbitModel):
    """
    The period matrix A of alpha = [a_0, ..., a_{l-1}] on the polygon of even
    convergents r_{-2} = 0, r_0, ..., r_{l-2} followed by the odd ones
    r_{l-1}, ..., r_1 and oo. Odd periods are doubled first.
    """
    kind = "even_period_cf"

    def __init__(self, cf):
        if not isinstance(cf, PeriodicCF):
            cf = PeriodicCF.parse(cf) if isinstance(cf, str) else PeriodicCF(cf)
        super().__init__(cf=cf)
        self.cf = cf.effective()
        l = self.cf.period
        self.half = l // 2
        self.transform = Mobius(*self.cf.period_matrix())
        alpha, alpha_bar = self.cf.value(), self.cf.conjugate_value()
        self.axis = Geodesic(alpha_bar, alpha)
        r = self.cf.convergent_point
        self.odd_sides = [Geodesic(r(2 * i + 1), r(2 * i - 1)) for i in range(self.half)]

    def feasible_pair(self) -> FeasiblePair:
        r = self.cf.convergent_point
        l = self.cf.period
        evens = tuple(r(n) for n in range(-2, l - 1, 2))
        odds = tuple(r(n) for n in range(l - 1, 0, -2))
        vertices = evens + odds + (INF,)
        return FeasiblePair(self.transform, vertices, paired_sides=(len(vertices) - 1, self.half),
                            kind=self.kind, parameters=self.parameters, axis=self.axis)

    def surface(self) -> SurfaceDescriptor:
        l = self.cf.period
        return SurfaceDescriptor(Fraction(-l, 4), self.half, enlarged_convention=True)

    def families(self) -> Dict[str, Iterator[GeodesicPair]]:
        result = {}
        for i, side_i in enumerate(self.odd_sides):
            for j, side_j in enumerate(self.odd_sides):
                result[f"{i},{j}"] = _pairs_with_fixed(self.orbit(self.transform, side_i, 1), side_j, True)
        return result

    def finite_pairs(self) -> List[GeodesicPair]:
        pairs = [(self.odd_sides[i], self.odd_sides[j])
                 for i in range(self.half) for j in range(i)]
        pairs.extend((self.axis, side) for side in self.odd_sides)
        return pairs


MODELS: Dict[str, Type[OrbitModel]] = {
    cls.kind: cls
    for cls in (DoubleCrownI, CrownI, DoubleCrownII, CrownII, ThirdPair, Parabolic, EvenPeriodCF)
}


def build_model(kind: str, **parameters) -> OrbitModel:
    if kind not in MODELS:
        raise ModelMismatchError(f"Unknown model '{kind}'. Available: {', '.join(MODELS)}")
    return MODELS[kind](**parameters)


def enumerate_terms(pair: FeasiblePair, model: str, count: int) -> OrbitEnumeration:
    """
    First ``count`` cross ratios of each orbit family of ``model``.

    The pair must be the one the model builds from ``pair.parameters``; it is
    validated before anything is enumerated.
    """
    if pair.kind != model:
        raise ModelMismatchError(f"pair of kind '{pair.kind}' given for model '{model}'")
    instance = build_model(model, **pair.parameters)
    if instance.feasible_pair() != pair:
        raise ModelMismatchError(f"pair does not match {instance!r}")
    pair.validate()
    return instance.enumerate(count)
