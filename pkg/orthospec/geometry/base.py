import logging
from abc import ABC, abstractmethod
from typing import Dict, Iterator, List, Tuple

from ..exceptions import InvalidParameterError, ModelMismatchError
from ..types.orbit import OrbitEnumeration
from .cross_ratio import Geodesic, geodesic_cross_ratio
from .feasible import FeasiblePair, SurfaceDescriptor
from .mobius import Mobius

logger = logging.getLogger(__name__)

# Only the pair adjacent to a fixed point may touch; more means the orbit never leaves it
MAX_SHARED_ENDPOINTS = 1

GeodesicPair = Tuple[Geodesic, Geodesic]


class OrbitModel(ABC):
    """
    A feasible pair together with explicit orbit representatives.

    Subclasses list the infinite families as generators of geodesic pairs and
    the finitely many remaining pairs; ``enumerate`` turns both into cross ratios.
    """
    kind: str = ""

    def __init__(self, **parameters):
        self.parameters = parameters

    @abstractmethod
    def feasible_pair(self) -> FeasiblePair:
        pass

    @abstractmethod
    def surface(self) -> SurfaceDescriptor:
        pass

    @abstractmethod
    def families(self) -> Dict[str, Iterator[GeodesicPair]]:
        """
        Infinite orbit families in their canonical order.

        Returns
        -------
        dict
            family name -> fresh generator of (g1, g2) geodesic pairs.
        """
        pass

    @abstractmethod
    def finite_pairs(self) -> List[GeodesicPair]:
        pass

    @staticmethod
    def orbit(transform: Mobius, geodesic: Geodesic, start: int) -> Iterator[Geodesic]:
        """transform^n(geodesic) for n = start, start + 1, ..."""
        current = geodesic.image(transform.power(start))
        while True:
            yield current
            current = current.image(transform)

    def enumerate(self, count: int) -> OrbitEnumeration:
        if count < 1:
            raise InvalidParameterError(f"count must be positive, got {count}")
        self.feasible_pair().validate()
        finite = [geodesic_cross_ratio(g1, g2) for g1, g2 in self.finite_pairs()]
        families = {}
        for name, pairs in self.families().items():
            values = []
            shared = 0
            while len(values) < count:
                g1, g2 = next(pairs)
                # a representative sharing an endpoint contributes L(1) once
                if g1.shares_endpoint(g2):
                    shared += 1
                    if shared > MAX_SHARED_ENDPOINTS:
                        raise ModelMismatchError(f"{self.kind}: family {name} keeps producing geodesics "
                                                 f"that share an endpoint")
                    finite.append(geodesic_cross_ratio(g1, g2))
                    continue
                values.append(geodesic_cross_ratio(g1, g2))
            families[name] = values
        logger.debug(f"{self.kind}: {count} terms in each of {len(families)} families, "
                     f"{len(finite)} finite terms")
        return OrbitEnumeration(
            kind=self.kind,
            parameters=dict(self.parameters),
            families=families,
            finite_terms=finite,
            rhs_coefficient=self.surface().rhs_coefficient,
        )

    def __repr__(self):
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        return f"{type(self).__name__}({params})"
