from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

from ..exact import QuadNum
from ..numerics import BigReal, acosh, sqrt


@dataclass
class OrbitEnumeration:
    kind: str
    parameters: Dict[str, Any]
    families: Dict[str, List[QuadNum]]
    finite_terms: List[QuadNum] = field(default_factory=list)
    rhs_coefficient: Fraction = Fraction(0)

    @property
    def terms(self) -> List[QuadNum]:
        """Finite terms followed by each family prefix, in family order."""
        result = list(self.finite_terms)
        for values in self.families.values():
            result.extend(values)
        return result

    @property
    def term_count(self) -> int:
        return len(self.finite_terms) + sum(len(v) for v in self.families.values())

    def lengths(self, precision: int) -> Dict[str, List[BigReal]]:
        """Orthogeodesic lengths 2 arccosh(1/sqrt(x)) per family; finite terms under ``"finite"``."""
        def length(value: QuadNum) -> BigReal:
            return 2 * acosh(1 / sqrt(value.to_real(precision)))

        result = {"finite": [length(v) for v in self.finite_terms]}
        for name, values in self.families.items():
            result[name] = [length(v) for v in values]
        return result
