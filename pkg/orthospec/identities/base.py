"""
Building blocks of a Rogers-dilogarithm identity.

An identity is a list of series (each a term function over an index range),
finitely many extra terms, and an exact right-hand side. Arguments are exact
QuadNums except where a closed form only exists numerically.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from ..exact import QuadNum, as_quad
from ..exceptions import ArgumentRangeError
from ..numerics import BigReal, pi_squared, rogers


@dataclass(frozen=True)
class NumericArgument:
    """An argument with no exact closed form; ``evaluate(precision)`` returns it as a BigReal."""
    evaluate: Callable[[int], BigReal]
    label: str = ""

    def __str__(self):
        return self.label or "<numeric>"


Argument = Union[QuadNum, NumericArgument]


class Decay(str, Enum):
    GEOMETRIC = "geometric"
    QUADRATIC = "quadratic"


@dataclass(frozen=True)
class Series:
    """
    sum over n >= start of weight * L(term(n)).

    ``decay`` selects the tail model. Quadratic series have terms close to
    ``coefficient / n^2``; the coefficient feeds the integral tail bound.
    ``family`` names the orbit family the series enumerates, if any.
    """
    name: str
    term: Callable[[int], Argument]
    start: int = 1
    weight: Fraction = Fraction(1)
    decay: Decay = Decay.GEOMETRIC
    coefficient: float = 1.0
    family: Optional[str] = None

    def arguments(self, count: int) -> List[Argument]:
        return [self.term(n) for n in range(self.start, self.start + count)]


@dataclass(frozen=True)
class FiniteTerm:
    argument: Argument
    weight: Fraction = Fraction(1)
    label: str = ""


@dataclass(frozen=True)
class PiMultiple:
    coefficient: Fraction

    def evaluate(self, precision: int) -> BigReal:
        return self.coefficient * pi_squared(precision)

    def __str__(self):
        c = Fraction(self.coefficient)
        if c == 1:
            return "pi^2"
        if c.numerator == 1:
            return f"pi^2/{c.denominator}"
        if c.denominator == 1:
            return f"{c.numerator}*pi^2"
        return f"{c.numerator}*pi^2/{c.denominator}"


@dataclass(frozen=True)
class RogersOf:
    argument: QuadNum
    coefficient: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "argument", as_quad(self.argument))
        if not 0 <= self.argument <= 1:
            raise ArgumentRangeError(f"L({self.argument}) is outside [0, 1]")

    def evaluate(self, precision: int) -> BigReal:
        return self.coefficient * rogers(self.argument.to_real(precision))

    def __str__(self):
        prefix = "" if self.coefficient == 1 else f"{self.coefficient}*"
        return f"{prefix}L({self.argument})"


@dataclass(frozen=True)
class RhsSum:
    parts: Tuple[Union[PiMultiple, RogersOf], ...]

    def evaluate(self, precision: int) -> BigReal:
        total = BigReal.zero(precision)
        for part in self.parts:
            total = total + part.evaluate(precision)
        return total

    def __str__(self):
        return " + ".join(str(p) for p in self.parts)


Rhs = Union[PiMultiple, RogersOf, RhsSum]


@dataclass(frozen=True)
class GeometricLink:
    """
    The orbit model whose cross-ratio set reproduces an identity's arguments.

    ``families`` restricts the comparison to some orbit families (None: all);
    ``include_finite`` adds the model's finite terms. The arithmetic side is
    compared with every weight multiplied by ``multiplicity``, so an identity
    that is half of an orbit sum (weights 1/2 included) links with multiplicity 2.
    """
    model: str
    parameters: Dict[str, Any] = field(default_factory=dict, hash=False)
    families: Optional[Tuple[str, ...]] = None
    include_finite: bool = True
    multiplicity: int = 1

    def build(self):
        from ..geometry import build_model
        return build_model(self.model, **self.parameters)

    def feasible_pair(self):
        return self.build().feasible_pair()


@dataclass
class Identity:
    id: str
    parameters: Dict[str, Any]
    series: List[Series]
    finite_terms: List[FiniteTerm]
    rhs: Rhs
    link: Optional[GeometricLink] = None
    reference: str = ""
    note: str = ""

    @property
    def has_numeric_arguments(self) -> bool:
        if any(isinstance(t.argument, NumericArgument) for t in self.finite_terms):
            return True
        return any(isinstance(s.term(s.start), NumericArgument) for s in self.series)

    def describe_parameters(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.parameters.items())

    def __repr__(self):
        return f"Identity(id={self.id!r}, params={{{self.describe_parameters()}}}, series={len(self.series)})"
