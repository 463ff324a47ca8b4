import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, Mapping, Tuple

from ..contfrac import PeriodicCF
from ..exact import as_quad
from ..exceptions import ExactArithmeticError, GeometryError, InvalidParameterError
from .base import Identity

logger = logging.getLogger(__name__)


class ParameterKind(str, Enum):
    INTEGER = "integer"
    RATIONAL = "rational"
    SURD = "surd"
    QUOTIENTS = "quotients"
    VERTICES = "vertices"


def _parse_vertex_list(text: str) -> tuple:
    parts = [p for p in str(text).replace(" ", "").strip("{}").split(",") if p]
    return tuple(as_quad(p) for p in parts)


_PARSERS: Dict[ParameterKind, Callable[[Any], Any]] = {
    ParameterKind.INTEGER: lambda raw: int(str(raw)),
    ParameterKind.RATIONAL: lambda raw: Fraction(str(raw)),
    ParameterKind.SURD: as_quad,
    ParameterKind.QUOTIENTS: lambda raw: raw if isinstance(raw, PeriodicCF) else PeriodicCF.parse(raw),
    ParameterKind.VERTICES: lambda raw: raw if isinstance(raw, tuple) else _parse_vertex_list(raw),
}


@dataclass(frozen=True)
class ParameterSpec:
    name: str
    kind: ParameterKind
    default: Any
    description: str = ""

    def parse(self, raw: Any) -> Any:
        try:
            return _PARSERS[self.kind](raw)
        except (ValueError, ZeroDivisionError, ExactArithmeticError) as e:
            raise InvalidParameterError(
                f"Parameter '{self.name}' expects a {self.kind.value}, got {raw!r}") from e


@dataclass(frozen=True)
class IdentityTemplate:
    """
    A catalog entry: an id, typed parameters with defaults, and a builder.

    ``instantiate`` parses overrides, fills defaults and calls the builder,
    which validates the values and returns a fresh Identity (with its own
    recurrence caches).
    """
    id: str
    parameters: Tuple[ParameterSpec, ...]
    reference: str
    builder: Callable[..., Identity] = field(compare=False)
    summary: str = ""

    @property
    def signature(self) -> str:
        return ", ".join(f"{p.name}={p.default}" for p in self.parameters)

    def instantiate(self, overrides: Mapping[str, Any] = None, **kwargs) -> Identity:
        given = dict(overrides or {}, **kwargs)
        known = {p.name: p for p in self.parameters}
        unknown = set(given) - set(known)
        if unknown:
            raise InvalidParameterError(
                f"{self.id} has no parameter(s) {', '.join(sorted(unknown))}; "
                f"expected: {', '.join(known) or 'none'}")
        values = {name: spec.parse(given.get(name, spec.default)) for name, spec in known.items()}
        logger.debug(f"instantiating {self.id} with {values}")
        try:
            identity = self.builder(**values)
        except (ExactArithmeticError, GeometryError) as e:
            raise InvalidParameterError(f"{self.id}: {e}") from e
        if not identity.reference:
            identity.reference = self.reference
        return identity

    def __repr__(self):
        return f"IdentityTemplate({self.id!r}, {self.signature})"
