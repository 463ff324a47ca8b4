from .base import (
    Argument,
    Decay,
    FiniteTerm,
    GeometricLink,
    Identity,
    NumericArgument,
    PiMultiple,
    RhsSum,
    RogersOf,
    Series,
)
from .templates import IdentityTemplate, ParameterKind, ParameterSpec
from .catalog import CATALOG, catalog, get_template, instantiate
from .verify import evaluate_argument, sum_series, verify
from .crossval import arithmetic_terms, cross_validate, geometric_terms

__all__ = [
    "Argument",
    "Decay",
    "FiniteTerm",
    "GeometricLink",
    "Identity",
    "NumericArgument",
    "PiMultiple",
    "RhsSum",
    "RogersOf",
    "Series",
    "IdentityTemplate",
    "ParameterKind",
    "ParameterSpec",
    "CATALOG",
    "catalog",
    "get_template",
    "instantiate",
    "evaluate_argument",
    "sum_series",
    "verify",
    "arithmetic_terms",
    "geometric_terms",
    "cross_validate",
]
