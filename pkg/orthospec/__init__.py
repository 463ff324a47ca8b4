# Configuration
from orthospec.config import (
    set_default_precision,
    get_default_precision,
    set_default_tolerance,
    get_default_tolerance,
    set_default_max_terms,
    get_default_max_terms,
)

# Core Components
from orthospec.identities import catalog, get_template, instantiate, verify, cross_validate
from orthospec.runner import Runner, make_runner
from orthospec.geometry import build_model, enumerate_terms

# Types & Exceptions
from orthospec.types import VerificationReport, ReportRecord, CrossCheck, OrbitEnumeration

from orthospec.exceptions import (
    OrthospecError,
    IdentityError,
    UnknownIdentityError,
    InvalidParameterError,
    VerificationError,
    CrossValidationError,
)

__version__ = "0.1.0"

__all__ = [
    "set_default_precision",
    "get_default_precision",
    "set_default_tolerance",
    "get_default_tolerance",
    "set_default_max_terms",
    "get_default_max_terms",
    "catalog",
    "get_template",
    "instantiate",
    "verify",
    "cross_validate",
    "Runner",
    "make_runner",
    "build_model",
    "enumerate_terms",
    "VerificationReport",
    "ReportRecord",
    "CrossCheck",
    "OrbitEnumeration",
    "OrthospecError",
    "IdentityError",
    "UnknownIdentityError",
    "InvalidParameterError",
    "VerificationError",
    "CrossValidationError",
]
