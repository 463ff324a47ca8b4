import os
from typing import Optional

DEFAULT_PRECISION = 256
DEFAULT_TOLERANCE = "1e-30"
DEFAULT_MAX_TERMS = 100000
DEFAULT_WORKERS = 4

# Explicit overrides; None means "read the environment"
_PRECISION: Optional[int] = None
_TOLERANCE: Optional[str] = None
_MAX_TERMS: Optional[int] = None

def set_default_precision(precision: Optional[int]) -> None:
    """Sets the process-wide default precision in bits."""
    global _PRECISION
    _PRECISION = precision

def get_default_precision() -> int:
    """Retrieves the default precision, honouring ORTHOSPEC_PRECISION."""
    if _PRECISION is not None:
        return _PRECISION
    return int(os.getenv("ORTHOSPEC_PRECISION", DEFAULT_PRECISION))

def set_default_tolerance(tolerance: Optional[str]) -> None:
    """Sets the default absolute tolerance as a decimal literal; None restores the environment."""
    global _TOLERANCE
    _TOLERANCE = tolerance

def get_default_tolerance() -> str:
    """Retrieves the default tolerance literal, honouring ORTHOSPEC_TOLERANCE."""
    if _TOLERANCE is not None:
        return _TOLERANCE
    return os.getenv("ORTHOSPEC_TOLERANCE", DEFAULT_TOLERANCE)

def set_default_max_terms(max_terms: Optional[int]) -> None:
    """Sets the default per-series term cap; None restores the environment."""
    global _MAX_TERMS
    _MAX_TERMS = max_terms

def get_default_max_terms() -> int:
    """Retrieves the default term cap, honouring ORTHOSPEC_MAX_TERMS."""
    if _MAX_TERMS is not None:
        return _MAX_TERMS
    return int(os.getenv("ORTHOSPEC_MAX_TERMS", DEFAULT_MAX_TERMS))

def get_worker_count() -> int:
    """Number of worker threads for batch runs, from ORTHOSPEC_WORKERS."""
    return int(os.getenv("ORTHOSPEC_WORKERS", DEFAULT_WORKERS))
