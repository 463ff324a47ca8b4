from .integers import fibonacci, lucas
from .recurrence import (
    Recurrence2,
    MatrixPowers,
    trace_recurrence,
    difference_recurrence,
    lucas_type_recurrence,
    bridge_recurrence,
    two_term_recurrence,
    split_h_recurrence,
    split_k_recurrence,
    chebyshev_U,
)


def term(recurrence: Recurrence2, n: int):
    return recurrence.term(n)


__all__ = [
    "fibonacci",
    "lucas",
    "term",
    "Recurrence2",
    "MatrixPowers",
    "trace_recurrence",
    "difference_recurrence",
    "lucas_type_recurrence",
    "bridge_recurrence",
    "two_term_recurrence",
    "split_h_recurrence",
    "split_k_recurrence",
    "chebyshev_U",
]
