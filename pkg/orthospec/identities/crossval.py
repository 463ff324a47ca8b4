"""
Exact comparison of an identity's arithmetic arguments with the cross ratios
of its geometric model.

Both sides are truncated the same way: each family (or series) contributes
its first N values, and only the N largest values of each multiset are
compared, which are determined by those prefixes because every family and
series decreases.
"""
import logging
from fractions import Fraction
from typing import List, Optional

from ..exact import QuadNum
from ..exceptions import CrossValidationError, IdentityError, ModelMismatchError
from ..geometry import FeasiblePair, enumerate_terms
from .base import Identity, NumericArgument

logger = logging.getLogger(__name__)


def _copies(weight: Fraction, where: str) -> int:
    weight = Fraction(weight)
    if weight.denominator != 1 or weight < 1:
        raise IdentityError(f"{where}: weight {weight} cannot be expanded into whole copies")
    return int(weight)


def arithmetic_terms(identity: Identity, prefix: int, include_finite: bool = True,
                     multiplicity: int = 1) -> List[QuadNum]:
    """
    First ``prefix`` arguments of every series plus the finite terms, each
    repeated multiplicity * weight times.
    """
    values: List[QuadNum] = []
    for series in identity.series:
        copies = _copies(multiplicity * series.weight, series.name)
        for argument in series.arguments(prefix):
            if isinstance(argument, NumericArgument):
                raise IdentityError(f"{identity.id}: numeric arguments cannot be compared exactly")
            values.extend([argument] * copies)
    if include_finite:
        for term in identity.finite_terms:
            values.extend([term.argument] * _copies(multiplicity * term.weight, term.label or "finite term"))
    return values


def geometric_terms(identity: Identity, pair: FeasiblePair, prefix: int) -> List[QuadNum]:
    link = identity.link
    enumeration = enumerate_terms(pair, link.model, prefix)
    names = link.families if link.families is not None else tuple(enumeration.families)
    missing = [name for name in names if name not in enumeration.families]
    if missing:
        raise ModelMismatchError(f"{link.model} has no families {missing}")
    values: List[QuadNum] = []
    for name in names:
        values.extend(enumeration.families[name])
    if link.include_finite:
        values.extend(enumeration.finite_terms)
    return values


def cross_validate(identity: Identity, fp: Optional[FeasiblePair] = None, prefix: int = 20) -> bool:
    """
    True when the N largest geometric and arithmetic arguments agree exactly.

    Raises CrossValidationError at the first differing position otherwise.
    """
    link = identity.link
    if link is None:
        raise ModelMismatchError(f"{identity.id} has no geometric model")
    if fp is None:
        fp = link.feasible_pair()
    geometric = sorted(geometric_terms(identity, fp, prefix), reverse=True)[:prefix]
    arithmetic = sorted(arithmetic_terms(identity, prefix, link.include_finite, link.multiplicity),
                        reverse=True)[:prefix]
    for index, (g, a) in enumerate(zip(geometric, arithmetic)):
        if g != a:
            raise CrossValidationError(
                f"{identity.id}: value {index} differs, geometric {g} vs arithmetic {a}",
                index=index, geometric=g, arithmetic=a)
    if len(geometric) != len(arithmetic):
        index = min(len(geometric), len(arithmetic))
        raise CrossValidationError(f"{identity.id}: {len(geometric)} geometric vs {len(arithmetic)} arithmetic values",
                                   index=index)
    logger.info(f"{identity.id}: {prefix} largest arguments agree with {identity.link.model}")
    return True
