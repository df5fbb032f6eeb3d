"""Enumeration bounds, strategy selection and exact integer scaling."""

from __future__ import annotations

import math
import os
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import InvalidInputError, ResourceLimitError

DEFAULT_MAX_N = 30
DIRECT_SUBSET_MAX_N = 20
DIRECT_RELATION_MAX_N = 16
ORACLE_MAX_N = 14

STRATEGIES = ("auto", "direct", "mitm")

# numpy int64 paths are used only when every partial sum stays below this magnitude
INT64_SAFE = 2**62


def max_n(limit: Optional[int] = None) -> int:
    """Effective atom bound: explicit argument, then LEVELSET_MAX_N, then the default."""
    if limit is not None:
        return int(limit)
    env = os.environ.get("LEVELSET_MAX_N")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidInputError(f"LEVELSET_MAX_N must be an integer, got {env!r}") from None
    return DEFAULT_MAX_N


def check_limit(what: str, n: int, limit: Optional[int] = None) -> None:
    bound = max_n(limit)
    if n > bound:
        raise ResourceLimitError(what, n, bound)


def check_strategy(strategy: str) -> str:
    if strategy not in STRATEGIES:
        raise InvalidInputError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    return strategy


def scale_to_integers(values: Sequence[Fraction], *extra: Fraction) -> Tuple[List[int], List[int], int]:
    """Multiply by the lcm of all denominators.

    Returns (scaled values, scaled extras, common denominator).
    """
    den = 1
    for v in (*values, *extra):
        den = den * Fraction(v).denominator // math.gcd(den, Fraction(v).denominator)
    ints = [int(Fraction(v) * den) for v in values]
    ext = [int(Fraction(v) * den) for v in extra]
    return ints, ext, den


def int64_safe(ints: Sequence[int], slack: int = 0) -> bool:
    return sum(abs(x) for x in ints) + abs(slack) < INT64_SAFE
