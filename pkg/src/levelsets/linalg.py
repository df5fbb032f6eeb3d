"""Exact rank, greedy independent subsets and rational nullspaces.

Rows may hold ints or Fractions; rank and independence are computed over integers after
clearing denominators row by row, so no intermediate ever rounds.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import InvalidInputError


def _common_width(rows: Sequence[Sequence], width: Optional[int]) -> int:
    widths = {len(r) for r in rows}
    if width is not None:
        widths.add(width)
    if len(widths) > 1:
        raise InvalidInputError(f"ragged vectors: lengths {sorted(widths)}")
    return widths.pop() if widths else 0


def integer_row(row: Sequence) -> List[int]:
    """Scale a rational row to a primitive integer row with the same span."""
    fr = [Fraction(x) for x in row]
    den = 1
    for x in fr:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return [x // g for x in ints] if g > 1 else ints


def bareiss_rank(rows: Sequence[Sequence], width: Optional[int] = None) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    ncols = _common_width(rows, width)
    mat = [integer_row(r) for r in rows]
    nrows = len(mat)
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        p = mat[rank][col]
        for r in range(rank + 1, nrows):
            f = mat[r][col]
            row_r = mat[r]
            row_p = mat[rank]
            # exact division is the Bareiss invariant
            mat[r] = [(p * row_r[c] - f * row_p[c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
    return rank


class IncrementalBasis:
    """Greedy maximal independent subset, fed one vector at a time.

    Keeps an integer echelon form; ``add`` returns True when the vector is independent of those
    already accepted.
    """

    def __init__(self, width: int) -> None:
        self.width = width
        self._rows: List[Tuple[int, List[int]]] = []  # (pivot column, primitive integer row)
        self.accepted: List[Tuple] = []

    @property
    def rank(self) -> int:
        return len(self.accepted)

    def reduce(self, vector: Sequence) -> List[int]:
        if len(vector) != self.width:
            raise InvalidInputError(f"ragged vectors: expected length {self.width}, got {len(vector)}")
        v = integer_row(vector)
        for col, row in self._rows:
            f = v[col]
            if f:
                p = row[col]
                v = [p * a - f * b for a, b in zip(v, row)]
                g = 0
                for x in v:
                    g = math.gcd(g, x)
                if g > 1:
                    v = [x // g for x in v]
        return v

    def add(self, vector: Sequence) -> bool:
        v = self.reduce(vector)
        col = next((c for c, x in enumerate(v) if x), None)
        if col is None:
            return False
        if v[col] < 0:
            v = [-x for x in v]
        self._rows.append((col, v))
        self.accepted.append(tuple(vector))
        return True


def greedy_independent(
    rows: Sequence[Sequence], width: Optional[int] = None, cap: Optional[int] = None
) -> List[Tuple]:
    """Maximal independent subset chosen greedily in input order; stops once ``cap`` is reached."""
    ncols = _common_width(rows, width)
    basis = IncrementalBasis(ncols)
    stop = ncols if cap is None else min(cap, ncols)
    for r in rows:
        if basis.rank >= stop:
            break
        basis.add(r)
    return basis.accepted


def rref(rows: Sequence[Sequence], width: int) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form over Fractions; returns (nonzero rows, pivot columns)."""
    mat = [[Fraction(x) for x in r] for r in rows]
    pivots: List[int] = []
    r = 0
    for col in range(width):
        piv = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        p = mat[r][col]
        mat[r] = [x / p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    return mat[:r], pivots


def nullspace(rows: Sequence[Sequence], width: int) -> List[List[Fraction]]:
    """Basis of {x : <row, x> = 0 for every row}, one vector per free column in column order."""
    _common_width(rows, width)
    reduced, pivots = rref(rows, width)
    free = [c for c in range(width) if c not in set(pivots)]
    basis = []
    for fc in free:
        x = [Fraction(0)] * width
        x[fc] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            x[pc] = -row[fc]
        basis.append(x)
    return basis


def is_proportional(u: Sequence, v: Sequence) -> bool:
    """True iff u and v are linearly dependent (either may be zero)."""
    if len(u) != len(v):
        raise InvalidInputError("vectors of different length")
    return bareiss_rank([list(u), list(v)]) < 2
