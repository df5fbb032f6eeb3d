"""Sign-vector relations {r in {-1,0,1}^n : <r, a> = 0}, their rank, and the kappa-augmented system.

Overlapping level-set pairs reduce to disjoint supports (1_A - 1_B = 1_{A\\B} - 1_{B\\A}), so
{-1,0,1} coefficients are enough.  Every vector is reported in canonical orientation (first
nonzero entry +1) and the output is sorted lexicographically with + > 0 > -.

Enumeration strategies:

* ``direct`` scans all 3^n sign vectors, vectorised over the trailing coordinates.
* ``mitm`` enumerates the partial sums of each half and joins them on a sorted merge, touching
  only matching pairs.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import InvalidInputError, ResourceLimitError
from .limits import (
    DIRECT_RELATION_MAX_N,
    ORACLE_MAX_N,
    check_limit,
    check_strategy,
    int64_safe,
    scale_to_integers,
)
from .linalg import IncrementalBasis, bareiss_rank
from .measures import format_rational, parse_rational

_SYMBOL = {1: "+", 0: "0", -1: "-"}
_VALUE = {"+": 1, "0": 0, "-": -1}


@dataclass(frozen=True)
class SignVector:
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(e) for e in self.entries)
        if any(e not in (-1, 0, 1) for e in entries):
            raise InvalidInputError("sign vector entries must be -1, 0 or 1")
        nz = next((e for e in entries if e), 0)
        if nz == 0:
            raise InvalidInputError("sign vector must be nonzero")
        if nz < 0:
            raise InvalidInputError("sign vector not canonical: first nonzero entry must be +1")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def canonical(cls, entries: Iterable[int]) -> "SignVector":
        e = tuple(int(x) for x in entries)
        nz = next((x for x in e if x), 0)
        return cls(tuple(-x for x in e) if nz < 0 else e)

    @classmethod
    def parse(cls, text: str) -> "SignVector":
        try:
            return cls(tuple(_VALUE[c] for c in text))
        except KeyError:
            raise InvalidInputError(f"bad sign string {text!r}") from None

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def dot(self, values: Sequence) -> Fraction:
        return sum((Fraction(v) * e for v, e in zip(values, self.entries) if e), Fraction(0))

    def plus(self) -> Tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.entries) if e == 1)

    def minus(self) -> Tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.entries) if e == -1)

    def __str__(self) -> str:
        return "".join(_SYMBOL[e] for e in self.entries)


@dataclass(frozen=True)
class AugmentedRelation:
    """A sign vector whose defect is absorbed by the nonatomic part: <r, a> + t = 0, |t| <= kappa."""

    sign_part: SignVector
    kappa_component: Fraction

    def vector(self) -> Tuple:
        return (*self.sign_part.entries, self.kappa_component)

    def to_json(self) -> dict:
        return {"signs": str(self.sign_part), "t": format_rational(self.kappa_component)}


@dataclass(frozen=True)
class RelationBasis:
    vectors: Tuple
    rank: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "vectors", tuple(self.vectors))
        if self.rank != len(self.vectors):
            raise InvalidInputError("basis rank must equal its number of vectors")
        if self.vectors and bareiss_rank(self.rows()) != self.rank:
            raise InvalidInputError("basis vectors are linearly dependent")

    def rows(self) -> List[Tuple]:
        return [v.vector() if isinstance(v, AugmentedRelation) else tuple(v) for v in self.vectors]

    def to_json(self) -> dict:
        out = []
        for v in self.vectors:
            if isinstance(v, SignVector):
                out.append(str(v))
            elif isinstance(v, AugmentedRelation):
                out.append(v.to_json())
            else:
                out.append([format_rational(Fraction(x)) for x in v])
        return {"rank": self.rank, "vectors": out}

    @classmethod
    def from_json(cls, obj: dict) -> "RelationBasis":
        vecs = []
        for v in obj["vectors"]:
            if isinstance(v, str):
                vecs.append(SignVector.parse(v))
            elif isinstance(v, dict):
                vecs.append(AugmentedRelation(SignVector.parse(v["signs"]), parse_rational(v["t"], "t")))
            else:
                vecs.append(tuple(parse_rational(x, "vector") for x in v))
        return cls(tuple(vecs), int(obj["rank"]))


# --- enumeration engine ----------------------------------------------------------------------


def _digits(count: int, width: int) -> np.ndarray:
    """All {-1,0,1}^width vectors, row k encodes k in base 3 with the first coordinate most significant."""
    codes = np.arange(count, dtype=np.int64)
    out = np.empty((count, width), dtype=np.int8)
    for j in range(width - 1, -1, -1):
        out[:, j] = codes % 3 - 1
        codes //= 3
    return out


def _half_sums(w: np.ndarray) -> np.ndarray:
    """Sums <d, w> for every row d of ``_digits(3**len(w), len(w))``, in the same order."""
    s = np.zeros(1, dtype=np.int64)
    for a in w:
        s = (s[:, None] + np.array([-a, 0, a], dtype=np.int64)[None, :]).ravel()
    return s


def _canonical_or_zero(d: np.ndarray) -> np.ndarray:
    """Row mask: first nonzero entry is +1, or the row is all zero."""
    if d.shape[1] == 0:
        return np.ones(d.shape[0], dtype=bool)
    nz = d != 0
    first = np.argmax(nz, axis=1)
    lead = d[np.arange(d.shape[0]), first]
    return lead >= 0


def _sorted_vectors(mat: np.ndarray) -> List[Tuple[int, ...]]:
    if mat.shape[0] == 0:
        return []
    # lexicographic with + > 0 > -: ascending on the negated entries, first column primary
    order = np.lexsort(tuple((-mat[:, j]) for j in range(mat.shape[1] - 1, -1, -1)))
    return [tuple(int(x) for x in row) for row in mat[order]]


def _window_join(ints: Sequence[int], window: int) -> np.ndarray:
    """Meet-in-the-middle: all canonical nonzero r with |<r, ints>| <= window."""
    n = len(ints)
    h = (n + 1) // 2
    w = np.array(ints, dtype=np.int64)
    ld = _digits(3**h, h)
    rd = _digits(3 ** (n - h), n - h)
    ls = _half_sums(w[:h])
    rs = _half_sums(w[h:])

    lmask = _canonical_or_zero(ld)
    lzero = ~np.any(ld != 0, axis=1)
    rcanon = _canonical_or_zero(rd) & np.any(rd != 0, axis=1)

    order = np.argsort(rs, kind="stable")
    rs_sorted = rs[order]

    pieces = []
    for left_rows, right_pool in ((np.nonzero(lmask & ~lzero)[0], order), (np.nonzero(lzero)[0], None)):
        if len(left_rows) == 0:
            continue
        if right_pool is None:
            # left half all zero: the right half must itself be canonical and nonzero
            sel = np.nonzero(rcanon & (np.abs(rs) <= window))[0]
            if len(sel):
                pieces.append(np.hstack([np.zeros((len(sel), h), dtype=np.int8), rd[sel]]))
            continue
        targets = -ls[left_rows]
        lo = np.searchsorted(rs_sorted, targets - window, side="left")
        hi = np.searchsorted(rs_sorted, targets + window, side="right")
        counts = hi - lo
        total = int(counts.sum())
        if total == 0:
            continue
        li = np.repeat(left_rows, counts)
        starts = np.repeat(lo - np.concatenate(([0], np.cumsum(counts)[:-1])), counts)
        ri = order[starts + np.arange(total)]
        pieces.append(np.hstack([ld[li], rd[ri]]))
    if not pieces:
        return np.empty((0, n), dtype=np.int8)
    return np.vstack(pieces)


def _direct_scan(ints: Sequence[int], window: int) -> np.ndarray:
    """Full 3^n scan, vectorised over the trailing coordinates (at most 12 at a time)."""
    n = len(ints)
    k = max(0, n - 12)
    w = np.array(ints, dtype=np.int64)
    tail = _digits(3 ** (n - k), n - k)
    tail_sums = _half_sums(w[k:])
    tail_canon = _canonical_or_zero(tail) & np.any(tail != 0, axis=1)
    pieces = []
    for head in itertools.product((-1, 0, 1), repeat=k):
        lead = next((x for x in head if x), 0)
        if lead < 0:
            continue
        s = sum(int(x) * int(a) for x, a in zip(head, ints[:k]))
        mask = np.abs(tail_sums + s) <= window
        if lead == 0:
            mask &= tail_canon
        sel = np.nonzero(mask)[0]
        if len(sel):
            pieces.append(np.hstack([np.tile(np.array(head, dtype=np.int8), (len(sel), 1)), tail[sel]]))
    if not pieces:
        return np.empty((0, n), dtype=np.int8)
    return np.vstack(pieces)


def _python_join(ints: Sequence[int], window: int) -> List[Tuple[int, ...]]:
    """Meet-in-the-middle over Python ints, for masses too large for int64 sums."""
    n = len(ints)
    h = (n + 1) // 2
    right: Dict[int, List[Tuple[int, ...]]] = {}
    for rc in itertools.product((-1, 0, 1), repeat=n - h):
        right.setdefault(sum(c * a for c, a in zip(rc, ints[h:])), []).append(rc)
    keys = sorted(right)
    out = []
    for lc in itertools.product((-1, 0, 1), repeat=h):
        lead = next((x for x in lc if x), 0)
        if lead < 0:
            continue
        target = -sum(c * a for c, a in zip(lc, ints[:h]))
        i = bisect.bisect_left(keys, target - window)
        while i < len(keys) and keys[i] <= target + window:
            for rc in right[keys[i]]:
                if lead == 0:
                    rl = next((x for x in rc if x), 0)
                    if rl <= 0:
                        continue
                out.append(lc + rc)
            i += 1
    return sorted(out, key=lambda v: tuple(-x for x in v))


def _enumerate(atoms: Sequence[Fraction], window: Fraction, strategy: str, limit: Optional[int],
               what: str) -> List[Tuple[int, ...]]:
    check_strategy(strategy)
    n = len(atoms)
    check_limit(what, n, limit)
    if strategy == "direct" and n > DIRECT_RELATION_MAX_N:
        raise ResourceLimitError(f"{what} (direct scan)", n, DIRECT_RELATION_MAX_N)
    if n == 0:
        return []
    ints, (win,), _ = scale_to_integers(atoms, window)
    if not int64_safe(ints, win):
        return _python_join(ints, win)
    if strategy == "direct" or (strategy == "auto" and n <= 8):
        return _sorted_vectors(_direct_scan(ints, win))
    return _sorted_vectors(_window_join(ints, win))


def enumerate_relations(
    atoms: Sequence, *, strategy: str = "auto", limit: Optional[int] = None
) -> List[SignVector]:
    """Every canonical sign vector orthogonal to ``atoms``, exactly once, in lexicographic order."""
    masses = [parse_rational(a, "atoms") for a in atoms]
    vecs = _enumerate(masses, Fraction(0), strategy, limit, "enumerate_relations")
    return [SignVector(v) for v in vecs]


def kappa_relations(
    atoms: Sequence, kappa, *, strategy: str = "auto", limit: Optional[int] = None
) -> List[AugmentedRelation]:
    """Canonical r with |<r, a>| <= kappa, each paired with t = -<r, a>."""
    masses = [parse_rational(a, "atoms") for a in atoms]
    kappa = parse_rational(kappa, "kappa")
    if kappa < 0:
        raise InvalidInputError("kappa must be >= 0")
    vecs = _enumerate(masses, kappa, strategy, limit, "kappa_relations")
    out = []
    for v in vecs:
        sv = SignVector(v)
        out.append(AugmentedRelation(sv, -sv.dot(masses)))
    return out


def brute_force_relations(atoms: Sequence, window=0) -> List[SignVector]:
    """Independent oracle: test every one of the 3^n sign vectors at once (n <= 14)."""
    masses = [parse_rational(a, "atoms") for a in atoms]
    window = parse_rational(window, "window")
    n = len(masses)
    if n > ORACLE_MAX_N:
        raise ResourceLimitError("brute_force_relations", n, ORACLE_MAX_N)
    found = []
    ints, (win,), _ = scale_to_integers(masses, window)
    if n and int64_safe(ints, win):
        codes = np.arange(3**n, dtype=np.int64)
        cols = []
        for j in range(n):
            cols.append((codes // 3 ** (n - 1 - j)) % 3 - 1)
        signs = np.stack(cols, axis=1) if cols else np.empty((1, 0), dtype=np.int64)
        sums = signs @ np.array(ints, dtype=np.int64)
        for row in signs[np.abs(sums) <= win]:
            found.append(tuple(int(x) for x in row))
    else:
        for signs in itertools.product((-1, 0, 1), repeat=n):
            if abs(sum((s * a for s, a in zip(signs, masses)), Fraction(0))) <= window:
                found.append(signs)
    keep = set()
    for v in found:
        lead = next((x for x in v if x), 0)
        if lead > 0:
            keep.add(v)
    return [SignVector(v) for v in sorted(keep, key=lambda v: tuple(-x for x in v))]


def relation_rank(vectors: Sequence[Sequence]) -> int:
    """Exact rank over Q (fraction-free elimination); 0 for no vectors."""
    rows = [v.vector() if isinstance(v, AugmentedRelation) else tuple(v) for v in vectors]
    return bareiss_rank(rows)


def relation_basis(vectors: Sequence, cap: Optional[int] = None) -> RelationBasis:
    """Greedy maximal independent subset in the given order.

    ``cap`` is an a-priori upper bound on the rank (e.g. n - 1 for relations of a nonzero mass
    vector); selection stops once it is reached.
    """
    vectors = list(vectors)
    if not vectors:
        return RelationBasis((), 0)
    rows = [v.vector() if isinstance(v, AugmentedRelation) else tuple(v) for v in vectors]
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise InvalidInputError("ragged vectors")
    basis = IncrementalBasis(width)
    stop = width if cap is None else min(cap, width)
    chosen = []
    for v, row in zip(vectors, rows):
        if basis.rank >= stop:
            break
        if basis.add(row):
            chosen.append(v)
    return RelationBasis(tuple(chosen), len(chosen))
