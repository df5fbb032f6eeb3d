"""Range of a measure: subset sums fused with the nonatomic interval, bullies and interval tests."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Set, Tuple, Union

import numpy as np

from .errors import InvalidInputError
from .limits import (
    DIRECT_SUBSET_MAX_N,
    check_limit,
    check_strategy,
    int64_safe,
    scale_to_integers,
)
from .measures import AtomicMeasure, SignedAtomicMeasure, format_rational, parse_rational

Interval = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class RangeSet:
    """Sorted, pairwise disjoint, maximally merged closed intervals; ``lo == hi`` is a point."""

    intervals: Tuple[Interval, ...]

    def __post_init__(self) -> None:
        ivs = tuple((Fraction(lo), Fraction(hi)) for lo, hi in self.intervals)
        for lo, hi in ivs:
            if lo > hi:
                raise InvalidInputError(f"interval [{lo}, {hi}] has lo > hi")
        for (_, h0), (l1, _) in zip(ivs, ivs[1:]):
            if l1 <= h0:
                raise InvalidInputError("RangeSet intervals must be sorted, disjoint and non-touching")
        object.__setattr__(self, "intervals", ivs)

    @classmethod
    def merge(cls, intervals: Iterable[Interval]) -> "RangeSet":
        merged: List[List[Fraction]] = []
        for lo, hi in sorted(intervals):
            if merged and lo <= merged[-1][1]:
                if hi > merged[-1][1]:
                    merged[-1][1] = hi
            else:
                merged.append([lo, hi])
        return cls(tuple((lo, hi) for lo, hi in merged))

    def __contains__(self, x) -> bool:
        x = Fraction(x)
        return any(lo <= x <= hi for lo, hi in self.intervals)

    @property
    def is_single_interval(self) -> bool:
        return len(self.intervals) == 1

    @property
    def is_point_set(self) -> bool:
        return all(lo == hi for lo, hi in self.intervals)

    def points(self) -> List[Fraction]:
        return [lo for lo, hi in self.intervals if lo == hi]

    def to_json(self) -> dict:
        if self.is_point_set:
            return {"points": [format_rational(p) for p in self.points()]}
        return {"intervals": [[format_rational(lo), format_rational(hi)] for lo, hi in self.intervals]}

    @classmethod
    def from_json(cls, obj: dict) -> "RangeSet":
        if "points" in obj:
            pts = [parse_rational(p, "points") for p in obj["points"]]
            return cls(tuple((p, p) for p in pts))
        return cls(
            tuple((parse_rational(lo, "lo"), parse_rational(hi, "hi")) for lo, hi in obj["intervals"])
        )

    def __str__(self) -> str:
        parts = []
        for lo, hi in self.intervals:
            parts.append(f"{{{format_rational(lo)}}}" if lo == hi else f"[{format_rational(lo)}, {format_rational(hi)}]")
        return " u ".join(parts)


def _masses(m: Union[AtomicMeasure, SignedAtomicMeasure, Sequence]) -> Tuple[Fraction, ...]:
    if isinstance(m, (AtomicMeasure, SignedAtomicMeasure)):
        return m.atoms
    return tuple(Fraction(a) for a in m)


def _dp_sums(ints: Sequence[int]) -> Set[int]:
    sums = {0}
    for a in ints:
        sums |= {s + a for s in sums}
    return sums


def _combine_halves(left: Sequence[int], right: Sequence[int]) -> np.ndarray:
    """Sorted distinct {l + r} as int64; the caller guarantees int64 safety."""
    lv = np.array(sorted(left), dtype=np.int64)
    rv = np.array(sorted(right), dtype=np.int64)
    step = max(1, (1 << 22) // len(rv))
    parts = [np.unique(np.add.outer(lv[k : k + step], rv).ravel()) for k in range(0, len(lv), step)]
    return np.unique(np.concatenate(parts))


def _integer_sums(ints: Sequence[int], strategy: str):
    """Sorted distinct subset sums of integers: an int64 array when safe, else a list of ints."""
    n = len(ints)
    use_mitm = strategy == "mitm" or (strategy == "auto" and n > DIRECT_SUBSET_MAX_N)
    if use_mitm and n >= 2:
        h = n // 2
        left, right = _dp_sums(ints[:h]), _dp_sums(ints[h:])
        if int64_safe(ints):
            return _combine_halves(left, right)
        return sorted({a + b for a in left for b in right})
    sums = sorted(_dp_sums(ints))
    return np.array(sums, dtype=np.int64) if int64_safe(ints) else sums


def _signed_sums(values: Sequence[Fraction], strategy: str) -> List[Fraction]:
    ints, _, den = scale_to_integers(values)
    return [Fraction(int(s), den) for s in _integer_sums(ints, strategy)]


def subset_sums(
    m: Union[AtomicMeasure, Sequence], *, limit: Optional[int] = None, strategy: str = "auto"
) -> List[Fraction]:
    """Sorted distinct subset sums of the atoms (kappa ignored); always contains 0 and the atom total."""
    masses = _masses(m)
    check_strategy(strategy)
    check_limit("subset_sums", len(masses), limit)
    return _signed_sums(masses, strategy)


def signed_range(m: Union[SignedAtomicMeasure, Sequence], *, limit: Optional[int] = None,
                 strategy: str = "auto") -> List[Fraction]:
    masses = _masses(m)
    check_strategy(strategy)
    check_limit("signed_range", len(masses), limit)
    return _signed_sums(masses, strategy)


def _components(values: Sequence[Fraction], kappa: Fraction, strategy: str):
    """Scaled integer endpoints of the merged intervals [s, s + kappa]: (lo, hi, den)."""
    ints, (k,), den = scale_to_integers(values, kappa)
    sums = _integer_sums(ints, strategy)
    if isinstance(sums, np.ndarray):
        breaks = np.flatnonzero(np.diff(sums) > k)
        lo = np.concatenate((sums[:1], sums[breaks + 1]))
        hi = np.concatenate((sums[breaks], sums[-1:])) + k
        return lo, hi, den
    lo, hi = [sums[0]], []
    for prev, cur in zip(sums, sums[1:]):
        if cur - prev > k:
            hi.append(prev + k)
            lo.append(cur)
    hi.append(sums[-1] + k)
    return lo, hi, den


def measure_range(m: AtomicMeasure, *, limit: Optional[int] = None, strategy: str = "auto") -> RangeSet:
    """Range of a positive measure: the merge of [s, s + kappa] over all subset sums s."""
    check_strategy(strategy)
    check_limit("subset_sums", m.n, limit)
    lo, hi, den = _components(m.atoms, m.kappa, strategy)
    return RangeSet(tuple((Fraction(int(a), den), Fraction(int(b), den)) for a, b in zip(lo, hi)))


@dataclass(frozen=True)
class RangeSummary:
    """Shape of a range without its components; ``exact`` is kept when there are few of them."""

    components: int
    lo: Fraction
    hi: Fraction
    is_point_set: bool
    is_arithmetic_progression: Optional[bool]
    exact: Optional[RangeSet] = None

    @property
    def is_single_interval(self) -> bool:
        return self.components == 1

    def to_json(self) -> dict:
        out = {
            "components": self.components,
            "lo": format_rational(self.lo),
            "hi": format_rational(self.hi),
            "is_point_set": self.is_point_set,
            "is_arithmetic_progression": self.is_arithmetic_progression,
        }
        if self.exact is not None:
            out.update(self.exact.to_json())
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "RangeSummary":
        exact = RangeSet.from_json(obj) if ("points" in obj or "intervals" in obj) else None
        return cls(obj["components"], parse_rational(obj["lo"], "lo"), parse_rational(obj["hi"], "hi"),
                   obj["is_point_set"], obj["is_arithmetic_progression"], exact)

    def __str__(self) -> str:
        if self.exact is not None:
            return str(self.exact)
        kind = "points" if self.is_point_set else "intervals"
        return f"{self.components} {kind} spanning [{format_rational(self.lo)}, {format_rational(self.hi)}]"


def range_summary(values: Union[AtomicMeasure, SignedAtomicMeasure, Sequence], kappa=0, *,
                  limit: Optional[int] = None, strategy: str = "auto", keep: int = 4096) -> RangeSummary:
    """Component count, extent and progression test of a range, computed on scaled integers."""
    masses = _masses(values)
    if isinstance(values, AtomicMeasure):
        kappa = values.kappa
    kappa = parse_rational(kappa, "kappa")
    check_strategy(strategy)
    check_limit("subset_sums", len(masses), limit)
    lo, hi, den = _components(masses, kappa, strategy)
    count = len(lo)
    points = kappa == 0
    ap = None
    if points:
        steps = np.diff(np.asarray(lo, dtype=object if not isinstance(lo, np.ndarray) else np.int64))
        ap = bool(steps.size == 0 or (steps == steps[0]).all())
    exact = None
    if count <= keep:
        exact = RangeSet(tuple((Fraction(int(a), den), Fraction(int(b), den)) for a, b in zip(lo, hi)))
    return RangeSummary(count, Fraction(int(lo[0]), den), Fraction(int(hi[-1]), den), points, ap, exact)


def bullies(m: AtomicMeasure) -> List[int]:
    """Indices (into ``m.atoms``) of atoms exceeding kappa plus all strictly smaller atom mass.

    Blocks of strictly smaller mass realise every smaller atom individually and the nonatomic part
    splits into arbitrarily small pieces, so the supremum in the bully definition is exactly
    ``kappa + sum(smaller atoms)``.
    """
    out = []
    atoms = m.atoms  # non-increasing
    n = len(atoms)
    tail = [Fraction(0)] * (n + 1)
    for i in range(n - 1, -1, -1):
        tail[i] = tail[i + 1] + atoms[i]
    # first index holding a mass strictly smaller than atoms[i]
    j = 0
    for i in range(n):
        if j <= i:
            j = i
        while j < n and atoms[j] == atoms[i]:
            j += 1
        if m.kappa + tail[j] < atoms[i]:
            out.append(i)
    return out


def is_interval(m: AtomicMeasure) -> bool:
    """No-bullies criterion: ``atoms[i] <= kappa + sum(atoms[i+1:])`` for the sorted atoms."""
    tail = m.kappa
    for a in reversed(m.atoms):
        if a > tail:
            return False
        tail += a
    return True


def is_arithmetic_progression(points: Sequence[Fraction]) -> bool:
    pts = [Fraction(p) for p in points]
    if not pts:
        raise InvalidInputError("is_arithmetic_progression needs at least one point")
    if any(b <= a for a, b in zip(pts, pts[1:])):
        raise InvalidInputError("points must be strictly increasing")
    if len(pts) <= 2:
        return True
    step = pts[1] - pts[0]
    return all(b - a == step for a, b in zip(pts, pts[1:]))
