"""Deciding whether the level sets of a measure determine it, with witnesses and (L)/(O) checks.

For a purely atomic measure the candidates nu satisfying (L) are exactly the solutions of
<r, nu> = 0 over the relation set, so the answer is a rank computation.  With a nonatomic part of
mass kappa, nu is constant (slope gamma) on it and the unknowns become (nu, gamma); each sign
vector r with |<r, a>| <= kappa contributes the constraint <r, nu> + gamma * t = 0 where
t = -<r, a>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InvalidInputError, LogicError, ResourceLimitError, WellDefinednessError
from .limits import ORACLE_MAX_N
from .linalg import is_proportional, nullspace
from .measures import AtomicMeasure, CandidateMeasure, format_rational, parse_rational
from .relations import (
    AugmentedRelation,
    RelationBasis,
    enumerate_relations,
    kappa_relations,
    relation_basis,
)

UNIQUE = "unique"
NON_UNIQUE = "non_unique"


@dataclass(frozen=True)
class UniquenessCertificate:
    verdict: str
    basis: RelationBasis
    threshold: int
    criterion: str  # "relation_rank" (kappa = 0), "augmented_rank" (kappa > 0) or "trivial"
    relation_count: int
    witness: Optional[CandidateMeasure] = None
    witness_satisfies_O: Optional[bool] = None
    witness_positive: Optional[bool] = None

    @property
    def rank(self) -> int:
        return self.basis.rank

    @property
    def is_unique(self) -> bool:
        return self.verdict == UNIQUE

    def to_json(self) -> dict:
        out = {
            "verdict": self.verdict,
            "criterion": self.criterion,
            "rank": self.basis.rank,
            "threshold": self.threshold,
            "relation_count": self.relation_count,
            "basis": self.basis.to_json()["vectors"],
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
            out["witness_satisfies_O"] = self.witness_satisfies_O
            out["witness_positive"] = self.witness_positive
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "UniquenessCertificate":
        witness = None
        if "witness" in obj:
            w = obj["witness"]
            witness = CandidateMeasure(
                tuple(parse_rational(x, "witness") for x in w["atoms"]), parse_rational(w["slope"], "slope")
            )
        return cls(
            verdict=obj["verdict"],
            basis=RelationBasis.from_json({"rank": obj["rank"], "vectors": obj["basis"]}),
            threshold=obj["threshold"],
            criterion=obj["criterion"],
            relation_count=obj["relation_count"],
            witness=witness,
            witness_satisfies_O=obj.get("witness_satisfies_O"),
            witness_positive=obj.get("witness_positive"),
        )


@dataclass(frozen=True)
class LevelFunction:
    """The graph of f(w) = nu(A) for mu(A) = w, with one representative subset per level."""

    pairs: Dict[Fraction, Fraction]
    representatives: Dict[Fraction, Tuple[int, ...]]

    def __call__(self, w) -> Fraction:
        return self.pairs[Fraction(w)]

    def items(self) -> List[Tuple[Fraction, Fraction]]:
        return sorted(self.pairs.items())

    def is_non_decreasing(self) -> bool:
        vals = [v for _, v in self.items()]
        return all(a <= b for a, b in zip(vals, vals[1:]))

    def to_json(self) -> dict:
        return {format_rational(w): format_rational(v) for w, v in self.items()}


# --- helpers -------------------------------------------------------------------------------------


def _check_aligned(m: AtomicMeasure, nu: CandidateMeasure) -> None:
    if nu.n != m.n:
        raise InvalidInputError(f"nu has {nu.n} atom values but the measure has {m.n} atoms")


def _trivial_solution(m: AtomicMeasure) -> List[Fraction]:
    return list(m.atoms) + ([Fraction(1)] if m.kappa > 0 else [])


def _unknowns(m: AtomicMeasure, nu: CandidateMeasure) -> List[Fraction]:
    return list(nu.atom_values) + ([nu.continuous_slope] if m.kappa > 0 else [])


def proportional_to_mu(m: AtomicMeasure, nu: CandidateMeasure) -> bool:
    """nu = c * mu for one scalar c covering the atoms and, when kappa > 0, the slope."""
    _check_aligned(m, nu)
    return is_proportional(_trivial_solution(m), _unknowns(m, nu))


def system_relations(m: AtomicMeasure, *, strategy: str = "auto", limit: Optional[int] = None) -> list:
    """The constraint family for m: sign vectors (kappa = 0) or augmented relations (kappa > 0)."""
    if m.kappa > 0:
        return kappa_relations(m.atoms, m.kappa, strategy=strategy, limit=limit)
    return enumerate_relations(m.atoms, strategy=strategy, limit=limit)


def _rows(relations) -> List[Tuple]:
    return [r.vector() if isinstance(r, AugmentedRelation) else tuple(r) for r in relations]


# --- decision and witness ------------------------------------------------------------------------


def decide_L_unique(
    m: AtomicMeasure, *, strategy: str = "auto", limit: Optional[int] = None
) -> UniquenessCertificate:
    """Unique iff the relation system leaves a one-dimensional solution space.

    kappa = 0: rank of the sign-vector relations must be n - 1.
    kappa > 0: rank of the augmented vectors (r, t) over the unknowns (nu, gamma) must be n.
    """
    n = m.n
    if n == 0:
        if m.kappa == 0:
            raise InvalidInputError("empty measure: no atoms and kappa = 0")
        return UniquenessCertificate(UNIQUE, RelationBasis((), 0), 0, "trivial", 0)
    rels = system_relations(m, strategy=strategy, limit=limit)
    if m.kappa > 0:
        threshold, criterion = n, "augmented_rank"
    else:
        threshold, criterion = n - 1, "relation_rank"
    basis = relation_basis(rels, cap=threshold)
    if basis.rank >= threshold:
        return UniquenessCertificate(UNIQUE, basis, threshold, criterion, len(rels))
    nu = witness(m, basis)
    satisfies_o = None
    if m.kappa == 0 and n <= ORACLE_MAX_N:
        satisfies_o = check_O(m, nu)
    positive = all(v > 0 for v in nu.atom_values) and (m.kappa == 0 or nu.continuous_slope > 0)
    return UniquenessCertificate(
        NON_UNIQUE, basis, threshold, criterion, len(rels), nu, satisfies_o, positive
    )


def _normalise(values: Sequence[Fraction]) -> List[Fraction]:
    """Clear denominators and divide out the gcd; the factor is positive so signs are kept."""
    den = 1
    for v in values:
        den = den * v.denominator // math.gcd(den, v.denominator)
    ints = [int(v * den) for v in values]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return [Fraction(x, g or 1) for x in ints]


def witness(m: AtomicMeasure, basis: RelationBasis) -> CandidateMeasure:
    """A strictly positive nu satisfying (L) that is not a multiple of mu.

    Takes the first nullspace vector w of the relation system that is independent of mu and
    returns mu + gamma * w with gamma = 1 / (2 * max |w_i / mu_i|), so every coordinate stays at
    least half of mu's.
    """
    width = m.n + (1 if m.kappa > 0 else 0)
    threshold = m.n if m.kappa > 0 else m.n - 1
    if basis.rank >= threshold:
        raise LogicError("witness requested for a full-rank relation system")
    trivial = _trivial_solution(m)
    candidates = nullspace(basis.rows(), width)
    w = next((v for v in candidates if not is_proportional(v, trivial)), None)
    if w is None:
        raise LogicError("nullspace has no direction independent of mu")
    ratio = max(abs(wi) / ti for wi, ti in zip(w, trivial))
    gamma = 1 / (2 * ratio)
    shifted = _normalise([ti + gamma * wi for ti, wi in zip(trivial, w)])
    if m.kappa > 0:
        return CandidateMeasure(tuple(shifted[:-1]), shifted[-1])
    return CandidateMeasure(tuple(shifted))


def leth_witness(m: AtomicMeasure, b=Fraction(1, 2)) -> CandidateMeasure:
    """nu(A_1) = mu(A_1), nu(A_2) = (1 - b) mu(A_1) + b mu(A_2), nu = b mu on the remaining atoms.

    Satisfies (O) whenever the second-largest atom is a bully.
    """
    b = parse_rational(b, "b")
    if not 0 < b < 1:
        raise InvalidInputError("b must lie in (0, 1)")
    if m.n < 2:
        raise InvalidInputError("need at least two atoms")
    a = m.atoms
    values = [a[0], (1 - b) * a[0] + b * a[1]] + [b * x for x in a[2:]]
    return CandidateMeasure(tuple(values), b)


# --- (L) and (O) checks --------------------------------------------------------------------------


def find_L_violation(m: AtomicMeasure, nu: CandidateMeasure, *, strategy: str = "auto",
                     limit: Optional[int] = None) -> Optional[dict]:
    """A pair of sets with equal mu-measure and different nu-measure, or None.

    Each side is given as atom indices plus an amount taken from the nonatomic part.
    """
    _check_aligned(m, nu)
    for rel in system_relations(m, strategy=strategy, limit=limit):
        if isinstance(rel, AugmentedRelation):
            r, t = rel.sign_part, rel.kappa_component
        else:
            r, t = rel, Fraction(0)
        if r.dot(nu.atom_values) + nu.continuous_slope * t != 0:
            # <r, a> + t = 0: the continuous amount t sits on the plus side (or -t on the minus side)
            cont_a, cont_b = (t, Fraction(0)) if t >= 0 else (Fraction(0), -t)
            return {
                "subset_a": list(r.plus()),
                "subset_b": list(r.minus()),
                "continuous_a": cont_a,
                "continuous_b": cont_b,
                "mu": m.measure_of(r.plus(), cont_a),
                "nu_a": sum((nu.atom_values[i] for i in r.plus()), Fraction(0)) + nu.continuous_slope * cont_a,
                "nu_b": sum((nu.atom_values[i] for i in r.minus()), Fraction(0)) + nu.continuous_slope * cont_b,
            }
    return None


def check_L(m: AtomicMeasure, nu: CandidateMeasure, *, oracle: bool = False, strategy: str = "auto",
            limit: Optional[int] = None) -> bool:
    """Condition (L): equal mu-measure implies equal nu-measure.

    The fast path checks <r, nu> = gamma <r, a> over the relation system; ``oracle=True`` instead
    compares all 2^n subsets directly (kappa = 0, n <= 14).
    """
    _check_aligned(m, nu)
    if oracle:
        return check_L_oracle(m, nu)
    return find_L_violation(m, nu, strategy=strategy, limit=limit) is None


def _subset_table(m: AtomicMeasure, nu: CandidateMeasure):
    if m.kappa != 0:
        raise InvalidInputError("exhaustive subset checks need kappa = 0")
    if m.n > ORACLE_MAX_N:
        raise ResourceLimitError("exhaustive subset check", m.n, ORACLE_MAX_N)
    # subsets in order of size then lexicographically, so representatives are the smallest sets
    for k in range(m.n + 1):
        for s in combinations(range(m.n), k):
            yield s, m.measure_of(s), sum((nu.atom_values[i] for i in s), Fraction(0))


def check_L_oracle(m: AtomicMeasure, nu: CandidateMeasure) -> bool:
    _check_aligned(m, nu)
    seen: Dict[Fraction, Fraction] = {}
    for _, mu_val, nu_val in _subset_table(m, nu):
        if seen.setdefault(mu_val, nu_val) != nu_val:
            return False
    return True


def level_function(m: AtomicMeasure, nu: CandidateMeasure) -> LevelFunction:
    """Tabulate f on the whole range.

    Raises WellDefinednessError naming two subsets at the smallest conflicting mu-level.
    """
    _check_aligned(m, nu)
    pairs: Dict[Fraction, Fraction] = {}
    reps: Dict[Fraction, Tuple[int, ...]] = {}
    clash: Dict[Fraction, Tuple[Tuple[int, ...], Fraction]] = {}
    for s, mu_val, nu_val in _subset_table(m, nu):
        if mu_val not in pairs:
            pairs[mu_val] = nu_val
            reps[mu_val] = s
        elif pairs[mu_val] != nu_val and mu_val not in clash:
            clash[mu_val] = (s, nu_val)
    if clash:
        w = min(clash)
        s, nu_val = clash[w]
        raise WellDefinednessError(reps[w], s, w, pairs[w], nu_val)
    return LevelFunction(pairs, reps)


def find_O_violation(m: AtomicMeasure, nu: CandidateMeasure) -> Optional[dict]:
    """Subsets A, B with mu(A) <= mu(B) but nu(A) > nu(B), or None if (O) holds."""
    try:
        f = level_function(m, nu)
    except WellDefinednessError as err:
        return {"subset_a": list(err.subset_a), "subset_b": list(err.subset_b), "mu_a": err.mu_value,
                "mu_b": err.mu_value, "nu_a": err.nu_a, "nu_b": err.nu_b, "reason": "L"}
    items = f.items()
    for (w0, v0), (w1, v1) in zip(items, items[1:]):
        if v0 > v1:
            return {"subset_a": list(f.representatives[w0]), "subset_b": list(f.representatives[w1]),
                    "mu_a": w0, "mu_b": w1, "nu_a": v0, "nu_b": v1, "reason": "order"}
    return None


def check_O(m: AtomicMeasure, nu: CandidateMeasure) -> bool:
    """Condition (O): (L) holds and the level function is non-decreasing (kappa = 0, n <= 14)."""
    return find_O_violation(m, nu) is None


def solution_space_dimension(m: AtomicMeasure, relations: Sequence) -> int:
    width = m.n + (1 if m.kappa > 0 else 0)
    return len(nullspace(_rows(relations), width))
