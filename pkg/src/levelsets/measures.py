"""Exact-rational measure types, JSON (de)serialization and the signed-to-positive transforms.

Every mass is a :class:`fractions.Fraction`; nothing in the package ever rounds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from .errors import InvalidInputError

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")


def parse_rational(value: RationalLike, where: str = "value") -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction.

    Decimal and exponent notation are rejected so that every accepted input is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidInputError(f"{where}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise InvalidInputError(f"{where}: expected a rational string 'p/q', got {value!r}")
    match = _RATIONAL_RE.match(value)
    if match is None:
        raise InvalidInputError(f"{where}: malformed rational {value!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise InvalidInputError(f"{where}: zero denominator in {value!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _as_fraction_tuple(values: Iterable[RationalLike], where: str) -> Tuple[Fraction, ...]:
    return tuple(parse_rational(v, f"{where}[{i}]") for i, v in enumerate(values))


@dataclass(frozen=True)
class AtomicMeasure:
    """Positive finite measure: atom masses (kept sorted non-increasing) plus a nonatomic mass kappa.

    Duplicate masses stay distinct atoms.
    """

    atoms: Tuple[Fraction, ...]
    kappa: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        atoms = _as_fraction_tuple(self.atoms, "atoms")
        kappa = parse_rational(self.kappa, "kappa")
        for i, a in enumerate(atoms):
            if a <= 0:
                raise InvalidInputError(f"atoms[{i}]: atom mass must be > 0, got {format_rational(a)}")
        if kappa < 0:
            raise InvalidInputError(f"kappa: must be >= 0, got {format_rational(kappa)}")
        object.__setattr__(self, "atoms", tuple(sorted(atoms, reverse=True)))
        object.__setattr__(self, "kappa", kappa)

    @property
    def n(self) -> int:
        return len(self.atoms)

    @property
    def total(self) -> Fraction:
        return self.kappa + sum(self.atoms, Fraction(0))

    def scaled(self, c: RationalLike) -> "AtomicMeasure":
        c = parse_rational(c, "scale")
        if c <= 0:
            raise InvalidInputError("scale factor must be > 0")
        return AtomicMeasure(tuple(c * a for a in self.atoms), c * self.kappa)

    def measure_of(self, indices: Iterable[int], continuous: Fraction = Fraction(0)) -> Fraction:
        return sum((self.atoms[i] for i in indices), Fraction(0)) + continuous

    def to_json(self) -> dict:
        return {"atoms": [format_rational(a) for a in self.atoms], "kappa": format_rational(self.kappa)}


@dataclass(frozen=True)
class SignedAtomicMeasure:
    """Purely atomic signed measure; atom order is preserved (index identity matters)."""

    atoms: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        atoms = _as_fraction_tuple(self.atoms, "signed_atoms")
        for i, a in enumerate(atoms):
            if a == 0:
                raise InvalidInputError(f"signed_atoms[{i}]: atom mass must be nonzero")
        object.__setattr__(self, "atoms", atoms)

    @property
    def n(self) -> int:
        return len(self.atoms)

    @property
    def total_variation(self) -> Fraction:
        return sum((abs(a) for a in self.atoms), Fraction(0))

    @property
    def negative_mass(self) -> Fraction:
        """mu(Omega^-), the (non-positive) total of the negative atoms."""
        return sum((a for a in self.atoms if a < 0), Fraction(0))

    def positive_part(self) -> AtomicMeasure:
        return AtomicMeasure(tuple(a for a in self.atoms if a > 0))

    def negative_part(self) -> AtomicMeasure:
        return AtomicMeasure(tuple(-a for a in self.atoms if a < 0))

    def to_json(self) -> dict:
        return {"signed_atoms": [format_rational(a) for a in self.atoms]}


@dataclass(frozen=True)
class CandidateMeasure:
    """A candidate nu: its values on the reference atoms plus the constant density on the nonatomic part."""

    atom_values: Tuple[Fraction, ...]
    continuous_slope: Fraction = field(default=Fraction(0))

    def __post_init__(self) -> None:
        object.__setattr__(self, "atom_values", _as_fraction_tuple(self.atom_values, "nu"))
        object.__setattr__(self, "continuous_slope", parse_rational(self.continuous_slope, "slope"))

    @property
    def n(self) -> int:
        return len(self.atom_values)

    def scaled(self, c: RationalLike) -> "CandidateMeasure":
        c = parse_rational(c, "scale")
        return CandidateMeasure(tuple(c * v for v in self.atom_values), c * self.continuous_slope)

    def to_json(self) -> dict:
        return {
            "atoms": [format_rational(v) for v in self.atom_values],
            "slope": format_rational(self.continuous_slope),
        }


Measure = Union[AtomicMeasure, SignedAtomicMeasure]


def measure_from_json(obj) -> Measure:
    """Build a measure from the documented JSON schema.

    ``{"atoms": [...], "kappa": "..."}`` gives an AtomicMeasure; ``{"signed_atoms": [...]}`` a
    SignedAtomicMeasure.
    """
    if not isinstance(obj, dict):
        raise InvalidInputError("measure: expected a JSON object")
    if "signed_atoms" in obj:
        if "atoms" in obj or "kappa" in obj:
            raise InvalidInputError("measure: 'signed_atoms' cannot be combined with 'atoms'/'kappa'")
        values = obj["signed_atoms"]
        if not isinstance(values, list):
            raise InvalidInputError("signed_atoms: expected a list")
        return SignedAtomicMeasure(_as_fraction_tuple(values, "signed_atoms"))
    if "atoms" not in obj:
        raise InvalidInputError("measure: missing 'atoms' or 'signed_atoms'")
    values = obj["atoms"]
    if not isinstance(values, list):
        raise InvalidInputError("atoms: expected a list")
    unknown = set(obj) - {"atoms", "kappa"}
    if unknown:
        raise InvalidInputError(f"measure: unknown keys {sorted(unknown)}")
    atoms = _as_fraction_tuple(values, "atoms")
    kappa = parse_rational(obj.get("kappa", "0"), "kappa")
    return AtomicMeasure(atoms, kappa)


def candidate_from_json(obj) -> CandidateMeasure:
    """Accept ``["1","2",...]`` or ``{"atoms": [...], "slope": "..."}``."""
    if isinstance(obj, list):
        return CandidateMeasure(_as_fraction_tuple(obj, "nu"))
    if isinstance(obj, dict) and "atoms" in obj:
        if not isinstance(obj["atoms"], list):
            raise InvalidInputError("nu.atoms: expected a list")
        return CandidateMeasure(
            _as_fraction_tuple(obj["atoms"], "nu.atoms"), parse_rational(obj.get("slope", "0"), "nu.slope")
        )
    raise InvalidInputError("nu: expected a list of rationals or {'atoms': [...], 'slope': ...}")


# --- Hahn decomposition and the |mu| transforms ---------------------------------------------


def hahn_decompose(m: SignedAtomicMeasure) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Return (positive indices, negative indices) of the signed atoms."""
    pos = tuple(i for i, a in enumerate(m.atoms) if a > 0)
    neg = tuple(i for i, a in enumerate(m.atoms) if a < 0)
    return pos, neg


def absolute_order(m: SignedAtomicMeasure) -> List[int]:
    """Signed indices in the order their magnitudes appear in :func:`absolute_measure`."""
    return sorted(range(m.n), key=lambda i: -abs(m.atoms[i]))


def absolute_measure(m: SignedAtomicMeasure) -> AtomicMeasure:
    return AtomicMeasure(tuple(abs(a) for a in m.atoms))


def transform_nu(nu: CandidateMeasure, negative_indices: Iterable[int]) -> CandidateMeasure:
    """nu'(A) = nu(A & Omega+) - nu(A & Omega-): negate nu on the negative Hahn set."""
    neg = set(negative_indices)
    for i in neg:
        if not 0 <= i < nu.n:
            raise InvalidInputError(f"negative index {i} out of bounds for {nu.n} atoms")
    values = tuple(-v if i in neg else v for i, v in enumerate(nu.atom_values))
    return CandidateMeasure(values, nu.continuous_slope)


def aligned_to_absolute(m: SignedAtomicMeasure, nu: CandidateMeasure) -> CandidateMeasure:
    """Transform nu for a signed m and reorder it to align with ``absolute_measure(m)``."""
    if nu.n != m.n:
        raise InvalidInputError(f"nu has {nu.n} atom values but the measure has {m.n} atoms")
    _, neg = hahn_decompose(m)
    moved = transform_nu(nu, neg)
    return CandidateMeasure(tuple(moved.atom_values[i] for i in absolute_order(m)), moved.continuous_slope)


def subset_mass(values: Sequence[Fraction], indices: Iterable[int]) -> Fraction:
    return sum((values[i] for i in indices), Fraction(0))
