from fractions import Fraction

import pytest

from levelsets import (
    AtomicMeasure,
    CandidateMeasure,
    InvalidInputError,
    SignedAtomicMeasure,
    absolute_measure,
    format_rational,
    hahn_decompose,
    measure_from_json,
    parse_rational,
    transform_nu,
)
from levelsets.measures import absolute_order, candidate_from_json

F = Fraction


@pytest.mark.parametrize("text,value", [("3", F(3)), ("-5/3", F(-5, 3)), (" 4 / 6 ", F(2, 3)), (7, F(7))])
def test_parse_rational_accepts(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1/0", "1.5", "", "x", "1//2", True, 0.5, None])
def test_parse_rational_rejects(bad):
    with pytest.raises(InvalidInputError):
        parse_rational(bad)


def test_zero_denominator_message_names_position():
    with pytest.raises(InvalidInputError, match=r"atoms\[1\]"):
        measure_from_json({"atoms": ["1", "2/0"]})


@pytest.mark.parametrize("q", [F(0), F(5), F(-7, 3), F(10**30 + 1, 7)])
def test_format_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


def test_atomic_measure_sorts_and_keeps_duplicates():
    m = AtomicMeasure((1, 2, 2, 2, 5))
    assert m.atoms == (5, 2, 2, 2, 1)
    assert m.total == 12 and m.n == 5


@pytest.mark.parametrize("atoms,kappa", [((1, 0), 0), ((1, -2), 0), ((1,), -1)])
def test_atomic_measure_rejects(atoms, kappa):
    with pytest.raises(InvalidInputError):
        AtomicMeasure(atoms, kappa)


def test_signed_measure_rejects_zero():
    with pytest.raises(InvalidInputError):
        SignedAtomicMeasure((1, 0))


def test_json_schema():
    m = measure_from_json({"atoms": ["2", "4", "5"], "kappa": "1"})
    assert m == AtomicMeasure((5, 4, 2), 1)
    assert measure_from_json(m.to_json()) == m
    s = measure_from_json({"signed_atoms": ["2/3", "-2/3"]})
    assert s.atoms == (F(2, 3), F(-2, 3))
    with pytest.raises(InvalidInputError):
        measure_from_json({"atoms": ["1"], "kappa": "-1"})
    with pytest.raises(InvalidInputError):
        measure_from_json({"atoms": ["1"], "extra": 1})


def test_candidate_from_json_forms():
    assert candidate_from_json(["1", "2"]) == CandidateMeasure((1, 2))
    assert candidate_from_json({"atoms": ["1"], "slope": "1/2"}) == CandidateMeasure((1,), F(1, 2))


@pytest.mark.parametrize("atoms,pos,neg", [
    ((F(2, 3), F(-2, 3), F(2, 9), F(-2, 9)), (0, 2), (1, 3)),
    ((5,), (0,), ()),
    ((-1, -2), (), (0, 1)),
])
def test_hahn_decompose(atoms, pos, neg):
    assert hahn_decompose(SignedAtomicMeasure(atoms)) == (pos, neg)


@pytest.mark.parametrize("atoms,expected", [
    ((F(2, 3), F(-2, 3), F(2, 9), F(-2, 9)), (F(2, 3), F(2, 3), F(2, 9), F(2, 9))),
    ((-7,), (7,)),
    ((1, -2, 3), (3, 2, 1)),
])
def test_absolute_measure(atoms, expected):
    m = absolute_measure(SignedAtomicMeasure(atoms))
    assert m.atoms == tuple(F(x) for x in expected) and m.kappa == 0
    assert m.total == SignedAtomicMeasure(atoms).total_variation


def test_absolute_order_aligns_indices():
    s = SignedAtomicMeasure((1, -2, 3))
    assert [abs(s.atoms[i]) for i in absolute_order(s)] == list(absolute_measure(s).atoms)


def test_transform_nu_examples():
    nu = CandidateMeasure((1, -1, F(1, 3), F(-1, 3)))
    assert transform_nu(nu, {1, 3}).atom_values == (1, 1, F(1, 3), F(1, 3))
    assert transform_nu(nu, set()) == nu
    zero = CandidateMeasure((0, 0, 0, 0))
    assert transform_nu(zero, {1, 3}) == zero
    assert transform_nu(transform_nu(nu, {0, 2}), {0, 2}) == nu
    with pytest.raises(InvalidInputError):
        transform_nu(nu, {4})


def test_measure_of_includes_continuous_part():
    m = AtomicMeasure((5, 4, 2), 1)
    assert m.measure_of([0, 2], F(1, 2)) == F(15, 2)
    assert m.scaled(2) == AtomicMeasure((10, 8, 4), 2)
