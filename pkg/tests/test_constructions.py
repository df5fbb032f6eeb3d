from fractions import Fraction

import pytest

import oracles
from levelsets import (
    AtomicMeasure,
    InsufficientMassError,
    InvalidInputError,
    SignedAtomicMeasure,
    absolute_measure,
    bullies,
    cantor_signed,
    decide_L_unique,
    enumerate_relations,
    lemma31_blocks,
    leth_geometric,
    paper_example,
    signed_range,
    subset_sums,
)
from levelsets.constructions import truncation_depth

F = Fraction


def test_leth_geometric():
    m = leth_geometric(F(1, 3), 4, 2)
    assert m.atoms == (F(2, 3), F(2, 9), F(2, 27), F(2, 81))
    assert bullies(m) == [0, 1, 2, 3]
    half = leth_geometric(F(1, 2), 3)
    assert half.atoms == (F(1, 2), F(1, 4), F(1, 8))
    assert bullies(half) == oracles.bully_indices(half.atoms) == [0, 1, 2]
    assert bullies(leth_geometric(F(1, 3), 1)) == [0]
    for bad in [(0, 3), (1, 3), (F(3, 2), 3), (F(1, 2), 0)]:
        with pytest.raises(InvalidInputError):
            leth_geometric(*bad)


@pytest.mark.parametrize("r", [F(1, 3), F(2, 5), F(1, 7)])
def test_geometric_below_half_has_no_relations(r):
    m = leth_geometric(r, 8)
    assert bullies(m) == list(range(8))
    assert enumerate_relations(m.atoms) == []


def test_cantor_signed():
    assert cantor_signed(1) == SignedAtomicMeasure((F(2, 3), F(-2, 3)))
    d2 = cantor_signed(2)
    assert d2.atoms == (F(2, 3), F(-2, 3), F(2, 9), F(-2, 9))
    assert subset_sums(d2.positive_part()) == [0, F(2, 9), F(2, 3), F(8, 9)]
    with pytest.raises(InvalidInputError):
        cantor_signed(0)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_cantor_absolute_has_doubled_masses(d):
    atoms = absolute_measure(cantor_signed(d)).atoms
    assert all(atoms.count(a) == 2 for a in atoms)
    assert decide_L_unique(absolute_measure(cantor_signed(d))).is_unique == (d == 1)


def test_cantor_signed_range_by_brute_force():
    for d in (1, 2, 3):
        atoms = cantor_signed(d).atoms
        sums = sorted({sum((atoms[i] for i in s), F(0)) for s in oracles.all_subsets(len(atoms))})
        assert signed_range(cantor_signed(d)) == sums


def test_paper_example_fixtures():
    assert paper_example("ex1").atoms == tuple(F(x) for x in (11, 10, 9, 8, 7, 6, 5, 2, 1))
    assert paper_example("ex3_mu_prime") == AtomicMeasure((5, 4, 2), 1)
    assert paper_example("ex2-mu") == AtomicMeasure((1, 2, 2, 2, 5))
    assert paper_example("ex4:2").n == 4
    assert truncation_depth("ex4:5") == 5 and truncation_depth("ex1") is None
    for bad in ["ex9", "ex4", "ex4:x"]:
        with pytest.raises(InvalidInputError):
            paper_example(bad)


def test_lemma31_harmonic():
    sel = lemma31_blocks([F(1, k) for k in range(1, 100001)], 3)
    assert sel.blocks[0] == tuple(range(11))
    assert sel.audit() == []
    audited = set(sel.audited_indices())
    flat = sel.flattened()
    positions = [i for blk in sel.blocks[1:] for i in blk]
    assert {positions[k] for k in bullies(flat)}.isdisjoint(audited)


def test_lemma31_guards():
    with pytest.raises(InsufficientMassError):
        lemma31_blocks([F(1, 2), F(1, 4)], 1)
    with pytest.raises(InvalidInputError):
        lemma31_blocks([1, 2], 0)
    with pytest.raises(InvalidInputError):
        lemma31_blocks([1, 0], 0)


def test_lemma31_discards_unfinished_block():
    sel = lemma31_blocks([F(1, k) for k in range(1, 33)], 1)
    assert sel.audit() == []
    assert sel.discarded == (31,)
    assert not set(sel.discarded) & {i for b in sel.blocks for i in b}


def test_block_audit_reports_broken_blocks():
    from levelsets import BlockSelection
    masses = tuple(F(1, k) for k in range(1, 8))
    bad = BlockSelection(((0,), (1,), (2, 3)), masses, F(0))
    problems = bad.audit()
    assert any("exceeds" in p for p in problems) and any("outside" in p for p in problems)
