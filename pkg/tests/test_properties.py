from fractions import Fraction
from itertools import combinations

from hypothesis import assume, given, settings
from hypothesis import strategies as st

import oracles
from levelsets import (
    AtomicMeasure,
    CandidateMeasure,
    SignedAtomicMeasure,
    absolute_measure,
    brute_force_relations,
    bullies,
    check_L,
    check_O,
    decide_L_unique,
    enumerate_relations,
    format_rational,
    hahn_decompose,
    is_interval,
    kappa_relations,
    level_function,
    measure_range,
    parse_rational,
    relation_rank,
    signed_range,
    subset_sums,
    transform_nu,
)
from levelsets.measures import absolute_order
from levelsets.uniqueness import proportional_to_mu

F = Fraction
SETTINGS = settings(max_examples=60, deadline=None)

pos_rational = st.builds(F, st.integers(1, 50), st.integers(1, 6))
small_int = st.integers(1, 30)


def atoms(min_size=1, max_size=8, elements=pos_rational):
    return st.lists(elements, min_size=min_size, max_size=max_size)


signed = st.lists(st.builds(F, st.integers(1, 30), st.integers(1, 5)).flatmap(
    lambda q: st.sampled_from([q, -q])), min_size=1, max_size=8)


@SETTINGS
@given(st.builds(F, st.integers(-10**12, 10**12), st.integers(1, 10**6)))
def test_rational_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


@SETTINGS
@given(signed, st.data())
def test_transform_nu_is_involution(xs, data):
    nu = CandidateMeasure(tuple(data.draw(st.lists(pos_rational, min_size=len(xs), max_size=len(xs)))))
    _, neg = hahn_decompose(SignedAtomicMeasure(xs))
    assert transform_nu(transform_nu(nu, neg), neg) == nu


@SETTINGS
@given(signed)
def test_absolute_measure_identity(xs):
    m = SignedAtomicMeasure(xs)
    absm = absolute_measure(m)
    order = absolute_order(m)
    pos, neg = hahn_decompose(m)
    for k in range(len(xs) + 1):
        for s in combinations(range(len(xs)), k):
            lhs = sum((absm.atoms[order.index(i)] for i in s), F(0))
            rhs = sum((xs[i] for i in s if i in pos), F(0)) - sum((xs[i] for i in s if i in neg), F(0))
            assert lhs == rhs


@SETTINGS
@given(signed)
def test_absolute_range_is_shifted_signed_range(xs):
    m = SignedAtomicMeasure(xs)
    shifted = sorted(s - m.negative_mass for s in signed_range(m))
    assert subset_sums(absolute_measure(m)) == shifted


@SETTINGS
@given(signed)
def test_signed_range_is_difference_set(xs):
    m = SignedAtomicMeasure(xs)
    p = oracles.subset_sums([x for x in xs if x > 0])
    q = oracles.subset_sums([-x for x in xs if x < 0])
    assert signed_range(m) == sorted({a - b for a in p for b in q})


@SETTINGS
@given(atoms(max_size=9), pos_rational)
def test_subset_sums_properties(xs, extra):
    m = AtomicMeasure(xs)
    sums = subset_sums(m)
    assert sums == oracles.subset_sums(xs)
    as_set = set(sums)
    assert all(m.total - s in as_set for s in sums)
    assert as_set <= set(subset_sums(AtomicMeasure(xs + [extra])))


@SETTINGS
@given(st.lists(st.integers(0, 12), min_size=1, max_size=10, unique=True))
def test_distinct_powers_give_all_subsets(exponents):
    m = AtomicMeasure([2**e for e in exponents])
    assert len(subset_sums(m)) == 2 ** m.n


@SETTINGS
@given(atoms(max_size=10), st.builds(F, st.integers(1, 40), st.integers(1, 4)))
def test_no_bullies_iff_single_interval(xs, kappa):
    m = AtomicMeasure(xs, kappa)
    rng = measure_range(m)
    assert is_interval(m) == (rng.intervals == ((0, m.total),))
    assert all(hi - lo >= kappa for lo, hi in rng.intervals)


@SETTINGS
@given(atoms(max_size=6, elements=st.integers(1, 12)), st.integers(0, 3))
def test_bullies_match_oracle(xs, kappa):
    m = AtomicMeasure(xs, kappa)
    assert bullies(m) == oracles.bully_indices(m.atoms, kappa)


@SETTINGS
@given(atoms(max_size=9, elements=small_int))
def test_relations_match_brute_force(xs):
    rels = enumerate_relations(xs)
    assert rels == brute_force_relations(xs)
    assert all(r.dot(xs) == 0 for r in rels)
    assert all(r.entries[next(i for i, x in enumerate(r.entries) if x)] == 1 for r in rels)
    assert len({r.entries for r in rels}) == len(rels)
    assert relation_rank(rels) <= len(xs) - 1


@SETTINGS
@given(atoms(min_size=2, max_size=8, elements=small_int), st.randoms(use_true_random=False))
def test_relations_permutation_equivariant(xs, rnd):
    perm = list(range(len(xs)))
    rnd.shuffle(perm)
    permuted = [xs[i] for i in perm]
    rels = enumerate_relations(xs)
    moved = sorted(oracles.sign_relations(permuted))
    mapped = []
    for r in rels:
        v = [r.entries[i] for i in perm]
        first = next(x for x in v if x)
        mapped.append(tuple(x * first for x in v))
    assert sorted(mapped) == moved
    assert relation_rank(rels) == relation_rank(enumerate_relations(permuted))


@SETTINGS
@given(atoms(max_size=7, elements=small_int), st.integers(0, 6), pos_rational)
def test_relations_scale(xs, kappa, c):
    base = kappa_relations(xs, kappa)
    scaled = kappa_relations([c * x for x in xs], c * kappa)
    assert [r.sign_part for r in base] == [r.sign_part for r in scaled]
    assert [c * r.kappa_component for r in base] == [r.kappa_component for r in scaled]


@SETTINGS
@given(atoms(max_size=7, elements=small_int), st.integers(0, 3), pos_rational)
def test_verdict_scale_invariant(xs, kappa, c):
    assume(xs or kappa)
    m = AtomicMeasure(xs, kappa)
    assert decide_L_unique(m).is_unique == decide_L_unique(m.scaled(c)).is_unique


@SETTINGS
@given(atoms(max_size=7, elements=small_int), st.integers(0, 3))
def test_verdict_matches_dimension_oracle(xs, kappa):
    assume(xs or kappa)
    m = AtomicMeasure(xs, kappa)
    cert = decide_L_unique(m)
    assert cert.is_unique == (oracles.solution_dimension(m.atoms, kappa) == 1)
    if not cert.is_unique:
        w = cert.witness
        assert check_L(m, w)
        assert all(v > 0 for v in w.atom_values)
        assert not proportional_to_mu(m, w)
        if kappa:
            assert w.continuous_slope > 0
        else:
            assert oracles.satisfies_L(m.atoms, w.atom_values)


@SETTINGS
@given(atoms(max_size=7, elements=st.integers(1, 8)), st.data())
def test_check_O_implies_check_L(xs, data):
    m = AtomicMeasure(xs)
    nu = CandidateMeasure(tuple(data.draw(st.lists(st.integers(-3, 8), min_size=m.n, max_size=m.n))))
    assert check_L(m, nu) == oracles.satisfies_L(m.atoms, nu.atom_values)
    assert check_O(m, nu) == oracles.satisfies_O(m.atoms, nu.atom_values)
    if check_O(m, nu):
        assert check_L(m, nu)


@SETTINGS
@given(atoms(max_size=7, elements=small_int), pos_rational)
def test_multiples_pass_and_level_function_endpoints(xs, c):
    m = AtomicMeasure(xs)
    nu = CandidateMeasure(m.atoms).scaled(c)
    assert check_L(m, nu) and check_O(m, nu)
    f = level_function(m, nu)
    assert f(0) == 0 and f(m.total) == c * m.total
