"""Regression checks over the built-in fixtures, run by ``levelset selftest``."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, List, Tuple

from .constructions import paper_example
from .linalg import is_proportional
from .measures import CandidateMeasure, absolute_measure
from .ranges import RangeSet, bullies, is_arithmetic_progression, measure_range, signed_range, subset_sums
from .relations import SignVector, enumerate_relations, relation_rank
from .uniqueness import check_L, check_O, decide_L_unique, proportional_to_mu


class SelfTestFailure(Exception):
    pass


def _require(cond, msg: str = "check failed") -> None:
    if not cond:
        raise SelfTestFailure(msg)


EX3_RANGE = RangeSet(((0, 1), (2, 3), (4, 8), (9, 10), (11, 12)))

EX1_LISTED = [
    "+0+-00000", "+00+-0000", "+000+-000", "+0000+-00",
    "+00000+-0", "+000000+-", "0++0-0000", "00++0000-",
]


def _ex1() -> str:
    m = paper_example("ex1")
    cert = decide_L_unique(m)
    rels = {str(v) for v in enumerate_relations([1, 2, 5, 6, 7, 8, 9, 10, 11])}
    sums = subset_sums(m)
    ok = (cert.is_unique and cert.rank == 8 and all(v in rels for v in EX1_LISTED)
          and relation_rank([SignVector.parse(v) for v in EX1_LISTED]) == 8
          and all(Fraction(k) in sums for k in (1, 2, 3)) and Fraction(4) not in sums
          and not is_arithmetic_progression(sums))
    _require(ok, "example 1 mismatch")
    return "unique, rank 8, range omits 4"


def _ex2() -> str:
    cert = decide_L_unique(paper_example("ex2-mu"))
    _require(cert.is_unique and cert.rank == 4)
    m = paper_example("ex2-mu-prime")
    cert = decide_L_unique(m)
    rels = [str(v) for v in enumerate_relations([1, 2, 4, 5])]
    _require(rels == ["+0+-", "+--+"] and not cert.is_unique and cert.rank == 2)
    expected = CandidateMeasure((7, 6, 2, 1))  # (1, 2, 6, 7) aligned with atoms (5, 4, 2, 1)
    nu = cert.witness
    _require(nu is not None and is_proportional(nu.atom_values, expected.atom_values))
    _require(check_L(m, nu) and check_O(m, nu))
    return "mu unique (rank 4); mu' non-unique (rank 2), witness ~ (1,2,6,7)"


def _ex3() -> str:
    mu, mu_p = paper_example("ex3-mu"), paper_example("ex3-mu-prime")
    _require(decide_L_unique(mu).is_unique)
    cert = decide_L_unique(mu_p)
    _require(not cert.is_unique)
    _require(cert.witness == CandidateMeasure((7, 6, 2), 1))
    _require(not proportional_to_mu(mu_p, cert.witness))
    _require(measure_range(mu) == EX3_RANGE and measure_range(mu_p) == EX3_RANGE)
    return "mu unique, mu' non-unique (witness (2,6,7), slope 1), shared range"


def _ex4() -> str:
    for d in range(1, 7):
        m = paper_example(f"ex4:{d}")
        for part in (m.positive_part(), m.negative_part()):
            _require(bullies(part) == list(range(d)))
        step = Fraction(2, 3**d)
        top = 1 - Fraction(1, 3**d)
        k = int(top / step)
        _require(signed_range(m) == [j * step for j in range(-k, k + 1)])
        cert = decide_L_unique(absolute_measure(m))
        _require(cert.is_unique == (d == 1))
    return "depths 1..6: all atoms bullies, uniform grid, |mu| non-unique for d >= 2"


CHECKS: List[Tuple[str, Callable[[], str]]] = [
    ("example-1", _ex1),
    ("example-2", _ex2),
    ("example-3", _ex3),
    ("example-4-truncations", _ex4),
]


def run_selftest() -> List[Tuple[str, bool, str]]:
    results = []
    for name, fn in CHECKS:
        try:
            results.append((name, True, fn()))
        except SelfTestFailure as err:
            results.append((name, False, str(err)))
    return results
