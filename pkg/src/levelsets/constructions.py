"""Built-in fixtures and constructive procedures.

Infinite constructions are only ever produced as finite truncations; callers get the depth back
so reports can label it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .errors import InsufficientMassError, InvalidInputError
from .measures import AtomicMeasure, SignedAtomicMeasure, parse_rational

EXAMPLE_IDS = ("ex1", "ex2-mu", "ex2-mu-prime", "ex3-mu", "ex3-mu-prime", "ex4:<d>")


def leth_geometric(r, n: int, scale=1) -> AtomicMeasure:
    """Atoms scale * r^k for k = 1..n (purely atomic)."""
    r = parse_rational(r, "ratio")
    scale = parse_rational(scale, "scale")
    if not 0 < r < 1:
        raise InvalidInputError(f"ratio must lie in (0, 1), got {r}")
    if n < 1:
        raise InvalidInputError("count must be >= 1")
    if scale <= 0:
        raise InvalidInputError("scale must be > 0")
    return AtomicMeasure(tuple(scale * r**k for k in range(1, n + 1)))


def cantor_signed(depth: int) -> SignedAtomicMeasure:
    """Atoms 2/3^k, -2/3^k for k = 1..depth, interleaved."""
    if depth < 1:
        raise InvalidInputError("depth must be >= 1")
    atoms: List[Fraction] = []
    for k in range(1, depth + 1):
        atoms += [Fraction(2, 3**k), Fraction(-2, 3**k)]
    return SignedAtomicMeasure(tuple(atoms))


def paper_example(example_id: str) -> Union[AtomicMeasure, SignedAtomicMeasure]:
    key = example_id.strip().lower().replace("_", "-")
    if key == "ex1":
        return AtomicMeasure((1, 2, 5, 6, 7, 8, 9, 10, 11))
    if key == "ex2-mu":
        return AtomicMeasure((1, 2, 2, 2, 5))
    if key == "ex2-mu-prime":
        return AtomicMeasure((1, 2, 4, 5))
    if key == "ex3-mu":
        return AtomicMeasure((2, 2, 2, 5), 1)
    if key == "ex3-mu-prime":
        return AtomicMeasure((2, 4, 5), 1)
    if key.startswith("ex4"):
        tail = key[3:].lstrip(":(").rstrip(")")
        try:
            depth = int(tail)
        except ValueError:
            raise InvalidInputError(f"ex4 needs a depth, e.g. 'ex4:3' (got {example_id!r})") from None
        return cantor_signed(depth)
    raise InvalidInputError(f"unknown example {example_id!r}; expected one of {', '.join(EXAMPLE_IDS)}")


def truncation_depth(example_id: str):
    """Depth label for fixtures cut from an infinite construction, else None."""
    key = example_id.strip().lower()
    if key.startswith("ex4"):
        return paper_example(example_id).n // 2
    return None


@dataclass(frozen=True)
class BlockSelection:
    """Blocks E_0, E_1, ... of indices into ``masses``; ``discarded`` is the unfinished last block."""

    blocks: Tuple[Tuple[int, ...], ...]
    masses: Tuple[Fraction, ...]
    target: Fraction
    discarded: Tuple[int, ...] = ()

    def block_sum(self, j: int) -> Fraction:
        return sum((self.masses[i] for i in self.blocks[j]), Fraction(0))

    def audited_indices(self) -> List[int]:
        """Mass indices of blocks that have a successor block (E_1 .. E_{J-1})."""
        return [i for blk in self.blocks[1:-1] for i in blk]

    def flattened(self) -> AtomicMeasure:
        """The blocks after E_0 as one purely atomic measure."""
        return AtomicMeasure(tuple(self.masses[i] for blk in self.blocks[1:] for i in blk))

    def audit(self) -> List[str]:
        """Violations of the block invariants; empty when all hold."""
        problems = []
        for j in range(1, len(self.blocks)):
            cap = Fraction(1, 2**j)
            blk = self.blocks[j]
            if not blk:
                problems.append(f"E_{j} is empty")
                continue
            for i in blk:
                if self.masses[i] > cap:
                    problems.append(f"E_{j}: mass at index {i} exceeds 2^-{j}")
            s = self.block_sum(j)
            if not cap <= s <= Fraction(4, 3) * cap:
                problems.append(f"E_{j}: sum {s} outside [2^-{j}, (4/3) 2^-{j}]")
        for j in range(len(self.blocks) - 1):
            if self.blocks[j] and self.blocks[j + 1] and max(self.blocks[j]) >= min(self.blocks[j + 1]):
                problems.append(f"E_{j + 1} does not lie entirely after E_{j}")
        return problems


def lemma31_blocks(masses: Sequence, target) -> BlockSelection:
    """Greedy block extraction from a non-increasing prefix.

    E_0 is the shortest prefix with sum > target.  Block j >= 1 starts at the first unused index
    with mass <= 2^-(j+1) and takes masses in order, skipping any that would push the block sum
    past (4/3) 2^-j, until the sum reaches 2^-j.  A block still open when the prefix runs out is
    discarded.

    Drawing block j from masses <= 2^-(j+1) (rather than <= 2^-j) means each atom is already
    covered by the next block's sum alone, so atoms of every block that has a successor are not
    bullies of the flattened truncation.
    """
    ms = tuple(parse_rational(a, f"masses[{i}]") for i, a in enumerate(masses))
    target = parse_rational(target, "target")
    for i, a in enumerate(ms):
        if a <= 0:
            raise InvalidInputError(f"masses[{i}]: must be > 0")
    for i in range(1, len(ms)):
        if ms[i] > ms[i - 1]:
            raise InvalidInputError(f"masses must be non-increasing (index {i})")
    total = Fraction(0)
    pos = 0
    while total <= target:
        if pos == len(ms):
            raise InsufficientMassError(f"prefix sum {total} does not exceed target {target}")
        total += ms[pos]
        pos += 1
    blocks = [tuple(range(pos))]
    j = 1
    while True:
        cap = Fraction(1, 2**j)
        upper = Fraction(4, 3) * cap
        while pos < len(ms) and ms[pos] > cap / 2:
            pos += 1
        block: List[int] = []
        s = Fraction(0)
        while s < cap and pos < len(ms):
            if s + ms[pos] <= upper:
                block.append(pos)
                s += ms[pos]
            pos += 1
        if s < cap:
            return BlockSelection(tuple(blocks), ms, target, tuple(block))
        blocks.append(tuple(block))
        j += 1
