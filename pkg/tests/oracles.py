"""Slow, independent reference implementations used only by the test suite.

Nothing here imports the package's enumeration or elimination code.
"""

from fractions import Fraction
from itertools import combinations, product

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def fr(values):
    return [Fraction(v) for v in values]


def all_subsets(n):
    for k in range(n + 1):
        yield from combinations(range(n), k)


def subset_sums(atoms):
    atoms = fr(atoms)
    return sorted({sum((atoms[i] for i in s), Fraction(0)) for s in all_subsets(len(atoms))})


def range_intervals(atoms, kappa=0):
    """Maximal merge of [s, s + kappa] over subset sums, as a list of (lo, hi)."""
    kappa = Fraction(kappa)
    out = []
    for s in subset_sums(atoms):
        if out and s <= out[-1][1]:
            out[-1] = (out[-1][0], max(out[-1][1], s + kappa))
        else:
            out.append((s, s + kappa))
    return out


def sign_relations(atoms, window=0):
    """Canonical {-1,0,1} vectors r != 0 with |<r, a>| <= window, by full 3^n scan."""
    atoms = fr(atoms)
    window = Fraction(window)
    found = []
    for r in product((1, 0, -1), repeat=len(atoms)):
        nz = [x for x in r if x]
        if not nz or nz[0] != 1:
            continue
        if abs(sum(x * a for x, a in zip(r, atoms))) <= window:
            found.append(r)
    return found


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1:]
        yield [[head]] + part


def bully_indices(atoms, kappa=0):
    """Indices (into ``atoms`` as given) of bullies, via a sup over disjoint families.

    For each atom A we enumerate every subset of the other atoms and every partition of it into
    blocks; a family is admissible when each block weighs strictly less than A.  The nonatomic
    part can be cut into arbitrarily small pieces, so it contributes kappa to the sup.
    """
    atoms = fr(atoms)
    kappa = Fraction(kappa)
    out = []
    for i, a in enumerate(atoms):
        others = [j for j in range(len(atoms)) if j != i]
        best = Fraction(0)
        for s in all_subsets(len(others)):
            chosen = [others[k] for k in s]
            for part in set_partitions(chosen):
                if all(sum(atoms[j] for j in blk) < a for blk in part):
                    best = max(best, sum((atoms[j] for j in chosen), Fraction(0)))
                    break
        if best + kappa < a:
            out.append(i)
    return out


def rank(rows, width):
    if not rows:
        return 0
    entries = [[QQ(Fraction(x).numerator, Fraction(x).denominator) for x in r] for r in rows]
    return DomainMatrix(entries, (len(rows), width), QQ).rank()


def solution_dimension(atoms, kappa=0, relations=None):
    """Dimension of the space of (nu, slope) solving every relation constraint.

    kappa = 0: unknowns nu only, constraints <r, nu> = 0.
    kappa > 0: unknowns (nu, slope), constraints <r, nu> - <r, a> slope = 0 for |<r, a>| <= kappa.
    ``relations`` may supply the sign vectors (as tuples) when a full scan here would be too slow.
    """
    atoms = fr(atoms)
    rels = sign_relations(atoms, kappa) if relations is None else [tuple(r) for r in relations]
    if Fraction(kappa) == 0:
        rows = [list(r) for r in rels]
        width = len(atoms)
    else:
        rows = [list(r) + [-sum(x * a for x, a in zip(r, atoms))] for r in rels]
        width = len(atoms) + 1
    return width - rank(rows, width)


def satisfies_L(atoms, nu, kappa=0, slope=0):
    """Exhaustive (L) check for kappa = 0: equal mu over all subset pairs forces equal nu."""
    atoms, nu = fr(atoms), fr(nu)
    seen = {}
    for s in all_subsets(len(atoms)):
        mu_s = sum((atoms[i] for i in s), Fraction(0))
        nu_s = sum((nu[i] for i in s), Fraction(0))
        if seen.setdefault(mu_s, nu_s) != nu_s:
            return False
    return True


def satisfies_O(atoms, nu):
    atoms, nu = fr(atoms), fr(nu)
    table = {}
    for s in all_subsets(len(atoms)):
        mu_s = sum((atoms[i] for i in s), Fraction(0))
        nu_s = sum((nu[i] for i in s), Fraction(0))
        if table.setdefault(mu_s, nu_s) != nu_s:
            return False
    values = [table[k] for k in sorted(table)]
    return all(x <= y for x, y in zip(values, values[1:]))
