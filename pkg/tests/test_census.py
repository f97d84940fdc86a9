import itertools
from collections import Counter

import pytest

from hstaralg import hstar as hs
from hstaralg.census import MAX_SIZE, census, classify, mu_from_masks
from hstaralg.errors import CapError, InputError
from hstaralg.groups import parse_group
from hstaralg.hstar import DaggerAlgebra

from helpers import as_lists, cyclic_table, klein_table, rel_mu

GROUP_TABLES = {1: [cyclic_table(1)], 2: [cyclic_table(2)], 3: [cyclic_table(3)],
                4: [cyclic_table(4), klein_table()]}


def plain_axioms(m, n):
    """Passed-axiom string for a Boolean mu given as n rows of n*n bits."""
    def prod(a, b):  # set of k with (a, b) -> k
        return {k for k in range(n) if m[k][a * n + b]}

    def apply(xs, ys):
        return {k for x in xs for y in ys for k in prod(x, y)}

    out = ""
    if all(apply(apply({a}, {b}), {c}) == apply({a}, apply({b}, {c}))
           for a in range(n) for b in range(n) for c in range(n)):
        out += "A"
    if all(prod(a, b) == prod(b, a) for a in range(n) for b in range(n)):
        out += "C"
    if all(any(m[k][c] and m[l][c] for c in range(n * n)) == (k == l) for k in range(n) for l in range(n)):
        out += "S"
    subsets = [set(s) for r in range(n + 1) for s in itertools.combinations(range(n), r)]
    if any(all(apply(u, {x}) == {x} == apply({x}, u) for x in range(n)) for u in subsets):
        out += "U"

    def right(u):  # R_u as a set of (row, col) pairs: col b goes to row k when k in u*b
        return {(k, b) for b in range(n) for k in apply(u, {b})}

    if all(any(right(y) == {(b, k) for k, b in right({x})} for y in subsets) for x in range(n)):
        out += "H"
    return out or "-"


def labelled_unions(n):
    """Every Boolean mu on n points that is a disjoint union of abelian groups, up to relabelling."""
    found = set()

    def compositions(total, least=1):
        if total == 0:
            yield []
        for k in range(least, total + 1):
            for rest in compositions(total - k, k):
                yield [k] + rest

    for sizes in compositions(n):
        for tables in itertools.product(*(GROUP_TABLES[s] for s in sizes)):
            mu = rel_mu(list(tables))
            for perm in itertools.permutations(range(n)):
                relab = [[0] * (n * n) for _ in range(n)]
                for k in range(n):
                    for a in range(n):
                        for b in range(n):
                            relab[perm[k]][perm[a] * n + perm[b]] = mu[k][a * n + b]
                found.add(tuple(map(tuple, relab)))
    return found


def test_census_one():
    r = census(1)
    assert r.space == 2 and r.enumerated == 2
    assert r.counts == {"ACH": 1, "ACSUH": 1}
    assert r.classes == {"Z1": 1}


def test_census_two_matches_plain_oracle():
    r = census(2)
    assert r.space == r.enumerated == 256 and r.pruned == 0
    expected = Counter()
    for bits in itertools.product((0, 1), repeat=8):
        expected[plain_axioms([list(bits[:4]), list(bits[4:])], 2)] += 1
    assert r.counts == dict(expected)
    assert r.ok and not r.unclassified


def test_census_two_classification():
    r = census(2)
    assert r.classes == {"Z1+Z1": 1, "Z2": 2}
    assert {tuple(map(tuple, as_lists(e.mu))) for e in r.hstar} == labelled_unions(2)


def test_census_includes_injected_group_algebra():
    r = census(2)
    mus = {e.mu for e in r.hstar}
    for names in (["z2"], ["z1", "z1"]):
        assert hs.make_rel_group_algebra([parse_group(g) for g in names]).mu in mus


def test_census_three():
    r = census(3)
    assert r.space == 1 << 27 and r.enumerated == 1 << 18
    assert r.classes == {"Z1+Z1+Z1": 1, "Z1+Z2": 6, "Z3": 3}
    assert {tuple(map(tuple, as_lists(e.mu))) for e in r.hstar} == labelled_unions(3)
    assert r.ok and not r.unclassified


def test_labelled_unions_count():
    # n! / |Aut| summed over isomorphism types
    assert len(labelled_unions(2)) == 3
    assert len(labelled_unions(3)) == 10
    # Z1^4, Z1^2+Z2, Z1+Z3, Z2+Z2, Z4, Z2xZ2
    assert len(labelled_unions(4)) == 1 + 12 + 12 + 12 + 12 + 4


def test_census_errors():
    with pytest.raises(InputError):
        census(0)
    with pytest.raises(InputError):
        census(MAX_SIZE + 1)
    with pytest.raises(CapError):
        census(3, budget=10)


def test_classify_non_covering():
    # e0 and e0+e1 are both copyable and overlap: no classification
    alg = DaggerAlgebra(mu_from_masks(2, [0b0001, 0b1110]))
    assert classify(alg) == (None, [])
