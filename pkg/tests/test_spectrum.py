import itertools

import pytest

from hstaralg import endo_algebra as ea
from hstaralg import hstar as hs
from hstaralg import matcat as mc
from hstaralg import spectrum as sp
from hstaralg.errors import CapError, InputError
from hstaralg.groups import parse_group
from hstaralg.semiring import boolean

from helpers import ZOO, chain3

B = boolean()


def rel(*names):
    return hs.make_rel_group_algebra([parse_group(n) for n in names])


def brute_characters(A):
    """Every map A -> S satisfying the homomorphism laws, checked on raw entries."""
    sr = A.semiring
    els = list(A.elements)
    idx = {f: i for i, f in enumerate(els)}
    zero = mc.zero_mor(sr, A.dim, A.dim)
    idn = mc.identity(sr, A.dim)
    out = []
    for vals in itertools.product(sr.elements(), repeat=len(els)):
        v = dict(zip(els, vals))
        if v[zero] != sr.zero or (A.unital and v[idn] != sr.one):
            continue
        if any(v[mc.add(f, g)] != sr.add(v[f], v[g]) or v[mc.compose(f, g)] != sr.mul(v[f], v[g])
               for f in els for g in els):
            continue
        if any(v[mc.dagger(f)] != sr.star(v[f]) for f in els):
            continue
        if any(v[mc.scalar_mul(mc.scalar(sr, s), f)] != sr.mul(s, v[f]) for s in sr.elements() for f in els):
            continue
        out.append(tuple(vals[idx[f]] for f in els))
    return sorted(out)


def diag_algebra(n, sr=B):
    return ea.closure([mc.diag(sr, [sr.one if j == i else sr.zero for j in range(n)]) for i in range(n)])


def test_characters_diagonal_dim2():
    A = diag_algebra(2)
    chars = sp.characters(A)
    assert len(chars) == 2
    assert sorted(c.values for c in chars) == brute_characters(A)
    # the two coordinate evaluations
    evals = {tuple(f.entries[i][i] for f in A.elements) for i in range(2)}
    assert {c.values for c in chars} == evals


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_diagonal_has_n_characters(n):
    assert len(sp.characters(diag_algebra(n))) == n


def test_characters_of_scalars():
    for n in (1, 2, 3):
        A = ea.closure([], dim=n, semiring=B)
        (rho,) = sp.characters(A)
        assert rho(mc.identity(B, n)) == 1 and rho(mc.zero_mor(B, n, n)) == 0


def test_zero_algebra_has_zero_character():
    A = ea.closure([mc.zero_mor(B, 2, 2)], unital=False)
    (rho,) = sp.characters(A)
    assert rho.values == (0,)
    assert sp.verify_character(rho).ok
    assert "character.unit" not in {c.tag for c in sp.verify_character(rho)}


@pytest.mark.parametrize("groups", [["z2"], ["z1", "z1"], ["z3"], ["z1", "z2"]])
def test_characters_match_brute_force(groups):
    A = hs.generated_vn(rel(*groups))
    assert sorted(c.values for c in sp.characters(A)) == brute_characters(A)


@pytest.mark.parametrize("name,dim", [("chain3", 2), ("BxB", 1), ("Z/4", 1)])
def test_characters_other_semirings(name, dim):
    sr = ZOO[name]
    A = diag_algebra(dim, sr)
    assert len(sr.elements()) ** len(A) <= 1 << 16
    assert sorted(c.values for c in sp.characters(A)) == brute_characters(A)


def test_characters_budget():
    with pytest.raises(CapError):
        sp.characters(diag_algebra(3), budget=2)


def test_generating_subset_generates():
    for groups in (["z2", "z3"], ["z1", "z1", "z1"]):
        A = hs.generated_vn(rel(*groups))
        gens = sp.generating_subset(A)
        assert ea.closure(gens, dim=A.dim, semiring=B) == A
        for g in gens:
            assert ea.closure([h for h in gens if h != g], dim=A.dim, semiring=B) != A


def test_restrict():
    A = diag_algebra(2)
    small = ea.closure([], dim=2, semiring=B)
    chars = sp.characters(A)
    assert all(sp.restrict(c, A) == c for c in chars)
    (only,) = sp.characters(small)
    assert all(sp.restrict(c, small) == only for c in chars)
    mid = ea.closure([mc.diag(B, [1, 0])])
    for c in chars:
        assert sp.restrict(sp.restrict(c, mid), small) == sp.restrict(c, small)
        assert sp.verify_character(sp.restrict(c, mid)).ok
    with pytest.raises(InputError):
        sp.restrict(only, A)


def test_rho_from_setlike_examples():
    alg = rel("z2", "z3")
    vn = hs.generated_vn(alg)
    fam = hs.set_like_elements(alg)
    a, b = fam.elements
    ra, rb = sp.rho_from_setlike(alg, a, vn), sp.rho_from_setlike(alg, b, vn)
    assert ra(mc.identity(B, 5)) == 1 and ra(mc.zero_mor(B, 5, 5)) == 0
    ea_ = mc.diag(B, [1, 1, 0, 0, 0])
    eb = mc.diag(B, [0, 0, 1, 1, 1])
    assert ra(ea_) == 1 and ra(eb) == 0
    assert rb(ea_) == 0 and rb(eb) == 1
    assert ra in sp.characters(vn) and rb in sp.characters(vn)


@pytest.mark.parametrize("groups", [["z2"], ["z1", "z1"], ["z2", "z3"], ["z1", "z1", "z1"], ["z4", "z1"]])
def test_setlikes_inject_into_spectrum(groups):
    alg = rel(*groups)
    vn = hs.generated_vn(alg)
    chars = set(sp.characters(vn))
    rhos = [sp.rho_from_setlike(alg, a, vn) for a in hs.set_like_elements(alg).elements]
    assert len(set(rhos)) == len(rhos) == len(groups)
    assert set(rhos) <= chars


def test_global_sections_examples():
    A = diag_algebra(2)
    assert sp.global_sections([]) == [()]
    assert [s[0] for s in sp.global_sections([A])] == sp.characters(A)
    small = ea.closure([], dim=2, semiring=B)
    secs = sp.global_sections([small, A])
    assert len(secs) == 2
    # brute: pairs (rho_small, rho_A) agreeing on restriction
    pairs = [(x, y) for x in sp.characters(small) for y in sp.characters(A) if sp.restrict(y, small) == x]
    assert sorted(secs, key=repr) == sorted(pairs, key=repr)


def test_global_sections_errors():
    A = diag_algebra(2)
    B2 = ea.closure([mc.mat(B, [[0, 1], [1, 0]])])
    with pytest.raises(InputError):
        sp.global_sections([A, B2], pairs=[(0, 1)])
    with pytest.raises(CapError):
        sp.global_sections([diag_algebra(3), diag_algebra(3)], cap=2)


def test_chain3_characters():
    sr = chain3()
    A = ea.closure([mc.diag(sr, [sr.one, sr.zero])])
    assert sorted(c.values for c in sp.characters(A)) == brute_characters(A)
