import random

import pytest

from hstaralg import endo_algebra as ea
from hstaralg import hstar as hs
from hstaralg import matcat as mc
from hstaralg import structure as st
from hstaralg.errors import ClassificationError, InputError, PreconditionError
from hstaralg.groups import GroupTable, cyclic, is_isomorphic, isomorphic_by_search, parse_group
from hstaralg.hstar import DaggerAlgebra
from hstaralg.matcat import Mor
from hstaralg.semiring import boolean, nat

from helpers import as_lists, cyclic_table, klein_table, rel_mu

B = boolean()

GROUPS_BY_ORDER = {1: ["z1"], 2: ["z2"], 3: ["z3"], 4: ["z4", "z2xz2"], 5: ["z5"], 6: ["z6"]}


def rel(*names):
    return hs.make_rel_group_algebra([parse_group(n) for n in names])


def multisets(total):
    names = [g for k in sorted(GROUPS_BY_ORDER) for g in GROUPS_BY_ORDER[k]]
    order = {g: k for k, gs in GROUPS_BY_ORDER.items() for g in gs}

    def rec(start, left):
        yield []
        for i in range(start, len(names)):
            g = names[i]
            if order[g] <= left:
                for rest in rec(i, left - order[g]):
                    yield [g] + rest

    return [m for m in rec(0, total) if m]


def relabel(table, rng):
    n = len(table)
    p = list(range(n))
    rng.shuffle(p)
    inv = {v: i for i, v in enumerate(p)}
    return [[p[table[inv[a]][inv[b]]] for b in range(n)] for a in range(n)]


def test_primitive_idempotents_examples():
    (p,) = st.primitive_idempotents(rel("z2"))
    assert p.e == mc.identity(B, 2)
    assert as_lists(hs.right_mult(rel("z2"), p.alpha)) == [[1, 1], [1, 1]]
    ps = st.primitive_idempotents(rel("z1", "z1"))
    assert sorted(p.e.entries for p in ps) == sorted([mc.diag(B, [1, 0]).entries, mc.diag(B, [0, 1]).entries])
    vn = hs.generated_vn(rel("z1", "z1"))
    assert all(ea.is_primitive(p.e, vn) for p in ps)
    ps = st.primitive_idempotents(rel("z2", "z3"))
    assert sorted(p.coords for p in ps) == [[0, 1], [2, 3, 4]]
    assert all(p.e == mc.diag(B, [int(i in p.coords) for i in range(5)]) for p in ps)


def test_primitive_idempotents_hypotheses():
    with pytest.raises(PreconditionError) as exc:
        st.primitive_idempotents(DaggerAlgebra(mc.zero_mor(B, 1, 1)))
    assert exc.value.hypothesis == "H*-algebra"
    # copyable but overlapping points
    overlap = DaggerAlgebra(Mor(B, 4, 2, [[1, 0, 0, 0], [0, 1, 1, 1]]))
    with pytest.raises(PreconditionError):
        st.primitive_idempotents(overlap)
    # over Nat the unit search is not enumerable
    with pytest.raises(InputError):
        st.primitive_idempotents(DaggerAlgebra(Mor(nat(), 1, 1, [[1]])))


def test_decompose_z2_z3():
    dec = st.decompose(rel("z2", "z3"))
    assert [c.coords for c in dec.components] == [[0, 1], [2, 3, 4]]
    assert as_lists(dec.components[0].mu) == rel_mu([cyclic_table(2)])
    assert as_lists(dec.components[1].mu) == rel_mu([cyclic_table(3)])
    assert dec.checks.ok and dec.reconstruct() == dec.algebra.mu


def test_decompose_single_group():
    alg = rel("z4")
    dec = st.decompose(alg)
    assert len(dec.components) == 1 and dec.components[0].mu == alg.mu


def test_decompose_three_points():
    dec = st.decompose(rel("z1", "z1", "z1"))
    assert [c.dim for c in dec.components] == [1, 1, 1]
    assert all(c.mu == mc.identity(B, 1) for c in dec.components)


def test_decomposition_invariants_reported():
    dec = st.decompose(rel("z2", "z2", "z1"))
    tags = {c.tag for c in dec.checks}
    assert "decompose.reconstruction" in tags and "decompose.cross_term_zero[0,2]" in tags
    assert all(c.passed for c in dec.checks)


def test_rel_extract_groups_examples():
    gs = st.rel_extract_groups(st.decompose(rel("z2", "z3")))
    assert [g.name for g in gs] == ["Z2", "Z3"]
    assert isomorphic_by_search(gs[0], cyclic(2)) and isomorphic_by_search(gs[1], cyclic(3))
    (z4,) = st.rel_extract_groups(st.decompose(rel("z4")))
    assert is_isomorphic(z4, cyclic(4)) and not is_isomorphic(z4, parse_group("z2xz2"))


def test_non_group_component_raises():
    # a two-valued product: 1*1 = {0, 1}
    mu = Mor(B, 4, 2, [[1, 0, 0, 1], [0, 1, 1, 1]])
    with pytest.raises(ClassificationError) as exc:
        st.component_group(mu, 0)
    assert exc.value.axiom == "single-valuedness" and exc.value.component == 0
    partial = Mor(B, 4, 2, [[1, 0, 0, 0], [0, 1, 1, 0]])
    with pytest.raises(ClassificationError) as exc:
        st.component_group(partial, 3)
    assert exc.value.axiom == "totality" and exc.value.component == 3
    # a function that is not a group: constant 0
    const = Mor(B, 4, 2, [[1, 1, 1, 1], [0, 0, 0, 0]])
    with pytest.raises(ClassificationError):
        st.component_group(const)


def test_rel_extract_needs_boolean():
    dec = st.decompose(rel("z1"))
    dec.algebra = DaggerAlgebra(Mor(nat(), 1, 1, [[1]]))
    with pytest.raises(InputError):
        st.rel_extract_groups(dec)


@pytest.mark.parametrize("total", range(1, 7))
def test_round_trip_all_multisets(total):
    rng = random.Random(total)
    for names in multisets(total):
        if sum(parse_group(n).order for n in names) != total:
            continue
        groups = [parse_group(n) for n in names]
        tables = [relabel([list(r) for r in g.table], rng) for g in groups]
        dec = st.decompose(hs.make_rel_group_algebra(tables))
        got = st.rel_extract_groups(dec)
        assert sorted(g.invariant_factors for g in got) == sorted(g.invariant_factors for g in groups)
        for a, b in zip(got, [GroupTable(tuple(map(tuple, t))) for t in tables]):
            assert isomorphic_by_search(a, b)


def test_multiset_enumeration_count():
    # orders 1..6 with two groups of order 4: partitions with labels
    assert len([m for m in multisets(4) if sum(parse_group(n).order for n in m) == 4]) == 6


def test_subdirect_examples():
    r = st.subdirect_report(rel("z1", "z1"))
    assert r.ok and r.size == 4 and [len(b) for b in r.blocks] == [2, 2] and r.is_product
    r = st.subdirect_report(rel("z3"))
    assert r.ok and len(r.blocks) == 1 and len(r.blocks[0]) == r.size
    r = st.subdirect_report(rel("z2", "z2"))
    assert r.ok and [len(b) for b in r.blocks] == [4, 4]


def test_distribute_iso_examples():
    assert st.distribute_iso(3, [4]) == mc.identity(B, 12)
    assert st.distribute_iso(1, [2, 3]) == mc.identity(B, 5)
    p = st.distribute_iso(2, [1, 1])
    assert mc.compose(p, mc.dagger(p)) == mc.identity(B, 4)
    # (x, y) with x in 2 and y in 1 (+) 1: source index x*2 + y, target block y then x
    assert [p.column(j).index(1) for j in range(4)] == [0, 2, 1, 3]
    with pytest.raises(InputError):
        st.distribute_iso(-1, [1])


def test_distribute_naturality_samples():
    rng = random.Random(7)

    def rand():
        dom, cod = rng.randint(1, 2), rng.randint(1, 2)
        return Mor(B, dom, cod, [[rng.randint(0, 1) for _ in range(dom)] for _ in range(cod)])

    for _ in range(30):
        f = rand()
        gs = [rand() for _ in range(rng.randint(1, 3))]
        assert st.distribute_naturality(f, gs)
        assert mc.is_unitary(st.distribute_iso(f.dom, [g.dom for g in gs]))


def test_klein_component_recovered():
    tables = [klein_table(), cyclic_table(1)]
    gs = st.rel_extract_groups(st.decompose(hs.make_rel_group_algebra(tables)))
    assert [g.invariant_factors for g in gs] == [(2, 2), ()]
