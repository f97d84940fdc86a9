"""Semiring zoo, hypothesis strategies and library-independent oracles."""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from hstaralg import matcat as mc
from hstaralg.semiring import boolean, nat, table_semiring


def bool_pair_swap():
    """B x B, componentwise, with the swap involution."""
    names = ["00", "10", "01", "11"]

    def parse(s):
        return int(s[0]), int(s[1])

    def name(a, b):
        return f"{a}{b}"

    add = [[name(*(x | y for x, y in zip(parse(p), parse(q)))) for q in names] for p in names]
    mul = [[name(*(x & y for x, y in zip(parse(p), parse(q)))) for q in names] for p in names]
    star = [p[::-1] for p in names]
    return table_semiring(names, add, mul, "00", "11", star, name="BxB")


def zmod(n):
    names = [str(i) for i in range(n)]
    add = [[str((i + j) % n) for j in range(n)] for i in range(n)]
    mul = [[str((i * j) % n) for j in range(n)] for i in range(n)]
    return table_semiring(names, add, mul, "0", "1", name=f"Z/{n}")


def chain3():
    """{0 < m < 1} with max and min."""
    names = ["0", "m", "1"]
    add = [[names[max(i, j)] for j in range(3)] for i in range(3)]
    mul = [[names[min(i, j)] for j in range(3)] for i in range(3)]
    return table_semiring(names, add, mul, "0", "1", name="chain3")


def gf2():
    """Boolean carrier with 1 + 1 = 0."""
    return table_semiring(["0", "1"], [["0", "1"], ["1", "0"]], [["0", "0"], ["0", "1"]], "0", "1",
                          name="GF2")


ZOO = {
    "boolean": boolean(),
    "nat": nat(),
    "BxB": bool_pair_swap(),
    "Z/4": zmod(4),
    "chain3": chain3(),
}
FINITE = {k: v for k, v in ZOO.items() if v.enumerable}
POSITIVE_FINITE = {"boolean": ZOO["boolean"], "chain3": ZOO["chain3"]}


def scalars(sr):
    if sr.enumerable:
        return st.sampled_from(sr.elements())
    return st.integers(min_value=0, max_value=40)


def matrices(sr, dom, cod):
    return st.lists(st.lists(scalars(sr), min_size=dom, max_size=dom), min_size=cod, max_size=cod).map(
        lambda rows: mc.Mor(sr, dom, cod, rows))


semirings = st.sampled_from(sorted(ZOO)).map(ZOO.__getitem__)
finite_semirings = st.sampled_from(sorted(FINITE)).map(FINITE.__getitem__)


# plain-list oracles (no library arithmetic)


def bool_matmul(a, b):
    return [[int(any(a[i][k] and b[k][j] for k in range(len(b)))) for j in range(len(b[0]))]
            for i in range(len(a))]


def all_bool_matrices(rows, cols):
    for bits in itertools.product((0, 1), repeat=rows * cols):
        yield [list(bits[i * cols:(i + 1) * cols]) for i in range(rows)]


def brute_commutant(gens, n):
    """Every Boolean n x n matrix commuting with each generator, as tuples."""
    out = []
    for f in all_bool_matrices(n, n):
        if all(bool_matmul(f, g) == bool_matmul(g, f) for g in gens):
            out.append(tuple(map(tuple, f)))
    return sorted(out)


def as_lists(f):
    return [list(r) for r in f.entries]


def rel_mu(groups):
    """Boolean multiplication of a disjoint union of groups, from the raw tables."""
    n = sum(len(t) for t in groups)
    mu = [[0] * (n * n) for _ in range(n)]
    off = 0
    for t in groups:
        for a in range(len(t)):
            for b in range(len(t)):
                mu[off + t[a][b]][(off + a) * n + off + b] = 1
        off += len(t)
    return mu


def eval_mu(mu, n, x, y):
    """mu applied to the pair of Boolean vectors x, y."""
    return [int(any(mu[k][i * n + j] and x[i] and y[j] for i in range(n) for j in range(n)))
            for k in range(n)]


def unit_points(mu, n):
    """Every Boolean vector u with mu(u, x) = x = mu(x, u) for all basis x."""
    out = []
    for u in itertools.product((0, 1), repeat=n):
        ok = True
        for i in range(n):
            e = [int(j == i) for j in range(n)]
            if eval_mu(mu, n, u, e) != e or eval_mu(mu, n, e, u) != e:
                ok = False
                break
        if ok:
            out.append(list(u))
    return out


def copyable_points(mu, n):
    """Nonzero Boolean vectors a with mu^T a = a (x) a."""
    out = []
    for a in itertools.product((0, 1), repeat=n):
        if not any(a):
            continue
        comult = [int(any(mu[k][c] and a[k] for k in range(n))) for c in range(n * n)]
        if comult == [a[i] & a[j] for i in range(n) for j in range(n)]:
            out.append(list(a))
    return out


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def klein_table():
    return [[a ^ b for b in range(4)] for a in range(4)]
