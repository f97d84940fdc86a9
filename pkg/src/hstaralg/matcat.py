"""The matrix category Mat(S) over a commutative *-semiring S.

Objects are dimensions (plain ints; 0 is the zero object, 1 the monoidal
unit).  A morphism ``f: n -> m`` is an ``m x n`` matrix, rows indexed by the
codomain.  The monoidal structure is strict: ``X (x) I`` is ``X`` and the
tensor of basis vectors ``e_i (x) e_j`` sits at index ``i * dim(Y) + j``.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .errors import CapError, InputError, UnsupportedError
from .semiring import BOOLEAN, SemiringDef

DEFAULT_POINT_BUDGET = 1 << 20


class Mor:
    """An immutable matrix morphism ``dom -> cod`` over ``semiring``."""

    __slots__ = ("semiring", "dom", "cod", "entries", "_hash")

    def __init__(self, semiring: SemiringDef, dom: int, cod: int,
                 entries: Iterable[Iterable[int]], check: bool = True):
        rows = tuple(tuple(r) for r in entries)
        if check:
            if dom < 0 or cod < 0:
                raise InputError("negative dimension", (dom, cod))
            if len(rows) != cod or any(len(r) != dom for r in rows):
                raise InputError(f"entries do not have shape {cod}x{dom}", rows)
            for r in rows:
                for x in r:
                    if not semiring.is_element(x):
                        raise InputError(f"{x!r} is not in {semiring.label}", x)
        self.semiring = semiring
        self.dom = dom
        self.cod = cod
        self.entries = rows
        self._hash = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mor):
            return NotImplemented
        return (self.dom == other.dom and self.cod == other.cod
                and self.entries == other.entries and self.semiring == other.semiring)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dom, self.cod, self.entries))
        return self._hash

    def __lt__(self, other: Mor) -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        """Row-major lexicographic order on raw carrier values."""
        return (self.cod, self.dom, self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def __repr__(self) -> str:
        names = [[self.semiring.name_of(x) for x in r] for r in self.entries]
        return f"Mor({self.dom}->{self.cod}, {names})"

    def __matmul__(self, other: Mor) -> Mor:
        return compose(self, other)

    def __add__(self, other: Mor) -> Mor:
        return add(self, other)

    @property
    def T(self) -> Mor:
        return dagger(self)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.cod, self.dom)

    def is_zero(self) -> bool:
        z = self.semiring.zero
        return all(x == z for r in self.entries for x in r)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def nonzero_rows(self) -> list[int]:
        z = self.semiring.zero
        return [i for i, r in enumerate(self.entries) if any(x != z for x in r)]

    def nonzero_columns(self) -> list[int]:
        z = self.semiring.zero
        return [j for j in range(self.dom) if any(r[j] != z for r in self.entries)]

    def to_names(self) -> list[list[str]]:
        return [[self.semiring.name_of(x) for x in r] for r in self.entries]


# constructors


def mat(sr: SemiringDef, rows: Sequence[Sequence[int]], dom: int | None = None) -> Mor:
    """Matrix from raw rows; ``dom`` is only needed when there are no rows."""
    rows = [list(r) for r in rows]
    if dom is None:
        if not rows:
            raise InputError("dom must be given for a matrix with no rows")
        dom = len(rows[0])
    return Mor(sr, dom, len(rows), rows)


def identity(sr: SemiringDef, n: int) -> Mor:
    o, z = sr.one, sr.zero
    return Mor(sr, n, n, [[o if i == j else z for j in range(n)] for i in range(n)], check=False)


def zero_mor(sr: SemiringDef, dom: int, cod: int) -> Mor:
    return Mor(sr, dom, cod, [[sr.zero] * dom for _ in range(cod)], check=False)


def scalar(sr: SemiringDef, value: int) -> Mor:
    return Mor(sr, 1, 1, [[value]])


def point(sr: SemiringDef, values: Sequence[int]) -> Mor:
    return Mor(sr, 1, len(values), [[v] for v in values])


def basis_point(sr: SemiringDef, n: int, i: int) -> Mor:
    return Mor(sr, 1, n, [[sr.one if k == i else sr.zero] for k in range(n)], check=False)


def diag(sr: SemiringDef, values: Sequence[int]) -> Mor:
    n = len(values)
    return Mor(sr, n, n, [[values[i] if i == j else sr.zero for j in range(n)] for i in range(n)])


def permutation(sr: SemiringDef, perm: Sequence[int]) -> Mor:
    """The matrix sending basis vector ``j`` to basis vector ``perm[j]``."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise InputError("not a permutation", tuple(perm))
    rows = [[sr.zero] * n for _ in range(n)]
    for j, i in enumerate(perm):
        rows[i][j] = sr.one
    return Mor(sr, n, n, rows, check=False)


# category structure


def _same_semiring(f: Mor, g: Mor) -> SemiringDef:
    if f.semiring != g.semiring:
        raise InputError(f"semiring mismatch: {f.semiring.label} vs {g.semiring.label}", (f, g))
    return f.semiring


def compose(g: Mor, f: Mor) -> Mor:
    """``g . f``, i.e. first ``f`` then ``g``."""
    sr = _same_semiring(g, f)
    if f.cod != g.dom:
        raise InputError(f"cannot compose {g.dom}->{g.cod} after {f.dom}->{f.cod}", (g.shape, f.shape))
    cols = [tuple(r[j] for r in f.entries) for j in range(f.dom)]
    if sr.kind == BOOLEAN:
        rows = [[1 if any(x & y for x, y in zip(row, col)) else 0 for col in cols]
                for row in g.entries]
    else:
        add, mul, z = sr.add, sr.mul, sr.zero
        rows = []
        for row in g.entries:
            out = []
            for col in cols:
                acc = z
                for x, y in zip(row, col):
                    acc = add(acc, mul(x, y))
                out.append(acc)
            rows.append(out)
    return Mor(sr, f.dom, g.cod, rows, check=False)


def compose_all(*fs: Mor) -> Mor:
    """``compose_all(h, g, f) == h . g . f``."""
    out = fs[-1]
    for g in reversed(fs[:-1]):
        out = compose(g, out)
    return out


def dagger(f: Mor) -> Mor:
    st = f.semiring.star
    return Mor(f.semiring, f.cod, f.dom,
               [[st(f.entries[i][j]) for i in range(f.cod)] for j in range(f.dom)], check=False)


def tensor(f: Mor, g: Mor) -> Mor:
    """Kronecker product; row ``i1 * g.cod + i2``, column ``j1 * g.dom + j2``."""
    sr = _same_semiring(f, g)
    mul = sr.mul
    rows = [[mul(a, b) for a in frow for b in grow] for frow in f.entries for grow in g.entries]
    return Mor(sr, f.dom * g.dom, f.cod * g.cod, rows, check=False)


def tensor_all(*fs: Mor) -> Mor:
    out = fs[0]
    for g in fs[1:]:
        out = tensor(out, g)
    return out


def swap(sr: SemiringDef, m: int, n: int) -> Mor:
    """Symmetry ``X (x) Y -> Y (x) X`` for ``dim X = m``, ``dim Y = n``."""
    return permutation(sr, [j * m + i for i in range(m) for j in range(n)])


def oplus(*fs: Mor) -> Mor:
    """Block-diagonal direct sum."""
    if not fs:
        raise InputError("oplus needs at least one morphism")
    sr = fs[0].semiring
    for f in fs[1:]:
        _same_semiring(fs[0], f)
    dom = sum(f.dom for f in fs)
    rows = []
    off = 0
    for f in fs:
        for r in f.entries:
            rows.append([sr.zero] * off + list(r) + [sr.zero] * (dom - off - f.dom))
        off += f.dom
    return Mor(sr, dom, sum(f.cod for f in fs), rows, check=False)


def coprojection(sr: SemiringDef, i: int, dims: Sequence[int]) -> Mor:
    """Inclusion of summand ``i`` (0-based) into ``dims[0] + ... + dims[-1]``."""
    if not 0 <= i < len(dims):
        raise InputError(f"summand index {i} out of range for {list(dims)}", (i, tuple(dims)))
    off = sum(dims[:i])
    total = sum(dims)
    rows = [[sr.zero] * dims[i] for _ in range(total)]
    for t in range(dims[i]):
        rows[off + t][t] = sr.one
    return Mor(sr, dims[i], total, rows, check=False)


def projection(sr: SemiringDef, i: int, dims: Sequence[int]) -> Mor:
    return dagger(coprojection(sr, i, dims))


def copy_diagonal(sr: SemiringDef, n: int) -> Mor:
    """``Delta: X -> X (+) X``, the two identities stacked."""
    idn = identity(sr, n).entries
    return Mor(sr, n, 2 * n, idn + idn, check=False)


def codiagonal(sr: SemiringDef, n: int) -> Mor:
    """``nabla: X (+) X -> X``; equals the dagger of :func:`copy_diagonal`."""
    return dagger(copy_diagonal(sr, n))


def add(f: Mor, g: Mor) -> Mor:
    sr = _same_semiring(f, g)
    if f.shape != g.shape:
        raise InputError(f"cannot add {f.shape} and {g.shape}", (f.shape, g.shape))
    a = sr.add
    return Mor(sr, f.dom, f.cod, [[a(x, y) for x, y in zip(r, s)]
                                  for r, s in zip(f.entries, g.entries)], check=False)


def convolution_add(f: Mor, g: Mor) -> Mor:
    """Biproduct convolution ``nabla . (f (+) g) . Delta``."""
    sr = _same_semiring(f, g)
    if f.shape != g.shape:
        raise InputError(f"cannot add {f.shape} and {g.shape}", (f.shape, g.shape))
    return compose_all(codiagonal(sr, f.cod), oplus(f, g), copy_diagonal(sr, f.dom))


def sum_mors(fs: Iterable[Mor], sr: SemiringDef, dom: int, cod: int) -> Mor:
    out = zero_mor(sr, dom, cod)
    for f in fs:
        out = add(out, f)
    return out


def scalar_mul(s: Mor, f: Mor) -> Mor:
    sr = _same_semiring(s, f)
    if s.shape != (1, 1):
        raise InputError("scalar must be a 1x1 morphism", s.shape)
    v, m = s.entries[0][0], sr.mul
    return Mor(sr, f.dom, f.cod, [[m(v, x) for x in r] for r in f.entries], check=False)


def scalar_mul_via_unitors(s: Mor, f: Mor) -> Mor:
    """``X ~ X (x) I --f (x) s--> Y (x) I ~ Y``; unitors are identities here."""
    if s.shape != (1, 1):
        raise InputError("scalar must be a 1x1 morphism", s.shape)
    return tensor(f, s)


# enumeration


def count_morphisms(sr: SemiringDef, dom: int, cod: int) -> int:
    return sr.size ** (dom * cod)


def _check_budget(count: int, budget: int | None, what: str) -> None:
    if budget is not None and count > budget:
        raise CapError(f"{what}: {count} candidates exceed budget {budget}", partial=0)


def enumerate_points(sr: SemiringDef, n: int, budget: int | None = DEFAULT_POINT_BUDGET) -> Iterator[Mor]:
    """All points ``I -> n``: basis vectors first, then the rest in counting order."""
    if not sr.enumerable:
        raise UnsupportedError(f"cannot enumerate points over {sr.label}")
    _check_budget(sr.size ** n, budget, f"points of dim {n}")
    basis = [basis_point(sr, n, i) for i in range(n)]
    yield from basis
    seen = set(basis)
    for vals in itertools.product(sr.elements(), repeat=n):
        p = Mor(sr, 1, n, [[v] for v in reversed(vals)], check=False)
        if p not in seen:
            yield p


def enumerate_morphisms(sr: SemiringDef, dom: int, cod: int,
                        budget: int | None = DEFAULT_POINT_BUDGET) -> Iterator[Mor]:
    """All ``cod x dom`` matrices in row-major counting order."""
    if not sr.enumerable:
        raise UnsupportedError(f"cannot enumerate morphisms over {sr.label}")
    _check_budget(count_morphisms(sr, dom, cod), budget, f"morphisms {dom}->{cod}")
    for vals in itertools.product(sr.elements(), repeat=dom * cod):
        yield Mor(sr, dom, cod, [vals[i * dom:(i + 1) * dom] for i in range(cod)], check=False)


def is_unitary(f: Mor) -> bool:
    if f.dom != f.cod:
        return False
    idn = identity(f.semiring, f.dom)
    return compose(f, dagger(f)) == idn and compose(dagger(f), f) == idn
