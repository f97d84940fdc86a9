"""Endomorphism semialgebras ``Hom(X, X)``: closures, commutants, von Neumann
and maximality tests, subunital idempotents.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import matcat as mc
from ._accel import kernels
from .errors import CapError, InputError, UnsupportedError
from .matcat import Mor
from .report import CheckList
from .semiring import BOOLEAN, TABLE, SemiringDef

DEFAULT_BUDGET = 1 << 20
DEFAULT_CLOSURE_CAP = 1 << 14


class Subsemialgebra:
    """A finite set of endomorphisms of ``dim`` (closed under the algebra
    operations when built by :func:`closure` or :func:`commutant`).

    Equality is set equality of the elements.
    """

    def __init__(self, semiring: SemiringDef, dim: int, elements: Iterable[Mor],
                 unital: bool = True, generators: Sequence[Mor] | None = None):
        els = frozenset(elements)
        for e in els:
            if e.dom != dim or e.cod != dim or e.semiring != semiring:
                raise InputError(f"{e!r} is not an endomorphism of {dim} over {semiring.label}", e)
        self.semiring = semiring
        self.dim = dim
        self.element_set = els
        self.elements = tuple(sorted(els, key=Mor.sort_key))
        self.unital = unital
        self.generators = tuple(generators) if generators is not None else None

    def __contains__(self, f: Mor) -> bool:
        return f in self.element_set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subsemialgebra):
            return NotImplemented
        return (self.dim == other.dim and self.semiring == other.semiring
                and self.element_set == other.element_set)

    def __hash__(self) -> int:
        return hash((self.dim, self.element_set))

    def __le__(self, other: Subsemialgebra) -> bool:
        return self.element_set <= other.element_set

    def __repr__(self) -> str:
        return f"Subsemialgebra(dim={self.dim}, |A|={len(self)}, unital={self.unital})"

    def index(self, f: Mor) -> int:
        return self._index[f]

    @cached_property
    def _index(self) -> dict[Mor, int]:
        return {f: i for i, f in enumerate(self.elements)}

    @cached_property
    def is_commutative(self) -> bool:
        els = self.elements
        return all(mc.compose(f, g) == mc.compose(g, f)
                   for i, f in enumerate(els) for g in els[i + 1:])

    @cached_property
    def subunital_idempotents(self) -> dict[Mor, Mor]:
        """Map each subunital idempotent ``p`` to a complement ``q`` in the set."""
        sr, n = self.semiring, self.dim
        idn = mc.identity(sr, n)
        idem = [f for f in self.elements if mc.compose(f, f) == f]
        out = {}
        for p in idem:
            for q in idem:
                if mc.add(p, q) == idn and _orthogonal(p, q):
                    out[p] = q
                    break
        return out


def _orthogonal(p: Mor, q: Mor) -> bool:
    # both orders: idempotent pairs are composable either way
    return mc.compose(p, q).is_zero() and mc.compose(q, p).is_zero()


def _endo_context(fs: Sequence[Mor], dim: int | None, sr: SemiringDef | None) -> tuple[SemiringDef, int]:
    if fs:
        sr = sr or fs[0].semiring
        dim = fs[0].dom if dim is None else dim
    if sr is None or dim is None:
        raise InputError("semiring and dimension are required for an empty generator list")
    for f in fs:
        if f.dom != dim or f.cod != dim:
            raise InputError(f"{f!r} is not an endomorphism of {dim}", f)
        if f.semiring != sr:
            raise InputError("mixed semirings among generators", f)
    return sr, dim


def closure(gens: Sequence[Mor], unital: bool = True, cap: int = DEFAULT_CLOSURE_CAP,
            dim: int | None = None, semiring: SemiringDef | None = None) -> Subsemialgebra:
    """Least set containing ``gens`` (and 0, and the identity if ``unital``)
    closed under +, composition, dagger and scalar multiplication."""
    gens = list(gens)
    sr, n = _endo_context(gens, dim, semiring)
    if not sr.enumerable:
        raise UnsupportedError(f"closure over {sr.label} is not finite in general")
    scalars = [mc.scalar(sr, s) for s in sr.elements()]
    seeds = [mc.zero_mor(sr, n, n)] + gens
    if unital:
        seeds.append(mc.identity(sr, n))
    seen: set[Mor] = set()
    done: list[Mor] = []
    queue: list[Mor] = []

    def push(f: Mor) -> None:
        if f not in seen:
            seen.add(f)
            queue.append(f)
            if len(seen) > cap:
                raise CapError(f"closure exceeded cap {cap}", partial=len(seen))

    for f in seeds:
        push(f)
    while queue:
        x = queue.pop(0)
        done.append(x)
        push(mc.dagger(x))
        for s in scalars:
            push(mc.scalar_mul(s, x))
        for y in done:
            push(mc.add(x, y))
            push(mc.compose(x, y))
            push(mc.compose(y, x))
    return Subsemialgebra(sr, n, seen, unital=unital, generators=gens)


def closure_violation(A: Subsemialgebra, dagger: bool = True) -> tuple | None:
    """First operation that leaves ``A`` (as ``(op, args)``), or None.

    ``dagger=False`` drops the involution, for plain unital subsemialgebras.
    """
    return _closure_violation(A.semiring, A.dim, A.element_set, A.unital, dagger)


def _boolean_pair_violation(sr: SemiringDef, n: int, elements: frozenset) -> tuple | None:
    rows = sorted(to_rows(f) for f in elements)
    present = set(rows)
    # image[b][m] = OR of the rows of b selected by the mask m
    image = {}
    for b in rows:
        t = [0] * (1 << n)
        for m in range(1, 1 << n):
            low = m & -m
            t[m] = t[m ^ low] | b[low.bit_length() - 1]
        image[b] = t
    for a in rows:
        for b in rows:
            if tuple(x | y for x, y in zip(a, b)) not in present:
                return ("add", from_rows(sr, a, n), from_rows(sr, b, n))
            t = image[b]
            if tuple(t[r] for r in a) not in present:
                return ("compose", from_rows(sr, a, n), from_rows(sr, b, n))
    return None


def _entry_ops(sr: SemiringDef):
    if sr.kind == BOOLEAN:
        return (lambda a, b: a | b), (lambda a, b: a & b)
    if sr.kind == TABLE:
        at, mt = sr.add_table, sr.mul_table
        return (lambda a, b: at[a][b]), (lambda a, b: mt[a][b])
    return sr.add, sr.mul


@lru_cache(maxsize=32)
def _closure_violation(sr: SemiringDef, n: int, elements: frozenset, unital: bool,
                       dagger: bool) -> tuple | None:
    # works on raw entry tuples; sizes reach Hom(X, X) itself
    if mc.zero_mor(sr, n, n) not in elements:
        return ("zero",)
    if unital and mc.identity(sr, n) not in elements:
        return ("identity",)
    for f in sorted(elements):
        if dagger and mc.dagger(f) not in elements:
            return ("dagger", f)
        if sr.enumerable:
            for s in sr.elements():
                if mc.scalar_mul(mc.scalar(sr, s), f) not in elements:
                    return ("scalar_mul", s, f)
    if sr.kind == BOOLEAN:
        return _boolean_pair_violation(sr, n, elements)
    add, mul = _entry_ops(sr)
    zero = sr.zero
    raw = sorted(f.entries for f in elements)
    present = set(raw)
    cols = {e: tuple(zip(*e)) if n else () for e in raw}

    def dot(row, col):
        acc = zero
        for x, y in zip(row, col):
            acc = add(acc, mul(x, y))
        return acc

    def wrap(e):
        return Mor(sr, n, n, e, check=False)

    for a in raw:
        for b in raw:
            s = tuple(tuple(add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))
            if s not in present:
                return ("add", wrap(a), wrap(b))
            bt = cols[b]
            c = tuple(tuple(dot(row, col) for col in bt) for row in a)
            if c not in present:
                return ("compose", wrap(a), wrap(b))
    return None


# commutants


def to_rows(f: Mor) -> tuple[int, ...]:
    """Boolean matrix as row bitmasks."""
    return tuple(sum(1 << j for j, x in enumerate(r) if x) for r in f.entries)


def from_rows(sr: SemiringDef, rows: Sequence[int], dom: int) -> Mor:
    return Mor(sr, dom, len(rows), [[(r >> j) & 1 for j in range(dom)] for r in rows], check=False)


def commutant(B: Iterable[Mor], dim: int, semiring: SemiringDef,
              budget: int = DEFAULT_BUDGET, method: str = "search") -> Subsemialgebra:
    """``{f in Hom(X, X) : f.g == g.f for all g in B}``.

    ``method="search"`` assigns the rows of ``f`` one at a time and checks each
    row equation as soon as its inputs are fixed; ``budget`` caps the visited
    partial assignments.  ``method="brute"`` tests all ``|S|**(dim*dim)``
    candidates and refuses up front if that exceeds ``budget``.
    """
    B = list(dict.fromkeys(B))
    sr, n = _endo_context(B, dim, semiring)
    if not sr.enumerable:
        raise UnsupportedError(f"commutant over {sr.label} needs an enumerable semiring")
    if method not in ("search", "brute"):
        raise InputError(f"unknown commutant method {method!r}")
    if method == "brute" and mc.count_morphisms(sr, n, n) > budget:
        raise CapError(f"{mc.count_morphisms(sr, n, n)} candidates exceed budget {budget}", partial=0)
    if sr.kind == BOOLEAN and n <= 6:
        run = kernels.commutant_brute if method == "brute" else kernels.commutant_search
        sols, nodes, exceeded = run(n, [to_rows(g) for g in B], budget)
        if exceeded:
            raise CapError(f"commutant search exceeded budget {budget}", partial=len(sols))
        els = [from_rows(sr, rows, n) for rows in sols]
    elif method == "brute":
        els = [f for f in mc.enumerate_morphisms(sr, n, n, budget=None)
               if all(mc.compose(f, g) == mc.compose(g, f) for g in B)]
    else:
        els = _commutant_search_generic(B, n, sr, budget)
    return Subsemialgebra(sr, n, els, unital=True)


def _commutant_search_generic(B: list[Mor], n: int, sr: SemiringDef, budget: int) -> list[Mor]:
    if n == 0:
        return [mc.zero_mor(sr, 0, 0)]
    add, mul, z = sr.add, sr.mul, sr.zero
    candidates = list(itertools.product(sr.elements(), repeat=n))
    checks: list[list[tuple[Mor, int]]] = [[] for _ in range(n)]
    for g in B:
        for i in range(n):
            support = [k for k in range(n) if g.entries[i][k] != z]
            checks[max([i] + support)].append((g, i))

    def row_ok(rows: list, g: Mor, i: int) -> bool:
        ge = g.entries
        for j in range(n):
            lhs = z
            for k in range(n):
                lhs = add(lhs, mul(rows[i][k], ge[k][j]))
            rhs = z
            for k in range(n):
                if ge[i][k] != z:
                    rhs = add(rhs, mul(ge[i][k], rows[k][j]))
            if lhs != rhs:
                return False
        return True

    out = []
    rows: list = [None] * n
    idx = [-1] * n
    nodes = 0
    depth = 0
    while depth >= 0:
        idx[depth] += 1
        if idx[depth] >= len(candidates):
            depth -= 1
            continue
        nodes += 1
        if nodes > budget:
            raise CapError(f"commutant search exceeded budget {budget}", partial=len(out))
        rows[depth] = candidates[idx[depth]]
        if not all(row_ok(rows, g, i) for g, i in checks[depth]):
            continue
        if depth == n - 1:
            out.append(Mor(sr, n, n, rows, check=False))
        else:
            depth += 1
            idx[depth] = -1
    return out


def double_commutant(A: Iterable[Mor], dim: int, semiring: SemiringDef,
                     budget: int = DEFAULT_BUDGET, method: str = "search") -> Subsemialgebra:
    first = commutant(A, dim, semiring, budget, method)
    return commutant(first, dim, semiring, budget, method)


def is_von_neumann(A: Subsemialgebra, budget: int = DEFAULT_BUDGET, method: str = "search") -> bool:
    return A == double_commutant(A, A.dim, A.semiring, budget, method)


def is_maximal(A: Subsemialgebra, budget: int = DEFAULT_BUDGET, method: str = "search") -> bool:
    return A == commutant(A, A.dim, A.semiring, budget, method)


def all_commute(fs: Iterable[Mor]) -> bool:
    fs = list(fs)
    return all(mc.compose(f, g) == mc.compose(g, f) for i, f in enumerate(fs) for g in fs[i + 1:])


def is_dagger_closed(fs: Iterable[Mor]) -> bool:
    s = set(fs)
    return all(mc.dagger(f) in s for f in s)


def check_commutant_lemma(A: Iterable[Mor], B: Iterable[Mor], dim: int, semiring: SemiringDef,
                          budget: int = DEFAULT_BUDGET) -> CheckList:
    """The four standard commutant facts for the given sets ``A`` and ``B``.

    Clauses whose hypothesis does not hold for these sets pass vacuously.
    """
    A, B = set(A), set(B)
    Ap = commutant(A, dim, semiring, budget)
    Bp = commutant(B, dim, semiring, budget)
    report = CheckList()
    for name, S, Sp in (("A", A, Ap), ("B", B, Bp)):
        report.add(f"commutant.unital_subsemialgebra[{name}]",
                   (bad := closure_violation(Sp, dagger=False)) is None, bad)
        report.add(f"commutant.dagger_closed[{name}]",
                   not is_dagger_closed(S) or is_dagger_closed(Sp),
                   next((f for f in Sp if mc.dagger(f) not in Sp), None))
        commuting = all_commute(S)
        contained = S <= Sp.element_set
        report.add(f"commutant.commuting_iff_contained[{name}]", commuting == contained,
                   next((f for f in S if f not in Sp), None))
    if A <= B:
        report.add("commutant.antitone", Bp <= Ap,
                   next((f for f in Bp if f not in Ap), None))
    else:
        report.add("commutant.antitone", True, detail="vacuous: A not contained in B")
    return report


# subunital idempotents


@dataclass(frozen=True)
class SubunitalIdempotent:
    p: Mor
    complement_q: Mor


def is_subunital_idempotent(p: Mor, A: Subsemialgebra) -> SubunitalIdempotent | None:
    q = A.subunital_idempotents.get(p)
    return None if q is None else SubunitalIdempotent(p, q)


def is_primitive(p: Mor, A: Subsemialgebra) -> bool:
    """``p`` is a nonzero subunital idempotent that is not ``s + t`` for
    nonzero orthogonal subunital idempotents ``s, t`` of ``A``."""
    if p.is_zero() or p not in A.subunital_idempotents:
        return False
    return decomposition_witness(p, A) is None


def decomposition_witness(p: Mor, A: Subsemialgebra) -> tuple[Mor, Mor] | None:
    subs = [s for s in A.subunital_idempotents if not s.is_zero()]
    for i, s in enumerate(subs):
        for t in subs[i:]:
            if mc.add(s, t) == p and _orthogonal(s, t):
                return (s, t)
    return None
