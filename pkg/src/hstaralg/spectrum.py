"""Characters of finite subsemialgebras, restriction, the character of a
set-like element, and a bounded search for global sections.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import endo_algebra as ea
from . import hstar as hs
from . import matcat as mc
from .errors import CapError, InputError, TheoremViolation
from .matcat import Mor
from .report import CheckList

DEFAULT_SEARCH_BUDGET = 1 << 16


class OpTables:
    """Index-level operation tables of a finite subsemialgebra."""

    def __init__(self, A: ea.Subsemialgebra):
        sr = A.semiring
        els = A.elements
        idx = {f: i for i, f in enumerate(els)}

        def look(f: Mor) -> int:
            try:
                return idx[f]
            except KeyError:
                raise InputError("set is not closed under the algebra operations", f) from None

        self.algebra = A
        self.size = len(els)
        self.zero = look(mc.zero_mor(sr, A.dim, A.dim))
        self.unit = idx.get(mc.identity(sr, A.dim)) if A.unital else None
        self.add = [[look(mc.add(f, g)) for g in els] for f in els]
        self.comp = [[look(mc.compose(f, g)) for g in els] for f in els]
        self.dag = [look(mc.dagger(f)) for f in els]
        self.scalars = list(sr.elements())
        self.smul = {s: [look(mc.scalar_mul(mc.scalar(sr, s), f)) for f in els] for s in self.scalars}


_TABLES: dict[int, tuple[ea.Subsemialgebra, OpTables]] = {}


def op_tables(A: ea.Subsemialgebra) -> OpTables:
    hit = _TABLES.get(id(A))
    if hit is not None and hit[0] is A:
        return hit[1]
    t = OpTables(A)
    if len(_TABLES) > 64:
        _TABLES.clear()
    _TABLES[id(A)] = (A, t)
    return t


@dataclass(frozen=True)
class Character:
    algebra: ea.Subsemialgebra
    values: tuple[int, ...]

    def __call__(self, f: Mor) -> int:
        return self.values[self.algebra.index(f)]

    @cached_property
    def assignment(self) -> dict[Mor, int]:
        return dict(zip(self.algebra.elements, self.values))

    def names(self) -> list[str]:
        return [self.algebra.semiring.name_of(v) for v in self.values]

    def __repr__(self) -> str:
        return f"Character({self.names()})"


def make_character(A: ea.Subsemialgebra, assignment: Mapping[Mor, int]) -> Character:
    return Character(A, tuple(assignment[f] for f in A.elements))


def verify_character(rho: Character) -> CheckList:
    """All homomorphism laws, by direct evaluation over ``A`` and ``A x A``."""
    A = rho.algebra
    sr = A.semiring
    t = op_tables(A)
    v = rho.values
    n = t.size
    report = CheckList()
    report.add("character.zero", v[t.zero] == sr.zero, v[t.zero])
    if A.unital:
        report.add("character.unit", t.unit is not None and v[t.unit] == sr.one)
    report.add("character.additive",
               (bad := next(((i, j) for i in range(n) for j in range(n)
                             if v[t.add[i][j]] != sr.add(v[i], v[j])), None)) is None, bad)
    report.add("character.multiplicative",
               (bad := next(((i, j) for i in range(n) for j in range(n)
                             if v[t.comp[i][j]] != sr.mul(v[i], v[j])), None)) is None, bad)
    report.add("character.dagger",
               (bad := next((i for i in range(n) if v[t.dag[i]] != sr.star(v[i])), None)) is None, bad)
    report.add("character.scalar",
               (bad := next(((s, i) for s in t.scalars for i in range(n)
                             if v[t.smul[s][i]] != sr.mul(s, v[i])), None)) is None, bad)
    return report


def generating_subset(A: ea.Subsemialgebra) -> list[Mor]:
    """Greedy small generating set: add elements until the closure is ``A``,
    then drop any generator the others already produce."""
    gens: list[Mor] = []
    current = ea.closure([], A.unital, dim=A.dim, semiring=A.semiring)
    for f in A.elements:
        if f not in current:
            gens.append(f)
            current = ea.closure(gens, A.unital, dim=A.dim, semiring=A.semiring)
    if current != A:
        raise InputError("elements do not form a closed subsemialgebra")
    for g in list(gens):
        rest = [h for h in gens if h != g]
        if ea.closure(rest, A.unital, dim=A.dim, semiring=A.semiring) == A:
            gens = rest
    return gens


def _propagate(t: OpTables, seeds: dict[int, int], sr) -> list[int] | None:
    known = dict(seeds)
    done: list[int] = []
    queue = list(known)
    pos = 0

    def put(i: int, val: int) -> bool:
        old = known.get(i)
        if old is None:
            known[i] = val
            queue.append(i)
            return True
        return old == val

    while pos < len(queue):
        x = queue[pos]
        pos += 1
        done.append(x)
        vx = known[x]
        if not put(t.dag[x], sr.star(vx)):
            return None
        for s in t.scalars:
            if not put(t.smul[s][x], sr.mul(s, vx)):
                return None
        for y in done:
            vy = known[y]
            if not (put(t.add[x][y], sr.add(vx, vy))
                    and put(t.comp[x][y], sr.mul(vx, vy))
                    and put(t.comp[y][x], sr.mul(vy, vx))):
                return None
    if len(known) != t.size:
        return None
    return [known[i] for i in range(t.size)]


def characters(A: ea.Subsemialgebra, budget: int = DEFAULT_SEARCH_BUDGET) -> list[Character]:
    """Every S*-semialgebra homomorphism ``A -> S``.

    Scalars are assigned to a small generating set and pushed through the
    operation tables; any clash rejects the assignment.
    """
    sr = A.semiring
    t = op_tables(A)
    gens = [A.index(g) for g in generating_subset(A)]
    scalars = list(sr.elements())
    if len(scalars) ** len(gens) > budget:
        raise CapError(f"{len(scalars)}^{len(gens)} assignments exceed budget {budget}", partial=0)
    base = {t.zero: sr.zero}
    if t.unit is not None:
        base[t.unit] = sr.one
    found = set()
    for vals in itertools.product(scalars, repeat=len(gens)):
        seeds = dict(base)
        if any(seeds.setdefault(g, v) != v for g, v in zip(gens, vals)):
            continue
        out = _propagate(t, seeds, sr)
        if out is not None:
            found.add(tuple(out))
    result = [Character(A, v) for v in sorted(found)]
    for rho in result:
        if not verify_character(rho).ok:
            raise TheoremViolation("propagated assignment is not a character", rho)
    return result


def restrict(rho: Character, B: ea.Subsemialgebra) -> Character:
    if not B <= rho.algebra:
        raise InputError("restriction target is not contained in the character's algebra",
                         next(f for f in B if f not in rho.algebra))
    return Character(B, tuple(rho(f) for f in B.elements))


def rho_from_setlike(alg: hs.DaggerAlgebra, alpha: Mor, A: ea.Subsemialgebra,
                     verify: bool = True) -> Character:
    """``f -> alpha^dagger . f . alpha``."""
    ad = mc.dagger(alpha)
    rho = Character(A, tuple(mc.compose_all(ad, f, alpha).entries[0][0] for f in A.elements))
    if verify:
        report = verify_character(rho)
        if not report.ok:
            bad = report.failed()[0]
            raise TheoremViolation(f"rho_alpha violates {bad.tag}", (alpha, bad.witness))
    return rho


def inclusions(contexts: Sequence[ea.Subsemialgebra]) -> list[tuple[int, int]]:
    """Pairs ``(small, big)`` with ``contexts[small] <= contexts[big]``."""
    return [(i, j) for i, b in enumerate(contexts) for j, a in enumerate(contexts)
            if i != j and b <= a]


def global_sections(contexts: Sequence[ea.Subsemialgebra],
                    pairs: Iterable[tuple[int, int]] | None = None,
                    cap: int = DEFAULT_SEARCH_BUDGET) -> list[tuple[Character, ...]]:
    """Families ``(rho_A)_A`` compatible under restriction along every inclusion.

    An empty result means the given contexts admit no global section.
    """
    contexts = list(contexts)
    pairs = inclusions(contexts) if pairs is None else list(pairs)
    for small, big in pairs:
        if not contexts[small] <= contexts[big]:
            raise InputError(f"context {small} is not contained in context {big}", (small, big))
    chars = [characters(A) for A in contexts]
    out: list[tuple[Character, ...]] = []
    chosen: list[Character] = []
    nodes = 0

    def compatible(k: int, rho: Character) -> bool:
        for small, big in pairs:
            if max(small, big) != k:
                continue
            lo = rho if small == k else chosen[small]
            hi = rho if big == k else chosen[big]
            if restrict(hi, contexts[small]) != lo:
                return False
        return True

    def search(k: int) -> None:
        nonlocal nodes
        if k == len(contexts):
            out.append(tuple(chosen))
            return
        for rho in chars[k]:
            nodes += 1
            if nodes > cap:
                raise CapError(f"global-section search exceeded {cap} nodes", partial=len(out))
            if compatible(k, rho):
                chosen.append(rho)
                search(k + 1)
                chosen.pop()

    search(0)
    return out
