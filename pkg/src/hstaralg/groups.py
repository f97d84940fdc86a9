"""Finite abelian groups as Cayley tables, with invariant-factor canonical forms."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import InputError


@dataclass(frozen=True)
class GroupTable:
    table: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.table)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def identity(self) -> int:
        n = self.order
        for e in range(n):
            if all(self.table[e][a] == a == self.table[a][e] for a in range(n)):
                return e
        raise InputError("no identity element")

    @cached_property
    def invariant_factors(self) -> tuple[int, ...]:
        return invariant_factors(self)

    @property
    def name(self) -> str:
        return group_name(self.invariant_factors)

    def to_json(self) -> dict:
        return {"order": self.order, "table": [list(r) for r in self.table]}

    def __repr__(self) -> str:
        return f"GroupTable({self.name})"


def axiom_failure(table: Sequence[Sequence[int]]) -> tuple[str, tuple] | None:
    """First failing abelian-group axiom as ``(name, witness)``, or None."""
    n = len(table)
    if n == 0:
        return ("nonempty", ())
    for a in range(n):
        if len(table[a]) != n:
            return ("square", (a,))
        for b in range(n):
            x = table[a][b]
            if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < n:
                return ("closure", (a, b))
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            return ("associativity", (a, b, c))
    for a, b in itertools.combinations(range(n), 2):
        if table[a][b] != table[b][a]:
            return ("commutativity", (a, b))
    ids = [e for e in range(n) if all(table[e][a] == a for a in range(n))]
    if not ids:
        return ("identity", ())
    e = ids[0]
    for a in range(n):
        if not any(table[a][b] == e for b in range(n)):
            return ("inverses", (a,))
    return None


def make_group(table: Sequence[Sequence[int]]) -> GroupTable:
    bad = axiom_failure(table)
    if bad is not None:
        raise InputError(f"not an abelian group: {bad[0]} fails", bad)
    return GroupTable(tuple(tuple(int(x) for x in r) for r in table))


def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise InputError("cyclic group order must be positive", n)
    return GroupTable(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    m = h.order
    return GroupTable(tuple(
        tuple(g.op(a // m, b // m) * m + h.op(a % m, b % m) for b in range(g.order * m))
        for a in range(g.order * m)))


def parse_group(name: str) -> GroupTable:
    """``"z4"``, ``"Z2xZ2"``, ``"z1"`` ... (products of cyclic factors)."""
    parts = re.split(r"[x*]", name.strip().lower())
    out = None
    for p in parts:
        m = re.fullmatch(r"z_?(\d+)", p.strip())
        if not m:
            raise InputError(f"cannot parse group name {name!r}", name)
        g = cyclic(int(m.group(1)))
        out = g if out is None else direct_product(out, g)
    return out


def _power(g: GroupTable, a: int, k: int) -> int:
    x = g.identity
    for _ in range(k):
        x = g.op(x, a)
    return x


def _primes(n: int) -> list[int]:
    ps, p = [], 2
    while p * p <= n:
        if n % p == 0:
            ps.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        ps.append(n)
    return ps


def invariant_factors(g: GroupTable) -> tuple[int, ...]:
    """Invariant factors ``d1 | d2 | ...`` (all > 1); ``()`` for the trivial group.

    For each prime ``p`` the counts ``|{a : a^(p^k) = e}| = p^(sum_i min(k, l_i))``
    recover the partition ``l`` of the ``p``-primary part.
    """
    n, e = g.order, g.identity
    partitions: dict[int, list[int]] = {}
    for p in _primes(n):
        exps = [0]
        k = 1
        while True:
            c = sum(1 for a in range(n) if _power(g, a, p ** k) == e)
            s = 0
            while p ** s < c:
                s += 1
            exps.append(s)
            if s == exps[-2]:
                break
            k += 1
        # number of parts >= k is exps[k] - exps[k-1]
        at_least = [exps[k] - exps[k - 1] for k in range(1, len(exps))]
        parts = []
        for k, cnt in enumerate(at_least, start=1):
            nxt = at_least[k] if k < len(at_least) else 0
            parts += [k] * (cnt - nxt)
        partitions[p] = sorted(parts, reverse=True)
    width = max((len(v) for v in partitions.values()), default=0)
    factors = []
    for i in range(width):
        d = 1
        for p, parts in partitions.items():
            if i < len(parts):
                d *= p ** parts[i]
        factors.append(d)
    return tuple(sorted(factors))


def group_name(factors: Sequence[int]) -> str:
    return "x".join(f"Z{d}" for d in factors) if factors else "Z1"


def is_isomorphic(g: GroupTable, h: GroupTable) -> bool:
    return g.order == h.order and g.invariant_factors == h.invariant_factors


def isomorphic_by_search(g: GroupTable, h: GroupTable) -> bool:
    """Brute-force bijection search; independent check for small orders."""
    if g.order != h.order:
        return False
    n = g.order
    for perm in itertools.permutations(range(n)):
        if all(perm[g.op(a, b)] == h.op(perm[a], perm[b]) for a in range(n) for b in range(n)):
            return True
    return False
