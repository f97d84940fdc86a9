"""Exhaustive census of Boolean multiplications ``mu: X (x) X -> X``.

Small sizes check every relation against every axiom.  From size 3 on, the
compiled kernel first keeps only the commutative relations with
``mu . mu^dagger == id``; the remaining axioms run on the survivors.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import hstar as hs
from . import structure as st
from ._accel import kernels
from .errors import CapError, HStarError, InputError
from .hstar import DaggerAlgebra
from .matcat import Mor
from .semiring import boolean

FULL_ENUMERATION_MAX = 2
MAX_SIZE = 3


@dataclass
class CensusEntry:
    mu: Mor
    classification: str | None
    groups: list[str] = field(default_factory=list)


@dataclass
class CensusResult:
    size: int
    space: int
    enumerated: int
    pruned: int
    counts: dict[str, int]
    hstar: list[CensusEntry]
    unclassified: list[Mor]
    failures: list[tuple[Mor, str]]

    @property
    def classes(self) -> dict[str, int]:
        return dict(sorted(Counter(e.classification for e in self.hstar
                                   if e.classification is not None).items()))

    @property
    def ok(self) -> bool:
        return not self.failures


def mu_from_masks(n: int, masks) -> Mor:
    width = n * n
    return Mor(boolean(), width, n, [[(m >> c) & 1 for c in range(width)] for m in masks], check=False)


def _all_relations(n: int):
    width = n * n
    for code in range(1 << (n * width)):
        yield [(code >> (k * width)) & ((1 << width) - 1) for k in range(n)]


def classify(alg: DaggerAlgebra) -> tuple[str | None, list[str]]:
    """Name of the disjoint union of groups ``alg`` decomposes into, or
    ``(None, [])`` when its set-like elements do not cover or are not orthonormal."""
    fam = hs.set_like_elements(alg)
    if not (fam.orthonormal and fam.covering and fam.self_adjoint):
        return None, []
    groups = st.rel_extract_groups(st.decompose(alg))
    names = sorted((g.name for g in groups), key=lambda s: (len(s), s))
    return "+".join(names), names


def census(n: int, budget: int | None = None) -> CensusResult:
    """Counts of relations per passed-axiom set, with a classification of every
    H*-algebra whose set-like elements cover.

    ``space`` is the number of relations of the given size, ``enumerated`` the
    number the search visited and ``pruned`` those rejected before full checks.

    ``budget`` caps the number of relations that receive full axiom checks.
    """
    if not isinstance(n, int) or n < 1:
        raise InputError("census size must be a positive integer", n)
    if n > MAX_SIZE:
        raise InputError(f"census size {n} is above the supported maximum {MAX_SIZE}", n)
    if n <= FULL_ENUMERATION_MAX:
        candidates = list(_all_relations(n))
        enumerated = len(candidates)
    else:
        candidates, enumerated = kernels.census_commutative_special(n)
    if budget is not None and len(candidates) > budget:
        raise CapError(f"{len(candidates)} relations to check exceed budget {budget}", partial=0)
    counts: Counter[str] = Counter()
    found, unclassified, failures = [], [], []
    for masks in candidates:
        alg = DaggerAlgebra(mu_from_masks(n, masks))
        ax = hs.check_axioms(alg)
        counts[ax.passed_set() or "-"] += 1
        if not ax.is_hstar:
            continue
        try:
            name, groups = classify(alg)
        except HStarError as exc:
            failures.append((alg.mu, str(exc)))
            continue
        if name is None:
            unclassified.append(alg.mu)
        found.append(CensusEntry(alg.mu, name, groups))
    space = 1 << (n ** 3)
    return CensusResult(n, space, enumerated, space - len(candidates),
                        dict(sorted(counts.items())), found, unclassified, failures)
