"""Decomposing an H*-algebra into indecomposable blocks.

Each set-like ``alpha`` yields a normal ``R_alpha = k (f1 (+) 0) k^dagger``;
``e_alpha = k k^dagger`` is a primitive subunital idempotent of the generated
semialgebra, and ``mu`` splits as a sum of ``mu_i = k_i^dagger mu (k_i (x) k_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Sequence

from . import endo_algebra as ea
from . import hstar as hs
from . import kernel_factor as kf
from . import matcat as mc
from .errors import ClassificationError, ConsistencyError, InputError, PreconditionError, TheoremViolation
from .groups import GroupTable, axiom_failure
from .hstar import DaggerAlgebra
from .matcat import Mor
from .report import CheckList
from .semiring import BOOLEAN, SemiringDef, boolean, is_positive


@dataclass(frozen=True)
class PrimitiveIdempotent:
    alpha: Mor
    e: Mor
    k: Mor

    @property
    def coords(self) -> list[int]:
        return kf.inclusion_coords(self.k)


def _require_hypotheses(alg: DaggerAlgebra) -> hs.SetLikeFamily:
    sr = alg.semiring
    if not is_positive(sr):
        raise PreconditionError("positive semiring", f"{sr.label} has zero-sums or zero divisors")
    axioms = hs.check_axioms(alg)
    for c in (axioms.A, axioms.C, axioms.S, axioms.H):
        if not c.passed:
            raise PreconditionError("H*-algebra", f"axiom ({c.tag}) fails", c.witness)
    fam = hs.set_like_elements(alg)
    if not fam.orthonormal:
        raise PreconditionError("orthonormal set-likes", "set-like elements are not orthonormal")
    if not fam.covering:
        raise PreconditionError("covering set-likes", "set-like elements do not cover X",
                                [p.nonzero_rows() for p in fam.elements])
    if not fam.self_adjoint:
        bad = next(a for a in fam.elements if a not in fam.hstar_partners)
        raise PreconditionError("set-like partners", "R_alpha is not self-adjoint", bad)
    if not kf.is_ksub_simple(1, sr):
        raise PreconditionError("KSub-simple unit", "the monoidal unit is not KSub-simple")
    return fam


def primitive_idempotents(alg: DaggerAlgebra, vn: ea.Subsemialgebra | None = None,
                          budget: int = ea.DEFAULT_BUDGET) -> list[PrimitiveIdempotent]:
    fam = _require_hypotheses(alg)
    if vn is None:
        vn = hs.generated_vn(alg, budget)
    out = []
    for alpha in fam.elements:
        nf = kf.normal_decompose(hs.right_mult(alg, alpha))
        e = mc.compose(nf.k, mc.dagger(nf.k))
        if e not in vn:
            raise TheoremViolation("e_alpha is not in the generated semialgebra", (alpha, e))
        if not ea.is_primitive(e, vn):
            raise TheoremViolation("e_alpha is not a primitive subunital idempotent",
                                   (alpha, e, ea.decomposition_witness(e, vn)))
        out.append(PrimitiveIdempotent(alpha, e, nf.k))
    for i, a in enumerate(out):
        for b in out[i + 1:]:
            idem_orth = mc.compose(a.e, b.e).is_zero() and mc.compose(b.e, a.e).is_zero()
            point_orth = hs.inner(b.alpha, a.alpha) == alg.semiring.zero
            if idem_orth != point_orth:
                raise TheoremViolation("idempotent orthogonality differs from set-like orthogonality",
                                       (a.alpha, b.alpha))
    return out


@dataclass(frozen=True)
class Component:
    alpha: Mor
    e: Mor
    k: Mor
    mu: Mor

    @property
    def coords(self) -> list[int]:
        return kf.inclusion_coords(self.k)

    @property
    def dim(self) -> int:
        return self.k.dom

    @property
    def algebra(self) -> DaggerAlgebra:
        return DaggerAlgebra(self.mu)


@dataclass
class Decomposition:
    algebra: DaggerAlgebra
    components: list[Component]
    checks: CheckList = field(default_factory=CheckList)

    def reconstruct(self) -> Mor:
        alg = self.algebra
        n = alg.dim
        terms = [mc.compose_all(c.k, c.mu, mc.dagger(mc.tensor(c.k, c.k))) for c in self.components]
        return mc.sum_mors(terms, alg.semiring, n * n, n)


def decomposition_checks(alg: DaggerAlgebra, comps: Sequence[Component]) -> CheckList:
    sr, n = alg.semiring, alg.dim
    report = CheckList()
    idn = mc.identity(sr, n)
    total = mc.sum_mors((c.e for c in comps), sr, n, n)
    report.add("decompose.idempotents_sum_to_identity", total == idn, total)
    for i, c in enumerate(comps):
        report.add(f"decompose.e_is_kkdagger[{i}]", c.e == mc.compose(c.k, mc.dagger(c.k)), c.e)
        report.add(f"decompose.e_idempotent[{i}]", mc.compose(c.e, c.e) == c.e, c.e)
        for j, d in enumerate(comps):
            if i == j:
                continue
            report.add(f"decompose.orthogonal[{i},{j}]", mc.compose(c.e, d.e).is_zero(), (c.e, d.e))
            cross = mc.compose(alg.mu, mc.tensor(c.k, d.k))
            report.add(f"decompose.cross_term_zero[{i},{j}]", cross.is_zero(), cross)
    rebuilt = Decomposition(alg, list(comps)).reconstruct()
    report.add("decompose.reconstruction", rebuilt == alg.mu, rebuilt)
    for i, c in enumerate(comps):
        sub = hs.check_axioms(c.algebra)
        report.add(f"decompose.component_hstar[{i}]", sub.is_hstar,
                   [x.tag for x in sub.checks if not x.passed])
        count = hs.set_like_elements(c.algebra).dimension
        report.add(f"decompose.component_indecomposable[{i}]", count == 1, count)
    return report


def decompose(alg: DaggerAlgebra, budget: int = ea.DEFAULT_BUDGET,
              vn: ea.Subsemialgebra | None = None) -> Decomposition:
    """Split ``mu`` into components ordered by their first coordinate; every
    invariant is verified before returning."""
    prims = primitive_idempotents(alg, vn, budget)
    sr, n = alg.semiring, alg.dim
    total = mc.sum_mors((p.e for p in prims), sr, n, n)
    if total != mc.identity(sr, n):
        raise PreconditionError("covering set-likes", "primitive idempotents do not sum to the identity", total)
    comps = []
    for p in sorted(prims, key=lambda p: p.coords):
        mu_i = mc.compose_all(mc.dagger(p.k), alg.mu, mc.tensor(p.k, p.k))
        comps.append(Component(p.alpha, p.e, p.k, mu_i))
    checks = decomposition_checks(alg, comps)
    if not checks.ok:
        bad = checks.failed()[0]
        raise ConsistencyError(f"decomposition invariant {bad.tag} fails", bad.witness)
    return Decomposition(alg, comps, checks)


def component_group(mu: Mor, index: int = 0) -> GroupTable:
    """Read a Boolean ``mu_i`` as a Cayley table, or raise ClassificationError."""
    m = mu.cod
    table = [[0] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            hits = [c for c in range(m) if mu.entries[c][a * m + b]]
            if not hits:
                raise ClassificationError(index, "totality", (a, b))
            if len(hits) > 1:
                raise ClassificationError(index, "single-valuedness", (a, b, hits))
            table[a][b] = hits[0]
    bad = axiom_failure(table)
    if bad is not None:
        raise ClassificationError(index, bad[0], bad[1])
    return GroupTable(tuple(tuple(r) for r in table))


def rel_extract_groups(dec: Decomposition) -> list[GroupTable]:
    if dec.algebra.semiring.kind != BOOLEAN:
        raise InputError("group extraction needs the Boolean semiring")
    return [component_group(c.mu, i) for i, c in enumerate(dec.components)]


@dataclass
class SubdirectReport:
    blocks: list[frozenset]
    injective: bool
    surjective: list[bool]
    is_product: bool
    size: int

    @property
    def ok(self) -> bool:
        return self.injective and all(self.surjective)


def subdirect_report(alg: DaggerAlgebra, dec: Decomposition | None = None,
                     vn: ea.Subsemialgebra | None = None,
                     budget: int = ea.DEFAULT_BUDGET) -> SubdirectReport:
    """``X -> prod_i e_i X``, ``x -> (e_i x e_i)_i``: injective with surjective coordinates."""
    if vn is None:
        vn = hs.generated_vn(alg, budget)
    if dec is None:
        dec = decompose(alg, budget, vn)
    es = [c.e for c in dec.components]
    blocks = [frozenset(mc.compose(e, x) for x in vn) for e in es]
    images = {}
    injective = True
    for x in vn:
        key = tuple(mc.compose_all(e, x, e) for e in es)
        if key in images and images[key] != x:
            injective = False
        images[key] = x
    surjective = [{k[i] for k in images} == blocks[i] for i in range(len(es))]
    return SubdirectReport(blocks, injective, surjective,
                           len(vn) == prod(len(b) for b in blocks), len(vn))


def distribute_iso(left: int, parts: Sequence[int], semiring: SemiringDef | None = None) -> Mor:
    """Permutation ``X (x) (Y_1 (+) ... (+) Y_k) -> (X (x) Y_1) (+) ... (+) (X (x) Y_k)``."""
    sr = semiring or boolean()
    if left < 0 or any(p < 0 for p in parts):
        raise InputError("dimensions must be non-negative", (left, tuple(parts)))
    total = sum(parts)
    perm = [0] * (left * total)
    src_off = 0
    tgt_off = 0
    for d in parts:
        for x in range(left):
            for t in range(d):
                perm[x * total + src_off + t] = tgt_off + x * d + t
        src_off += d
        tgt_off += left * d
    return mc.permutation(sr, perm)


def distribute_naturality(f: Mor, gs: Sequence[Mor]) -> bool:
    """``P' . (f (x) (+)g_i) == (+)(f (x) g_i) . P``."""
    sr = f.semiring
    src = distribute_iso(f.dom, [g.dom for g in gs], sr)
    tgt = distribute_iso(f.cod, [g.cod for g in gs], sr)
    lhs = mc.compose(tgt, mc.tensor(f, mc.oplus(*gs)))
    rhs = mc.compose(mc.oplus(*[mc.tensor(f, g) for g in gs]), src)
    return lhs == rhs
