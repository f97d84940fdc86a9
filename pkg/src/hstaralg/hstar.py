"""Dagger algebras ``(X, mu)`` in Mat(S): the H*-axioms, set-like elements,
covering families and the generated von Neumann semialgebra ``R(mu)'``.

``mu`` is an ``n x n^2`` matrix whose column ``i * n + j`` is the product of
basis vectors ``e_i`` and ``e_j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import endo_algebra as ea
from . import matcat as mc
from .errors import InputError, PreconditionError, TheoremViolation
from .groups import GroupTable, make_group
from .matcat import Mor
from .report import Check, CheckList
from .semiring import SemiringDef, boolean, is_positive


@dataclass(frozen=True)
class DaggerAlgebra:
    mu: Mor

    def __post_init__(self):
        n = self.mu.cod
        if self.mu.dom != n * n:
            raise InputError(f"multiplication must be {n}x{n * n}, got {self.mu.cod}x{self.mu.dom}",
                             self.mu.shape)

    @property
    def dim(self) -> int:
        return self.mu.cod

    @property
    def semiring(self) -> SemiringDef:
        return self.mu.semiring

    @property
    def comultiplication(self) -> Mor:
        return mc.dagger(self.mu)

    def product(self, x: Mor, y: Mor) -> Mor:
        return mc.compose(self.mu, mc.tensor(x, y))


def right_mult(alg: DaggerAlgebra, x: Mor) -> Mor:
    """``R_x = mu . (x (x) id)``."""
    if x.dom != 1 or x.cod != alg.dim:
        raise InputError(f"expected a point I -> {alg.dim}", x.shape)
    return mc.compose(alg.mu, mc.tensor(x, mc.identity(alg.semiring, alg.dim)))


def basis_right_mults(alg: DaggerAlgebra) -> list[Mor]:
    return [right_mult(alg, mc.basis_point(alg.semiring, alg.dim, i)) for i in range(alg.dim)]


def r_mu(alg: DaggerAlgebra, budget: int | None = mc.DEFAULT_POINT_BUDGET) -> set[Mor]:
    """``R(mu)``: right multiplications by every point."""
    return {right_mult(alg, x) for x in mc.enumerate_points(alg.semiring, alg.dim, budget)}


def _first_diff(f: Mor, g: Mor) -> tuple | None:
    for i, (r, s) in enumerate(zip(f.entries, g.entries)):
        for j, (x, y) in enumerate(zip(r, s)):
            if x != y:
                return ("entry", i, j)
    return None


@dataclass
class AxiomReport:
    A: Check
    C: Check
    S: Check
    U: Check
    H: Check
    unit: Mor | None = None
    h_partners: dict[int, Mor] = field(default_factory=dict)

    @property
    def checks(self) -> list[Check]:
        return [self.A, self.C, self.S, self.U, self.H]

    @property
    def is_hstar(self) -> bool:
        return self.A.passed and self.C.passed and self.S.passed and self.H.passed

    @property
    def is_unital(self) -> bool:
        return self.U.passed

    def passed_set(self) -> str:
        return "".join(c.tag for c in self.checks if c.passed)


def check_axioms(alg: DaggerAlgebra, unit_candidates: Sequence[Mor] | None = None,
                 h_witnesses: Mapping[int, Mor] | None = None,
                 point_budget: int | None = mc.DEFAULT_POINT_BUDGET) -> AxiomReport:
    """Evaluate (A), (C), (S), (U) and (H).

    (U) and (H) search the points of ``X``; over a non-enumerable semiring the
    caller must pass ``unit_candidates`` and ``h_witnesses`` instead.  (H) is
    checked on basis points; see :func:`h_basis_sufficiency`.
    """
    sr, n, mu = alg.semiring, alg.dim, alg.mu
    idn = mc.identity(sr, n)
    lhs = mc.compose(mu, mc.tensor(mu, idn))
    rhs = mc.compose(mu, mc.tensor(idn, mu))
    a = Check("A", lhs == rhs, _first_diff(lhs, rhs))
    swapped = mc.compose(mu, mc.swap(sr, n, n))
    c = Check("C", swapped == mu, _first_diff(swapped, mu))
    special = mc.compose(mu, mc.dagger(mu))
    s = Check("S", special == idn, _first_diff(special, idn))

    if unit_candidates is None:
        if not sr.enumerable:
            raise InputError("unit search over nat needs explicit unit_candidates")
        unit_candidates = mc.enumerate_points(sr, n, point_budget)
    unit = None
    for u in unit_candidates:
        if (mc.compose(mu, mc.tensor(u, idn)) == idn
                and mc.compose(mu, mc.tensor(idn, u)) == idn):
            unit = u
            break
    u_check = Check("U", unit is not None, None if unit else "no unit point")

    partners: dict[int, Mor] = {}
    basis_r = basis_right_mults(alg)
    if h_witnesses is None:
        if not sr.enumerable:
            raise InputError("(H) search over nat needs explicit h_witnesses")
        table = {}
        for y in mc.enumerate_points(sr, n, point_budget):
            table.setdefault(right_mult(alg, y), y)
        for i, r in enumerate(basis_r):
            y = table.get(mc.dagger(r))
            if y is not None:
                partners[i] = y
    else:
        for i, r in enumerate(basis_r):
            y = h_witnesses.get(i)
            if y is not None and right_mult(alg, y) == mc.dagger(r):
                partners[i] = y
    missing = next((i for i in range(n) if i not in partners), None)
    h = Check("H", missing is None, None if missing is None else ("basis", missing))
    return AxiomReport(a, c, s, u_check, h, unit, partners)


def h_partner_exists(alg: DaggerAlgebra, x: Mor, budget: int | None = mc.DEFAULT_POINT_BUDGET) -> bool:
    target = mc.dagger(right_mult(alg, x))
    return any(right_mult(alg, y) == target for y in mc.enumerate_points(alg.semiring, alg.dim, budget))


def h_basis_sufficiency(alg: DaggerAlgebra, budget: int | None = mc.DEFAULT_POINT_BUDGET) -> bool:
    """If every basis point has an (H)-partner then so does every point."""
    n = alg.dim
    if not all(h_partner_exists(alg, mc.basis_point(alg.semiring, n, i), budget) for i in range(n)):
        return True
    return all(h_partner_exists(alg, x, budget) for x in mc.enumerate_points(alg.semiring, n, budget))


# set-like elements


def is_set_like(alg: DaggerAlgebra, alpha: Mor) -> bool:
    return mc.compose(alg.comultiplication, alpha) == mc.tensor(alpha, alpha)


def inner(beta: Mor, alpha: Mor) -> int:
    """The scalar ``beta^dagger . alpha``."""
    return mc.compose(mc.dagger(beta), alpha).entries[0][0]


def is_orthonormal(points: Sequence[Mor]) -> bool:
    if not points:
        return True
    sr = points[0].semiring
    return all(inner(b, a) == (sr.one if i == j else sr.zero)
               for i, a in enumerate(points) for j, b in enumerate(points))


@dataclass
class SetLikeFamily:
    algebra: DaggerAlgebra
    elements: list[Mor]
    hstar_partners: dict[Mor, Mor]
    orthonormal: bool
    self_adjoint: bool

    @property
    def dimension(self) -> int:
        return len(self.elements)

    @property
    def covering(self) -> bool:
        return is_covering(self.elements, self.algebra.dim, self.algebra.semiring)


def set_like_elements(alg: DaggerAlgebra, require_orthonormal: bool = False,
                      budget: int | None = mc.DEFAULT_POINT_BUDGET) -> SetLikeFamily:
    """All nonzero points ``alpha`` with ``mu^dagger . alpha == alpha (x) alpha``.

    The partner check ``alpha^dagger == alpha~`` is realised as: ``alpha`` is its
    own (H)-partner, i.e. ``R_alpha`` is self-adjoint.
    """
    els = [x for x in mc.enumerate_points(alg.semiring, alg.dim, budget)
           if not x.is_zero() and is_set_like(alg, x)]
    els.sort(key=lambda p: (p.nonzero_rows(), p.sort_key()))
    partners = {}
    for a in els:
        r = right_mult(alg, a)
        if mc.dagger(r) == r:
            partners[a] = a
    fam = SetLikeFamily(alg, els, partners, is_orthonormal(els), len(partners) == len(els))
    if require_orthonormal and not fam.orthonormal:
        raise PreconditionError("orthonormal set-likes", "set-like elements are not orthonormal",
                                next(((a, b) for a in els for b in els
                                      if inner(b, a) != (alg.semiring.one if a == b else alg.semiring.zero)),
                                     None))
    return fam


def is_covering(points: Sequence[Mor], dim: int, semiring: SemiringDef) -> bool:
    """Jointly zero-epi family of points on ``dim``.

    Over positive semirings this is: every coordinate is in some support.
    Otherwise the definition is checked directly on copoints.
    """
    if is_positive(semiring):
        covered = set()
        for p in points:
            covered.update(i for i in range(dim) if p.entries[i][0] != semiring.zero)
        return covered == set(range(dim))
    return is_covering_by_definition(points, dim, semiring)


def is_covering_by_definition(points: Sequence[Mor], dim: int, semiring: SemiringDef,
                              budget: int | None = mc.DEFAULT_POINT_BUDGET) -> bool:
    """``f . p == 0`` for every ``p`` implies ``f == 0``, over all ``f: X -> I``.

    Copoints suffice: ``f . p`` vanishes iff every row of ``f`` does.
    """
    for f in mc.enumerate_morphisms(semiring, dim, 1, budget):
        if not f.is_zero() and all(mc.compose(f, p).is_zero() for p in points):
            return False
    return True


# generated von Neumann semialgebra


def generated_vn(alg: DaggerAlgebra, budget: int = ea.DEFAULT_BUDGET, method: str = "search",
                 verify: bool = False) -> ea.Subsemialgebra:
    """``R(mu)'``, computed as the commutant of the basis right multiplications
    (``R_x`` is a linear combination of them, so the commutants agree)."""
    vn = ea.commutant(basis_right_mults(alg), alg.dim, alg.semiring, budget, method)
    if verify:
        report = check_generated_vn(alg, vn, budget, method)
        if not report.ok:
            bad = report.failed()[0]
            raise TheoremViolation(f"generated semialgebra: {bad.tag} fails", bad.witness)
    return vn


def check_generated_vn(alg: DaggerAlgebra, vn: ea.Subsemialgebra | None = None,
                       budget: int = ea.DEFAULT_BUDGET, method: str = "search",
                       axioms: AxiomReport | None = None) -> CheckList:
    if vn is None:
        vn = generated_vn(alg, budget, method)
    axioms = axioms or check_axioms(alg)
    report = CheckList()
    rmu = r_mu(alg)
    report.add("vn.R_commutes", ea.all_commute(rmu))
    report.add("vn.R_contained", rmu <= vn.element_set, next((f for f in rmu if f not in vn), None))
    first = ea.commutant(vn, vn.dim, vn.semiring, budget, method)
    report.add("vn.maximal", first == vn, next((f for f in first if f not in vn), None))
    second = ea.commutant(first, vn.dim, vn.semiring, budget, method)
    report.add("vn.von_neumann", second == vn, next((f for f in second if f not in vn), None))
    report.add("vn.dagger_closed", ea.is_dagger_closed(vn))
    if axioms.is_unital:
        report.add("vn.unital_equals_R", rmu == vn.element_set,
                   next((f for f in vn if f not in rmu), None))
    return report


def maximality_identity(alg: DaggerAlgebra, vn: ea.Subsemialgebra, alpha: Mor) -> tuple | None:
    """First ``h`` in ``vn`` with ``h . R_alpha != R_(h . alpha)``, or None."""
    r = right_mult(alg, alpha)
    for h in vn:
        if mc.compose(h, r) != right_mult(alg, mc.compose(h, alpha)):
            return (h, alpha)
    return None


# Rel group algebras


def make_rel_group_algebra(groups: Sequence[GroupTable | Sequence[Sequence[int]]]) -> DaggerAlgebra:
    """Boolean algebra on the disjoint union of the groups, multiplying inside
    each group and giving zero across groups."""
    tables = [g if isinstance(g, GroupTable) else make_group(g) for g in groups]
    sr = boolean()
    n = sum(g.order for g in tables)
    rows = [[0] * (n * n) for _ in range(n)]
    off = 0
    for g in tables:
        for a in range(g.order):
            for b in range(g.order):
                rows[off + g.op(a, b)][(off + a) * n + off + b] = 1
        off += g.order
    return DaggerAlgebra(Mor(sr, n * n, n, rows, check=False))
