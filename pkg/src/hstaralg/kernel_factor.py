"""Dagger-kernels in Mat(S) over positive semirings.

With no zero divisors and no nonzero zero-sums, ``f . g == 0`` forces every
row of ``g`` indexed by a nonzero column of ``f`` to vanish, so kernels are
coordinate inclusions.  Every closed-form routine here has a definitional
counterpart (``*_by_definition``) that enumerates test morphisms instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import matcat as mc
from .errors import ConsistencyError, InputError, PreconditionError, UnsupportedError
from .matcat import Mor
from .semiring import SemiringDef, is_positive


def _require_positive(sr: SemiringDef) -> None:
    if not is_positive(sr):
        raise UnsupportedError(f"dagger-kernels need a positive semiring, not {sr.label}")


def inclusion(sr: SemiringDef, coords: Sequence[int], n: int) -> Mor:
    """Coordinate inclusion ``len(coords) -> n`` selecting ``coords`` in order."""
    rows = [[sr.zero] * len(coords) for _ in range(n)]
    for t, i in enumerate(coords):
        rows[i][t] = sr.one
    return Mor(sr, len(coords), n, rows, check=False)


def inclusion_coords(k: Mor) -> list[int] | None:
    """Coordinates selected by ``k`` if it is a coordinate inclusion, else None."""
    sr = k.semiring
    coords = []
    for j in range(k.dom):
        col = k.column(j)
        hits = [i for i, x in enumerate(col) if x != sr.zero]
        if len(hits) != 1 or col[hits[0]] != sr.one:
            return None
        coords.append(hits[0])
    if len(set(coords)) != len(coords):
        return None
    return coords


def kernel(f: Mor) -> Mor:
    """Inclusion of the zero columns of ``f``."""
    _require_positive(f.semiring)
    zero_cols = [j for j in range(f.dom) if j not in set(f.nonzero_columns())]
    return inclusion(f.semiring, zero_cols, f.dom)


def cokernel(f: Mor) -> Mor:
    return mc.dagger(kernel(mc.dagger(f)))


def is_zero_epi(f: Mor, method: str = "auto") -> bool:
    """``g . f == 0`` implies ``g == 0``.

    ``closed``: every row of ``f`` is nonzero (positive semirings).
    ``enumerate``: the definition, see :func:`is_zero_epi_by_definition`.
    """
    sr = f.semiring
    if method == "auto":
        method = "closed" if is_positive(sr) else "enumerate"
    if method == "closed":
        _require_positive(sr)
        return len(f.nonzero_rows()) == f.cod
    if method == "enumerate":
        if not sr.enumerable:
            raise UnsupportedError(f"no zero-epi test available over {sr.label}")
        return is_zero_epi_by_definition(f)
    raise InputError(f"unknown method {method!r}")


def is_zero_epi_by_definition(f: Mor, test_dim: int | None = None,
                              budget: int | None = mc.DEFAULT_POINT_BUDGET) -> bool:
    """Enumerate every ``g: cod -> test_dim`` (default ``test_dim = cod``)."""
    z = f.cod if test_dim is None else test_dim
    if z == 0:
        z = 1
    return all(g.is_zero() or not mc.compose(g, f).is_zero()
               for g in mc.enumerate_morphisms(f.semiring, f.cod, z, budget))


def is_zero_mono(f: Mor, method: str = "auto") -> bool:
    return is_zero_epi(mc.dagger(f), method)


def is_dagger_kernel(m: Mor) -> bool:
    """``m`` is an isometry equal, up to a unitary, to the kernel of its cokernel."""
    _require_positive(m.semiring)
    if mc.compose(mc.dagger(m), m) != mc.identity(m.semiring, m.dom):
        return False
    k = kernel(cokernel(m))
    if k.dom != m.dom:
        return False
    phi = mc.compose(mc.dagger(k), m)
    return mc.is_unitary(phi) and mc.compose(k, phi) == m


@dataclass(frozen=True)
class KernelFactorization:
    f: Mor
    e: Mor
    m: Mor

    def equations(self) -> list[tuple[str, bool]]:
        sr = self.f.semiring
        return [
            ("m.e == f", mc.compose(self.m, self.e) == self.f),
            ("m^dagger.m == id", mc.compose(mc.dagger(self.m), self.m) == mc.identity(sr, self.m.dom)),
            ("m is a coordinate inclusion", inclusion_coords(self.m) is not None),
            ("e is zero-epi", is_zero_epi(self.e)),
        ]


def factorize(f: Mor) -> KernelFactorization:
    """``f = m . e`` with ``m`` the inclusion of the nonzero rows of ``f``."""
    _require_positive(f.semiring)
    rows = f.nonzero_rows()
    m = inclusion(f.semiring, rows, f.cod)
    e = Mor(f.semiring, f.dom, len(rows), [f.entries[i] for i in rows], check=False)
    return KernelFactorization(f, e, m)


def competing_factorizations(f: Mor, budget: int | None = mc.DEFAULT_POINT_BUDGET):
    """Every ``(m', e')`` with ``m'`` a dagger-kernel, ``e'`` zero-epi (by
    definition) and ``m' . e' == f``, found by enumeration."""
    sr = f.semiring
    for z in range(f.cod + 1):
        for m2 in mc.enumerate_morphisms(sr, z, f.cod, budget):
            if not is_dagger_kernel(m2):
                continue
            for e2 in mc.enumerate_morphisms(sr, f.dom, z, budget):
                if mc.compose(m2, e2) == f and is_zero_epi_by_definition(e2):
                    yield m2, e2


def unique_up_to_iso(fac: KernelFactorization, m2: Mor, e2: Mor) -> bool:
    """A unitary ``phi`` with ``m2 == m . phi`` and ``e == phi . e2`` exists."""
    if m2.dom != fac.m.dom:
        return False
    phi = mc.compose(mc.dagger(fac.m), m2)
    return (mc.is_unitary(phi) and mc.compose(fac.m, phi) == m2
            and mc.compose(phi, e2) == fac.e)


def verify_kernel_universal(f: Mor, k: Mor | None = None, max_test_dim: int = 2,
                            budget: int | None = mc.DEFAULT_POINT_BUDGET) -> tuple | None:
    """Check ``k`` equalises ``f`` and 0 universally on all ``g: w -> dom(f)``,
    ``w <= max_test_dim``.  Returns a failing ``g`` (or ``("f.k", ...)``) or None."""
    k = kernel(f) if k is None else k
    sr = f.semiring
    if not mc.compose(f, k).is_zero():
        return ("f.k != 0", k)
    if mc.compose(mc.dagger(k), k) != mc.identity(sr, k.dom):
        return ("k^dagger.k != id", k)
    for w in range(max_test_dim + 1):
        for g in mc.enumerate_morphisms(sr, w, f.dom, budget):
            if not mc.compose(f, g).is_zero():
                continue
            hs = [h for h in mc.enumerate_morphisms(sr, w, k.dom, budget) if mc.compose(k, h) == g]
            if len(hs) != 1:
                return ("factorisation count", g, len(hs))
    return None


def complement(k: Mor) -> Mor:
    """Inclusion of the coordinates ``k`` misses."""
    coords = inclusion_coords(k)
    if coords is None:
        raise InputError("complement needs a coordinate inclusion", k)
    rest = [i for i in range(k.cod) if i not in set(coords)]
    return inclusion(k.semiring, rest, k.cod)


def join_columns(a: Mor, b: Mor) -> Mor:
    """The block matrix ``[a | b]``."""
    if a.cod != b.cod:
        raise InputError("column blocks need equal codomains", (a.shape, b.shape))
    return Mor(a.semiring, a.dom + b.dom, a.cod,
               [ra + rb for ra, rb in zip(a.entries, b.entries)], check=False)


def is_normal(f: Mor) -> bool:
    fd = mc.dagger(f)
    return f.dom == f.cod and mc.compose(f, fd) == mc.compose(fd, f)


@dataclass(frozen=True)
class NormalForm:
    f: Mor
    k: Mor
    f1: Mor

    def reconstruct(self) -> Mor:
        return mc.compose_all(self.k, self.f1, mc.dagger(self.k))


def normal_decompose(f: Mor) -> NormalForm:
    """Write a normal ``f`` as ``k . f1 . k^dagger`` with ``f1`` zero-epi."""
    _require_positive(f.semiring)
    if f.dom != f.cod:
        raise InputError("normal_decompose needs an endomorphism", f.shape)
    fd = mc.dagger(f)
    ffd, fdf = mc.compose(f, fd), mc.compose(fd, f)
    if ffd != fdf:
        raise PreconditionError("normal", "f does not commute with its adjoint", (ffd, fdf))
    cols, rows = f.nonzero_columns(), f.nonzero_rows()
    if cols != rows:
        raise PreconditionError("normal", "zero rows and zero columns differ", (rows, cols))
    k = inclusion(f.semiring, cols, f.dom)
    f1 = mc.compose_all(mc.dagger(k), f, k)
    nf = NormalForm(f, k, f1)
    if nf.reconstruct() != f or not is_zero_epi(f1):
        raise ConsistencyError("normal form does not reconstruct f", (f, k, f1))
    return nf


def is_ksub_simple(dim: int, semiring: SemiringDef | None = None) -> bool:
    """Every nonzero dagger-kernel into ``dim`` is an isomorphism.

    Kernels are coordinate inclusions, so this holds exactly when ``dim <= 1``;
    the zero kernel ``0 -> X`` is exempt.
    """
    if semiring is not None:
        _require_positive(semiring)
    return dim <= 1


def is_ksub_simple_by_definition(dim: int, semiring: SemiringDef) -> bool:
    """Enumerate every dagger-kernel ``k: z -> dim`` with ``0 < z``."""
    for z in range(1, dim + 1):
        for k in mc.enumerate_morphisms(semiring, z, dim):
            if is_dagger_kernel(k) and k.dom != dim:
                return False
    return True


def jointly_zero_epi(kernels: Sequence[Mor]) -> bool:
    if not kernels:
        return False
    n = kernels[0].cod
    covered = set()
    for k in kernels:
        covered.update(k.nonzero_rows())
    return covered == set(range(n))


def check_sharpness(kernels: Sequence[Mor]) -> bool:
    """A jointly zero-epi family of coordinate-inclusion kernels is jointly epimorphic.

    ``f . k_i`` reads off the columns of ``f`` at ``k_i``'s coordinates, so when
    the coordinates cover ``X`` the family determines ``f``.
    """
    if not kernels:
        return True
    sr = kernels[0].semiring
    _require_positive(sr)
    for k in kernels:
        if inclusion_coords(k) is None:
            raise InputError("sharpness check needs coordinate-inclusion kernels", k)
    if not jointly_zero_epi(kernels):
        return True
    covered = sorted({i for k in kernels for i in inclusion_coords(k)})
    return covered == list(range(kernels[0].cod))


def jointly_epimorphic_by_definition(kernels: Sequence[Mor], test_dim: int = 1,
                                     budget: int | None = mc.DEFAULT_POINT_BUDGET) -> bool:
    """``f . k_i == g . k_i`` for all ``i`` implies ``f == g`` over all ``f, g: X -> test_dim``."""
    sr, n = kernels[0].semiring, kernels[0].cod
    fs = list(mc.enumerate_morphisms(sr, n, test_dim, budget))
    sig = {}
    for f in fs:
        key = tuple(mc.compose(f, k) for k in kernels)
        if key in sig and sig[key] != f:
            return False
        sig[key] = f
    return True


def lemma_little(f: Mor) -> bool:
    """``f^dagger . f == 0`` implies ``f == 0``."""
    _require_positive(f.semiring)
    return not mc.compose(mc.dagger(f), f).is_zero() or f.is_zero()

