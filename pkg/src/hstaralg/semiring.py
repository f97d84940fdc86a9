"""Commutative *-semirings: built-in Boolean and natural numbers, plus finite
table semirings given by explicit operation tables.

Values are stored raw inside matrices: ``0``/``1`` for Boolean, Python ints for
nat, and carrier indices for table semirings.  :class:`Scalar` pairs a raw
value with its semiring for the public arithmetic helpers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Iterator, Sequence

from .errors import InputError, UnsupportedError

BOOLEAN = "boolean"
NAT = "nat"
TABLE = "table"


@dataclass(frozen=True)
class Flags:
    commutative: bool
    zero_sum_free: bool
    no_zero_divisors: bool
    trivial_involution: bool


@dataclass(frozen=True)
class SemiringDef:
    kind: str
    carrier: tuple[str, ...] | None = None
    add_table: tuple[tuple[int, ...], ...] | None = None
    mul_table: tuple[tuple[int, ...], ...] | None = None
    star_table: tuple[int, ...] | None = None
    zero: int = 0
    one: int = 1
    name: str = field(default="", compare=False)

    # arithmetic on raw values

    def add(self, a: int, b: int) -> int:
        if self.kind == BOOLEAN:
            return a | b
        if self.kind == NAT:
            return a + b
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        if self.kind == BOOLEAN:
            return a & b
        if self.kind == NAT:
            return a * b
        return self.mul_table[a][b]

    def star(self, a: int) -> int:
        if self.kind == TABLE:
            return self.star_table[a]
        return a

    def sum(self, values: Iterable[int]) -> int:
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    # carrier

    @property
    def enumerable(self) -> bool:
        return self.kind != NAT

    def elements(self) -> tuple[int, ...]:
        if self.kind == BOOLEAN:
            return (0, 1)
        if self.kind == TABLE:
            return tuple(range(len(self.carrier)))
        raise UnsupportedError("the nat semiring has an infinite carrier")

    @property
    def size(self) -> int:
        return len(self.elements())

    def is_element(self, v: Any) -> bool:
        if isinstance(v, bool) or not isinstance(v, int):
            return False
        if self.kind == BOOLEAN:
            return v in (0, 1)
        if self.kind == NAT:
            return v >= 0
        return 0 <= v < len(self.carrier)

    def name_of(self, v: int) -> str:
        if self.kind == TABLE:
            return self.carrier[v]
        return str(v)

    def parse(self, token: Any) -> int:
        """Map a carrier-element name (or a plain int for boolean/nat) to a raw value."""
        if self.kind == TABLE:
            if isinstance(token, str) and token in self.carrier:
                return self.carrier.index(token)
            raise InputError(f"{token!r} is not an element of carrier {list(self.carrier)}", token)
        if isinstance(token, str):
            try:
                token = int(token)
            except ValueError:
                raise InputError(f"{token!r} is not a {self.kind} scalar", token) from None
        if not self.is_element(token):
            raise InputError(f"{token!r} is not a {self.kind} scalar", token)
        return token

    @cached_property
    def flags(self) -> Flags:
        return _flags(self)

    @property
    def label(self) -> str:
        return self.name or self.kind

    def __repr__(self) -> str:
        return f"SemiringDef({self.label})"


def boolean() -> SemiringDef:
    return _BOOL


def nat() -> SemiringDef:
    return _NAT


_BOOL = SemiringDef(BOOLEAN, carrier=("0", "1"), name="boolean")
_NAT = SemiringDef(NAT, name="nat")


def table_semiring(carrier: Sequence[str], add: Sequence[Sequence[str]],
                   mul: Sequence[Sequence[str]], zero: str, one: str,
                   star: Sequence[str] | None = None, name: str = "") -> SemiringDef:
    """Build a table semiring from carrier names.  Only totality and membership
    are checked here; run :func:`validate_semiring` for the axioms."""
    carrier = tuple(str(c) for c in carrier)
    n = len(carrier)
    if n == 0:
        raise InputError("empty carrier")
    if len(set(carrier)) != n:
        raise InputError("duplicate carrier names", carrier)
    index = {c: i for i, c in enumerate(carrier)}

    def lookup(tok: Any, where: str) -> int:
        if str(tok) not in index:
            raise InputError(f"{where}: {tok!r} is not a carrier element", (where, tok))
        return index[str(tok)]

    def table(rows: Sequence[Sequence[str]], what: str) -> tuple[tuple[int, ...], ...]:
        if len(rows) != n or any(len(r) != n for r in rows):
            raise InputError(f"{what} table must be {n}x{n}", what)
        return tuple(tuple(lookup(x, f"{what}[{i}][{j}]") for j, x in enumerate(r))
                     for i, r in enumerate(rows))

    if star is None:
        star = carrier
    if len(star) != n:
        raise InputError(f"star table must have {n} entries", "star")
    return SemiringDef(
        TABLE,
        carrier=carrier,
        add_table=table(add, "add"),
        mul_table=table(mul, "mul"),
        star_table=tuple(lookup(x, f"star[{i}]") for i, x in enumerate(star)),
        zero=lookup(zero, "zero"),
        one=lookup(one, "one"),
        name=name,
    )


@dataclass(frozen=True)
class Scalar:
    semiring: SemiringDef
    value: int

    def __post_init__(self):
        if not self.semiring.is_element(self.value):
            raise InputError(f"{self.value!r} is not in {self.semiring.label}", self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.semiring.name_of(self.value)} in {self.semiring.label})"


def _same(a: Scalar, b: Scalar) -> SemiringDef:
    if a.semiring != b.semiring:
        raise InputError(f"mixed semirings: {a.semiring.label} vs {b.semiring.label}", (a, b))
    return a.semiring


def sr_add(a: Scalar, b: Scalar) -> Scalar:
    sr = _same(a, b)
    return Scalar(sr, sr.add(a.value, b.value))


def sr_mul(a: Scalar, b: Scalar) -> Scalar:
    sr = _same(a, b)
    return Scalar(sr, sr.mul(a.value, b.value))


def sr_star(a: Scalar) -> Scalar:
    return Scalar(a.semiring, a.semiring.star(a.value))


# validation


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    witness: tuple | None = None


@dataclass(frozen=True)
class ValidationReport:
    semiring: SemiringDef
    axioms: tuple[AxiomResult, ...]
    flags: Flags

    @property
    def ok(self) -> bool:
        return all(a.passed for a in self.axioms)

    def failed(self) -> list[AxiomResult]:
        return [a for a in self.axioms if not a.passed]

    def __getitem__(self, name: str) -> AxiomResult:
        for a in self.axioms + self.flag_results:
            if a.name == name:
                return a
        raise KeyError(name)

    @property
    def flag_results(self) -> tuple[AxiomResult, ...]:
        sr = self.semiring
        if not sr.enumerable:
            return tuple(AxiomResult(k, v) for k, v in vars(self.flags).items())
        return (
            AxiomResult("commutative", self.flags.commutative,
                        _first(((a, b) for a, b in _pairs(sr)
                                if sr.mul(a, b) != sr.mul(b, a)))),
            AxiomResult("zero_sum_free", self.flags.zero_sum_free,
                        _first(((a, b) for a, b in _pairs(sr)
                                if sr.add(a, b) == sr.zero and (a, b) != (sr.zero, sr.zero)))),
            AxiomResult("no_zero_divisors", self.flags.no_zero_divisors,
                        _first(((a, b) for a, b in _pairs(sr)
                                if sr.mul(a, b) == sr.zero and a != sr.zero and b != sr.zero))),
            AxiomResult("trivial_involution", self.flags.trivial_involution,
                        _first(((a,) for a in sr.elements() if sr.star(a) != a))),
        )


def _pairs(sr: SemiringDef) -> Iterator[tuple[int, int]]:
    return itertools.product(sr.elements(), repeat=2)


def _first(it: Iterable[tuple]) -> tuple | None:
    return next(iter(it), None)


def _flags(sr: SemiringDef) -> Flags:
    if sr.kind in (BOOLEAN, NAT):
        return Flags(True, True, True, True)
    els = sr.elements()
    z = sr.zero
    return Flags(
        commutative=all(sr.mul(a, b) == sr.mul(b, a) for a, b in _pairs(sr)),
        zero_sum_free=all(sr.add(a, b) != z or (a == z and b == z) for a, b in _pairs(sr)),
        no_zero_divisors=all(sr.mul(a, b) != z or a == z or b == z for a, b in _pairs(sr)),
        trivial_involution=all(sr.star(a) == a for a in els),
    )


# (name, arity, predicate) for every clause of a commutative *-semiring
_AXIOMS = (
    ("add_assoc", 3, lambda s, a, b, c: s.add(s.add(a, b), c) == s.add(a, s.add(b, c))),
    ("add_comm", 2, lambda s, a, b: s.add(a, b) == s.add(b, a)),
    ("add_unit", 1, lambda s, a: s.add(a, s.zero) == a == s.add(s.zero, a)),
    ("mul_assoc", 3, lambda s, a, b, c: s.mul(s.mul(a, b), c) == s.mul(a, s.mul(b, c))),
    ("mul_comm", 2, lambda s, a, b: s.mul(a, b) == s.mul(b, a)),
    ("mul_unit", 1, lambda s, a: s.mul(a, s.one) == a == s.mul(s.one, a)),
    ("distrib_left", 3, lambda s, a, b, c: s.mul(a, s.add(b, c)) == s.add(s.mul(a, b), s.mul(a, c))),
    ("distrib_right", 3, lambda s, a, b, c: s.mul(s.add(b, c), a) == s.add(s.mul(b, a), s.mul(c, a))),
    ("zero_annihilates", 1, lambda s, a: s.mul(s.zero, a) == s.zero == s.mul(a, s.zero)),
    ("star_involution", 1, lambda s, a: s.star(s.star(a)) == a),
    ("star_additive", 2, lambda s, a, b: s.star(s.add(a, b)) == s.add(s.star(a), s.star(b))),
    ("star_zero", 0, lambda s: s.star(s.zero) == s.zero),
    ("star_antimultiplicative", 2, lambda s, a, b: s.star(s.mul(a, b)) == s.mul(s.star(b), s.star(a))),
    ("star_unit", 0, lambda s: s.star(s.one) == s.one),
)

AXIOM_NAMES = tuple(name for name, _, _ in _AXIOMS)


def check_axiom(sr: SemiringDef, name: str, *args: int) -> bool:
    for n, _, pred in _AXIOMS:
        if n == name:
            return pred(sr, *args)
    raise KeyError(name)


def validate_semiring(sr: SemiringDef) -> ValidationReport:
    """Check every commutative *-semiring clause and recompute the flags.

    Table semirings are scanned exhaustively and each failure carries the first
    counterexample tuple.  Boolean and nat are known analytically.
    """
    if sr.kind == TABLE:
        for tbl in (sr.add_table, sr.mul_table):
            if any(not sr.is_element(x) for row in tbl for x in row):
                raise InputError("table entry outside the carrier")
        if any(not sr.is_element(x) for x in sr.star_table):
            raise InputError("star entry outside the carrier")
    results = []
    for name, arity, pred in _AXIOMS:
        if not sr.enumerable:
            results.append(AxiomResult(name, True))
            continue
        witness = _first(args for args in itertools.product(sr.elements(), repeat=arity)
                         if not pred(sr, *args))
        results.append(AxiomResult(name, witness is None, witness))
    return ValidationReport(sr, tuple(results), sr.flags)


def require_valid(sr: SemiringDef) -> SemiringDef:
    report = validate_semiring(sr)
    if not report.ok:
        bad = report.failed()[0]
        raise InputError(f"{sr.label}: semiring axiom {bad.name} fails", (bad.name, bad.witness))
    return sr


def is_positive(sr: SemiringDef) -> bool:
    """Zero-sum-free with no zero divisors."""
    f = sr.flags
    return f.zero_sum_free and f.no_zero_divisors


# serialization


def from_json(obj: dict) -> SemiringDef:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InputError("semiring must be an object with a 'kind' field", obj)
    kind = obj["kind"]
    if kind == BOOLEAN:
        return boolean()
    if kind == NAT:
        return nat()
    if kind != TABLE:
        raise InputError(f"unknown semiring kind {kind!r}", kind)
    try:
        sr = table_semiring(obj["carrier"], obj["add"], obj["mul"], obj["zero"], obj["one"],
                            obj.get("star"), name=obj.get("name", ""))
    except KeyError as exc:
        raise InputError(f"table semiring missing field {exc}", str(exc)) from None
    except TypeError as exc:
        raise InputError(f"malformed table semiring: {exc}") from None
    return sr


def to_json(sr: SemiringDef) -> dict:
    if sr.kind != TABLE:
        return {"kind": sr.kind}
    c = sr.carrier
    out = {
        "kind": TABLE,
        "carrier": list(c),
        "add": [[c[x] for x in row] for row in sr.add_table],
        "mul": [[c[x] for x in row] for row in sr.mul_table],
        "zero": c[sr.zero],
        "one": c[sr.one],
        "star": [c[x] for x in sr.star_table],
    }
    if sr.name:
        out["name"] = sr.name
    return out
