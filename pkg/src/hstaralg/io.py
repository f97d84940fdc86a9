"""JSON file formats and machine-readable run reports."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from . import endo_algebra as ea
from . import semiring as sm
from .errors import InputError
from .groups import GroupTable, make_group
from .hstar import DaggerAlgebra
from .kernel_factor import KernelFactorization
from .matcat import Mor
from .report import Check, CheckList
from .semiring import SemiringDef

# reading


def read_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}", str(path)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})", str(path)) from None


def file_digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _field(obj: Any, key: str, what: str) -> Any:
    if not isinstance(obj, dict):
        raise InputError(f"{what} must be a JSON object", obj)
    if key not in obj:
        raise InputError(f"{what} is missing field {key!r}", sorted(obj))
    return obj[key]


def _dim(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InputError(f"{what} must be a non-negative integer", value)
    return value


def parse_semiring(obj: Any, validate: bool = True) -> SemiringDef:
    """Inline object, or a built-in name such as ``"boolean"``.

    With ``validate`` a table failing any commutative *-semiring axiom is
    rejected as malformed input.
    """
    if isinstance(obj, str):
        obj = {"kind": obj}
    sr = sm.from_json(obj)
    return sm.require_valid(sr) if validate else sr


def parse_entries(sr: SemiringDef, rows: Any, dom: int, cod: int, what: str = "entries") -> Mor:
    if not isinstance(rows, list) or len(rows) != cod:
        raise InputError(f"{what} must list {cod} rows", rows)
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dom:
            raise InputError(f"{what} row {i} must have {dom} entries", row)
        out.append([sr.parse(x) for x in row])
    return Mor(sr, dom, cod, out, check=False)


def parse_morphism(obj: Any, sr: SemiringDef) -> Mor:
    dom = _dim(_field(obj, "dom", "morphism"), "dom")
    cod = _dim(_field(obj, "cod", "morphism"), "cod")
    return parse_entries(sr, _field(obj, "entries", "morphism"), dom, cod)


def morphism_to_json(f: Mor) -> dict:
    return {"dom": f.dom, "cod": f.cod, "entries": f.to_names()}


def parse_morphism_set(obj: Any) -> tuple[SemiringDef, int, list[Mor]]:
    """``{"semiring", "dim", "morphisms": [entries | morphism object, ...]}``."""
    sr = parse_semiring(_field(obj, "semiring", "morphism set"))
    n = _dim(_field(obj, "dim", "morphism set"), "dim")
    items = _field(obj, "morphisms", "morphism set")
    if not isinstance(items, list):
        raise InputError("morphisms must be a list", items)
    fs = [parse_morphism(x, sr) if isinstance(x, dict) else parse_entries(sr, x, n, n, f"morphism {k}")
          for k, x in enumerate(items)]
    for k, f in enumerate(fs):
        if f.shape != (n, n):
            raise InputError(f"morphism {k} is not an endomorphism of dim {n}", f.shape)
    return sr, n, fs


def parse_algebra(obj: Any) -> DaggerAlgebra:
    sr = parse_semiring(_field(obj, "semiring", "algebra"))
    n = _dim(_field(obj, "dim", "algebra"), "dim")
    return DaggerAlgebra(parse_entries(sr, _field(obj, "mu", "algebra"), n * n, n, "mu"))


def algebra_to_json(alg: DaggerAlgebra) -> dict:
    return {"semiring": sm.to_json(alg.semiring), "dim": alg.dim, "mu": alg.mu.to_names()}


def parse_groups(obj: Any) -> list[GroupTable]:
    items = _field(obj, "groups", "group list")
    if not isinstance(items, list):
        raise InputError("groups must be a list", items)
    out = []
    for k, g in enumerate(items):
        table = _field(g, "table", f"group {k}")
        if "order" in g and (not isinstance(table, list) or g["order"] != len(table)):
            raise InputError(f"group {k}: order does not match table size", g["order"])
        out.append(make_group(table))
    return out


def groups_to_json(groups: Sequence[GroupTable]) -> dict:
    return {"groups": [g.to_json() for g in groups]}


def parse_contexts(obj: Any, sr: SemiringDef, n: int) -> list[list[Mor]]:
    """``{"contexts": [[entries, ...], ...]}``: generator lists, one per context."""
    items = _field(obj, "contexts", "context file")
    if not isinstance(items, list):
        raise InputError("contexts must be a list", items)
    out = []
    for k, gens in enumerate(items):
        if isinstance(gens, dict):
            gens = _field(gens, "generators", f"context {k}")
        if not isinstance(gens, list):
            raise InputError(f"context {k} must be a list of generators", gens)
        out.append([parse_morphism(g, sr) if isinstance(g, dict)
                    else parse_entries(sr, g, n, n, f"context {k} generator {j}")
                    for j, g in enumerate(gens)])
    return out


def load(path: str | Path, parser):
    return parser(read_json(path))


# writing


def jsonable(x: Any) -> Any:
    """Witnesses and results in plain JSON types, with deterministic order."""
    if isinstance(x, Mor):
        return morphism_to_json(x)
    if isinstance(x, DaggerAlgebra):
        return algebra_to_json(x)
    if isinstance(x, GroupTable):
        return x.to_json()
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (set, frozenset)):
        return [jsonable(v) for v in sorted(x, key=_order_key)]
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return repr(x)


def _order_key(x: Any) -> tuple:
    if isinstance(x, Mor):
        return (0, x.sort_key())
    return (1, repr(x))


def check_to_json(c: Check) -> dict:
    out = {"tag": c.tag, "passed": c.passed}
    if not c.passed and c.witness is not None:
        out["witness"] = jsonable(c.witness)
    if c.detail:
        out["detail"] = c.detail
    return out


def subsemialgebra_report(A: ea.Subsemialgebra, von_neumann: bool | None = None,
                          maximal: bool | None = None) -> dict:
    return {
        "semiring": sm.to_json(A.semiring),
        "dim": A.dim,
        "size": len(A),
        "flags": {"unital": A.unital, "commutative": A.is_commutative,
                  "von_neumann": von_neumann, "maximal": maximal},
        "elements": [f.to_names() for f in A.elements],
    }


def factorization_report(fac: KernelFactorization) -> dict:
    return {
        "f": morphism_to_json(fac.f),
        "e": morphism_to_json(fac.e),
        "m": morphism_to_json(fac.m),
        "equations": [{"equation": name, "holds": ok} for name, ok in fac.equations()],
    }


def decomposition_report(dec, groups: Sequence[GroupTable] | None = None) -> dict:
    comps = []
    for i, c in enumerate(dec.components):
        item = {"coordinates": c.coords, "dim": c.dim, "mu": c.mu.to_names()}
        if groups is not None:
            item["group"] = groups[i].to_json()
            item["group_name"] = groups[i].name
        comps.append(item)
    return {"dim": dec.algebra.dim, "components": comps}


def spectrum_report(A: ea.Subsemialgebra, chars) -> dict:
    return {
        "algebra_size": len(A),
        "characters": [{str(i): name for i, name in enumerate(rho.names())} for rho in chars],
    }


@dataclass
class RunReport:
    command: str
    inputs: dict[str, str] = field(default_factory=dict)
    checks: CheckList = field(default_factory=CheckList)
    result: dict = field(default_factory=dict)
    error: dict | None = None
    timing_ms: float | None = None

    def add_input(self, role: str, path: str | Path) -> None:
        self.inputs[role] = file_digest(path)

    @property
    def ok(self) -> bool:
        return self.error is None and self.checks.ok

    def to_json(self) -> dict:
        out: dict[str, Any] = {
            "command": self.command,
            "inputs": {k: {"sha256": v} for k, v in sorted(self.inputs.items())},
            "ok": self.ok,
            "checks": [check_to_json(c) for c in self.checks],
            "result": jsonable(self.result),
        }
        if self.error is not None:
            out["error"] = jsonable(self.error)
        if self.timing_ms is not None:
            out["timing_ms"] = round(self.timing_ms, 3)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"

    def text(self) -> str:
        lines = [f"{self.command}: {'ok' if self.ok else 'FAILED'}"]
        for c in self.checks:
            line = f"  {'PASS' if c.passed else 'FAIL'} {c.tag}"
            if not c.passed and c.witness is not None:
                line += f"  witness={json.dumps(jsonable(c.witness))}"
            lines.append(line)
        if self.error is not None:
            lines.append(f"  error: {self.error.get('message')}")
        for k, v in self.result.items():
            if k in ("elements", "algebra"):
                continue
            lines.append(f"  {k}: {json.dumps(jsonable(v), ensure_ascii=False)}")
        if self.timing_ms is not None:
            lines.append(f"  time: {self.timing_ms:.1f} ms")
        return "\n".join(lines) + "\n"
