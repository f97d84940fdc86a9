"""Command-line drivers.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 malformed
input or usage, 3 an enumeration budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Callable, Sequence

from . import census as cs
from . import endo_algebra as ea
from . import hstar as hs
from . import io
from . import semiring as sm
from . import spectrum as sp
from . import structure as st
from .errors import CapError, CheckFailure, HStarError, InputError
from .groups import parse_group
from .report import CheckList

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors raise instead of exiting
        raise InputError(f"{self.prog}: {message}")


def _algebra(args, report: io.RunReport) -> hs.DaggerAlgebra:
    path = args.algebra
    if path is None:
        raise InputError("an algebra file is required (--algebra or --in)")
    alg = io.load(path, io.parse_algebra)
    report.add_input("algebra", path)
    return alg


def _axiom_checks(ax: hs.AxiomReport) -> CheckList:
    out = CheckList()
    for c in (ax.A, ax.C, ax.S, ax.H):
        out.add(f"axiom.{c.tag}", c.passed, c.witness)
    return out


def _axiom_result(ax: hs.AxiomReport) -> dict:
    return {"passed": ax.passed_set(), "hstar": ax.is_hstar, "unital": ax.is_unital,
            "unit": ax.unit.to_names() if ax.unit is not None else None}


# commands


def cmd_validate_semiring(args, report: io.RunReport) -> None:
    sr = io.load(args.input, lambda obj: io.parse_semiring(obj, validate=False))
    report.add_input("semiring", args.input)
    val = sm.validate_semiring(sr)
    for a in val.axioms:
        report.checks.add(f"semiring.{a.name}", a.passed, a.witness)
    report.result = {"semiring": sr.label,
                     "flags": {f.name: f.passed for f in val.flag_results},
                     "flag_witnesses": {f.name: f.witness for f in val.flag_results if not f.passed},
                     "positive": sm.is_positive(sr)}


def cmd_check(args, report: io.RunReport) -> None:
    alg = _algebra(args, report)
    ax = hs.check_axioms(alg, point_budget=args.budget)
    report.checks.extend(_axiom_checks(ax))
    report.result = _axiom_result(ax)


def cmd_setlike(args, report: io.RunReport) -> None:
    alg = _algebra(args, report)
    fam = hs.set_like_elements(alg, budget=args.budget)
    report.checks.add("setlike.orthonormal", fam.orthonormal)
    report.checks.add("setlike.covering", fam.covering, [p.nonzero_rows() for p in fam.elements])
    report.checks.add("setlike.self_adjoint", fam.self_adjoint,
                      [a for a in fam.elements if a not in fam.hstar_partners])
    report.result = {"dimension": fam.dimension,
                     "elements": [[row[0] for row in a.to_names()] for a in fam.elements]}


def cmd_commutant(args, report: io.RunReport) -> None:
    sr, n, fs = io.load(args.input, io.parse_morphism_set)
    report.add_input("morphisms", args.input)
    budget = args.budget or ea.DEFAULT_BUDGET
    comm = ea.commutant(fs, n, sr, budget)
    bad = ea.closure_violation(comm, dagger=False)
    report.checks.add("commutant.unital_subsemialgebra", bad is None, bad)
    report.checks.add("commutant.commutes_with_input",
                      all(ea.all_commute([f, g]) for f in comm for g in fs))
    if ea.is_dagger_closed(fs):
        report.checks.add("commutant.dagger_closed", ea.is_dagger_closed(comm))
    report.result = io.subsemialgebra_report(comm, ea.is_von_neumann(comm, budget),
                                             ea.is_maximal(comm, budget))


def cmd_vn(args, report: io.RunReport) -> None:
    alg = _algebra(args, report)
    budget = args.budget or ea.DEFAULT_BUDGET
    vn = hs.generated_vn(alg, budget)
    checks = hs.check_generated_vn(alg, vn, budget)
    report.checks.extend(checks)
    report.result = io.subsemialgebra_report(vn, checks["vn.von_neumann"].passed,
                                             checks["vn.maximal"].passed)


def _decompose(alg: hs.DaggerAlgebra, budget: int, report: io.RunReport):
    dec = st.decompose(alg, budget)
    report.checks.extend(dec.checks)
    return dec


def cmd_decompose(args, report: io.RunReport) -> None:
    alg = _algebra(args, report)
    dec = _decompose(alg, args.budget or ea.DEFAULT_BUDGET, report)
    groups = st.rel_extract_groups(dec) if alg.semiring.kind == sm.BOOLEAN else None
    report.result = io.decomposition_report(dec, groups)


def cmd_extract_groups(args, report: io.RunReport) -> None:
    alg = _algebra(args, report)
    dec = _decompose(alg, args.budget or ea.DEFAULT_BUDGET, report)
    groups = st.rel_extract_groups(dec)
    report.result = {"groups": [g.to_json() for g in groups], "names": [g.name for g in groups]}


def _spectrum_checks(alg: hs.DaggerAlgebra, vn: ea.Subsemialgebra, chars, report: io.RunReport) -> None:
    fam = hs.set_like_elements(alg)
    known = set(chars)
    rhos = []
    for i, a in enumerate(fam.elements):
        rho = sp.rho_from_setlike(alg, a, vn, verify=False)
        for c in sp.verify_character(rho):
            report.checks.add(f"{c.tag}[{i}]", c.passed, c.witness)
        report.checks.add(f"spectrum.setlike_is_character[{i}]", rho in known, a)
        rhos.append(rho)
    report.checks.add("spectrum.setlikes_separated", len(set(rhos)) == len(rhos))


def cmd_spectrum(args, report: io.RunReport) -> None:
    alg = _algebra(args, report)
    budget = args.budget or ea.DEFAULT_BUDGET
    vn = hs.generated_vn(alg, budget)
    if args.context is None:
        chars = sp.characters(vn)
        _spectrum_checks(alg, vn, chars, report)
        report.result = io.spectrum_report(vn, chars)
        return
    gens = io.load(args.context, lambda obj: io.parse_contexts(obj, alg.semiring, alg.dim))
    report.add_input("context", args.context)
    contexts = []
    for k, g in enumerate(gens):
        A = ea.closure(g, dim=alg.dim, semiring=alg.semiring)
        if not A <= vn:
            raise InputError(f"context {k} is not contained in the generated semialgebra",
                             next(f for f in A if f not in vn))
        contexts.append(A)
    sections = sp.global_sections(contexts, cap=budget)
    report.result = {
        "contexts": [io.spectrum_report(A, sp.characters(A)) for A in contexts],
        "inclusions": [list(p) for p in sp.inclusions(contexts)],
        "global_sections": [[{str(i): v for i, v in enumerate(rho.names())} for rho in sec]
                            for sec in sections],
        "count": len(sections),
    }


def cmd_census(args, report: io.RunReport) -> None:
    res = cs.census(args.size, args.budget)
    report.checks.add("census.every_hstar_classifies", res.ok, res.failures[:1])
    report.result = {
        "size": res.size,
        "relations": res.space,
        "enumerated": res.enumerated,
        "pruned": res.pruned,
        "counts": res.counts,
        "hstar": len(res.hstar),
        "classes": res.classes,
        "unclassified": len(res.unclassified),
    }


def cmd_demo(args, report: io.RunReport) -> None:
    groups = [parse_group(g) for g in args.groups.split(",") if g.strip()]
    if not groups:
        raise InputError("--groups must name at least one group")
    alg = hs.make_rel_group_algebra(groups)
    if args.save_algebra:
        Path(args.save_algebra).write_text(
            json.dumps(io.algebra_to_json(alg), indent=2) + "\n", encoding="utf-8")
    budget = args.budget or ea.DEFAULT_BUDGET
    ax = hs.check_axioms(alg)
    report.checks.extend(_axiom_checks(ax))
    vn = hs.generated_vn(alg, budget)
    report.checks.extend(hs.check_generated_vn(alg, vn, budget, axioms=ax))
    dec = _decompose(alg, budget, report)
    found = st.rel_extract_groups(dec)
    _spectrum_checks(alg, vn, sp.characters(vn), report)
    want = sorted(g.invariant_factors for g in groups)
    got = sorted(g.invariant_factors for g in found)
    report.checks.add("demo.groups_recovered", want == got, {"input": want, "found": got})
    report.result = {"input": [g.name for g in groups], "recovered": [g.name for g in found],
                     "axioms": _axiom_result(ax), "vn_size": len(vn),
                     "decomposition": io.decomposition_report(dec, found)}


COMMANDS: dict[str, tuple[Callable, str]] = {
    "validate-semiring": (cmd_validate_semiring, "check the commutative *-semiring axioms"),
    "check": (cmd_check, "evaluate the H*-algebra axioms of an algebra file"),
    "setlike": (cmd_setlike, "list set-like elements"),
    "commutant": (cmd_commutant, "commutant of a morphism set"),
    "vn": (cmd_vn, "generated von Neumann semialgebra and its maximality"),
    "decompose": (cmd_decompose, "split an H*-algebra into indecomposable blocks"),
    "extract-groups": (cmd_extract_groups, "read the blocks of a Boolean H*-algebra as groups"),
    "spectrum": (cmd_spectrum, "characters and global sections"),
    "census": (cmd_census, "classify every Boolean multiplication of a given size"),
    "demo": (cmd_demo, "build a group algebra and run the whole pipeline"),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", help="write the JSON report here")
    common.add_argument("--budget", type=int, help="cap on enumeration counts")
    common.add_argument("--json", action="store_true", help="machine-readable output on stdout")
    common.add_argument("--timing", action="store_true", help="include wall time in the report")
    parser = _Parser(prog="hstaralg", description="Finite H*-algebras over semirings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if name in ("validate-semiring", "commutant"):
            p.add_argument("--in", dest="input", required=True)
        elif name == "census":
            p.add_argument("--size", type=int, required=True)
        elif name == "demo":
            p.add_argument("--groups", required=True, help="comma-separated, e.g. z2,z3,z2xz2")
            p.add_argument("--save-algebra", help="also write the generated algebra file")
        else:
            p.add_argument("--algebra", "--in", dest="algebra", required=True)
        if name == "spectrum":
            p.add_argument("--context", help="context file of generator lists")
    return parser


def _emit(report: io.RunReport, args) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(report.dumps(), encoding="utf-8")
    sys.stdout.write(report.dumps() if getattr(args, "json", False) else report.text())


def cli_main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if args.budget is not None and args.budget < 1:
        sys.stderr.write("error: --budget must be positive\n")
        return EXIT_INPUT
    report = io.RunReport(args.command)
    func = COMMANDS[args.command][0]
    start = time.perf_counter()
    code = EXIT_OK
    try:
        func(args, report)
    except CapError as exc:
        report.error = {"kind": "cap", "message": str(exc), "witness": exc.witness,
                        "partial": exc.partial}
        code = EXIT_CAP
    except CheckFailure as exc:
        report.error = {"kind": type(exc).__name__, "message": str(exc), "witness": exc.witness}
        code = EXIT_CHECK
    except HStarError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.exit_code
    if args.timing:
        report.timing_ms = (time.perf_counter() - start) * 1000
    if code == EXIT_OK and not report.checks.ok:
        code = EXIT_CHECK
    _emit(report, args)
    return code


def main() -> None:
    sys.exit(cli_main())
