import json

import pytest

from hstaralg import hstar as hs
from hstaralg import io
from hstaralg import kernel_factor as kf
from hstaralg import matcat as mc
from hstaralg import structure as st
from hstaralg.errors import InputError
from hstaralg.groups import parse_group
from hstaralg.report import CheckList
from hstaralg.semiring import boolean, nat

from helpers import ZOO

B = boolean()


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return p


def test_algebra_round_trip():
    for names in (["z2"], ["z2", "z3"], ["z2xz2"]):
        alg = hs.make_rel_group_algebra([parse_group(n) for n in names])
        again = io.parse_algebra(json.loads(json.dumps(io.algebra_to_json(alg))))
        assert again.mu == alg.mu


def test_algebra_over_table_semiring():
    sr = ZOO["chain3"]
    obj = {"semiring": {"kind": "table", "carrier": ["0", "m", "1"],
                        "add": [["0", "m", "1"], ["m", "m", "1"], ["1", "1", "1"]],
                        "mul": [["0", "0", "0"], ["0", "m", "m"], ["0", "m", "1"]],
                        "zero": "0", "one": "1"},
           "dim": 1, "mu": [["1"]]}
    alg = io.parse_algebra(obj)
    assert alg.semiring == sr and alg.mu.to_names() == [["1"]]


def test_nat_big_entries():
    alg = io.parse_algebra({"semiring": "nat", "dim": 1, "mu": [["123456789012345678901234567890"]]})
    assert alg.mu.entries[0][0] == 123456789012345678901234567890
    assert alg.semiring == nat()


@pytest.mark.parametrize("obj", [
    [],
    {"dim": 1, "mu": [[1]]},
    {"semiring": "boolean", "mu": [[1]]},
    {"semiring": "boolean", "dim": -1, "mu": []},
    {"semiring": "boolean", "dim": True, "mu": [[1]]},
    {"semiring": "boolean", "dim": 1, "mu": [[1, 0]]},
    {"semiring": "boolean", "dim": 2, "mu": [[1, 0, 0, 0]]},
    {"semiring": "boolean", "dim": 1, "mu": [[2]]},
    {"semiring": "boolean", "dim": 1, "mu": "x"},
    {"semiring": "ring", "dim": 1, "mu": [[1]]},
    {"semiring": {"kind": "table", "carrier": ["0", "1", "a"],
                  "add": [["0", "1", "a"], ["1", "1", "a"], ["a", "a", "a"]],
                  "mul": [["0", "0", "0"], ["0", "1", "a"], ["0", "1", "a"]],
                  "zero": "0", "one": "1"}, "dim": 1, "mu": [["1"]]},
])
def test_malformed_algebras(obj):
    with pytest.raises(InputError):
        io.parse_algebra(obj)


def test_read_json_errors(tmp_path):
    with pytest.raises(InputError):
        io.read_json(tmp_path / "missing.json")
    with pytest.raises(InputError):
        io.read_json(write(tmp_path, "bad.json", "{not json"))


def test_groups_round_trip_and_errors():
    gs = [parse_group("z2"), parse_group("z3")]
    assert io.parse_groups(io.groups_to_json(gs)) == gs
    with pytest.raises(InputError):
        io.parse_groups({"groups": [{"order": 3, "table": [[0, 1], [1, 0]]}]})
    with pytest.raises(InputError):
        io.parse_groups({"groups": [{"table": [[0, 0], [0, 0]]}]})
    with pytest.raises(InputError):
        io.parse_groups({"groups": "z2"})


def test_morphism_set():
    sr, n, fs = io.parse_morphism_set({"semiring": "boolean", "dim": 2,
                                       "morphisms": [[[0, 1], [1, 0]], {"dom": 2, "cod": 2,
                                                                        "entries": [[1, 0], [0, 0]]}]})
    assert n == 2 and fs == [mc.mat(B, [[0, 1], [1, 0]]), mc.diag(B, [1, 0])]
    with pytest.raises(InputError):
        io.parse_morphism_set({"semiring": "boolean", "dim": 2,
                               "morphisms": [{"dom": 1, "cod": 2, "entries": [[1], [0]]}]})


def test_contexts():
    ctx = io.parse_contexts({"contexts": [[], {"generators": [[[1, 0], [0, 0]]]}]}, B, 2)
    assert ctx == [[], [mc.diag(B, [1, 0])]]
    with pytest.raises(InputError):
        io.parse_contexts({"contexts": [[[[1]]]]}, B, 2)
    with pytest.raises(InputError):
        io.parse_contexts({"contexts": 3}, B, 2)


def test_jsonable_is_deterministic():
    s = {mc.diag(B, [0, 1]), mc.diag(B, [1, 0]), mc.identity(B, 2)}
    assert io.jsonable(s) == io.jsonable(set(reversed(list(s))))
    assert io.jsonable((1, "a", None, [True])) == [1, "a", None, [True]]
    assert io.jsonable({1: mc.identity(B, 1)}) == {"1": {"dom": 1, "cod": 1, "entries": [["1"]]}}


def test_reports():
    fac = kf.factorize(mc.mat(B, [[1, 0], [0, 0]]))
    rep = io.factorization_report(fac)
    assert rep["m"]["entries"] == [["1"], ["0"]] and all(e["holds"] for e in rep["equations"])
    dec = st.decompose(hs.make_rel_group_algebra([parse_group("z2"), parse_group("z3")]))
    rep = io.decomposition_report(dec, st.rel_extract_groups(dec))
    assert [c["coordinates"] for c in rep["components"]] == [[0, 1], [2, 3, 4]]
    assert [c["group_name"] for c in rep["components"]] == ["Z2", "Z3"]


def test_run_report(tmp_path):
    p = write(tmp_path, "a.json", {"x": 1})
    r = io.RunReport("check")
    r.add_input("algebra", p)
    checks = CheckList()
    checks.add("axiom.S", False, ("entry", 0, 1))
    checks.add("axiom.A", True)
    r.checks.extend(checks)
    data = json.loads(r.dumps())
    assert data["ok"] is False
    assert data["inputs"]["algebra"]["sha256"] == io.file_digest(p)
    assert data["checks"][0] == {"tag": "axiom.S", "passed": False, "witness": ["entry", 0, 1]}
    assert "timing_ms" not in data
    assert "FAIL axiom.S" in r.text()
