import json
import re

import pytest

from confembed.cli import main
from confembed.decomp import BranchingTable
from confembed.rootsys import LieType, build_root_datum
from confembed.verify import check_deligne, check_level_tables

FLOAT = re.compile(r"\d\.\d")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_levels_g2(capsys):
    code, out, _ = run(capsys, "levels", "G2")
    assert code == 0
    lines = out.strip().splitlines()[1:]
    assert len(lines) == 2
    assert any("A2" in l and l.split()[-1] == "-5/3" for l in lines)
    assert any("A1xA1" in l and "-5/3; 1" in l for l in lines)


def test_levels_a4(capsys):
    code, out, _ = run(capsys, "levels", "A4", "--json")
    rows = json.loads(out)["rows"]
    assert code == 0 and [r["subalgebra"] for r in rows] == ["A3xZ#1", "A1xA2xZ#2", "A1xA2xZ#3", "A3xZ#4"]
    assert rows[1]["levels"] == ["-5/2", "-1", "1"]


def test_levels_usage_error(capsys):
    code, _, err = run(capsys, "levels", "X9")
    assert code == 1 and "X9" in err


def test_missing_argument_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classify", "G2"])
    assert exc.value.code == 1


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "C5", "C2xC3", "-7/2", "--json")
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "Infinite"
    assert data["justification"] == "cn-coefficient-witness" and len(data["witness_prefix"]) == 10


def test_classify_non_conformal_level(capsys):
    code, _, err = run(capsys, "classify", "G2", "A2", "1")
    assert code == 1 and "not a conformal level" in err


def test_check(capsys):
    code, out, _ = run(capsys, "check", "G2", "A2", "-5/3", "--json")
    data = json.loads(out)
    assert code == 0 and [c["value"] for c in data["components"]] == ["1", "1"] and data["conformal"]


def test_decompose_roundtrip(capsys):
    code, out, _ = run(capsys, "decompose", "F4", "B4", "-5/2")
    assert code == 0 and out.strip().splitlines()[-1] == "(-5/2 L0) + (-7/2 L0 + L4)"
    code, out, _ = run(capsys, "decompose", "F4", "B4", "-5/2", "--json")
    table = BranchingTable.from_json(out)
    assert table.text() == "(-5/2 L0) + (-7/2 L0 + L4)"


def test_decompose_graded(capsys):
    code, out, _ = run(capsys, "decompose", "A5", "A2xA2xZ", "-1", "--window", "1")
    assert code == 0
    assert out.strip().splitlines()[1:] == [
        "q=-1: (-2 L0 + L2, -2 L0 + L1)", "q=0: (-L0, -L0)", "q=1: (-2 L0 + L1, -2 L0 + L2)", "...",
    ]


@pytest.mark.parametrize("argv", [
    ("levels", "E7", "--json"),
    ("classify", "A4", "A1xA2xZ#2", "-5/2", "--json"),
    ("decompose", "G2", "A2", "-5/3", "--json"),
    ("decompose", "C4", "A3xZ", "-1/2", "--json"),
])
def test_no_floats_in_json(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    payload = json.loads(out)

    def walk(x):
        if isinstance(x, float):
            raise AssertionError(f"float {x} in output")
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        if isinstance(x, list):
            for v in x:
                walk(v)
        if isinstance(x, str):
            assert not FLOAT.search(x), x

    walk(payload)


def test_injected_dual_coxeter_fault_is_localized(monkeypatch):
    e8 = build_root_datum(LieType.parse("E8"))
    assert e8.dual_coxeter == 30
    monkeypatch.setitem(e8.__dict__, "dual_coxeter", 31)
    results = {r.item: r.passed for r in check_level_tables(8)}
    assert results["levels-E8"] is False
    assert all(ok for item, ok in results.items() if item != "levels-E8")
    assert check_deligne().passed is False
    monkeypatch.undo()
    assert check_deligne().passed


def test_verify_exit_codes(capsys, monkeypatch):
    import confembed.verify as verify
    from confembed.verify import CheckResult

    ok = CheckResult(1, "levels-A", True)
    bad = CheckResult(7, "branching-G2", False, ["row 1 differs"])
    monkeypatch.setattr(verify, "run_all", lambda max_rank: [ok])
    assert run(capsys, "verify-paper")[0] == 0
    monkeypatch.setattr(verify, "run_all", lambda max_rank: [ok, bad])
    code, out, _ = run(capsys, "verify-paper")
    assert code == 2 and "[FAIL] 7.branching-G2" in out and "1/2 items pass" in out


def test_internal_error_exit_code(capsys, monkeypatch):
    import confembed.cli as cli
    from confembed.findec import ClassificationError

    def boom(sub, k):
        raise ClassificationError("inconsistent verdict")

    monkeypatch.setattr(cli, "classify", boom)
    code, _, err = run(capsys, "classify", "G2", "A2", "-5/3")
    assert code == 3 and "internal error" in err
