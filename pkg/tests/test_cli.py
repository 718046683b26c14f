import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

SCHEMA = json.loads(resources.files("cohom7.data").joinpath("report.schema.json").read_text())


def run(*args):
    return subprocess.run([sys.executable, "-m", "cohom7", *args], capture_output=True, text=True)


def run_json(*args):
    r = run(*args, "--format", "json")
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, SCHEMA)
    return r.returncode, doc


def test_classify_json():
    code, doc = run_json("classify")
    assert code == 0
    assert doc["survivors"] == ["2a1 / trivial"]
    assert doc["golden_match"] is True


def test_classify_markdown_table():
    r = run("classify", "--format", "markdown")
    assert r.returncode == 0
    for row in ("| (1) | T^1×SU(3) | SU(2) |", "| (2) | SU(2)^3 | SU(2) |",
                "| (3) | T^1×SU(2)^2 | T^1 |", "| (4) | SU(2)^2 | {1} |"):
        assert row in r.stdout


def test_classify_golden_mismatch(tmp_path):
    golden = tmp_path / "golden.json"
    golden.write_text(json.dumps([{"n": 1, "G": "SU(3)", "K": "T^2"}]))
    assert run("classify", "--golden", str(golden)).returncode == 3


def test_global_flags_before_command():
    r = run("--format", "json", "rep", "V1⊗V1")
    assert json.loads(r.stdout)["value"] == "V2+V0"


def test_case_g2():
    code, doc = run_json("case", "--g", "g2", "--k", "a2")
    assert code == 0 and doc["case"]["verdict"]["kind"] == "DiffeoSphere"
    assert any("exactly two fixed points" in str(s["result"]) for s in doc["case"]["trace"])


def test_case_b2():
    code, doc = run_json("case", "--g", "b2", "--k", "t1+a1")
    assert doc["case"]["verdict"]["kind"] == "Impossible"


def test_case_variant():
    code, doc = run_json("case", "--g", "a2", "--k", "t2", "--variant", "h-eq-hprime")
    assert code == 0
    assert doc["case"]["verdict"]["kind"] == "Impossible"
    assert [b["label"] for b in doc["case"]["branches"]] == ["H = H'"]


@pytest.mark.parametrize("args", [("--g", "f4", "--k", "a1"), ("--g", "a1+a1", "--k", "a1"),
                                  ("--g", "g2", "--k", "a2", "--variant", "h-eq-hprime"),
                                  ("--d", "2", "--g", "g2", "--k", "a2")])
def test_case_unknown(args):
    assert run("case", *args).returncode == 4


@pytest.mark.parametrize("expr,value", [("V2⊗V2", "V4+V2+V0"), ("V3:fs", "symplectic (quaternionic)"),
                                        ("V2*V2:dim", 9)])
def test_rep(expr, value):
    code, doc = run_json("rep", expr)
    assert code == 0 and doc["value"] == value


def test_rep_discrepancy_note():
    code, doc = run_json("rep", "sym2(V0+V2)⊗V2:inv")
    assert doc["value"] == 1 and "assumes 0" in doc["note"]


def test_rep_parse_error():
    r = run("rep", "V2⊗(V1")
    assert r.returncode == 5 and "position 6" in r.stderr


def test_verify_concavity_pass():
    code, doc = run_json("verify-concavity", "--profile", "cos")
    assert code == 0 and doc["passed"] and doc["warning"] is None


def test_verify_concavity_tolerance_fail():
    code, doc = run_json("verify-concavity", "--profile", "cos", "--step", "1e-3", "--tol", "1e-12")
    assert code == 1 and not doc["passed"]


def test_verify_concavity_exp_warning():
    code, doc = run_json("verify-concavity", "--profile", "exp")
    assert code == 0 and not doc["applicable"] and doc["warning"]


def test_verify_concavity_non_positive():
    assert run("verify-concavity", "--profile", "poly:-1,0,1").returncode == 6


def test_verify_concavity_unknown_profile():
    assert run("verify-concavity", "--profile", "tan").returncode == 4


def test_catalog_dump():
    code, doc = run_json("catalog")
    assert code == 0 and doc["version"] == 1
    assert "a2|u2" in {e["id"] for e in doc["hosts"]["a2"]}
    code, doc = run_json("catalog", "--host", "g2")
    assert list(doc["hosts"]) == ["g2"]


def test_text_output():
    r = run("classify")
    assert r.returncode == 0 and "survivors: ['2a1 / trivial']" in r.stdout
