import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from dporders.cli import main

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = Path(__file__).resolve().parent / "golden"

CASES = {
    "check-p2-cubic-e2": ["check", "fixtures/p2-cubic-e2.json"],
    "check-t3-p2-deg3-c5": ["check", "fixture:t3-p2-deg3-c5"],
    "kzero-f2-node": ["kzero", "fixtures/f2-node.json"],
    "mmp-t1-p2-deg3-n2": ["mmp", "fixture:t1-p2-deg3-n2"],
    "mmp-t3-f1-c3": ["mmp", "fixture:t3-f1-c3"],
    "enumerate-p2": ["enumerate", "--base", "p2"],
    "enumerate-f1": ["enumerate", "--base", "f1"],
    "blowup-cubic-two-points": ["blowup", "fixture:p2-cubic-e2", "--at", "p:D=1", "--at", "q"],
    "fixtures-list": ["fixtures", "list"],
}


def run(argv, capsys):
    cwd = os.getcwd()
    os.chdir(ROOT)
    try:
        code = main(argv)
    finally:
        os.chdir(cwd)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture(autouse=True)
def _fixed_e_max(monkeypatch):
    monkeypatch.delenv("DPORDERS_E_MAX", raising=False)


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_markdown(name, capsys):
    code, out, _ = run(CASES[name] + ["--format", "md"], capsys)
    assert code == 0
    path = GOLDEN / f"{name}.md"
    if os.environ.get("DPORDERS_UPDATE_GOLDEN"):
        path.write_text(out)
    assert out == path.read_text()


def test_check_json(capsys):
    code, out, _ = run(["check", "fixtures/p2-cubic-e2.json", "--format", "json"], capsys)
    d = json.loads(out)
    assert code == 0 and d["del_pezzo"] is True and d["expect_ok"] is True


def test_every_fixture_file_checks(capsys):
    for path in sorted((ROOT / "fixtures").glob("*.json")):
        code, out, _ = run(["check", str(path), "--format", "json"], capsys)
        assert code == 0
        assert json.loads(out)["expect_ok"] is True, path.name


def test_enumerate_f1_json(capsys):
    code, out, _ = run(["enumerate", "--base", "f1", "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["count"] == 2


def test_kzero_f2_node_has_c0(capsys):
    code, out, _ = run(["kzero", "fixtures/f2-node.json", "--format", "json"], capsys)
    assert "C0" in [r["witness"] for r in json.loads(out)["k_zero"]]


def test_blowup_json_round_trips(capsys):
    code, out, _ = run(["blowup", "fixture:p2-cubic-e2", "--at", "p:D=1", "--format", "json"], capsys)
    assert code == 0
    from dporders.serialize import order_loads

    assert order_loads(out).surface.point_ids == ("p",)


def test_expect(capsys):
    assert run(["check", "fixture:t3-p2-deg3-c2", "--expect", "T3-P2-deg3:2"], capsys)[0] == 0
    code, _, err = run(["check", "fixture:t3-p2-deg3-c2", "--expect", "T3-P2-deg3:3"], capsys)
    assert code == 2 and json.loads(err)["error"] == "classification-mismatch"
    assert run(["enumerate", "--base", "f2", "--expect", "minimal-TAdPO-F2:2"], capsys)[0] == 0


def test_invalid_input(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    code, _, err = run(["check", str(bad)], capsys)
    assert code == 1 and json.loads(err)["error"] == "parse"
    bad.write_text(json.dumps({"base": {"type": "P2"}, "components": [{"id": "D", "class": [3], "e": 1, "mults": {},
                                                                       "nodes_at": []}], "points": [], "curves": []}))
    code, _, err = run(["check", str(bad)], capsys)
    assert code == 1 and json.loads(err)["error"] == "invalid-configuration"
    code, _, err = run(["check", "fixture:nope"], capsys)
    assert code == 1 and json.loads(err)["error"] == "unknown-fixture"
    code, _, _ = run(["check", str(tmp_path / "missing.json")], capsys)
    assert code == 1
    assert run(["frobnicate"], capsys)[0] == 1


def test_fixtures_dump(capsys):
    code, out, _ = run(["fixtures", "dump", "p2-cubic-e2"], capsys)
    assert code == 0 and out == (ROOT / "fixtures" / "p2-cubic-e2.json").read_text()


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "dporders", "enumerate", "--base", "f1", "--format", "json"],
                       capture_output=True, text=True, cwd=ROOT)
    assert r.returncode == 0 and json.loads(r.stdout)["count"] == 2
