from __future__ import annotations

import json
import subprocess
import sys

import pytest


def run(*args, stdin=None):
    return subprocess.run([sys.executable, "-m", "qhg.cli", *args], input=stdin,
                          capture_output=True, text=True, timeout=300)


@pytest.fixture
def s3_k2(tmp_path):
    p = tmp_path / "s3_k2.json"
    p.write_text(json.dumps({"catalog": "symmetric(3)", "subgroup": "C2"}))
    return p


def test_verify_writes_report(s3_k2, tmp_path):
    out = tmp_path / "r.json"
    res = run("verify", str(s3_k2), "--json", str(out))
    assert res.returncode == 0, res.stdout + res.stderr
    rep = json.loads(out.read_text())
    assert rep["schema"] == "qhg/1" and rep["ok"] is True
    assert rep["counts"]["fail"] == 0
    ids = {c["id"] for c in rep["checks"]}
    assert {"hyper.is_hopf", "gate.verdict"} <= ids


def test_verify_json_to_stdout(s3_k2):
    res = run("verify", str(s3_k2), "--json", "-")
    assert res.returncode == 0
    assert json.loads(res.stdout)["instance"] == "symmetric(3) / C2"


def test_hecke_has_double_coset_count(s3_k2):
    res = run("hecke", str(s3_k2))
    assert res.returncode == 0
    obj = json.loads(res.stdout)
    assert obj["dim"] == 2 and obj["report_ok"]


def test_discrete_and_dump(s3_k2):
    res = run("discrete", str(s3_k2))
    assert res.returncode == 0 and json.loads(res.stdout)["C1"]["dim"] == 2
    res = run("dump", str(s3_k2), "--model", "function", "--dual")
    obj = json.loads(res.stdout)
    assert res.returncode == 0 and obj["dim"] == 6 and obj["model"] == "dual"


def test_catalog_is_sorted():
    res = run("catalog")
    lines = res.stdout.split()
    assert res.returncode == 0 and lines


def test_chain_from_stdin():
    spec = json.dumps({"catalog": "cyclic(4)", "subgroup": "trivial", "second_subgroup": "C2"})
    res = run("chain", "-", stdin=spec)
    assert res.returncode == 0, res.stdout + res.stderr


@pytest.mark.parametrize("spec,needle", [
    ({"catalog": "symmetric(3)", "subgroup": [0, 1]}, "subgroup"),
    ({"catalog": "nope"}, ""),
    ({"catalog": "symmetric(3)", "subgroup": "C2", "model": "both-ish"}, "model"),
])
def test_bad_specs_exit_2(spec, needle):
    res = run("verify", "-", stdin=json.dumps(spec))
    assert res.returncode == 2
    assert needle in res.stderr


def test_order_cap(monkeypatch):
    spec = json.dumps({"catalog": "symmetric(4)", "subgroup": "S3"})
    res = subprocess.run([sys.executable, "-m", "qhg.cli", "verify", "-"], input=spec, capture_output=True,
                         text=True, env={**__import__("os").environ, "QHG_ORDER_CAP": "12"})
    assert res.returncode == 2 and "cap" in res.stderr


def test_unreadable_file_exit_2(tmp_path):
    res = run("verify", str(tmp_path / "missing.json"))
    assert res.returncode == 2
