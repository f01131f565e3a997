import json
import os
import subprocess
import sys

import pytest

CLI = os.environ.get("PERMCX_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="PERMCX_CLI not set")


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def collection_c22(tmp_path):
    return write(
        tmp_path,
        "H.json",
        [
            {"p": 2, "r": 2, "basis": []},
            {"p": 2, "r": 2, "basis": [[1, 0]]},
            {"p": 2, "r": 2, "basis": [[1, 0], [0, 1]]},
        ],
    )


def test_check_condition_exit_codes(tmp_path):
    bad = collection_c22(tmp_path)
    res = run("check-condition", "--subgroups", bad)
    assert res.returncode == 1
    assert "VIOLATED" in res.stdout

    good = write(
        tmp_path,
        "G.json",
        [{"p": 2, "r": 2, "basis": []}, {"p": 2, "r": 2, "basis": [[1, 0], [0, 1]]}],
    )
    res = run("check-condition", "--subgroups", good)
    assert res.returncode == 0
    assert "ok" in res.stdout


def test_counterexample_roundtrip(tmp_path):
    e = write(tmp_path, "E.json", {"p": 2, "r": 2, "basis": []})
    f = write(tmp_path, "F.json", {"p": 2, "r": 2, "basis": [[1, 0]]})
    out = tmp_path / "cex.json"
    res = run("--group", "p=2,r=2", "counterexample", "--pair", e, f, "--out", str(out))
    assert res.returncode == 0, res.stderr
    report = json.loads(out.read_text())
    assert report["exact"] is True
    assert report["contractible"] is False

    cx = write(tmp_path, "cx.json", report["complex"])
    res = run("verify-complex", "--complex", cx, "--expect-exact")
    assert res.returncode == 0
    res = run("verify-complex", "--complex", cx, "--expect-contractible")
    assert res.returncode == 1

    # json output format is machine-parseable
    res = run("verify-complex", "--complex", cx, "--format", "json")
    assert res.returncode == 0
    assert json.loads(res.stdout)["contractible"] is False


def test_verify_with_collection(tmp_path):
    e = write(tmp_path, "E.json", {"p": 2, "r": 2, "basis": []})
    f = write(tmp_path, "F.json", {"p": 2, "r": 2, "basis": [[1, 0]]})
    out = tmp_path / "cex.json"
    run("counterexample", "--pair", e, f, "--out", str(out))
    cx = write(tmp_path, "cx.json", json.loads(out.read_text())["complex"])
    h = write(
        tmp_path,
        "pairH.json",
        [{"p": 2, "r": 2, "basis": []}, {"p": 2, "r": 2, "basis": [[1, 0]]}],
    )
    res = run("verify-complex", "--complex", cx, "--subgroups", h, "--format", "json")
    assert res.returncode == 0
    report = json.loads(res.stdout)
    assert report["verdict"] == "CONSISTENT-WITH-THEOREM"
    assert report["membership"] == "certified"
    assert report["condition"]["ok"] is False


def test_necessity(tmp_path):
    h = collection_c22(tmp_path)
    res = run("necessity", "--subgroups", h, "--format", "json")
    assert res.returncode == 0
    reports = json.loads(res.stdout)
    assert len(reports) == 2
    assert all(r["exact"] and not r["contractible"] for r in reports)


def test_regular_pair(tmp_path):
    top = write(
        tmp_path,
        "top.json",
        [
            {"p": 2, "r": 3, "basis": [[1, 0, 0], [0, 1, 0]]},
            {"p": 2, "r": 3, "basis": [[0, 1, 0], [0, 0, 1]]},
        ],
    )
    lower = write(tmp_path, "lower.json", [{"p": 2, "r": 3, "basis": [[1, 1, 1]]}])
    res = run("regular-pair", "--top", top, "--lower", lower, "--format", "json")
    assert res.returncode == 0, res.stderr
    report = json.loads(res.stdout)
    assert report["verified"] is True
    assert report["field_used"]["e"] == 1


def test_cohomology_and_e1(tmp_path):
    res = run("--group", "p=2,r=2", "cohomology", "--module", "trivial", "--max-degree", "5",
              "--format", "json")
    assert res.returncode == 0
    assert json.loads(res.stdout)["dims"] == [1, 2, 3, 4, 5, 6]

    s = write(tmp_path, "S.json", {"p": 2, "r": 3, "basis": [[1, 0, 0], [0, 1, 0]]})
    res = run("cohomology", "--subgroup", s, "--max-degree", "4", "--format", "json")
    assert res.returncode == 0
    assert json.loads(res.stdout)["dims"] == [1, 2, 3, 4, 5]

    e = write(tmp_path, "E.json", {"p": 2, "r": 1, "basis": []})
    f = write(tmp_path, "F.json", {"p": 2, "r": 1, "basis": [[1]]})
    out = tmp_path / "cex.json"
    run("counterexample", "--pair", e, f, "--out", str(out))
    cx = write(tmp_path, "cx.json", json.loads(out.read_text())["complex"])
    res = run("e1-table", "--complex", cx, "--max-degree", "2", "--format", "json")
    assert res.returncode == 0
    table = json.loads(res.stdout)["table"]
    assert table[1] == [1, 0, 0, 1]


def test_malformed_input_is_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    res = run("verify-complex", "--complex", str(bad))
    assert res.returncode == 2
    assert "parse error" in res.stderr

    # invariant violations in inputs are also exit 2 and name the invariant
    broken = write(
        tmp_path,
        "broken.json",
        {
            "modules": [
                {"p": 2, "e": 1, "modulus": [0, 1], "r": 1, "dim": 1,
                 "action": [{"rows": 1, "cols": 1, "entries": [[1]]}], "tags": None},
                {"p": 2, "e": 1, "modulus": [0, 1], "r": 1, "dim": 1,
                 "action": [{"rows": 1, "cols": 1, "entries": [[1]]}], "tags": None},
                {"p": 2, "e": 1, "modulus": [0, 1], "r": 1, "dim": 1,
                 "action": [{"rows": 1, "cols": 1, "entries": [[1]]}], "tags": None},
            ],
            "differentials": [
                {"rows": 1, "cols": 1, "entries": [[1]]},
                {"rows": 1, "cols": 1, "entries": [[1]]},
            ],
        },
    )
    res = run("verify-complex", "--complex", broken)
    assert res.returncode == 2
    assert "composite" in res.stderr

    res = run("cohomology", "--module", "trivial")  # missing --group
    assert res.returncode == 2


def test_selftest_filter():
    res = run("selftest", "--filter", "C6")
    assert res.returncode == 0
    assert "[PASS] C6" in res.stdout


def test_report_files_deterministic(tmp_path):
    e = write(tmp_path, "E.json", {"p": 3, "r": 1, "basis": []})
    f = write(tmp_path, "F.json", {"p": 3, "r": 1, "basis": [[1]]})
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    run("counterexample", "--pair", e, f, "--out", str(out1))
    run("counterexample", "--pair", e, f, "--out", str(out2))
    assert out1.read_bytes() == out2.read_bytes()
