import json
import subprocess
import sys

import pytest

from dimfock.cli import main


def run_cli(args):
    return main(args)


def test_usage_errors():
    assert run_cli([]) == 2
    assert run_cli(["--suite", "symfunc", "--level", "99"]) == 2


def test_suite_report_roundtrip(tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = run_cli(
        ["--suite", "genmac", "--level", "1", "--points", "1", "--seed", "11", "--out", str(out)]
    )
    assert rc == 0
    payload = json.loads(out.read_text())
    assert payload["schema"] == 1
    assert payload["all_passed"] is True
    assert all(c["status"] == "pass" for c in payload["checks"])
    capsys.readouterr()


def test_report_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert run_cli(
            ["--suite", "symfunc", "--level", "3", "--points", "1", "--seed", "5", "--out", str(path)]
        ) == 0
    capsys.readouterr()
    ja, jb = json.loads(a.read_text()), json.loads(b.read_text())
    for payload in (ja, jb):
        for check in payload["checks"]:
            check.pop("seconds")
    assert ja == jb


def test_dump_fixture(tmp_path, capsys):
    out = tmp_path / "fix.json"
    rc = run_cli(["--dump", "genmac-transition", "--level", "1", "--seed", "7", "--out", str(out)])
    assert rc == 0
    payload = json.loads(out.read_text())
    assert payload["object"] == "genmac-transition"
    assert payload["matrix"][0][0] == "1"
    rc = run_cli(["--dump", "gen-jack", "--level", "1", "--out", str(out)])
    assert rc == 0
    capsys.readouterr()


def test_entry_point_subprocess(tmp_path):
    res = subprocess.run(
        [sys.executable, "-m", "dimfock.cli", "--suite", "symfunc", "--level", "2", "--points", "1"],
        capture_output=True,
        text=True,
        timeout=300,
    )
    assert res.returncode == 0
    assert "PASS" in res.stdout
