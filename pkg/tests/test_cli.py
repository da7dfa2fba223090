import json
import subprocess
import sys

import pytest

from crownlib.cli import run
from crownlib.constructions import fano, lower_bound_construction, sts9
from crownlib.core import parse, serialize


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, H in (("fano", fano()), ("sts9", sts9()), ("lb11", lower_bound_construction(11))):
        p = tmp_path / f"{name}.l3g"
        p.write_text(serialize(H))
        paths[name] = str(p)
    return paths


def test_crown_find_fano(files, capsys):
    assert run(["crown", "find", "--graph", files["fano"]]) == 0
    assert capsys.readouterr().out == "NONE\n"


def test_crown_find_sts9(files, capsys):
    assert run(["crown", "find", "--graph", files["sts9"]]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 4
    assert all(tuple(map(int, line.split())) in sts9() for line in lines)


def test_catalog_verify(capsys):
    assert run(["catalog", "verify"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].split() == ["name", "vertices", "edges", "matched"]
    assert len(out) == 6 and all(line.split()[-1] == "True" for line in out[1:])


def test_catalog_show(capsys):
    assert run(["catalog", "show", "G3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 9 and {line.split()[2] for line in lines} == {"A", "B", "C"}
    assert run(["catalog", "show", "G9"]) == 2


def test_construct(tmp_path, capsys):
    out = tmp_path / "lb.l3g"
    assert run(["construct", "--kind", "lower-bound", "--n", "43", "-o", str(out)]) == 0
    assert parse(out.read_text()) == lower_bound_construction(43)
    assert run(["construct", "--kind", "sts9", "-o", "-"]) == 0
    assert parse(capsys.readouterr().out) == sts9()
    assert run(["construct", "--kind", "random", "--n", "20", "--min-degree", "4", "--seed", "7"]) == 0
    first = capsys.readouterr().out
    assert parse(first).min_degree() >= 4
    run(["construct", "--kind", "random", "--n", "20", "--min-degree", "4", "--seed", "7"])
    assert capsys.readouterr().out == first
    assert run(["construct", "--kind", "lower-bound", "--n", "5"]) == 2


def test_link_show(files, capsys):
    assert run(["link", "show", "--graph", files["lb11"], "--edge", "0,3,4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "5 6 A" in lines
    assert all(len(line.split()) == 3 for line in lines)
    assert run(["link", "show", "--graph", files["lb11"], "--edge", "0,1"]) == 2
    assert run(["link", "show", "--graph", files["lb11"], "--edge", "0,1,3"]) == 2


def test_audit(files, capsys):
    assert run(["audit", "--graph", files["lb11"]]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["hypotheses_ok"] and data["conclusion_ok"]
    for key in ("y", "z1", "z2", "z3", "e1", "e2", "chain"):
        assert key in data


def test_critical_scan(files, capsys):
    assert run(["critical", "scan", "--graph", files["lb11"], "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"configurations": []}


def test_g6_verify(capsys):
    assert run(["g6", "verify", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ok"] and data["allowed_outside_patterns"] == [] and data["capacity"] <= 16


def test_search(tmp_path, capsys):
    out = tmp_path / "r.json"
    argv = ["search", "ex", "--n", "8", "--exact", "--budget-nodes", "1e8", "--threads", "2",
            "--out", str(out)]
    assert run(argv) == 0
    data = json.loads(out.read_text())
    assert data["best"] == 8 and data["exact"]
    assert parse(data["witness"]).edges
    assert set(data) >= {"n", "best", "exact", "nodes", "seconds", "witness"}
    assert run(["search", "ex", "--n", "9", "--restricted", "thm2"]) == 0
    assert "best 9 (exact)" in capsys.readouterr().out


def test_usage_errors(files, capsys):
    assert run(["search", "ex", "--n", "9", "--bogus"]) == 2
    assert run(["nonsense"]) == 2
    assert run(["crown", "find", "--graph", "/nonexistent.l3g"]) == 2
    assert "usage" in capsys.readouterr().err


def test_parse_error_exit(tmp_path, capsys):
    bad = tmp_path / "bad.l3g"
    bad.write_text("3 1\n0 1 1\n")
    assert run(["crown", "find", "--graph", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_stdin_and_global_flags(files):
    text = serialize(lower_bound_construction(11))
    res = subprocess.run([sys.executable, "-m", "crownlib", "--format", "json", "crown", "find",
                          "--graph", "-"], input=text, capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout) == {"crown": None}


def test_deterministic_output(files):
    argv = [sys.executable, "-m", "crownlib", "g6", "verify", "--format", "json"]
    a = subprocess.run(argv, capture_output=True, text=True).stdout
    b = subprocess.run(argv, capture_output=True, text=True).stdout
    assert a == b and a


def test_verify_all(capsys):
    assert run(["verify", "all", "--seed", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 9 and all(line.split()[-1] == "PASS" for line in lines[1:])
