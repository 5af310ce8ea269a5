"""Test the command line interface"""
import json

import pytest

from topzdd import TopZdd
from topzdd.cli import main


def _records(out):
    return [json.loads(line) for line in out.splitlines() if line.startswith("{")]


def test_build_stats(tmp_path, capsys):
    """build writes a container whose stats agree with the build report"""
    path = tmp_path / "p.tz"
    assert main(["build", "powerset:A=64", str(path)]) == 0
    built = _records(capsys.readouterr().out)[-1]
    assert built["family"] == "powerset:A=64"
    assert built["n"] == 64
    assert built["topzdd_bytes"] == TopZdd.load(path).size_in_bytes()

    assert main(["stats", str(path), "--json"]) == 0
    stats = _records(capsys.readouterr().out)[-1]
    for key in ("family", "n", "c", "naive_bytes", "topzdd_bytes", "components"):
        assert stats[key] == built[key]

    assert main(["stats", str(path)]) == 0
    table = capsys.readouterr().out
    assert "topzdd" in table and "bp" in table


def test_build_flags(tmp_path, capsys):
    """--spec/--out flags and byte-identical rebuilds"""
    a, b = tmp_path / "a.tz", tmp_path / "b.tz"
    spec = "knapsack:A=100,W=100,C=500,seed=7"
    assert main(["build", "--spec", spec, "--out", str(a), "--json"]) == 0
    assert main(["build", spec, str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_degenerate(tmp_path, capsys):
    """nqueens:n=2 has no solution: a terminal-only container"""
    path = tmp_path / "q.tz"
    assert main(["build", "nqueens:n=2", str(path), "--json"]) == 0
    record = _records(capsys.readouterr().out)[-1]
    assert record["n"] == 0
    tz = TopZdd.load(path)
    assert tz.degenerate and not tz.member([])
    assert main(["verify", str(path)]) == 0


@pytest.mark.parametrize("target", ["matchings:grid=3", "nqueens:n=6", "bounded_card:A=20,B=4"])
def test_verify(target, tmp_path, capsys):
    """verify from a spec and from a container"""
    assert main(["verify", target]) == 0
    path = tmp_path / "f.tz"
    assert main(["build", target, str(path)]) == 0
    assert main(["verify", "--json", str(path)]) == 0
    assert _records(capsys.readouterr().out)[-1]["verified"] is True


def test_bench(tmp_path, capsys):
    """bench runs the requested number of steps for both representations"""
    path = tmp_path / "g.tz"
    assert main(["build", "grid_paths:n=3", str(path)]) == 0
    capsys.readouterr()
    assert main(["bench", str(path), "--steps", "4096", "--seed", "3", "--json"]) == 0
    record = _records(capsys.readouterr().out)[-1]
    assert record["steps"] == 4096 and record["seed"] == 3
    assert record["us_per_step_topzdd"] > 0
    assert record["us_per_step_zdd"] > 0


def test_member(tmp_path, capsys):
    """member answers for subsets of a power set"""
    path = tmp_path / "p.tz"
    assert main(["build", "powerset:A=10", str(path)]) == 0
    capsys.readouterr()
    assert main(["member", str(path), "1,4,10"]) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert main(["member", str(path), "2", "11"]) == 0
    assert capsys.readouterr().out.strip() == "false"
    assert main(["member", str(path)]) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert main(["member", str(path), "4,1"]) == 2
    assert main(["member", str(path), "x"]) == 2


def test_export(tmp_path, capsys):
    """export writes the text family format"""
    path = tmp_path / "q.txt"
    assert main(["export", "nqueens:n=4", "--out", str(path)]) == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "c=16"
    assert sorted(lines[1:]) == ["2 8 9 15", "3 5 12 14"]
    assert main(["export", "nqueens:n=4"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "c=16"
    assert main(["export", "powerset:A=30", "--limit", "10"]) == 1


def test_exit_codes(tmp_path, capsys):
    """Usage errors, format errors and verification failures"""
    assert main(["build", "powerset:A=0"]) == 2
    assert main(["build", "nonsense"]) == 2
    with pytest.raises(SystemExit) as e:
        main(["build"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2

    junk = tmp_path / "junk.tz"
    junk.write_bytes(b"NOPE" + bytes(100))
    assert main(["stats", str(junk)]) == 4
    assert main(["bench", str(junk)]) == 4
    assert main(["stats", str(tmp_path / "missing.tz")]) == 1

    # container of one family claiming to be another
    path = tmp_path / "p.tz"
    assert main(["build", "powerset:A=8", str(path)]) == 0
    tz = TopZdd.load(path)
    tz.family = "powerset:A=9"
    tz.save(path)
    assert main(["verify", str(path)]) == 3


def test_suite(capsys):
    """suite over a few families"""
    assert main(["suite", "powerset:A=8", "nqueens:n=5", "--probes", "20", "--json"]) == 0
    records = _records(capsys.readouterr().out)
    assert [r["family"] for r in records] == ["powerset:A=8", "nqueens:n=5"]
    assert all(r["verified"] for r in records)
