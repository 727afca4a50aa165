import argparse
import io
import subprocess
import sys

import pytest

from pqramsey import cli
from pqramsey.formulas import LinearForest, STAR_ROUTES, t_closed
from pqramsey.graph import SmallGraph, graph6_decode


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out)
    return code, out.getvalue()


@pytest.mark.parametrize("argv,expected", [
    (["compute", "star", "-n", "5", "-m", "4"], "7 (path-star formula)\n"),
    (["compute", "quasar", "-n", "4", "--forest", "5"], "BOUNDS [7,8] (quasar bounds); conjectured 7\n"),
    (["compute", "quasar", "-n", "5", "--forest", "3"], "9 (quasar, small forest)\n"),
    (["compute", "fan", "-n", "5", "-k", "2"], "9 (quasar, small forest)\n"),
    (["compute", "wheel", "-n", "5", "-m", "5"], "13 (path-wheel formula)\n"),
    (["compute", "cycle", "-n", "6", "-m", "3"], "11 (path-cycle formula)\n"),
    (["compute", "star", "-n", "3", "-m", "4", "--check"], "5 (path-star formula)\n"),
])
def test_compute(argv, expected):
    assert run(*argv) == (0, expected)


def test_witness_star():
    code, text = run("witness", "-n", "3", "--star", "4", "--emit", "graph6")
    assert code == 0
    header, g6 = text.splitlines()
    assert header == "# star witness: 2K_2, order 4, claimed bound 5, valid"
    assert graph6_decode(g6.encode()).edge_count() == 2


def test_witness_trivial_star():
    code, text = run("witness", "-n", "3", "--star", "2")
    assert code == 0 and "K_2, order 2, claimed bound 3, valid" in text


def test_witness_quasar_dot():
    code, text = run("witness", "-n", "4", "--forest", "5", "--emit", "dot")
    assert code == 0
    headers = [line for line in text.splitlines() if line.startswith("#")]
    assert [h.split("claimed bound ")[1] for h in headers] == ["7, valid", "7, valid", "6, valid"]
    assert text.count("graph ") == 3


def test_invalid_witness_exits_3(monkeypatch):
    from pqramsey.witnesses import verify_witness
    from pqramsey.detectors import Star
    monkeypatch.setattr(cli, "star_report", lambda n, m: verify_witness(SmallGraph.complete(3), n, Star(m)))
    code, text = run("witness", "-n", "3", "--star", "2")
    assert code == 3 and "INVALID" in text


@pytest.mark.parametrize("argv,value", [
    (["oracle", "-n", "3", "--star", "3", "--cap", "9"], 5),
    (["oracle", "-n", "3", "--forest", "4", "--cap", "9"], 5),
    (["oracle", "-n", "2", "--star", "2", "--cap", "9"], 3),
])
def test_oracle(argv, value):
    code, text = run(*argv, "--stable-output")
    assert code == 0
    assert text.startswith(f"R = {value}, counterexample ")


def test_oracle_matching_counterexample():
    code, text = run("oracle", "-n", "3", "--star", "3", "--stable-output")
    assert text == "R = 5, counterexample C` (graph6, 2K_2), examined 17 graphs\n"


def test_stable_output_is_byte_identical():
    argv = ["oracle", "-n", "4", "--forest", "3,2", "--stable-output"]
    assert run(*argv) == run(*argv)
    timed = run("oracle", "-n", "4", "--forest", "3,2")[1]
    assert timed.rstrip().endswith("s")


def test_capacity_exit(capsys):
    code, text = run("oracle", "-n", "4", "--star", "7", "--cap", "8")
    assert code == 2 and text == ""
    assert "capacity exceeded" in capsys.readouterr().err


def test_usage_errors(capsys):
    assert run("compute", "star", "-n", "1", "-m", "3")[0] == 1
    assert run("compute", "quasar", "-n", "4")[0] == 1
    for argv in (["compute", "blob", "-n", "3"], ["witness", "-n", "3"], ["compute", "quasar", "-n", "3", "--forest", "1,1"]):
        with pytest.raises(SystemExit) as info:
            cli.main(argv, io.StringIO())
        assert info.value.code == 1


def test_selfcheck():
    code, text = run("selfcheck", "--n-max", "12", "--m-max", "40")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "all 3 characterizations agree on 429 cells"
    assert lines[2] == "n=2 row equals m+1: yes"


def test_selfcheck_reports_perturbation():
    routes = dict(STAR_ROUTES)
    routes["recursion"] = lambda n, m: t_closed(n, m) + (n == 6 and m == 11)
    out = io.StringIO()
    args = argparse.Namespace(n_max=12, m_max=40)
    assert cli.cmd_selfcheck(args, out, routes) == 3
    assert out.getvalue().startswith("MISMATCH at ") and "n=6" in out.getvalue() and "m=11" in out.getvalue()


def test_table_stars_csv():
    code, text = run("table", "--scope", "stars", "--n-max", "4", "--m-max", "5", "--format", "csv")
    assert code == 0
    rows = [line.split(",") for line in text.splitlines()]
    assert rows[0] == ["n", "m=2", "m=3", "m=4", "m=5"]
    for row in rows[1:]:
        n = int(row[0])
        assert [int(c[:-1]) for c in row[1:]] == [t_closed(n, m) for m in range(2, 6)]


def test_table_oracle_uses_log(tmp_path):
    log = tmp_path / "log.jsonl"
    first = run("table", "--scope", "oracle", "--n-max", "3", "--cap", "6", "--log", str(log))
    second = run("table", "--scope", "oracle", "--n-max", "3", "--cap", "6", "--log", str(log))
    assert first[0] == 0 and first == second
    assert "DISAGREE" not in first[1]
    assert log.read_text().count("\n") > 0


@pytest.mark.parametrize("text", ["3,2,2", "2,3,2", "4x2", "5"])
def test_forest_text_round_trip(text):
    f = LinearForest.parse(text)
    assert LinearForest.parse(str(f)) == f
    assert list(f.orders) == sorted(f.orders, reverse=True)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pqramsey", "compute", "star", "-n", "5", "-m", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "7 (path-star formula)\n"
