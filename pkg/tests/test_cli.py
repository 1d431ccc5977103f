import json
import subprocess
import sys

import pytest

from implicit_graphs.cli import main

INTERVAL = "!(x2 < y1 | y2 < x1)"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def interval_file(tmp_path):
    p = tmp_path / "interval.fo"
    p.write_text(INTERVAL + "\n")
    return str(p)


def test_member_path_and_cycle(capsys, interval_file):
    code, out, _ = run(capsys, "member", "--formula-file", interval_file, "--c", "2", "--graph", "Ch")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 4 and payload["k"] == 2 and len(payload["labels"]) == 4
    code, out, _ = run(capsys, "member", "--formula-file", interval_file, "--c", "2", "--graph", "Cr")
    assert code == 1


def test_member_with_bit_decoder(capsys):
    code, out, _ = run(capsys, "member", "--decoder", "eq", "--c", "1", "--graph", "A_", "--json")
    assert code == 0 and json.loads(out)["labels"] == ["0", "0"]
    code, _, _ = run(capsys, "member", "--decoder", "eq", "--graph", "Bg")
    assert code == 1


def test_weak_orders_line_count(capsys):
    code, out, _ = run(capsys, "weak-orders", "4")
    assert code == 0 and len(out.splitlines()) == 75


def test_exit_codes(capsys):
    assert run(capsys, "lambda", "--graph", "Dhc", "--kmax", "1")[0] == 1
    assert run(capsys, "lambda", "--graph", "Dhc", "--budget", "5")[0] == 2
    assert run(capsys, "lambda", "--graph", "B")[0] == 3
    assert run(capsys, "frobnicate")[0] == 3
    assert run(capsys, "eval", "--formula", "x1 <", "--universe", "3", "--assignment", "1,2")[0] == 3
    assert run(capsys, "member", "--graph", "Bw")[0] == 3


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--formula", "x1 + x2 = x3", "--universe", "5", "--assignment", "3,4,1,1")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "eval", "--formula", "x1 < x2", "--universe", "5", "--assignment", "2,2")
    assert code == 1 and out.strip() == "false"


def test_lambda_and_interval_number(capsys):
    code, out, _ = run(capsys, "lambda", "--graph", "Bg", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["lambda"] == 1
    code, out, _ = run(capsys, "interval-number", "--graph", "Cr", "--json")
    assert code == 0 and json.loads(out)["interval_number"] == 2


def test_dag_commands(capsys):
    code, out, _ = run(capsys, "compile", "--formula", "x1 < x2 | x1 = x2")
    assert code == 0 and out.splitlines() == ["parts: {1}{2}; arcs: 1->2", "parts: {1,2}; arcs:"]
    code, out, _ = run(capsys, "dag2clause", "parts: {1,3}{2}{4}; arcs: 2->1")
    assert out.strip() == "x2 < x1 & x1 = x3"
    code, out, _ = run(capsys, "canon", "parts: {1}{2}{3}{4}; arcs: 1->2, 2->3")
    assert out.strip() == "parts: {1}{2}{3}{4}; arcs: 1->2, 1->3, 2->3"
    assert run(capsys, "canon", "parts: {1}{2}; arcs: 1->2, 2->1")[0] == 3


def test_formula_commands(capsys):
    assert run(capsys, "equiv", "!(x1 < x2)", "x2 < x1 | x1 = x2")[0] == 0
    assert run(capsys, "equiv", "x1 < x2", "x2 < x1")[0] == 1
    code, out, _ = run(capsys, "union", "x1 < x2", "x1 = x2", "--json")
    assert code == 0 and json.loads(out)["k"] == 2


def test_graph_commands(capsys):
    code, out, _ = run(capsys, "family", "1")
    assert out.strip() == "Cr"
    code, out, _ = run(capsys, "graphs", "enum", "3")
    assert out.split() == ["B?", "BG", "BW", "Bw"]
    code, out, _ = run(capsys, "g6", "Bw", "Cr", "--json")
    payload = json.loads(out)
    assert code == 0 and all(g["roundtrip"] for g in payload["graphs"])
    assert run(capsys, "g6", "Bw", "@")[0] == 3


def test_diag_build_is_byte_stable(capsys):
    code, first, _ = run(capsys, "diag", "build", "--registry", "all,eq,lt", "--nmax", "8", "--json")
    assert code == 0
    _, second, _ = run(capsys, "diag", "build", "--registry", "all,eq,lt", "--nmax", "8", "--json")
    assert first == second
    payload = json.loads(first)
    assert [e["graph6"] for e in payload["class"]["entries"]] == ["A?", "C?", "G?????"]
    assert payload["verification"]["ok"]


def test_selfcheck_is_seeded(capsys):
    a = run(capsys, "selfcheck", "--seed", "4", "--trials", "20", "--json")
    b = run(capsys, "selfcheck", "--seed", "4", "--trials", "20", "--json")
    assert a == b and a[0] == 0


def test_console_script_entry_point():
    res = subprocess.run([sys.executable, "-m", "implicit_graphs.cli", "weak-orders", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and len(res.stdout.splitlines()) == 3
