import json
import subprocess
import sys

import pytest

from chromhom import cli
from chromhom.star import ConjectureReport
from chromhom.partitions import Partition


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "chromhom", *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def call(capsys, *args):
    code = cli.main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "args, want",
    [
        (("tableaux", "f", "3,2"), "5\n"),
        (("tableaux", "kostka", "4,3,1", "3,3,2"), "2\n"),
        (("tableaux", "f", "1,1,1,1"), "1\n"),
        (("tableaux", "f", "3 2^2"), "21\n"),
        (("tableaux", "hooks", "3,2"), "4 3 1\n2 1\n"),
        (("tableaux", "char", "2,1", "3"), "-1\n"),
        (("tableaux", "class-size", "2,2"), "3\n"),
        (("tableaux", "partitions", "3"), "3\n2,1\n1,1,1\n"),
    ],
)
def test_tableaux(capsys, args, want):
    code, out, _ = call(capsys, *args)
    assert code == 0 and out == want


def test_tableaux_list(capsys):
    code, out, _ = call(capsys, "tableaux", "ssyt", "4,3,1", "3,3,2", "--list")
    assert code == 0 and out.splitlines() == ["1 1 1 2/2 2 3/3", "1 1 1 3/2 2 2/3"]


def test_parse_error_reports_position(capsys):
    code, _, err = call(capsys, "tableaux", "f", "3,x")
    assert code == 1 and "column 3" in err


def test_csf_star3(capsys):
    code, out, _ = call(capsys, "csf", "--star", "3", "--basis", "monomial")
    assert code == 0 and out == "m_{2,1}: 1\nm_{1,1,1}: 6\n"
    code, out, _ = call(capsys, "csf", "--star", "3", "--basis", "schur")
    assert out == "s_{2,1}: 1\ns_{1,1,1}: 4\n"


def test_csf_edge_file(capsys, tmp_path):
    path = tmp_path / "edge.txt"
    path.write_text("n 2\n1 2\n")
    code, out, _ = call(capsys, "csf", "--graph", str(path))
    assert code == 0 and out == "m_{1,1}: 2\n"


@pytest.mark.parametrize(
    "n, i, lines",
    [(4, 1, ['"2,2": 1']), (5, 1, ['"3,2": 1', '"2,2,1": 3']), (4, 0, ['"1,1,1,1": 1']), (4, 2, ["0"])],
)
def test_homology(capsys, n, i, lines):
    code, out, _ = call(capsys, "homology", "--star", str(n), "-i", str(i))
    body = [line for line in out.splitlines() if not line.startswith("#")]
    assert code == 0 and body == lines


def test_homology_json_schema(capsys):
    code, out, _ = call(capsys, "homology", "--star", "5", "--rank-mode", "modular", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"command", "input", "metadata", "result"}
    assert doc["result"] == [
        {"partition": "3,2", "multiplicity": "1"},
        {"partition": "2,2,1", "multiplicity": "3"},
    ]
    assert len(doc["metadata"]["backend"]["primes"]) == 2
    assert doc["metadata"]["chain_dimensions"] == ["120", "240", "120", "20", "1"]


def test_homology_csv(capsys):
    code, out, _ = call(capsys, "homology", "--star", "4", "--format", "csv")
    assert out == "partition,multiplicity\n2,2,1\n" or out == 'partition,multiplicity\n"2,2",1\n'


def test_json_is_byte_identical():
    args = ("homology", "--star", "4", "--rank-mode", "modular", "--seed", "9", "--format", "json")
    a, b = run(*args), run(*args)
    assert a[0] == 0 and a[1] == b[1]
    v1, v2 = run("verify", "table1", "--format", "json"), run("verify", "table1", "--format", "json")
    assert v1[1] == v2[1]


def test_seed_changes_primes(capsys):
    _, a, _ = call(capsys, "homology", "--star", "4", "--rank-mode", "modular", "--seed", "1", "--format", "json")
    _, b, _ = call(capsys, "homology", "--star", "4", "--rank-mode", "modular", "--seed", "2", "--format", "json")
    pa = json.loads(a)["metadata"]["backend"]["primes"]
    pb = json.loads(b)["metadata"]["backend"]["primes"]
    assert pa != pb


def test_graph_file_homology(capsys, tmp_path):
    path = tmp_path / "star4.txt"
    path.write_text("n 4\n# relabelled star centred at 3\n1 3\n2 3\n3 4\n")
    code, out, _ = call(capsys, "homology", "--graph", str(path))
    assert code == 0 and out.splitlines()[0] == '"2,2": 1'


@pytest.mark.parametrize(
    "args",
    [
        ("homology", "--star", "8"),
        ("homology", "--star", "7"),
        ("homology", "--star", "7", "--allow-large", "--rank-mode", "exact"),
        ("homology", "--star", "4", "--graph", "x"),
        ("homology",),
        ("homology", "--star", "4", "-i", "9"),
        ("homology", "--graph", "/nonexistent/graph.txt"),
        ("csf", "--star", "9"),
        ("predict", "--star", "3"),
        ("tableaux", "f"),
        ("bogus",),
    ],
)
def test_usage_errors_exit_1(capsys, args):
    code = None
    try:
        code = cli.main(list(args))
    except SystemExit as exc:
        code = exc.code
    assert code == 1


def test_predict(capsys):
    code, out, _ = call(capsys, "predict", "--star", "7", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["metadata"]["assumes_conjecture"] is True
    assert {"partition": "2,2,2,1", "multiplicity": "16"} in doc["result"]


def test_verify_table1(capsys):
    code, out, _ = call(capsys, "verify", "table1")
    assert code == 0 and "FAIL" not in out


def test_verify_conjecture_json(capsys):
    code, out, _ = call(capsys, "verify", "conjecture", "--max-n", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["result"]["violations"] == []
    assert [c["indices_checked"] for c in doc["result"]["conjecture"]][-1] == ["0", "1", "2", "3"]


def test_conjecture_violation_exit_3(capsys, monkeypatch):
    def fake(max_n, backend, report, **kw):
        report.conjecture.append(ConjectureReport(4, {}, [(2, Partition((2, 2)), 1)]))
        return report

    monkeypatch.setattr(cli, "verify_conjecture", fake)
    code, out, _ = call(capsys, "verify", "conjecture", "--format", "json")
    doc = json.loads(out)
    assert code == 3
    assert doc["result"]["violations"] == [{"n": "4", "i": "2", "partition": "2,2", "multiplicity": "1"}]


def test_internal_error_exit_2(capsys, monkeypatch):
    def broken(*a, **kw):
        raise ArithmeticError("boom")

    monkeypatch.setattr(cli, "predict_h10_star", broken)
    code, _, err = call(capsys, "predict", "--star", "5")
    assert code == 2 and "boom" in err
