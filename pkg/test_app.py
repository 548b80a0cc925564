"""
Tests for the command-line interface
"""
import json

import pytest

from app import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, main


@pytest.fixture
def p3_files(tmp_path):
    graph = tmp_path / "p3.txt"
    graph.write_text("# path on three vertices\n3 0\n0 1\n1 2\n")
    return graph, tmp_path


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_eta_of_a_family(capsys):
    code, data = _run(capsys, ["eta", "--family", "complete", "--n", "4", "--budget", "6"])
    assert code == EXIT_OK
    assert data["eta"] == {"kind": "finite", "value": 4}
    assert data["pi"] == 4


def test_solve_from_files(capsys, p3_files):
    graph, tmp = p3_files
    config = tmp / "c.txt"
    config.write_text("0 0 3\n")
    code, data = _run(capsys, ["solve", str(graph), str(config)])
    assert code == EXIT_OK
    assert data["winner"] == "defender"
    assert data["winning_moves"] == []


def test_solve_writes_a_transcript(capsys, p3_files):
    graph, tmp = p3_files
    transcript = tmp / "t.jsonl"
    code, data = _run(capsys, ["solve", str(graph), "--counts", "0 0 4", "--transcript", str(transcript)])
    assert code == EXIT_OK
    assert data["winner"] == "mover"
    assert data["winning_moves"] == [{"from": 2, "to": 1}]
    assert transcript.read_text().strip()


def test_output_file(p3_files):
    graph, tmp = p3_files
    target = tmp / "out" / "pi.json"
    assert main(["pi", str(graph), "--output", str(target)]) == EXIT_OK
    assert json.loads(target.read_text())["pi"] == 4


def test_malformed_graph_is_a_usage_error(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n0 1\n")
    assert main(["solve", str(bad), "--counts", "0 0 3"]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_wrong_configuration_length(capsys, p3_files):
    graph, _ = p3_files
    assert main(["solve", str(graph), "--counts", "0 3"]) == EXIT_USAGE


def test_budget_exceeded_exit_code(tmp_path, capsys):
    tree = tmp_path / "tree.txt"
    tree.write_text("8 0\n0 1\n1 2\n1 3\n2 4\n2 5\n3 6\n3 7\n")
    code, data = _run(capsys, ["eta", str(tree), "--max-cut", "0", "--budget", "3"])
    assert code == EXIT_BUDGET
    assert data["eta"] == {"kind": "exceeds_budget", "value": 3}


def test_certify(capsys, tmp_path):
    tree = tmp_path / "tree.txt"
    tree.write_text("8 0\n0 1\n1 2\n1 3\n2 4\n2 5\n3 6\n3 7\n")
    code, data = _run(capsys, ["certify-infinite", str(tree)])
    assert code == EXIT_OK
    assert data["certificates"]["0"]["cut_set"] == [1]


def test_classify(capsys):
    code, data = _run(capsys, ["classify", "--s", "2", "--t", "2", "--h-edges", "0-1", "--counts", "0 7 2 0 0"])
    assert code == EXIT_OK
    assert data["winner"] == "defender"
    assert data["rule"] == "C(x)=2-defender"


def test_esg(capsys, tmp_path):
    instance = tmp_path / "esg.txt"
    instance.write_text("4 2 1\na b c d\na b\nc d\n")
    code, data = _run(capsys, ["esg", str(instance)])
    assert (code, data["winner"]) == (EXIT_OK, "dan")
    code, data = _run(capsys, ["esg", str(instance), "--rounds", "2"])
    assert data["winner"] == "mary"
    assert data["instance"]["rounds"] == 2


def test_verify_writes_json_and_csv(tmp_path, capsys):
    report = tmp_path / "report.json"
    table = tmp_path / "sweep.csv"
    code = main([
        "verify", "oracle-sweep", "--s-max", "1", "--t-max", "2", "--max-pebbles", "5",
        "--workers", "1", "--fallback", "brute-force", "--json", str(report), "--csv", str(table)
    ])
    assert code == EXIT_OK
    assert capsys.readouterr().out == ""
    data = json.loads(report.read_text())
    assert data["status"] == "passed"
    assert "wall_time" not in data
    assert table.read_text().startswith("s,t,h,config,rule,oracle,brute,agree")


def test_unknown_suite():
    with pytest.raises(SystemExit):
        main(["verify", "no-such-suite"])
