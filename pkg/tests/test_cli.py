import json
import subprocess
import sys

import pytest

from kedgecon import format_mgraph, parse_mgraph
from kedgecon.cli import main
from kedgecon.multigraph import complete_bipartite, cycle

K23 = format_mgraph(complete_bipartite(2, 3))
THETA = "mg 4\ne 0 1 1\ne 0 2 1\ne 1 2 1\ne 0 3 1\ne 1 3 1\n"


def run(capsys, monkeypatch, argv, stdin=""):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_witness_k23(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["witness", "-k", "2"], K23)
    doc = json.loads(out)
    assert code == 0 and doc["format"] == 1
    assert len(doc["constructive"]["witnesses"]) >= 2
    assert set(doc["constructive"]["witnesses"]) <= {2, 3, 4}
    assert doc["scan"]["witnesses"] == [2, 3, 4]


def test_minimize_theta(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["minimize", "-k", "2"], THETA)
    doc = json.loads(out)
    assert code == 0 and doc["removed"] == [0]
    g = parse_mgraph(doc["mgraph"])
    assert g.m == 4 and g.degrees() == [2, 2, 2, 2]


def test_analyze_disconnected_exit_2(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch, ["analyze", "-k", "2"], "mg 3\ne 0 1 1\n")
    assert code == 2 and "NotKConnected" in err and out == ""


def test_parse_error_exit_2(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["analyze", "-k", "1"], "mg 2\ne 0 0 1\n")
    assert code == 2 and "ParseError" in err and "line 2" in err


def test_missing_file_exit_2(capsys, monkeypatch, tmp_path):
    code, _, err = run(capsys, monkeypatch, ["analyze", "-k", "1", str(tmp_path / "nope.mg")])
    assert code == 2 and "BadUsage" in err


def test_usage_errors_exit_2(capsys, monkeypatch):
    for argv in (["witness"], ["analyze", "-k", "0"], ["verify", "--k-set", ""], ["bogus"]):
        with pytest.raises(SystemExit) as info:
            run(capsys, monkeypatch, argv)
        assert info.value.code == 2
    code, _, _ = run(capsys, monkeypatch, ["gen"])
    assert code == 2


def test_analyze_text(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["analyze", "-k", "2", "--format", "text"], format_mgraph(cycle(4)))
    assert code == 0 and "lambda=2" in out and "edge-minimal: True" in out


def test_quotient_and_decompose(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["quotient", "-k", "2"], K23)
    doc = json.loads(out)
    assert code == 0 and doc["quotient"]["degrees"] == [6, 2, 2, 2]
    assert all(c["failures"] == 0 for c in doc["checks"]["claims"])
    code, out, _ = run(capsys, monkeypatch, ["decompose", "-k", "2"], format_mgraph(cycle(4)))
    doc = json.loads(out)
    assert code == 0 and doc["leaves"] == 2 and doc["tree"]["kind"] == "split"


def test_decompose_not_exact_exit_2(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["decompose", "-k", "2"], K23)
    assert code == 2 and "NotExactlyK" in err


def test_gen_round_trip(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["gen", "-n", "6", "-k", "3", "--seed", "9"])
    assert code == 0
    assert format_mgraph(parse_mgraph(out)) == out


def test_gen_enumerate_stream(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["gen", "--enumerate", "--n-max", "3", "--mult-max", "1"])
    assert code == 0 and out.count("mg ") == 5


def test_verify_small(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch, ["verify", "--n-max", "4", "--m-max", "5", "--mult-max", "2", "--k-set", "1,2"]
    )
    doc = json.loads(out)
    assert code == 0 and doc["counterexamples"] == [] and doc["graphs_examined"] > 0


def test_verify_counterexample_exit_1(capsys, monkeypatch):
    from kedgecon import harness
    from kedgecon.decomposition import WitnessPair

    monkeypatch.setattr(harness, "scan_witnesses", lambda g, k: WitnessPair((), "scan"))
    code, out, _ = run(capsys, monkeypatch, ["verify", "--n-max", "3", "--k-set", "1", "--theorem-only"])
    assert code == 1 and json.loads(out)["counterexamples"]


def test_shell_pipeline():
    """gen | minimize | witness through real processes and stdin."""
    py = [sys.executable, "-m", "kedgecon"]
    gen = subprocess.run(py + ["gen", "-n", "7", "-k", "2", "--seed", "3"], capture_output=True, text=True, check=True)
    mini = subprocess.run(py + ["minimize", "-k", "2"], input=gen.stdout, capture_output=True, text=True, check=True)
    wit = subprocess.run(py + ["witness", "-k", "2"], input=mini.stdout, capture_output=True, text=True)
    assert wit.returncode == 0
    doc = json.loads(wit.stdout)
    assert len(doc["constructive"]["witnesses"]) >= 2
