import json
import subprocess
import sys

import pytest

from nccgraph.cli import main


def write(tmp_path, doc, name="inst.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_propagate_trivial_failure(tmp_path, capsys):
    path = write(tmp_path, {"n": 1, "vertices": {"mandatory": [0]}, "constraints": [{"type": "min_ncc", "p": {"lb": 2, "ub": 2}}]})
    code, out, _ = run(capsys, "propagate", path)
    assert code == 1
    report = json.loads(out)
    assert report["result"] == "FAIL" and report["failed_step"] == "1"


def test_propagate_prints_narrowed_instance(tmp_path, capsys):
    doc = {
        "n": 3,
        "vertices": {"mandatory": [0, 1]},
        "arcs": [{"from": 0, "to": 1, "state": "T"}],
        "constraints": [{"type": "min_ncc", "p": {"lb": 2, "ub": 3}}],
    }
    code, out, _ = run(capsys, "propagate", write(tmp_path, doc))
    report = json.loads(out)
    assert code == 0 and report["result"] == "STABLE"
    assert report["vertices"] == {"mandatory": [0, 1], "excluded": [2]}
    assert report["constraints"] == [{"type": "min_ncc", "p": {"lb": 2, "ub": 2}}]


def test_solve_all(tmp_path, capsys):
    doc = {"n": 2, "arcs": [{"from": 0, "to": 1, "state": "U"}], "constraints": [{"type": "max_ncc", "p": {"lb": 2, "ub": 2}}]}
    code, out, _ = run(capsys, "solve", write(tmp_path, doc), "--all")
    report = json.loads(out)
    assert code == 0 and report["result"] == "SAT" and report["count"] == 1
    assert report["solutions"] == [
        {"vertices": [0, 1], "arcs": [{"from": 0, "to": 1}], "p": [{"type": "max_ncc", "value": 2}]}
    ]


def test_solve_limit_and_unsat(tmp_path, capsys):
    path = write(tmp_path, {"n": 3})
    code, out, _ = run(capsys, "solve", path, "--limit", "3")
    assert code == 0 and json.loads(out)["count"] == 3
    path = write(tmp_path, {"n": 2, "constraints": [{"type": "max_ncc", "p": {"lb": 2, "ub": 2}}]})
    code, out, _ = run(capsys, "solve", path)
    assert code == 1 and json.loads(out)["result"] == "UNSAT"


def test_gen_is_reproducible(capsys):
    _, first, _ = run(capsys, "gen", "--n", "6", "--seed", "7")
    _, second, _ = run(capsys, "gen", "--n", "6", "--seed", "7")
    _, other, _ = run(capsys, "gen", "--n", "6", "--seed", "8")
    assert first == second and first != other
    assert json.loads(first)["n"] == 6


def test_gen_then_check(tmp_path, capsys):
    _, text, _ = run(capsys, "gen", "--n", "5", "--density", "0.4", "--seed", "3", "--min-ncc", "1,2", "--max-ncc", "2,4")
    path = tmp_path / "g.json"
    path.write_text(text)
    code, out, _ = run(capsys, "check", str(path))
    report = json.loads(out)
    assert code == 0 and report["result"] == "PASS"
    names = [c["name"] for c in report["checks"]]
    assert "engine.solver_equivalence" in names and "constraints[1].max_ncc.soundness" in names


def test_check_cap(tmp_path, capsys):
    path = write(tmp_path, {"n": 6})
    code, _, err = run(capsys, "check", path, "--cap", "4")
    assert code == 2 and "cap" in err


@pytest.mark.parametrize(
    "argv",
    [[], ["frobnicate"], ["solve"], ["solve", "x.json", "--all", "--limit", "2"], ["gen", "--n", "3", "--density", "2"]],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_parse_errors(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"n": ')
    code, _, err = run(capsys, "propagate", str(path))
    assert code == 2 and "syntax error" in err
    code, _, err = run(capsys, "solve", write(tmp_path, {"n": 1, "arcs": [{"from": 0, "to": 4}]}))
    assert code == 2 and "arcs[0]" in err
    code, _, err = run(capsys, "solve", str(tmp_path / "missing.json"))
    assert code == 2


def test_module_entry_point(tmp_path):
    path = write(tmp_path, {"n": 1, "constraints": [{"type": "min_ncc", "p": {"lb": 1, "ub": 1}}]})
    proc = subprocess.run([sys.executable, "-m", "nccgraph", "solve", path], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["count"] == 1
