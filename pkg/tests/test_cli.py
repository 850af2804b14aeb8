import json
import subprocess
import sys

import pytest

from skewbrace.cli import main

Z4 = [[(i + j) % 4 for j in range(4)] for i in range(4)]
# a brace on Z4 whose ∘ is the Klein four-group
KLEIN_ON_Z4 = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
# S3 with the cyclic table as ∘: not a brace
S3_TABLE = [[0, 1, 2, 3, 4, 5], [1, 0, 3, 2, 5, 4], [2, 4, 0, 5, 1, 3],
            [3, 5, 1, 4, 0, 2], [4, 2, 5, 0, 3, 1], [5, 3, 4, 1, 2, 0]]
Z6 = [[(i + j) % 6 for j in range(6)] for i in range(6)]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def report(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def brace_file(tmp_path, table, circ, name="b"):
    path = tmp_path / f"{name}.json"
    path.write_text(json.dumps({"name": name, "carrier": {"table": table}, "circ": circ}))
    return str(path)


def test_z2_case2_passes(capsys):
    code, data = report(capsys, "z2", "--p", "0", "--family", "case2", "--verify")
    assert code == 0 and data["passed"]
    assert data["report_version"] == 1 and data["command"] == "z2"


def test_invalid_phi_exits_one(capsys):
    code, data = report(capsys, "z2", "--matrix", "[[-1,0],[0,-1]]", "--verify")
    assert code == 1 and not data["passed"]


def test_missing_file_exits_two(capsys, tmp_path):
    code, _, err = run(capsys, "verify", str(tmp_path / "missing.json"))
    assert code == 2 and "missing.json" in err


def test_unknown_subcommand_exits_two(capsys):
    assert run(capsys, "bogus")[0] == 2


def test_verify_brace_file(capsys, tmp_path):
    path = brace_file(tmp_path, Z4, KLEIN_ON_Z4)
    code, data = report(capsys, "verify", path, "--mode", "axiom,lambda-hom,symmetric")
    assert code == 0 and data["passed"]


def test_verify_rejects_non_brace(capsys, tmp_path):
    path = brace_file(tmp_path, S3_TABLE, Z6)
    code, data = report(capsys, "verify", path)
    assert code == 1 and not data["passed"]


def test_ybe_file(capsys, tmp_path):
    path = brace_file(tmp_path, Z4, KLEIN_ON_Z4)
    code, data = report(capsys, "ybe", path, "--check", "braid,nondegen,involutive,identity")
    assert code == 0 and data["passed"]


def test_report_is_deterministic(capsys):
    argv = ("free", "--construction", "inversion", "--verify", "--seed", "7", "--samples", "50")
    _, first = report(capsys, *argv)
    _, second = report(capsys, *argv)
    first.pop("timing"), second.pop("timing")
    assert first == second and first["seed"] == 7


def test_out_file(capsys, tmp_path):
    out = tmp_path / "report.json"
    code, text, _ = run(capsys, "zn-cyclic", "--n", "3", "--verify-presentation", "--out", str(out))
    assert code == 0
    assert json.loads(out.read_text())["passed"]
    assert text.strip()


@pytest.mark.parametrize("argv", [
    ("enum-regular", "--group", "Z4"),
    ("construct", "--group", "Z2^2"),
    ("factor", "--family", "wreath", "--verify"),
    ("factor", "--family", "f2", "--verify"),
    ("series", "--vars", "2", "--degree", "3"),
    ("series", "--degree", "4", "--check", "free-witness", "--len", "4"),
    ("free", "--construction", "swap", "--verify"),
])
def test_subcommands_pass(capsys, argv):
    code, data = report(capsys, *argv)
    assert code == 0 and data["passed"], data


def test_limit_is_enforced(capsys):
    assert run(capsys, "enum-regular", "--group", "S4", "--limit", "8")[0] == 2


def test_acceptance_subcommand(capsys):
    code, data = report(capsys, "paper-suite")
    assert code == 0 and data["passed"]
    assert len(data["verdicts"]) == 10


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "skewbrace", "zn-cyclic", "--n", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
