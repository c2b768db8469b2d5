import json
import subprocess
import sys
from pathlib import Path

import pytest

from pierimonoid.cli import main

GOLDEN = Path(__file__).parent / "golden"

SCHUBERT = ["schubert", "--u", "1,4,2,6,3,5", "--w", "3,5,6,1,2,4", "--r", "3", "--basis", "s"]
AFFINE = ["affine", "--k", "5", "--u", "-6,8,3,-1,4,13", "--w", "8,-6,-2,9,13,-1", "--order", "zero-bruhat",
          "--basis", "s"]
WEAK = ["affine", "--k", "2", "--u", "0,2,4", "--w", "-3,4,5", "--order", "weak", "--basis", "s"]
CORE = ["affine", "--k", "4", "--u", "2,3,6,0,4", "--core"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, golden", [
    (SCHUBERT + ["--emit-chains"], "schubert_chains.json"),
    (AFFINE, "affine_zero_bruhat.json"),
    (WEAK, "affine_weak.json"),
    (CORE, "core.json"),
])
def test_golden_json(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


@pytest.mark.parametrize("argv, golden", [
    (SCHUBERT, "schubert.txt"),
    (AFFINE, "affine_zero_bruhat.txt"),
    (WEAK, "affine_weak.txt"),
])
def test_golden_pretty(capsys, argv, golden):
    code, out, _ = run(capsys, *argv, "--pretty")
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_golden_contents():
    assert (GOLDEN / "affine_zero_bruhat.txt").read_text().strip() == \
        "9*s[4] + 30*s[3,1] + 21*s[2,2] + 30*s[2,1,1] + 9*s[1,1,1,1]"
    assert (GOLDEN / "affine_weak.txt").read_text().strip() == "s[2,1] - s[1,1,1]"
    assert (GOLDEN / "schubert.txt").read_text().strip() == "s[3,1] + s[2,2] + s[2,1,1]"
    data = json.loads((GOLDEN / "schubert_chains.json").read_text())
    assert len(data["chains"]) == 8


def test_young(capsys):
    assert run(capsys, "young", "--from", "", "--to", "2,1", "--basis", "s", "--pretty")[1] == "s[2,1]\n"
    assert run(capsys, "young", "--from", "2,1", "--to", "2,1", "--basis", "F", "--pretty")[1] == "1\n"
    assert run(capsys, "young", "--from", "1", "--to", "2,2", "--basis", "s", "--pretty")[1] == "s[2,1]\n"
    code, out, _ = run(capsys, "young", "--from", "", "--to", "2,1", "--emit-chains")
    data = json.loads(out)
    assert code == 0 and sorted(data["chains"]) == [[0, -1, 1], [0, 1, -1]]


def test_schubert_trivial_and_empty(capsys):
    assert run(capsys, "schubert", "--u", "1,2,3", "--w", "1,2,3", "--r", "1", "--pretty")[1] == "1\n"
    code, out, _ = run(capsys, "schubert", "--u", "1,2,3", "--w", "3,2,1", "--r", "1")
    assert code == 0 and json.loads(out)["expansion"]["terms"] == []


def test_kschur(capsys):
    code, out, _ = run(capsys, "kschur", "--k", "3", "--partition", "1,1,1", "--pretty")
    assert code == 0 and out == "h[3] - 2*h[2,1] + h[1,1,1]\n"


def test_bases(capsys):
    outs = {b: json.loads(run(capsys, *SCHUBERT[:-2], "--basis", b)[1])["expansion"]["basis"] for b in "FMms"}
    assert outs == {b: b for b in "FMms"}


@pytest.mark.parametrize("argv", [
    ["young", "--from", "1,2", "--to", "2,2"],
    ["young", "--from", "x", "--to", "2,2"],
    ["schubert", "--u", "1,1,2", "--w", "1,2,3", "--r", "1"],
    ["schubert", "--u", "1,2", "--w", "1,2,3", "--r", "1"],
    ["affine", "--k", "2", "--u", "0,2,5", "--w", "0,2,4"],
    ["affine", "--k", "2", "--u", "0,2,4"],
    ["verify", "--suite", "nonsense"],
    ["frobnicate"],
    ["schubert", "--u", "1,2"],
])
def test_parse_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_window_error_names_invariant(capsys):
    _, _, err = run(capsys, "affine", "--k", "2", "--u", "0,1,2", "--w", "0,2,4")
    assert "sum" in err
    _, _, err = run(capsys, "affine", "--k", "2", "--u", "0,3,3", "--w", "0,2,4")
    assert "mod" in err


@pytest.mark.parametrize("argv", [
    ["young", "--from", "2", "--to", "1,1"],
    ["affine", "--k", "2", "--u", "2,1,3", "--core"],
    ["kschur", "--k", "2", "--partition", "3"],
])
def test_domain_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 3 and err


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "involutions", "--samples", "200", "--seed", "1")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert {rep["relation"] for rep in data["reports"]} >= {"involution", "fixed"}


def test_deterministic(capsys):
    argv = ["verify", "--suite", "schubert-relations", "--samples", "50", "--seed", "42"]
    first = run(capsys, *argv)
    assert first == run(capsys, *argv)
    assert first[0] == 0


def test_report_files(capsys, tmp_path):
    code, _, _ = run(capsys, *SCHUBERT, "--report", str(tmp_path / "s"))
    assert code == 0
    for name in ("expansion.csv", "chains.csv", "hasse.png"):
        assert (tmp_path / "s" / name).stat().st_size > 0
    lines = (tmp_path / "s" / "expansion.csv").read_text().splitlines()
    assert lines[0] == "basis,index,coeff" and len(lines) == 4
    code, _, _ = run(capsys, *WEAK, "--report", str(tmp_path / "w"))
    assert code == 0 and (tmp_path / "w" / "hasse.png").exists()
    code, _, _ = run(capsys, "verify", "--suite", "involutions", "--samples", "50", "--report", str(tmp_path / "v"))
    assert code == 0
    assert (tmp_path / "v" / "report.csv").read_text().startswith("relation,samples,failures")
    assert (tmp_path / "v" / "verify.png").stat().st_size > 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pierimonoid", *CORE, "--pretty"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "4,1,1\n"
