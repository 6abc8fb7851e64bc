import io
import json
import math
import subprocess
import sys

import pytest

from treecoeffs.cli import main


def run(argv, stdin=None):
    return main(argv, io.StringIO(stdin) if stdin is not None else None)


def gen(capsys, *argv):
    assert run(["gen", *argv]) == 0
    return capsys.readouterr().out


def test_gen_examples(capsys):
    assert json.loads(gen(capsys, "greedy", "--n", "10", "--dplus1", "3"))["n"] == 10
    assert json.loads(gen(capsys, "dary", "--d", "2", "--h", "3"))["n"] == 7
    assert gen(capsys, "path", "--n", "1").strip() == '{"n":1,"edges":[]}'
    star = json.loads(gen(capsys, "star", "--n", "4"))
    assert star["edges"] == [[0, 1], [0, 2], [0, 3]]
    assert json.loads(gen(capsys, "broom", "--n", "7", "--dplus1", "3"))["n"] == 7


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "greedy", "--n", "2", "--dplus1", "3"],
        ["gen", "greedy", "--n", "10"],
        ["gen", "path", "--n", "0"],
        ["gen", "dary", "--d", "3", "--h", "15", "--max-vertices", "100"],
    ],
)
def test_gen_usage_errors(argv, capsys):
    assert run(argv) == 2
    assert "error" in capsys.readouterr().err


def test_enum(capsys):
    assert run(["enum", "--n", "7"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 11
    assert run(["enum", "--n", "5..6", "--dplus1", "3", "--exact", "--codes"]) == 0
    recs = [json.loads(s) for s in capsys.readouterr().out.splitlines()]
    assert [r["n"] for r in recs] == [5, 6, 6, 6]
    assert all("code" in r for r in recs)
    assert run(["enum", "--n", "9..3"]) == 2


def invariants(capsys, tree):
    assert run(["invariants"], json.dumps(tree)) == 0
    return json.loads(capsys.readouterr().out)


def test_invariants_p3(capsys):
    rec = invariants(capsys, {"n": 3, "edges": [[0, 1], [1, 2]]})
    assert rec["coefficients"] == ["1", "4", "3", "0"]
    assert rec["ie"] == pytest.approx(1 + math.sqrt(3), abs=1e-9)
    assert rec["phi_at_grid"]["1/1"] == "8/1"
    assert list(rec) == [
        "n", "coefficients", "matching_poly_of_subdivision", "phi_at_grid", "hosoya_of_subdivision",
        "spectrum", "lel", "ie", "subdivision_energy", "coulson_energy",
    ]


def test_invariants_star(capsys):
    rec = invariants(capsys, {"n": 4, "edges": [[0, 1], [0, 2], [0, 3]]})
    assert rec["hosoya_of_subdivision"] == "20"
    assert rec["ie"] == pytest.approx(4.0, abs=1e-9)
    assert rec["coulson_energy"] == pytest.approx(8.0, abs=1e-6)


def test_invariants_single_vertex(capsys):
    rec = invariants(capsys, {"n": 1, "edges": []})
    assert rec["coefficients"] == ["1", "0"]
    assert rec["lel"] == rec["ie"] == rec["subdivision_energy"] == rec["coulson_energy"] == 0


@pytest.mark.parametrize("text", ["not json", '{"n": 3, "edges": [[0, 1]]}', '{"n": 2}', "[]"])
def test_invariants_malformed(text, capsys):
    assert run(["invariants"], text) == 2
    assert capsys.readouterr().err


def test_invariants_bad_grid(capsys):
    assert run(["invariants", "--x-grid", "0.5"], '{"n": 1, "edges": []}') == 2
    assert run(["invariants", "--x-grid=-1/2"], '{"n": 1, "edges": []}') == 2


def test_invariants_cross_check_failure(monkeypatch, capsys):
    import treecoeffs.cli as cli
    from treecoeffs.laplacian import CoeffVector

    monkeypatch.setattr(cli, "coefficients_via_charpoly", lambda t: CoeffVector((0,) * (t.n + 1)))
    assert run(["invariants"], '{"n": 3, "edges": [[0, 1], [1, 2]]}') == 3
    assert "cross-check" in capsys.readouterr().err


def verify(capsys, *argv):
    code = run(["verify", *argv])
    return code, capsys.readouterr().out


def test_verify_thm37(capsys):
    code, out = verify(capsys, "thm37", "--n", "4..12", "--dplus1", "3")
    assert code == 0
    data = json.loads(out)
    assert data["verified"] and len(data["reports"]) == 9
    assert "elapsed" not in data["reports"][0]


def test_verify_conj46_and_lem31(capsys):
    code, out = verify(capsys, "conj46", "--n", "4..12", "--dplus1", "3")
    assert code == 0 and all("per_k_minima" in r["details"] for r in json.loads(out)["reports"])
    code, _ = verify(capsys, "lem31", "--d", "2", "--hmax", "8")
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["thm13", "--n", "5..8"],
        ["thm14", "--n", "5..8", "--dplus1", "4"],
        ["thm43-lem42", "--n", "5..8"],
        ["cor39", "--n", "5..8"],
        ["cor45", "--n", "2..7"],
        ["lem44", "--nmax", "15"],
        ["lem24", "--samples", "20", "--nmax", "8"],
        ["thm25-random", "--samples", "20", "--nmax", "10"],
    ],
)
def test_verify_statements_pass(argv, capsys):
    code, out = verify(capsys, *argv)
    assert code == 0
    assert json.loads(out)["verified"] is True


def test_verify_csv(capsys):
    code, out = verify(capsys, "cor39", "--n", "4..6", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "statement,n,dplus1,trees,violations,seconds"
    assert [ln.split(",")[:5] for ln in lines[1:]] == [
        ["cor39", "4", "3", "1", "0"],
        ["cor39", "5", "3", "1", "0"],
        ["cor39", "6", "3", "3", "0"],
    ]


def test_verify_empty_range_is_reported(capsys):
    code, out = verify(capsys, "thm37", "--n", "2..3", "--dplus1", "3")
    assert code == 0
    assert json.loads(out)["reports"][0]["trees_examined"] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["thm37", "--n", "x"],
        ["thm37", "--dplus1", "1"],
        ["thm37", "--x-grid", "1,0"],
        ["thm37", "--jobs", "0"],
        ["lem31", "--d", "3", "--hmax", "20", "--max-vertices", "1000"],
    ],
)
def test_verify_usage_errors(argv, capsys):
    code, _ = verify(capsys, *argv)
    assert code == 2


def test_verify_violation_exit_code(monkeypatch, capsys):
    import treecoeffs.cli as cli
    from treecoeffs.extremal import VerificationReport

    fake = VerificationReport("cor39", {"n": 5}, 1, [{"tree": {"n": 1, "edges": []}, "witness": {}}])
    monkeypatch.setitem(cli.CLASS_STATEMENTS, "cor39", lambda n, dp, a: fake)
    code, out = verify(capsys, "cor39", "--n", "5")
    assert code == 1
    assert json.loads(out)["reports"][0]["violations"][0]["tree"] == {"n": 1, "edges": []}


def test_verify_output_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        code, _ = verify(capsys, "thm25-random", "--samples", "25", "--nmax", "10", "--seed", "4", "--out", str(path))
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_timing_flag(capsys):
    _, out = verify(capsys, "cor39", "--n", "5", "--timing")
    assert "elapsed" in json.loads(out)["reports"][0]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "treecoeffs", "gen", "path", "--n", "3"], capture_output=True, text=True, check=True
    )
    assert json.loads(proc.stdout) == {"n": 3, "edges": [[0, 1], [1, 2]]}
