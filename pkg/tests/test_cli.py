import json
import pathlib
import subprocess
import sys

import pytest

from softdito.cli import main

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
P1 = str(FIXTURES / "p1.sdt")
P3 = str(FIXTURES / "p3.sdt")
P4 = str(FIXTURES / "p4.sdt")


def run_cli(args, tmp_path):
    json_path = tmp_path / "record.json"
    code = main(args + ["--json", str(json_path)])
    record = json.loads(json_path.read_text()) if json_path.exists() else None
    return code, record


class TestCheck:
    def test_valid_fixture(self, tmp_path):
        code, record = run_cli(["check", "--spec", P1], tmp_path)
        assert code == 0
        assert record["verdict"]["tau"] == {"kind": "topology", "ok": True}
        assert record["witness"] is None

    def test_invalid_family(self, tmp_path):
        bad = tmp_path / "bad.sdt"
        bad.write_text(
            "context C { universe = {a, b}  params = {e1, e2} }\n"
            "softset K in C over {e1} { e1: {a} }\n"
            "softset L in C over {e1} { e1: {b} }\n"
            "cotopology k in C = { K, L }\n"
        )
        code, record = run_cli(["check", "--spec", str(bad)], tmp_path)
        assert code == 1
        assert record["verdict"]["k"]["ok"] is False
        assert record["witness"]["k"]


class TestInteriorClosure:
    def test_interior(self, tmp_path):
        code, record = run_cli(
            ["interior", "--spec", P1, "--set", "G", "--space", "tau"], tmp_path
        )
        assert code == 0
        assert record["verdict"] == {"domain": ["e1"], "values": {"e1": ["x"]}}

    def test_closure(self, tmp_path):
        code, record = run_cli(
            ["closure", "--spec", P4, "--set", "K", "--space", "k1"], tmp_path
        )
        assert code == 0
        assert record["verdict"]["values"] == {"e1": ["c"], "e2": ["c"]}

    def test_wrong_space_kind(self, tmp_path):
        code, _ = run_cli(
            ["interior", "--spec", P4, "--set", "K", "--space", "k1"], tmp_path
        )
        assert code == 2


class TestAxioms:
    def test_p1_report(self, tmp_path):
        code, record = run_cli(["axioms", "--spec", P1, "--space", "tau"], tmp_path)
        assert code == 1  # T1 and friends fail
        verdict = record["verdict"]
        assert verdict["T0"] is True
        assert verdict["T1"] is False
        witness = record["witness"]["T1"]
        assert (witness["x"], witness["y"]) == ("x", "z")
        assert witness["domain"] == ["e1", "e2"]

    def test_p3_report(self, tmp_path):
        code, record = run_cli(["axioms", "--spec", P3, "--space", "tau"], tmp_path)
        assert record["verdict"]["regular"] is True
        assert record["verdict"]["T1"] is False

    def test_kappa_space(self, tmp_path):
        code, record = run_cli(["axioms", "--spec", P4, "--space", "k1"], tmp_path)
        assert record["verdict"]["T0"] is True
        assert record["verdict"]["T1"] is False


class TestContinuity:
    def test_p4(self, tmp_path):
        code, record = run_cli(
            ["continuity", "--spec", P4, "--map", "f", "--space", "k1", "--space", "k2"],
            tmp_path,
        )
        assert code == 0
        assert record["verdict"] == {"kappa_continuous": True}

    def test_space_count_enforced(self, tmp_path):
        code, _ = run_cli(
            ["continuity", "--spec", P4, "--map", "f", "--space", "k1"], tmp_path
        )
        assert code == 2

    def test_context_mismatch(self, tmp_path):
        code, _ = run_cli(
            ["continuity", "--spec", P4, "--map", "f", "--space", "k2", "--space", "k1"],
            tmp_path,
        )
        assert code == 2


class TestEnumerate:
    def test_counts(self, tmp_path):
        code, record = run_cli(["enumerate", "--bounds", "2,1"], tmp_path)
        assert code == 0
        assert record["verdict"] == {
            "soft_sets": 5,
            "topologies": 4,
            "cotopologies": 4,
            "self_maps": 4,
        }

    def test_bad_bounds(self, tmp_path):
        assert run_cli(["enumerate", "--bounds", "4,4"], tmp_path)[0] == 2
        assert run_cli(["enumerate", "--bounds", "x"], tmp_path)[0] == 2


class TestVerifyTheorems:
    def test_runs_clean(self, tmp_path):
        code, record = run_cli(["verify-theorems", "--bounds", "2,1"], tmp_path)
        assert code == 0
        statuses = {r["theorem"]: r["status"] for r in record["verdict"]["reports"]}
        assert statuses["null-whole-absorption"] == "discrepancy-logged"
        assert all(v for v in record["verdict"]["counterexamples"].values())


class TestErrorsAndExitCodes:
    def test_missing_spec(self, tmp_path):
        assert run_cli(["check"], tmp_path)[0] == 2

    def test_unreadable_spec(self, tmp_path):
        assert run_cli(["check", "--spec", str(tmp_path / "nope.sdt")], tmp_path)[0] == 2

    def test_parse_errors(self, tmp_path, capsys):
        bad = tmp_path / "bad.sdt"
        bad.write_text("context C {\nsoftset F in C over {e1} { e1: {a} }\n")
        code, _ = run_cli(["check", "--spec", str(bad)], tmp_path)
        assert code == 2
        assert "error:" in capsys.readouterr().err

    def test_unknown_space(self, tmp_path):
        code, _ = run_cli(["axioms", "--spec", P1, "--space", "nope"], tmp_path)
        assert code == 2

    def test_unknown_set(self, tmp_path):
        code, _ = run_cli(
            ["interior", "--spec", P1, "--set", "nope", "--space", "tau"], tmp_path
        )
        assert code == 2


class TestDeterminism:
    @pytest.mark.parametrize(
        "args",
        [
            ["axioms", "--spec", P1, "--space", "tau"],
            ["verify-theorems", "--bounds", "2,1"],
        ],
    )
    def test_byte_identical_records(self, args, tmp_path):
        _, first = run_cli(args, tmp_path)
        path_a = tmp_path / "a.json"
        path_b = tmp_path / "b.json"
        main(args + ["--json", str(path_a)])
        main(args + ["--json", str(path_b)])
        assert path_a.read_bytes() == path_b.read_bytes()

    def test_console_script(self, tmp_path):
        result = subprocess.run(
            [sys.executable, "-m", "softdito.cli", "axioms", "--spec", P1, "--space", "tau"],
            capture_output=True,
            text=True,
        )
        assert result.returncode == 1
        assert "T1: false" in result.stdout
