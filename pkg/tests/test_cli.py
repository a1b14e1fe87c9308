"""Command-line surface: emission formats, exit codes, determinism."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from redchern import oracle
from redchern.cli import main
from redchern.poly import MPoly
from redchern.universal import compute_phi

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def runner():
    return CliRunner()


class TestFormula:
    def test_latex_pinned(self, runner):
        result = runner.invoke(main, ["formula", "-n", "3", "-r", "2", "--format", "latex"])
        assert result.exit_code == 0
        assert result.output.strip() == r"c_2 - \frac{1}{3} c_1^2"

    def test_text_zero(self, runner):
        result = runner.invoke(main, ["formula", "-n", "2", "-r", "1"])
        assert result.exit_code == 0
        assert result.output.strip() == "0"

    def test_json_pinned(self, runner):
        result = runner.invoke(main, ["formula", "-n", "2", "-r", "2", "--format", "json"])
        assert result.exit_code == 0
        obj = json.loads(result.output)
        assert [t["coeff"] for t in obj["terms"]] == ["1", "-1/4"]
        assert MPoly.from_json_obj(obj) == MPoly.loads(result.output)

    def test_bad_range_exits_2(self, runner):
        assert runner.invoke(main, ["formula", "-n", "3", "-r", "5"]).exit_code == 2
        assert runner.invoke(main, ["formula", "-n", "1", "-r", "1"]).exit_code == 2
        assert runner.invoke(main, ["formula", "-n", "7", "-r", "1"]).exit_code == 2

    def test_allow_large_rank_acknowledgment(self, runner, monkeypatch):
        from redchern import chern

        monkeypatch.setattr(chern, "MAX_EXPANSION_RANK", chern.MAX_EXPANSION_RANK)
        result = runner.invoke(
            main, ["formula", "-n", "7", "-r", "2", "--allow-large-rank"]
        )
        assert result.exit_code == 0
        assert result.output.strip() == "c_2 - 3/7 c_1^2"

    def test_formats_agree(self, runner):
        js = runner.invoke(main, ["formula", "-n", "4", "-r", "3", "--format", "json"])
        fromjson = MPoly.loads(js.output)
        from redchern.chern import reduced_chern_formula

        assert fromjson == reduced_chern_formula(4, 3)


class TestUniversal:
    def test_rank_two_json(self, runner):
        result = runner.invoke(main, ["universal", "-n", "2", "--format", "json"])
        assert result.exit_code == 0
        obj = json.loads(result.output)
        assert obj["N"] == 3
        assert obj["lead"] == ["3", "4"]
        psi1 = MPoly.from_json_obj(obj["psi"][0])
        assert psi1 == compute_phi(2).psi[0]
        phi2 = MPoly.from_json_obj(obj["phi"][0])
        assert phi2 == compute_phi(2).phi[0]

    def test_rank_three_count(self, runner):
        result = runner.invoke(main, ["universal", "-n", "3", "--format", "json"])
        assert json.loads(result.output)["N"] == 10

    def test_rank_five_count(self, runner):
        result = runner.invoke(main, ["universal", "-n", "5", "--format", "json"])
        assert json.loads(result.output)["N"] == 126

    def test_text_output(self, runner):
        result = runner.invoke(main, ["universal", "-n", "2"])
        assert "N = 3" in result.output
        assert "psi_1 = 1/3 s_1" in result.output
        assert "phi_2 = 1/4 u_2" in result.output

    def test_range(self, runner):
        assert runner.invoke(main, ["universal", "-n", "9"]).exit_code == 2


class TestVerify:
    def test_all_rank_two_passes(self, runner):
        result = runner.invoke(main, ["verify", "--max-rank", "2"])
        assert result.exit_code == 0
        lines = [json.loads(line) for line in result.stdout.splitlines() if line]
        assert lines and all(entry["status"] == "pass" for entry in lines)

    def test_all_default_rank_passes(self, runner):
        result = runner.invoke(main, ["verify"])
        assert result.exit_code == 0

    def test_report_written_to_file(self, runner, tmp_path):
        out = tmp_path / "report.jsonl"
        result = runner.invoke(
            main,
            ["verify", "--suite", "c1-zero", "--max-rank", "3", "--out", str(out)],
        )
        assert result.exit_code == 0
        rows = [json.loads(line) for line in out.read_text().splitlines() if line]
        assert len(rows) == 2 + 3 and all(r["status"] == "pass" for r in rows)

    def test_formula_agreement_to_rank_six(self, runner):
        result = runner.invoke(
            main, ["verify", "--suite", "formula-agreement", "--max-rank", "6"]
        )
        assert result.exit_code == 0
        assert len(result.stdout.splitlines()) == 2 + 3 + 4 + 5 + 6

    def test_report_is_sorted_and_deterministic(self, runner):
        args = ["verify", "--suite", "toy-rings", "--max-rank", "2", "--seed", "3"]
        out1 = runner.invoke(main, args).stdout
        out2 = runner.invoke(main, args).stdout
        assert out1 == out2
        rows = [json.loads(line) for line in out1.splitlines() if line]
        keys = [(r["identity"], r["ring"], r["rank"], r["seed"]) for r in rows]
        assert keys == sorted(keys)

    def test_corrupted_build_exits_1(self, runner, monkeypatch):
        bad = oracle.mutate_phi(oracle.rank_theory(2), i=2)
        monkeypatch.setattr(oracle, "rank_theory", lambda n: bad)
        result = runner.invoke(
            main, ["verify", "--suite", "toy-rings", "--max-rank", "2"]
        )
        assert result.exit_code == 1
        rows = [json.loads(line) for line in result.stdout.splitlines() if line]
        assert any(r["status"] == "fail" for r in rows)
        assert any(
            r["witness"] is not None for r in rows if r["status"] == "fail"
        )

    def test_unknown_suite_exits_2(self, runner):
        assert runner.invoke(main, ["verify", "--suite", "bogus"]).exit_code == 2


class TestTable:
    def test_byte_identical_reruns(self, runner, tmp_path):
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        assert runner.invoke(main, ["table", "--max-rank", "4", "--out", str(out1)]).exit_code == 0
        assert runner.invoke(main, ["table", "--max-rank", "4", "--out", str(out2)]).exit_code == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_matches_golden_file(self, runner, tmp_path):
        out = tmp_path / "table.json"
        runner.invoke(main, ["table", "--max-rank", "4", "--out", str(out)])
        assert out.read_bytes() == (GOLDEN / "table_rank4.json").read_bytes()

    def test_minimal_table_contents(self, runner):
        result = runner.invoke(main, ["table", "--max-rank", "2"])
        obj = json.loads(result.output)
        assert obj["max_rank"] == 2
        assert obj["ranks"][0]["N"] == 3

    def test_rank_three_table_pins_degree_two_class(self, runner):
        result = runner.invoke(main, ["table", "--max-rank", "3"])
        obj = json.loads(result.output)
        entry = next(e for e in obj["ranks"] if e["n"] == 3)
        degree_two = MPoly.from_json_obj(entry["reduced"][1])
        from fractions import Fraction

        from redchern.poly import c_vars

        c1 = MPoly.variable(c_vars(3), "c1")
        c2 = MPoly.variable(c_vars(3), "c2")
        assert degree_two == c2 - Fraction(1, 3) * c1**2

    def test_io_failure_exits_3(self, runner):
        result = runner.invoke(
            main, ["table", "--max-rank", "2", "--out", "/dev/null/nope/t.json"]
        )
        assert result.exit_code == 3

    def test_out_dir_env_resolution(self, runner, tmp_path, monkeypatch):
        monkeypatch.setenv("REDCHERN_OUT_DIR", str(tmp_path))
        runner.invoke(main, ["table", "--max-rank", "2", "--out", "sub/t.json"])
        assert (tmp_path / "sub" / "t.json").exists()
