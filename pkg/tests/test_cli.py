"""End-to-end tests of the command-line interface and its exit codes."""

import csv
import io
import json

import pytest

from delannoy_jacobi.cli import main
from delannoy_jacobi.render import parse_poly


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestComputeSequence:
    def test_central_delannoy(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "sequence", "--name", "central-delannoy", "--count", "7"
        )
        assert code == 0
        assert out.strip() == "1, 3, 13, 63, 321, 1683, 8989"

    def test_schroder(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "sequence", "--name", "schroder", "--count", "5"
        )
        assert code == 0
        assert out.strip() == "1, 2, 6, 22, 90"

    def test_delannoy_row(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "sequence", "--name", "delannoy-row",
            "--m", "2", "--count", "4",
        )
        assert code == 0
        assert out.strip() == "1, 5, 13, 25"

    def test_delannoy_row_requires_m(self, capsys):
        code, _, err = run_cli(
            capsys, "compute", "sequence", "--name", "delannoy-row", "--count", "4"
        )
        assert code == 1
        assert "--m" in err

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "sequence", "--name", "schroder", "--count", "3",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out) == {"name": "schroder", "values": ["1", "2", "6"]}

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "sequence", "--name", "central-delannoy",
            "--count", "3", "--format", "csv",
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows == [["index", "value"], ["0", "1"], ["1", "3"], ["2", "13"]]


class TestComputePoly:
    def test_table_row(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "poly", "--family", "shifted-jacobi",
            "--n", "2", "--alpha", "0", "--beta", "-6",
        )
        assert code == 0
        assert out.strip() == "3x^2 - 12x + 10"

    def test_text_output_parses_back(self, capsys):
        for family in ["legendre", "shifted-legendre", "laguerre", "schroder"]:
            code, out, _ = run_cli(
                capsys, "compute", "poly", "--family", family, "--n", "4"
            )
            assert code == 0
            assert parse_poly(out.strip()).degree == 4

    def test_json_has_coefficients(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "poly", "--family", "narayana", "--n", "3",
            "--format", "json",
        )
        assert code == 0
        record = json.loads(out)
        assert record["coefficients"] == ["0", "1", "3", "1"]
        assert record["text"] == "x^3 + 3x^2 + x"

    def test_invalid_index_is_compute_error(self, capsys):
        code, _, err = run_cli(capsys, "compute", "poly", "--family", "narayana", "--n", "0")
        assert code == 1
        assert "error" in err


class TestComputeCounts:
    def test_weighted_delannoy(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "delannoy", "--m", "1", "--n", "1",
            "--u", "2", "--v", "3", "--w", "5",
        )
        assert code == 0
        assert out.strip() == "17"

    def test_rational_weights(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "delannoy", "--m", "2", "--n", "2", "--u", "1/2"
        )
        assert code == 0
        assert out.strip() == "11/2"

    def test_decimal_weight_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["compute", "delannoy", "--m", "1", "--n", "1", "--u", "1.5"])
        assert info.value.code == 2

    def test_schroder_count(self, capsys):
        code, out, _ = run_cli(capsys, "compute", "schroder", "--n", "3")
        assert code == 0
        assert out.strip() == "22"

    def test_csv_columns(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "delannoy", "--m", "1", "--n", "1", "--format", "csv"
        )
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["m", "n", "u", "v", "w", "value"]
        assert rows[1] == ["1", "1", "1", "1", "1", "3"]


class TestVerify:
    def test_single_identity_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--id", "dp1")
        assert code == 0
        assert "PASS dp1" in out

    def test_unknown_id(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--id", "no-such")
        assert code == 2
        assert "unknown identity" in err

    def test_usage_error_without_selector(self):
        with pytest.raises(SystemExit) as info:
            main(["verify"])
        assert info.value.code == 2

    def test_all_with_output_file(self, capsys, tmp_path):
        out_file = tmp_path / "report.json"
        code, out, _ = run_cli(
            capsys, "verify", "--all", "--max-n", "1", "--out", str(out_file)
        )
        assert code == 0
        payload = json.loads(out_file.read_text())
        assert len(payload) >= 25
        assert all(item["status"] == "pass" for item in payload)
        assert [item["id"] for item in payload] == sorted(item["id"] for item in payload)
        assert "passed" in out

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--id", "bneg-table1", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload[0]["id"] == "bneg-table1"
        assert set(payload[0]) == {
            "id", "status", "cases_run", "counterexample", "millis", "notes",
        }

    def test_max_n_flag_reduces_cases(self, capsys):
        _, full, _ = run_cli(capsys, "verify", "--id", "swap-rules", "--format", "json")
        _, small, _ = run_cli(
            capsys, "verify", "--id", "swap-rules", "--max-n", "1", "--format", "json"
        )
        assert json.loads(small)[0]["cases_run"] < json.loads(full)[0]["cases_run"]

    def test_failure_exits_three(self, capsys, monkeypatch):
        from delannoy_jacobi.identities import IdentityReport

        failing = IdentityReport(
            id="dp1", status="fail", cases_run=3,
            counterexample={"params": {"n": 2}, "lhs": "1", "rhs": "2"},
            millis=1,
        )
        monkeypatch.setattr(
            "delannoy_jacobi.cli.identities.run_identity", lambda *a, **k: failing
        )
        code, out, _ = run_cli(capsys, "verify", "--id", "dp1")
        assert code == 3
        assert "FAIL dp1" in out
        assert "counterexample" in out


class TestConfigFile:
    def test_config_file_caps_grid(self, capsys, tmp_path, monkeypatch):
        (tmp_path / "delannoy-jacobi.conf").write_text("max_n = 1\n# comment\n")
        monkeypatch.chdir(tmp_path)
        _, out, _ = run_cli(capsys, "verify", "--id", "swap-rules", "--format", "json")
        capped = json.loads(out)[0]["cases_run"]
        monkeypatch.chdir("/")
        _, out, _ = run_cli(capsys, "verify", "--id", "swap-rules", "--format", "json")
        assert capped < json.loads(out)[0]["cases_run"]

    def test_flag_overrides_file(self, capsys, tmp_path, monkeypatch):
        (tmp_path / "delannoy-jacobi.conf").write_text("max_n=8\n")
        monkeypatch.chdir(tmp_path)
        _, out, _ = run_cli(
            capsys, "verify", "--id", "swap-rules", "--max-n", "0", "--format", "json"
        )
        # n = 0 only: one Legendre-shift case plus 49 parameter pairs, two rules each
        assert json.loads(out)[0]["cases_run"] == 99

    def test_env_var_points_at_config(self, capsys, tmp_path, monkeypatch):
        config = tmp_path / "custom.conf"
        config.write_text("max_n = 1\n")
        monkeypatch.setenv("DJ_CONFIG", str(config))
        _, out, _ = run_cli(capsys, "verify", "--id", "dual-routes", "--format", "json")
        assert json.loads(out)[0]["cases_run"] == 2 * (1 + 49)

    def test_unknown_key_is_compute_error(self, capsys, tmp_path, monkeypatch):
        (tmp_path / "delannoy-jacobi.conf").write_text("bogus = 3\n")
        monkeypatch.chdir(tmp_path)
        code, _, err = run_cli(capsys, "verify", "--id", "dp1")
        assert code == 1
        assert "unknown config key" in err
