"""
Tests for the command-line driver.
"""

import json
from pathlib import Path

import pytest

from cli import build_parser, exit_code, parse_matrix_file, run
from config import LabConfig
from utils import CheckStatus, DomainError, Report

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures" / "v1"


@pytest.fixture(autouse=True)
def quiet_config(monkeypatch):
    """No log file during tests."""
    monkeypatch.setattr("cli.app.default_config", LabConfig(log_file=None, log_level="WARNING"))


@pytest.fixture
def matrix_file(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("# g1\nw 1\n0 1\n---\nw\n")
    return path


class TestParser:
    """Argument parsing."""

    def test_global_flags_after_subcommand(self):
        args = build_parser().parse_args(["verify", "divisibility", "--n", "1", "--q", "3", "--k", "1",
                                          "--cap", "50"])
        assert args.cap == 50
        assert args.check == "divisibility"

    def test_global_flags_before_subcommand(self):
        args = build_parser().parse_args(["--jobs", "4", "suite", "--profile", "full"])
        assert args.jobs == 4
        assert args.profile == "full"

    def test_usage_error(self):
        assert run(["verify", "congruence", "--n", "1"]) == 2
        assert run(["no-such-command"]) == 2

    def test_exit_codes(self):
        passing = Report(check="a", status=CheckStatus.PASS)
        skipped = Report(check="a", status=CheckStatus.SKIP)
        failed = Report(check="a", status=CheckStatus.FAIL, witness={"k": 1})
        assert exit_code([passing]) == 0
        assert exit_code([passing, skipped]) == 2
        assert exit_code([skipped, failed]) == 1


class TestMatrixFile:
    """Matrix input: g1 rows, '---', g2 rows."""

    def test_parse(self, matrix_file):
        g = parse_matrix_file(str(matrix_file), 1, 3)
        assert g.g1.size == 2
        assert g.g2[0, 0].valuation == 1

    def test_wrong_row_count(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("w 1\n---\nw\n")
        with pytest.raises(DomainError):
            parse_matrix_file(str(path), 1, 3)

    def test_missing_separator(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("w 1\n0 1\nw\n")
        with pytest.raises(DomainError):
            parse_matrix_file(str(path), 1, 3)

    def test_malformed_entry_exits_2(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("w 1\n0 1$\n---\nw\n")
        assert run(["normal-form", "--n", "1", "--q", "3", "--matrix", str(path)]) == 2
        assert "error" in capsys.readouterr().err


class TestCommands:
    """End-to-end subcommands."""

    def test_verify_divisibility(self, capsys):
        assert run(["verify", "divisibility", "--n", "1", "--q", "3", "--k", "1"]) == 0
        assert "PASS" in capsys.readouterr().out

    def test_verify_root(self):
        assert run(["verify", "root", "--n", "1", "--q", "2"]) == 0

    def test_verify_congruence(self):
        assert run(["verify", "congruence", "--n", "1", "--q", "3", "--variant", "tilde", "--level", "h0"]) == 0

    def test_verify_orders(self):
        assert run(["verify", "orders", "--q", "3", "--eps", "-1", "--cmax", "2"]) == 0

    def test_verify_satake(self):
        assert run(["verify", "satake", "--n", "1", "--q", "2"]) == 0

    def test_skip_exits_2(self):
        assert run(["verify", "divisibility", "--n", "2", "--q", "3", "--k", "2", "--cap", "5"]) == 2

    def test_json_output(self, tmp_path):
        out = tmp_path / "report.json"
        assert run(["verify", "divisibility", "--n", "1", "--q", "3", "--k", "1", "--json", str(out)]) == 0
        data = json.loads(out.read_text())
        assert data[0]["check"] == "divisibility"
        assert data[0]["status"] == "PASS"
        assert set(data[0]) == {"check", "params", "status", "witness", "counts", "notes"}

    def test_normal_form(self, matrix_file, capsys, tmp_path):
        out = tmp_path / "nf.json"
        assert run(["normal-form", "--n", "1", "--q", "3", "--matrix", str(matrix_file), "--json", str(out)]) == 0
        assert "normal form" in capsys.readouterr().out
        data = json.loads(out.read_text())
        assert set(data["keys"]) == {"Hder", "H1", "H0"}

    def test_hecke_poly(self, capsys):
        assert run(["hecke-poly", "--n", "1"]) == 0
        assert "z^2" in capsys.readouterr().out

    def test_hecke_poly_fixture(self):
        assert run(["hecke-poly", "--n", "1", "--fixture", str(FIXTURES / "hecke_n1.txt")]) == 0

    def test_hecke_poly_fixture_mismatch(self):
        assert run(["hecke-poly", "--n", "2", "--fixture", str(FIXTURES / "hecke_n1.txt")]) != 0

    def test_hecke_poly_write(self, tmp_path):
        assert run(["hecke-poly", "--n", "1", "--write", str(tmp_path)]) == 0
        assert (tmp_path / "hecke_n1.txt").exists()
