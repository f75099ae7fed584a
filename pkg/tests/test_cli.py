"""
Tests for the Click CLI commands in gsp4_verify.

Every subcommand is invoked through Click's CliRunner; exit codes follow
the convention 0 = all checks pass, 1 = a check fails, 2 = bad input.
"""

import json
from pathlib import Path
from unittest.mock import patch

import pytest
from click.testing import CliRunner

from gsp4_verify import __version__
from gsp4_verify.cli.main import cli
from gsp4_verify.core.registry import CheckRegistry
from gsp4_verify.models.results import VerificationReport

# ============================================================================
# FIXTURES
# ============================================================================


@pytest.fixture
def runner():
    """Create a Click CliRunner for invoking CLI commands."""
    return CliRunner()


@pytest.fixture(autouse=True)
def clean_registry():
    CheckRegistry.clear()
    yield
    CheckRegistry.clear()


# ============================================================================
# GROUP
# ============================================================================


class TestGroup:
    def test_version(self, runner):
        result = runner.invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_help_lists_commands(self, runner):
        result = runner.invoke(cli, ["--help"])
        assert result.exit_code == 0
        for name in ("branch", "packet", "hodge", "rep", "lambda-scan", "pairing", "local", "arch", "trace", "verify"):
            assert name in result.output

    def test_precision_out_of_range(self, runner):
        result = runner.invoke(cli, ["--precision-digits", "5", "arch", "gamma"])
        assert result.exit_code == 2
        assert "precision digits" in result.output


# ============================================================================
# ROOT DATA AND PACKETS
# ============================================================================


class TestBranchCommand:
    def test_single_query(self, runner):
        result = runner.invoke(cli, ["branch", "--k", "7", "--kp", "4", "--p", "6", "--q", "3"])
        assert result.exit_code == 0
        assert "(p, q) = (6, 3)" in result.output

    def test_not_dominant(self, runner):
        result = runner.invoke(cli, ["branch", "--k", "2", "--kp", "5"])
        assert result.exit_code == 2
        assert "❌ ERROR" in result.output

    def test_p_without_q(self, runner):
        result = runner.invoke(cli, ["branch", "--k", "3", "--kp", "1", "--p", "2"])
        assert result.exit_code == 2


class TestPacketCommands:
    def test_packet_json(self, runner):
        result = runner.invoke(cli, ["packet", "--k", "7", "--kp", "4", "--c", "1", "--format", "json"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["check"] == "packet"
        assert data["status"] == "pass"

    def test_packet_parity(self, runner):
        result = runner.invoke(cli, ["packet", "--k", "7", "--kp", "4", "--c", "2"])
        assert result.exit_code == 2

    def test_hodge_needs_c_or_pq(self, runner):
        result = runner.invoke(cli, ["hodge", "--k", "7", "--kp", "4"])
        assert result.exit_code == 2


# ============================================================================
# PAIRING AND LOCAL THEORY
# ============================================================================


class TestPairingCommands:
    def test_coeffs_fail_csv(self, runner):
        result = runner.invoke(cli, ["pairing", "coeffs", "--format", "csv"])
        assert result.exit_code == 1
        assert result.output.splitlines()[0] == "check,status,description,value,error"

    def test_survival(self, runner):
        result = runner.invoke(cli, ["pairing", "survival", "--k", "7", "--kp", "4"])
        assert result.exit_code == 0

    def test_survival_hypotheses(self, runner):
        result = runner.invoke(cli, ["pairing", "survival", "--k", "6", "--kp", "4"])
        assert result.exit_code == 2
        assert "k odd" in result.output

    def test_constants_json(self, runner):
        result = runner.invoke(cli, ["pairing", "constants", "--k", "2", "--kp", "1", "--format", "json"])
        assert result.exit_code == 0
        descriptions = [w["description"] for w in json.loads(result.output)["witnesses"]]
        assert "A_(0,0)" in descriptions


class TestLocalCommands:
    def test_bessel_negative(self, runner):
        result = runner.invoke(cli, ["local", "bessel", "--m", "-1"])
        assert result.exit_code == 0
        assert "vanishes" in result.output

    def test_tate_depth(self, runner):
        result = runner.invoke(cli, ["local", "tate-unramified", "--target", "3", "--depth", "0"])
        assert result.exit_code == 2

    def test_numeric_seed_recorded(self, runner):
        args = ["local", "unramified-verify", "--order", "3", "--numeric", "--samples", "2", "--format", "json"]
        with runner.isolated_filesystem():
            result = runner.invoke(cli, args)
        assert result.exit_code == 0
        assert isinstance(json.loads(result.output)["seed"], int)


class TestArchCommands:
    def test_pi_class(self, runner):
        result = runner.invoke(cli, ["arch", "pi-class", "5/2", "4"])
        assert result.exit_code == 0
        assert "pi^1/2" in result.output
        assert "pi^0" in result.output

    def test_pi_class_unsupported(self, runner):
        result = runner.invoke(cli, ["arch", "pi-class", "1/3"])
        assert result.exit_code == 2

    def test_tate_parity(self, runner):
        result = runner.invoke(cli, ["arch", "tate-verify", "--p", "1", "--q", "1", "--r", "0", "--s", "1"])
        assert result.exit_code == 2

    def test_tate_zero_weights(self, runner):
        result = runner.invoke(cli, ["arch", "tate-verify", "--p", "0", "--q", "0", "--r", "0", "--s", "0"])
        assert result.exit_code == 0
        assert "undefined" in result.output

    def test_tate_negative_weight(self, runner):
        result = runner.invoke(cli, ["arch", "tate-verify", "--p", "-1", "--q", "1", "--r", "1", "--s", "1"])
        assert result.exit_code == 2
        assert "p, q >= 0" in result.output

    @pytest.mark.slow
    def test_mellin_on_kernel_zero_line(self, runner):
        result = runner.invoke(cli, ["arch", "mellin-verify", "--k", "7", "--kp", "4", "--format", "json"])
        assert result.exit_code == 0
        assert json.loads(result.output)["status"] == "pass"

    def test_vanishing(self, runner):
        args = ["arch", "vanishing", "--t", "13", "--lambda1", "10", "--lambda2", "-5", "--r", "-8", "--s", "3"]
        result = runner.invoke(cli, args + ["--format", "json"])
        assert result.exit_code == 0
        witnesses = json.loads(result.output)["witnesses"]
        assert witnesses[-1]["value"] is False

    def test_meijer_missing_parameters(self, runner):
        result = runner.invoke(cli, ["arch", "meijer", "--z", "1", "--k", "7"])
        assert result.exit_code == 2


# ============================================================================
# TRACE AND VERIFY
# ============================================================================


class TestTraceCommand:
    def test_trace_fails_json(self, runner):
        result = runner.invoke(cli, ["trace", "--k", "7", "--kp", "4", "--format", "json"])
        assert result.exit_code == 1
        data = json.loads(result.output)
        assert data["status"] == "fail"
        assert data["witnesses"][0]["value"] == "-3/2"

    def test_trace_output_file(self, runner):
        with runner.isolated_filesystem():
            result = runner.invoke(cli, ["trace", "--k", "7", "--kp", "4", "--format", "json", "--output", "out.json"])
            assert result.exit_code == 1
            assert "✅ Report written to: out.json" in result.output
            assert json.loads(Path("out.json").read_text(encoding="utf-8"))["check"] == "trace"

    def test_trace_bad_weights(self, runner):
        result = runner.invoke(cli, ["trace", "--k", "3", "--kp", "2"])
        assert result.exit_code == 2

    def test_rich_fallback(self, runner):
        with patch("gsp4_verify.cli.rich_formatter.is_rich_available", return_value=False):
            result = runner.invoke(cli, ["trace", "--k", "7", "--kp", "4", "--format", "rich"])
        assert result.exit_code == 1
        assert "rich non installato" in result.output
        assert "TRACE" in result.output

    def test_config_format_default(self, runner):
        pytest.importorskip("yaml")
        with runner.isolated_filesystem():
            Path(".gsp4-verify.yml").write_text("output:\n  format: json\n", encoding="utf-8")
            result = runner.invoke(cli, ["trace", "--k", "7", "--kp", "4"])
            assert json.loads(result.output)["check"] == "trace"


class TestVerifyCommand:
    def test_list(self, runner):
        result = runner.invoke(cli, ["verify", "--list", "--no-plugins"])
        assert result.exit_code == 0
        assert "trace-grid" in result.output
        assert "unramified-identity" in result.output

    def test_only_gamma(self, runner):
        result = runner.invoke(cli, ["verify", "--only", "gamma", "--seed", "3", "--no-plugins", "--format", "json"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["check"] == "gamma"
        assert data["seed"] == 3

    def test_two_checks_one_failing(self, runner):
        args = ["verify", "--only", "wedge-decomposition", "--only", "projection-coefficients", "--no-plugins"]
        result = runner.invoke(cli, args + ["--format", "json"])
        assert result.exit_code == 1
        data = json.loads(result.output)
        assert data["status"] == "fail"
        assert [r["check"] for r in data["reports"]] == ["projection-coefficients", "wedge-decomposition"]

    def test_unknown_check(self, runner):
        result = runner.invoke(cli, ["verify", "--only", "inesistente", "--no-plugins"])
        assert result.exit_code == 2
        assert "unknown check" in result.output

    def test_grid_max_from_config(self, runner):
        pytest.importorskip("yaml")
        seen = []

        def fake_mellin(params, p, q, digits):
            seen.append((p + 1, q + 1))
            return VerificationReport("mellin")

        with runner.isolated_filesystem():
            Path(".gsp4-verify.yml").write_text("bounds:\n  grid_max: 7\n", encoding="utf-8")
            with patch("gsp4_verify.core.checks.mellin_verify", side_effect=fake_mellin):
                result = runner.invoke(cli, ["verify", "--only", "mellin-grid", "--no-plugins", "--format", "json"])
        assert result.exit_code == 0
        assert seen == [(3, 2), (5, 2)]


# ============================================================================
# RIPRODUCIBILITÀ
# ============================================================================


def _stable_lines(output: str) -> str:
    """JSON output without the wall-clock fields."""
    return "\n".join(line for line in output.splitlines() if '"timestamp"' not in line and '"elapsedMs"' not in line)


class TestReproducibleJson:
    @pytest.mark.parametrize(
        "args",
        [
            ["pairing", "constants", "--k", "2", "--kp", "1"],
            ["local", "unramified-verify", "--order", "4", "--numeric", "--seed", "5", "--samples", "3"],
            ["verify", "--only", "gamma", "--only", "wedge-decomposition", "--seed", "9", "--no-plugins"],
        ],
    )
    def test_rerun_is_byte_identical(self, runner, args):
        with runner.isolated_filesystem():
            first = runner.invoke(cli, args + ["--format", "json"])
            CheckRegistry.clear()
            second = runner.invoke(cli, args + ["--format", "json"])
        assert first.exit_code == second.exit_code
        assert _stable_lines(first.output).encode("utf-8") == _stable_lines(second.output).encode("utf-8")
