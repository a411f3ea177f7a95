"""
Tests for the command line application
"""

import json

import pytest
from typer.testing import CliRunner

from mgf_fourier.algebra import parse_json
from mgf_fourier.analysis import laurent
from mgf_fourier.cli import app
from mgf_fourier.exact.arithmetic import DEFAULT_TABLE_SIZE, set_table_size, table_size_for

runner = CliRunner()


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    for name in ("MGF_PREC", "MGF_CUTOFF", "MGF_JOBS", "MGF_FORMAT", "MGF_VAR",
                 "MGF_CHECKPOINT_DIR", "MGF_LOG_DIR", "MGF_TABLE_SIZE"):
        monkeypatch.delenv(name, raising=False)


def json_lines(output: str):
    return [json.loads(line) for line in output.splitlines() if line.startswith("{")]


def test_laurent_text():
    result = runner.invoke(app, ["laurent", "2", "1", "1", "--var", "y"])
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == (
        "2/14175 y^4 + 1/45 zeta(3) y + 5/12 zeta(5) y^-1 "
        "- 1/4 zeta(3)^2 y^-2 + 9/16 zeta(7) y^-3"
    )


def test_laurent_json_roundtrip():
    result = runner.invoke(app, ["laurent", "3", "2", "1", "--format", "json", "--var", "u"])
    assert result.exit_code == 0
    line = next(l for l in result.output.splitlines() if l.startswith("{"))
    assert parse_json(line) == laurent(3, 2, 1)


def test_laurent_latex():
    result = runner.invoke(app, ["laurent", "1", "1", "1", "--format", "latex"])
    assert result.exit_code == 0
    assert r"\frac{2}{945} y^{3}" in result.output


def test_laurent_variable_from_environment(monkeypatch):
    monkeypatch.setenv("MGF_VAR", "u")
    result = runner.invoke(app, ["laurent", "1", "1", "1"])
    assert result.exit_code == 0
    assert "u^3" in result.output


def test_laurent_bad_exponent():
    result = runner.invoke(app, ["laurent", "0", "1", "1"])
    assert result.exit_code == 2


def test_bad_format_is_a_config_error():
    result = runner.invoke(app, ["laurent", "1", "1", "1", "--format", "yaml"])
    assert result.exit_code == 2


def test_gamma_json():
    result = runner.invoke(app, ["gamma", "2", "1", "1", "--format", "json"])
    assert result.exit_code == 0
    payload = json_lines(result.output)[0]
    assert payload["gamma"] == {"1": "-8", "2": "0"}
    assert payload["folded"] == {"3,3": "-4"}
    assert payload["integral"] is True
    assert payload["normalization"] == "conjecture"


def test_gamma_text():
    result = runner.invoke(app, ["gamma", "3", "1", "1"])
    assert result.exit_code == 0
    assert "zeta(3) zeta(5): -32" in result.output


def test_reduce():
    result = runner.invoke(app, ["reduce", "2", "1", "1"])
    assert result.exit_code == 0
    assert "reduced:          -4 zeta(3)^2" in result.output


def test_check_xn_passes(tmp_path):
    result = runner.invoke(app, [
        "check-xn", "--max-a1", "3", "--max-a23", "2", "--jobs", "1",
        "--checkpoint-dir", str(tmp_path),
    ])
    assert result.exit_code == 0
    records = json_lines(result.output)
    assert len(records) == 4 + 8
    assert all(r["x"] == "0" for r in records)
    assert (tmp_path / "xn_3_2.json").exists()


def test_check_xn_injected_fault():
    result = runner.invoke(app, [
        "check-xn", "--max-a1", "2", "--max-a23", "2", "--jobs", "1", "--inject-fault",
    ])
    assert result.exit_code == 5
    assert json_lines(result.output)[0] == {"a": [2, 1, 1], "n": 1, "x": "1"}


def test_check_xn_checkpoints_by_default(tmp_path):
    args = ["check-xn", "--max-a1", "3", "--max-a23", "2", "--jobs", "1"]
    first = runner.invoke(app, args)
    assert first.exit_code == 0
    assert (tmp_path / "checkpoints" / "xn_3_2.json").exists()

    resumed = runner.invoke(app, args)
    assert resumed.exit_code == 0
    assert json_lines(resumed.output) == []

    again = runner.invoke(app, args + ["--fresh"])
    assert again.exit_code == 0
    assert len(json_lines(again.output)) == 12


@pytest.mark.parametrize("bounds", [["--max-a1", "0"], ["--max-a23", "0"]])
def test_check_xn_bad_bounds(bounds):
    result = runner.invoke(app, ["check-xn", "--jobs", "1"] + bounds)
    assert result.exit_code == 2
    assert "DomainError" in result.output


def test_phi():
    result = runner.invoke(app, ["phi", "2", "0", "3.0", "--prec", "128"])
    assert result.exit_code == 0
    assert result.output.startswith("phi_{2,0}(3.0) = ")


def test_phi_domain():
    result = runner.invoke(app, ["phi", "0", "0", "3.0"])
    assert result.exit_code == 2


def test_laplace_eisenstein():
    result = runner.invoke(app, ["laplace", "eisenstein", "--tau", "0,1", "--w", "3",
                                 "--tol", "1e-5"])
    assert result.exit_code == 0
    assert "PASS eisenstein3" in result.output


def test_eval_rejects_exponential_route_for_other_graphs():
    result = runner.invoke(app, ["eval", "1", "1", "1", "--tau2", "0.5",
                                 "--compare", "laurent+exp"])
    assert result.exit_code == 2


def test_verify_unknown_identity():
    result = runner.invoke(app, ["verify", "id9"])
    assert result.exit_code == 2


def test_eisenstein_command():
    result = runner.invoke(app, ["eisenstein", "3", "--tau", "1/4,1", "--prec", "128"])
    assert result.exit_code == 0
    assert result.output.startswith("E_3(1/4,1) = ")


@pytest.mark.slow
def test_verify_id1():
    result = runner.invoke(app, ["verify", "id1", "--tau", "1/3,1", "--format", "json"])
    assert result.exit_code == 0
    assert json_lines(result.output)[0]["passed"] is True


@pytest.mark.slow
def test_eval_with_exponential_part():
    result = runner.invoke(app, ["eval", "2", "1", "1", "--tau2", "0.5",
                                 "--compare", "laurent+exp", "--tol", "2e-5"])
    assert result.exit_code == 0
    assert result.output.startswith("PASS")


@pytest.fixture
def restore_table_size():
    yield
    set_table_size(DEFAULT_TABLE_SIZE)


def test_table_size_from_environment(monkeypatch, restore_table_size):
    monkeypatch.setenv("MGF_TABLE_SIZE", "64")
    result = runner.invoke(app, ["laurent", "2", "1", "1"])
    assert result.exit_code == 0
    assert table_size_for(0) == 64


def test_invalid_table_size(monkeypatch, restore_table_size):
    monkeypatch.setenv("MGF_TABLE_SIZE", "4")
    result = runner.invoke(app, ["laurent", "2", "1", "1"])
    assert result.exit_code == 2
    assert "ConfigError" in result.output
