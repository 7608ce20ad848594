import json

import pytest
from typer.testing import CliRunner

from app import app

runner = CliRunner()


def invoke(*args):
    return runner.invoke(app, ["--log-level", "ERROR", *[str(a) for a in args]])


def invoke_json(*args):
    result = invoke(*args, "--format", "json")
    return result, json.loads(result.stdout)


def test_curvature_of_builtin():
    result, payload = invoke_json("curvature", "heisenberg")
    assert result.exit_code == 0
    assert payload["scalar"] == pytest.approx(-0.5)
    assert payload["sectional"][0][2] == pytest.approx(-0.75)
    assert payload["method"] == "milnor_full"


def test_curvature_with_metabelian_shortcut():
    result, payload = invoke_json("curvature", "gamma_star_gamma", "--method", "metabelian_shortcut")
    assert result.exit_code == 0
    assert payload["scalar"] == pytest.approx(-3.0)


def test_curvature_text_report_to_file(tmp_path):
    out = tmp_path / "curv.txt"
    result = invoke("curvature", "heisenberg", "--out", out)
    assert result.exit_code == 0
    text = out.read_text(encoding="utf-8")
    assert "ρ = -1/2" in text
    assert "-3/4" in text


def test_check_jacobi_failure_exits_one(examples_dir):
    result, payload = invoke_json("check-jacobi", examples_dir / "broken_jacobi.json")
    assert result.exit_code == 1
    assert payload["antisymmetry"]["passed"]
    assert payload["jacobi"]["failures"][0]["where"] == [0, 1, 2]


def test_check_nilpotent_text():
    result = invoke("check-nilpotent", "e2_canonical")
    assert result.exit_code == 1
    assert "não é 2-nilpotente" in result.stdout
    assert "(0, 1, 0)" in result.stdout


def test_verify_six_rho():
    result, payload = invoke_json("verify-6rho", "heisenberg")
    assert result.exit_code == 0
    assert payload["ratio"] == pytest.approx(6.0)


def test_verify_six_rho_precondition_exits_two():
    result = invoke("verify-6rho", "e2_canonical")
    assert result.exit_code == 2


def test_missing_file_exits_two(tmp_path):
    assert invoke("curvature", tmp_path / "nada.json").exit_code == 2


def test_twist_lie_semidirect(examples_dir):
    result, payload = invoke_json("twist-lie", examples_dir / "semidirect" / "twist_spec.json")
    assert result.exit_code == 0
    assert payload["algebra"]["constants"] == [[1, 3, 2, -1.0]]
    assert payload["jacobi"]["passed"]


def test_inner_twist_of_heisenberg():
    result, payload = invoke_json("inner-twist", "heisenberg")
    assert result.exit_code == 0
    assert payload["algebra"]["dim"] == 6
    assert len(payload["algebra"]["constants"]) == 6


def test_fg_twist_inner():
    result, payload = invoke_json("fg-twist", "--g", "S3", "--inner")
    assert result.exit_code == 1
    assert not payload["is_group"]
    assert len(payload["failure_witness"]) == 3
    assert payload["condition"]["clause"] == "lambda"

    result, payload = invoke_json("fg-twist", "--g", "Q8", "--inner")
    assert result.exit_code == 0
    assert payload["order"] == 64


def test_fg_twist_from_files(examples_dir):
    groups = examples_dir / "groups"
    result, payload = invoke_json(
        "fg-twist",
        "--g", groups / "z3.json",
        "--h", groups / "z2.json",
        "--lambda", groups / "z2_inverts_z3.json",
        "--mu", groups / "z3_trivial_on_z2.json",
        "--table",
    )
    assert result.exit_code == 0
    assert payload["is_group"]
    assert payload["table"]["order"] == 6


def test_fg_twist_requires_actions():
    assert invoke("fg-twist", "--g", "S3", "--h", "Z2").exit_code == 2


def test_fg_condition():
    result, payload = invoke_json("fg-condition", "--g", "S3", "--inner")
    assert result.exit_code == 1
    assert payload["clause"] == "lambda"
    assert payload["kernel_lambda"] == [0]


def test_derive_action():
    result, payload = invoke_json("derive-action", "shear")
    assert result.exit_code == 0
    assert payload["converged"]
    assert payload["max_error"] <= 1e-6


def test_reproduce(golden_dir):
    result = invoke("reproduce", "example3", "--golden-dir", golden_dir)
    assert result.exit_code == 0
    assert "ρ′ = 6ρ" in result.stdout


def test_reproduce_unknown_target():
    assert invoke("reproduce", "example9").exit_code == 2


def test_list_builtins():
    result, payload = invoke_json("list-builtins")
    assert result.exit_code == 0
    assert "gamma_star_gamma" in payload["builtins"]
    assert payload["finite_groups"]["Q8"] == 8
    assert "shear" in payload["derivation_cases"]


def test_export_builtin_round_trip(tmp_path):
    result = invoke("export-builtin", "heisenberg", tmp_path)
    assert result.exit_code == 0
    assert (tmp_path / "expected.json").exists()
    result, payload = invoke_json("twist-lie", tmp_path / "twist_spec.json")
    assert result.exit_code == 0
    assert payload["algebra"]["constants"] == [[1, 3, 2, -1.0]]


def test_export_builtin_unknown_name(tmp_path):
    assert invoke("export-builtin", "sl2", tmp_path).exit_code == 2


def test_export_group_round_trip(tmp_path):
    path = tmp_path / "q8.json"
    assert invoke("export-group", "Q8", path).exit_code == 0
    result, payload = invoke_json("fg-twist", "--g", path, "--inner")
    assert result.exit_code == 0
    assert payload["g"] == "Q8"


def test_status_reports_effective_configuration(monkeypatch):
    monkeypatch.delenv("TWISTPROD_ORDER_CAP", raising=False)
    monkeypatch.delenv("TWISTPROD_GOLDEN_DIR", raising=False)
    result, payload = invoke_json("status", "--tol", "1e-6", "--seed", "7")
    assert result.exit_code == 0
    assert payload["tolerance"] == 1e-6
    assert payload["seed"] == 7
    assert payload["order_cap"] == 4096
    assert payload["golden_files"] >= 6
    assert payload["golden_dir"].endswith("golden")


def test_status_reads_environment(monkeypatch):
    monkeypatch.setenv("TWISTPROD_ORDER_CAP", "64")
    result, payload = invoke_json("status")
    assert result.exit_code == 0
    assert payload["order_cap"] == 64


def test_status_text_output():
    result = invoke("status")
    assert result.exit_code == 0
    assert "fd_step" in result.stdout
