import numpy as np
import orjson
import pytest
from pydantic import ValidationError

from src.core.curvature import curvature_report
from src.core.finite_groups import semidirect_product, validate_action, validate_group
from src.core.lie_core import check_jacobi, nonzero_constants
from src.core.twisted_lie import build_twisted_algebra
from src.corpus.builtin import HEISENBERG_SECTIONAL
from src.datasource import (
    CurvatureReportFile,
    JsonDatasource,
    action_to_dict,
    algebra_to_dict,
    curvature_to_dict,
    group_to_dict,
)
from src.entity import CurvatureMethod, DimensionMismatchError, IngestionError


@pytest.fixture
def datasource():
    return JsonDatasource()


def test_load_algebra(datasource, examples_dir):
    alg = datasource.load_algebra(examples_dir / "heisenberg.json")
    assert alg.dim == 3
    assert alg.basis_labels == ["e1", "e2", "e3"]
    assert alg.constants[0, 2, 1] == -1.0
    assert alg.constants[2, 0, 1] == 1.0


def test_load_broken_jacobi(datasource, examples_dir):
    alg = datasource.load_algebra(examples_dir / "broken_jacobi.json")
    assert check_jacobi(alg).first_failure.where == (0, 1, 2)


def test_zero_algebra_has_default_labels(datasource, examples_dir):
    alg = datasource.load_algebra(examples_dir / "zero_algebra.json")
    assert alg.basis_labels == ["e1", "e2", "e3"]
    assert not np.any(alg.constants)


def test_missing_file(datasource, tmp_path):
    with pytest.raises(IngestionError):
        datasource.load_algebra(tmp_path / "nada.json")


def test_invalid_json_reports_position(datasource, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{\n  "dim": 3,\n  "constants": [\n}\n')
    with pytest.raises(IngestionError) as excinfo:
        datasource.load_algebra(path)
    assert excinfo.value.line is not None
    assert "linha" in str(excinfo.value)


@pytest.mark.parametrize(
    "content",
    [
        '{"constants": []}',
        '{"dim": 0}',
        '{"dim": 2, "labels": ["a"]}',
        '{"dim": 2, "constants": [[1, 2]]}',
        '{"dim": 2, "extra": true}',
    ],
)
def test_schema_errors(datasource, tmp_path, content):
    path = tmp_path / "alg.json"
    path.write_text(content)
    with pytest.raises(IngestionError):
        datasource.load_algebra(path)


def test_inconsistent_halves_are_rejected(datasource, tmp_path):
    path = tmp_path / "alg.json"
    path.write_text('{"dim": 2, "constants": [[1, 2, 1, 1.0], [2, 1, 1, 1.0]]}')
    with pytest.raises(IngestionError):
        datasource.load_algebra(path)


def test_load_twist_spec_with_relative_paths(datasource, examples_dir):
    spec = datasource.load_twist_spec(examples_dir / "semidirect" / "twist_spec.json")
    assert (spec.n, spec.m) == (2, 1)
    assert nonzero_constants(build_twisted_algebra(spec)) == [(1, 3, 2, -1.0)]


def test_load_twist_spec_with_inline_objects(datasource, tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(
        '{"g": {"dim": 2}, "h": {"dim": 1},'
        ' "L": {"acting_dim": 1, "target_dim": 2, "matrices": [[[0, 0], [1, 0]]]},'
        ' "M": {"acting_dim": 2, "target_dim": 1, "matrices": [[[0]], [[0]]]}}'
    )
    spec = datasource.load_twist_spec(path)
    assert nonzero_constants(build_twisted_algebra(spec)) == [(1, 3, 2, -1.0)]


def test_action_with_wrong_matrix_size(datasource, tmp_path):
    path = tmp_path / "action.json"
    path.write_text('{"acting_dim": 1, "target_dim": 2, "matrices": [[[0, 0, 0], [1, 0, 0]]]}')
    with pytest.raises(DimensionMismatchError):
        datasource.load_action(path)


def test_load_groups_and_actions(datasource, examples_dir):
    groups = examples_dir / "groups"
    s3 = datasource.load_group(groups / "s3.json")
    z3 = datasource.load_group(groups / "z3.json")
    z2 = datasource.load_group(groups / "z2.json")
    assert validate_group(s3).passed
    assert s3.labels[0] == "e"
    lam = datasource.load_group_action(groups / "z2_inverts_z3.json", z2, z3)
    mu = datasource.load_group_action(groups / "z3_trivial_on_z2.json", z3, z2)
    assert validate_action(lam).passed
    assert validate_action(mu).passed
    assert validate_group(semidirect_product(z3, z2, lam)).passed


def test_group_action_with_wrong_source(datasource, examples_dir):
    groups = examples_dir / "groups"
    z3 = datasource.load_group(groups / "z3.json")
    with pytest.raises(DimensionMismatchError):
        datasource.load_group_action(groups / "z2_inverts_z3.json", z3, z3)


def test_group_table_must_be_square(datasource, tmp_path):
    path = tmp_path / "group.json"
    path.write_text('{"order": 2, "table": [[0, 1]]}')
    with pytest.raises(IngestionError):
        datasource.load_group(path)


def test_save_and_reload(datasource, tmp_path, heisenberg, examples_dir):
    alg_path = datasource.save(algebra_to_dict(heisenberg), tmp_path / "out" / "alg.json")
    reloaded = datasource.load_algebra(alg_path)
    assert np.array_equal(reloaded.constants, heisenberg.constants)

    spec = datasource.load_twist_spec(examples_dir / "semidirect" / "twist_spec.json")
    action = datasource.load_action(datasource.save(action_to_dict(spec.L), tmp_path / "L.json"))
    assert np.array_equal(action.matrices, spec.L.matrices)

    s3 = datasource.load_group(examples_dir / "groups" / "s3.json")
    again = datasource.load_group(datasource.save(group_to_dict(s3), tmp_path / "s3.json"))
    assert np.array_equal(again.table, s3.table)
    assert again.name == s3.name


def test_curvature_report_file_round_trip(datasource, tmp_path, heisenberg):
    report = curvature_report(heisenberg, CurvatureMethod.MILNOR_FULL)
    path = datasource.save(curvature_to_dict(report), tmp_path / "curvature.json")
    parsed = CurvatureReportFile.model_validate(orjson.loads(path.read_bytes()))
    assert np.allclose(parsed.sectional, HEISENBERG_SECTIONAL, atol=1e-12)
    assert parsed.scalar == pytest.approx(-0.5)
    assert parsed.method == "milnor_full"


@pytest.mark.parametrize(
    "payload",
    [
        {"sectional": [[0.0, 1.0]], "scalar": 0.0, "method": "milnor_full"},
        {"sectional": [[0.0]], "scalar": 0.0, "method": "ricci"},
        {"sectional": [[0.0]], "scalar": 0.0, "method": "milnor_full", "extra": 1},
    ],
)
def test_curvature_report_file_rejects_malformed_payload(payload):
    with pytest.raises(ValidationError):
        CurvatureReportFile.model_validate(payload)
