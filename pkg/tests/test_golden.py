import orjson
import pytest

from src.corpus import BUILTIN_NAMES, builtin, golden_payload, load_golden, write_golden
from src.entity import IngestionError


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_committed_golden_files_match_builtins(name, golden_dir):
    committed = orjson.loads((golden_dir / f"{name}.json").read_bytes())
    assert committed == golden_payload(builtin(name))


def test_write_and_load(tmp_path):
    bundle = builtin("gamma_star_gamma")
    path = write_golden(bundle, tmp_path)
    assert path == tmp_path / "gamma_star_gamma.json"
    loaded = load_golden("gamma_star_gamma", tmp_path)
    assert loaded.scalar == -3.0
    assert loaded.constants == bundle.expected.constants
    assert (loaded.sectional == bundle.expected.sectional).all()


def test_missing_golden_file(tmp_path):
    assert load_golden("heisenberg", tmp_path) is None


def test_malformed_golden_file(tmp_path):
    (tmp_path / "heisenberg.json").write_text("{\n  \"scalar\": \n")
    with pytest.raises(IngestionError):
        load_golden("heisenberg", tmp_path)
    (tmp_path / "heisenberg.json").write_text('{"scalar": -0.5}')
    with pytest.raises(IngestionError):
        load_golden("heisenberg", tmp_path)
