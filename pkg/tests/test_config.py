from __future__ import annotations

import pytest

from braid_monodromy.config import OUTPUT_DIR_ENV, RunConfig, load_config


def test_defaults():
    c = RunConfig()
    assert c.root_tol == 1e-9 and c.r == 0.05 and c.theta == pytest.approx(0.3183)
    assert c.min_steps == 64 and c.orbit_cap == 1e6 and c.identity_cap == 12


@pytest.mark.parametrize("field,value", [("root_tol", 0.0), ("collision", -1.0), ("r", 0.7), ("orbit_cap", 0)])
def test_validation(field, value):
    with pytest.raises(ValueError):
        RunConfig(**{field: value})


def test_refined_doubles_steps():
    assert RunConfig().refined().min_steps == 128


def test_file_and_overrides(tmp_path, monkeypatch):
    monkeypatch.delenv(OUTPUT_DIR_ENV, raising=False)
    f = tmp_path / "run.cfg"
    f.write_text("# comment\nr = 0.1\nmin_steps=32\nseed=5\n")
    c = load_config(f, seed=9)
    assert c.r == 0.1 and c.min_steps == 32 and c.seed == 9


def test_unknown_key(tmp_path):
    f = tmp_path / "bad.cfg"
    f.write_text("nope=1\n")
    with pytest.raises(ValueError):
        load_config(f)


def test_env_output_dir(monkeypatch, tmp_path):
    monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path))
    assert load_config().output_dir == str(tmp_path)
