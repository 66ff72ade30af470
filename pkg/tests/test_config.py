import json

import pytest

from src.utils import default_config, default_jobs, load_config


def test_defaults_are_filled_in(tmp_path):
    path = tmp_path / "conf.json"
    path.write_text(json.dumps({"caps": {"resolution_cap": 10}, "jobs": 2}))
    config = load_config(str(path))
    assert config["caps"]["resolution_cap"] == 10
    assert config["caps"]["max_qh_simples"] == 8
    assert config["output"]["format"] == "human"
    assert config["jobs"] == 2


def test_environment_overrides(tmp_path, monkeypatch):
    path = tmp_path / "conf.json"
    path.write_text("{}")
    monkeypatch.setenv("QHCHECK_RESOLUTION_CAP", "5")
    monkeypatch.setenv("QHCHECK_FORMAT", "json")
    config = load_config(str(path))
    assert config["caps"]["resolution_cap"] == 5
    assert config["output"]["format"] == "json"


def test_missing_and_invalid_files(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_config(str(tmp_path / "absent.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{caps")
    with pytest.raises(ValueError):
        load_config(str(bad))


def test_default_config():
    config = default_config()
    assert config["jobs"] == default_jobs() >= 1
    assert config["caps"]["degree_cap"] is None
