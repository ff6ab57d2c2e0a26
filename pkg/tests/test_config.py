from datetime import date as Date

import pytest

from raintank.config import (
    API_KEY_ENV,
    DEFAULT_BASE_URL,
    load_provider_config,
    load_scenario,
    parse_scenario,
)
from raintank.errors import InvalidInputError


def test_load_toy_scenario(toy_config_file):
    scenario = load_scenario(toy_config_file)
    assert scenario.name == "toy"
    assert scenario.spec.catchment_area == 10.0
    assert scenario.spec.runoff_coeff == 0.5
    assert scenario.spec.tank_volume == 100.0
    assert scenario.demand.on(Date(2023, 1, 1)) == 30.0


def test_dated_demand(tmp_path):
    path = tmp_path / "dated.yaml"
    path.write_text(
        "system:\n"
        "  catchment_area_m2: 10\n"
        "  runoff_coeff: 0.5\n"
        "  tank_volume_l: 100\n"
        "demand:\n"
        "  dated:\n"
        "    2023-06-01: 75\n"
        "    '2023-06-02': 50\n"
    )
    scenario = load_scenario(path)
    assert scenario.name == "default"
    assert scenario.demand.on(Date(2023, 6, 1)) == 75.0
    assert scenario.demand.on(Date(2023, 6, 2)) == 50.0
    assert scenario.demand.on(Date(2023, 6, 3)) == 0.0


@pytest.mark.parametrize(
    "doc",
    [
        {},
        {"system": {"catchment_area_m2": 10}},
        {"system": {"catchment_area_m2": 10, "runoff_coeff": 0.5, "tank_volume_l": 100}},
        {
            "system": {"catchment_area_m2": 10, "runoff_coeff": 0.5, "tank_volume_l": 100},
            "demand": {"constant": 30, "dated": {}},
        },
        {
            "system": {"catchment_area_m2": 10, "runoff_coeff": 2.0, "tank_volume_l": 100},
            "demand": {"constant": 30},
        },
    ],
)
def test_invalid_scenarios(doc):
    with pytest.raises(InvalidInputError):
        parse_scenario(doc)


def test_yaml_syntax_error(tmp_path):
    path = tmp_path / "broken.yaml"
    path.write_text("system: [unclosed")
    with pytest.raises(InvalidInputError):
        load_scenario(path)


def test_provider_defaults_and_env_key(monkeypatch):
    monkeypatch.setenv(API_KEY_ENV, "secret-from-env")
    config = load_provider_config()
    assert config.base_url == DEFAULT_BASE_URL
    assert config.api_key == "secret-from-env"
    assert config.max_attempts == 3


def test_provider_file_and_overrides(tmp_path, monkeypatch):
    monkeypatch.delenv(API_KEY_ENV, raising=False)
    path = tmp_path / "provider.yaml"
    path.write_text(
        "provider:\n  base_url: http://localhost:9\n  timeout: 2\n  max_attempts: 5\n"
    )
    config = load_provider_config(path)
    assert config.base_url == "http://localhost:9"
    assert config.timeout == 2.0
    assert config.max_attempts == 5
    assert config.api_key == ""
    override = load_provider_config(path, base_url="http://other", timeout=9.0)
    assert override.base_url == "http://other"
    assert override.timeout == 9.0


def test_api_key_not_in_repr(monkeypatch):
    monkeypatch.setenv(API_KEY_ENV, "hunter2")
    assert "hunter2" not in repr(load_provider_config())
