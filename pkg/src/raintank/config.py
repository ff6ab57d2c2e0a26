"""Scenario and provider configuration files (YAML).

A scenario file carries the system parameters and the demand schedule;
rainfall always travels separately as CSV so one record can serve many
what-if scenarios.

    name: toy                # optional, defaults to "default"
    system:
      catchment_area_m2: 10
      runoff_coeff: 0.5
      tank_volume_l: 100
    demand:
      constant: 30           # L/day; or `dated: {2023-06-01: 75, ...}`

API keys are read from the environment (RAINTANK_API_KEY), never argv.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from datetime import date as Date
from pathlib import Path

import yaml

from .balance import DemandSchedule, SystemSpec
from .errors import InvalidInputError
from .rainfall.client import ProviderConfig

API_KEY_ENV = "RAINTANK_API_KEY"
DEFAULT_BASE_URL = (
    "https://weather.visualcrossing.com/VisualCrossingWebServices/rest/services/timeline"
)


@dataclass(frozen=True)
class Scenario:
    name: str
    spec: SystemSpec
    demand: DemandSchedule


def _as_mapping(doc, what: str) -> dict:
    if not isinstance(doc, dict):
        raise InvalidInputError(f"{what} must be a mapping, got {type(doc).__name__}")
    return doc


def _demand_from_doc(doc) -> DemandSchedule:
    doc = _as_mapping(doc, "demand")
    has_constant = "constant" in doc
    has_dated = "dated" in doc
    if has_constant == has_dated:
        raise InvalidInputError(
            "demand needs exactly one of 'constant' or 'dated'"
        )
    if has_constant:
        return DemandSchedule.constant(float(doc["constant"]))
    dated = _as_mapping(doc["dated"], "demand.dated")
    values: dict[Date, float] = {}
    for key, value in dated.items():
        if isinstance(key, Date):
            day = key
        else:
            try:
                day = Date.fromisoformat(str(key))
            except ValueError:
                raise InvalidInputError(f"bad demand date {key!r}") from None
        values[day] = float(value)
    return DemandSchedule.dated(values)


def parse_scenario(doc) -> Scenario:
    doc = _as_mapping(doc, "scenario")
    system = _as_mapping(doc.get("system"), "system")
    try:
        spec = SystemSpec(
            catchment_area=float(system["catchment_area_m2"]),
            runoff_coeff=float(system["runoff_coeff"]),
            tank_volume=float(system["tank_volume_l"]),
        )
    except KeyError as exc:
        raise InvalidInputError(f"system is missing {exc.args[0]!r}") from None
    if "demand" not in doc:
        raise InvalidInputError("scenario is missing 'demand'")
    return Scenario(
        name=str(doc.get("name", "default")),
        spec=spec,
        demand=_demand_from_doc(doc["demand"]),
    )


def load_scenario(path: str | Path) -> Scenario:
    try:
        doc = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
    except yaml.YAMLError as exc:
        raise InvalidInputError(f"cannot parse {path}: {exc}") from None
    return parse_scenario(doc)


def load_provider_config(
    path: str | Path | None = None,
    *,
    base_url: str | None = None,
    timeout: float | None = None,
    environ=os.environ,
) -> ProviderConfig:
    """Provider settings from an optional YAML file plus overrides; the
    API key always comes from the environment."""
    doc = {}
    if path is not None:
        loaded = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
        doc = _as_mapping(loaded.get("provider", loaded), "provider")
    return ProviderConfig(
        base_url=base_url or doc.get("base_url", DEFAULT_BASE_URL),
        api_key=environ.get(API_KEY_ENV, ""),
        timeout=float(timeout if timeout is not None else doc.get("timeout", 30.0)),
        max_attempts=int(doc.get("max_attempts", 3)),
        backoff_base=float(doc.get("backoff_base", 0.5)),
    )
