from __future__ import annotations

from datetime import date as Date, timedelta

import pytest

from raintank.balance import DemandSchedule, RainfallSeries, SystemSpec

# the 3-day desk example used throughout: k=0.5, A=10 m2, V=100 L, D=30 L/day
TOY_START = Date(2022, 1, 1)
TOY_RAIN = (10.0, 0.0, 20.0)


@pytest.fixture
def toy_series() -> RainfallSeries:
    return RainfallSeries(TOY_START, TOY_RAIN)


@pytest.fixture
def toy_spec() -> SystemSpec:
    return SystemSpec(catchment_area=10.0, runoff_coeff=0.5, tank_volume=100.0)


@pytest.fixture
def toy_demand() -> DemandSchedule:
    return DemandSchedule.constant(30.0)


def series_from_map(values: dict[Date, float], default: float = 0.0) -> RainfallSeries:
    """Gapless series spanning the min..max dates of `values`."""
    first = min(values)
    last = max(values)
    depths = []
    day = first
    while day <= last:
        depths.append(values.get(day, default))
        day += timedelta(days=1)
    return RainfallSeries(first, tuple(depths))


def two_year_series() -> RainfallSeries:
    """2021-01-01 .. 2022-12-31, zero everywhere except June 1-3 2021
    carrying the toy rain [10, 0, 20] mm."""
    return series_from_map(
        {
            Date(2021, 1, 1): 0.0,
            Date(2021, 6, 1): 10.0,
            Date(2021, 6, 2): 0.0,
            Date(2021, 6, 3): 20.0,
            Date(2022, 12, 31): 0.0,
        }
    )


@pytest.fixture
def twoyear_series() -> RainfallSeries:
    return two_year_series()


TOY_YAML = """\
name: toy
system:
  catchment_area_m2: 10
  runoff_coeff: 0.5
  tank_volume_l: 100
demand:
  constant: 30
"""

TOY_CSV = "date,rain_mm\n2022-01-01,10\n2022-01-02,0\n2022-01-03,20"


@pytest.fixture
def toy_config_file(tmp_path):
    path = tmp_path / "toy.yaml"
    path.write_text(TOY_YAML, encoding="utf-8")
    return path


@pytest.fixture
def toy_rain_file(tmp_path):
    path = tmp_path / "toy.csv"
    path.write_text(TOY_CSV, encoding="utf-8")
    return path


@pytest.fixture
def twoyear_rain_file(tmp_path):
    from raintank.rainfall import write_csv

    path = tmp_path / "twoyear.csv"
    path.write_text(write_csv(two_year_series()), encoding="utf-8")
    return path
