"""Daily water balance for a covered storage tank.

The kernel everything else builds on: harvested volume from daily rainfall,
and the one-day tank update (inflow capped at the tank volume, demand
subtracted, level floored at zero) with full conservation accounting.

Units: rainfall in mm/day, catchment area in m2, every volume in liters
(1 mm over 1 m2 = 1 L). Volumes are doubles; the conservation ledger is
exact to 1e-6 L.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from datetime import date as Date, timedelta
from typing import Iterator, Mapping

from .errors import InvalidInputError

#: absolute tolerance for the per-day conservation ledger, liters
CONSERVATION_TOL_L = 1e-6


def _require_finite(name: str, value: float) -> float:
    if not math.isfinite(value):
        raise InvalidInputError(f"{name} must be finite, got {value!r}")
    return float(value)


def _require_nonneg(name: str, value: float) -> float:
    value = _require_finite(name, value)
    if value < 0:
        raise InvalidInputError(f"{name} must be >= 0, got {value!r}")
    return value


@dataclass(frozen=True)
class SystemSpec:
    """A harvesting system: catchment area [m2], runoff coefficient [-],
    tank volume [L].

    The runoff coefficient is the harvested fraction of rainfall and must
    lie in [0, 1]; zero is allowed (a useless catchment simulates fine).
    Area and volume must be strictly positive.
    """

    catchment_area: float
    runoff_coeff: float
    tank_volume: float

    def __post_init__(self):
        area = _require_finite("catchment_area", self.catchment_area)
        k = _require_finite("runoff_coeff", self.runoff_coeff)
        vol = _require_finite("tank_volume", self.tank_volume)
        if area <= 0:
            raise InvalidInputError(f"catchment_area must be > 0 m2, got {area}")
        if not 0.0 <= k <= 1.0:
            raise InvalidInputError(f"runoff_coeff must be in [0, 1], got {k}")
        if vol <= 0:
            raise InvalidInputError(f"tank_volume must be > 0 L, got {vol}")
        object.__setattr__(self, "catchment_area", area)
        object.__setattr__(self, "runoff_coeff", k)
        object.__setattr__(self, "tank_volume", vol)

    def with_tank_volume(self, volume: float) -> "SystemSpec":
        return SystemSpec(self.catchment_area, self.runoff_coeff, volume)

    def with_runoff_coeff(self, k: float) -> "SystemSpec":
        return SystemSpec(self.catchment_area, k, self.tank_volume)


@dataclass(frozen=True)
class RainfallSeries:
    """Gapless daily rainfall record: depths[j] belongs to start_date + j days.

    Depths are mm/day, each finite and >= 0; the series is never empty.
    """

    start_date: Date
    depths: tuple[float, ...]

    def __post_init__(self):
        if not isinstance(self.start_date, Date):
            raise InvalidInputError("start_date must be a calendar date")
        depths = tuple(float(x) for x in self.depths)
        if not depths:
            raise InvalidInputError("rainfall series must not be empty")
        for j, x in enumerate(depths):
            if not math.isfinite(x) or x < 0:
                raise InvalidInputError(
                    f"rainfall depth at {self.start_date + timedelta(days=j)} "
                    f"must be finite and >= 0, got {x!r}"
                )
        object.__setattr__(self, "depths", depths)

    def __len__(self) -> int:
        return len(self.depths)

    @property
    def end_date(self) -> Date:
        return self.start_date + timedelta(days=len(self.depths) - 1)

    def dates(self) -> Iterator[Date]:
        for j in range(len(self.depths)):
            yield self.start_date + timedelta(days=j)

    def items(self) -> Iterator[tuple[Date, float]]:
        for j, x in enumerate(self.depths):
            yield self.start_date + timedelta(days=j), x

    def depth_on(self, day: Date) -> float:
        j = (day - self.start_date).days
        if not 0 <= j < len(self.depths):
            raise KeyError(day)
        return self.depths[j]


@dataclass(frozen=True)
class DemandSchedule:
    """Daily water demand [L/day]: either one constant value, or a dated
    map where days absent from the map default to zero.
    """

    constant_value: float | None = None
    dated_values: Mapping[Date, float] | None = None

    def __post_init__(self):
        if (self.constant_value is None) == (self.dated_values is None):
            raise InvalidInputError(
                "demand schedule needs exactly one of a constant value or a dated map"
            )
        if self.constant_value is not None:
            object.__setattr__(
                self, "constant_value", _require_nonneg("demand", self.constant_value)
            )
        else:
            entries = {}
            for day, value in self.dated_values.items():
                if not isinstance(day, Date):
                    raise InvalidInputError(f"demand key {day!r} is not a date")
                entries[day] = _require_nonneg(f"demand on {day}", value)
            object.__setattr__(self, "dated_values", dict(entries))

    @classmethod
    def constant(cls, liters_per_day: float) -> "DemandSchedule":
        return cls(constant_value=liters_per_day)

    @classmethod
    def dated(cls, values: Mapping[Date, float]) -> "DemandSchedule":
        return cls(dated_values=values)

    def on(self, day: Date) -> float:
        if self.constant_value is not None:
            return self.constant_value
        return self.dated_values.get(day, 0.0)

    def scaled(self, factor: float) -> "DemandSchedule":
        """Pointwise-scaled copy, used by what-if comparisons."""
        factor = _require_nonneg("scale factor", factor)
        if self.constant_value is not None:
            return DemandSchedule.constant(self.constant_value * factor)
        return DemandSchedule.dated(
            {d: v * factor for d, v in self.dated_values.items()}
        )


@dataclass(frozen=True, slots=True)
class DayResult:
    """One simulated day of tank accounting, all volumes in liters.

    Conservation holds to CONSERVATION_TOL_L:
        water_start + harvested + purchased
            == overflow + supplied + water_end
    ``purchased`` is zero except when a drought-strategy purchase lands on
    the day.
    """

    water_start: float
    harvested: float
    available: float
    demand: float
    supplied: float
    overflow: float
    shortfall: float
    water_end: float
    met: bool
    demand_day: bool
    purchased: float = 0.0
    date: Date | None = None

    def conservation_error(self) -> float:
        inflow = self.water_start + self.harvested + self.purchased
        outflow = self.overflow + self.supplied + self.water_end
        return inflow - outflow


@dataclass(frozen=True)
class Trajectory:
    """The evolved sequence of daily results; days chain exactly, each
    day's water_end is the next day's water_start."""

    initial_water: float
    days: tuple[DayResult, ...]

    def __len__(self) -> int:
        return len(self.days)

    @property
    def final_water(self) -> float:
        return self.days[-1].water_end if self.days else self.initial_water

    def water_levels(self) -> list[float]:
        return [d.water_end for d in self.days]

    def met_flags(self) -> list[bool]:
        return [d.met for d in self.days]

    def total(self, field_name: str) -> float:
        return sum(getattr(d, field_name) for d in self.days)


def harvest_volume(rain_mm: float, spec: SystemSpec) -> float:
    """Liters harvested from one day of rainfall: coefficient x depth x area
    (mm times m2 is liters)."""
    rain_mm = _require_nonneg("rain_mm", rain_mm)
    return spec.runoff_coeff * rain_mm * spec.catchment_area


def step(
    water_start: float,
    harvested: float,
    demand: float,
    tank_volume: float,
    *,
    purchased: float = 0.0,
    date: Date | None = None,
) -> DayResult:
    """Advance the tank one day.

    Inflow lands first and is capped at the tank volume (the excess is
    overflow); demand is then drawn. A day that cannot cover its demand
    drains the tank: everything available is supplied and the remainder is
    shortfall.
    """
    water_start = _require_nonneg("water_start", water_start)
    harvested = _require_nonneg("harvested", harvested)
    demand = _require_nonneg("demand", demand)
    tank_volume = _require_nonneg("tank_volume", tank_volume)
    purchased = _require_nonneg("purchased", purchased)
    if water_start > tank_volume:
        raise InvalidInputError(
            f"water_start {water_start} L exceeds tank volume {tank_volume} L"
        )

    inflow = harvested + purchased
    available = min(water_start + inflow, tank_volume)
    overflow = max(0.0, water_start + inflow - tank_volume)
    if available - demand >= 0:
        water_end = available - demand
        met = True
    else:
        water_end = 0.0
        met = False
    supplied = min(available, demand)
    shortfall = max(0.0, demand - available)

    return DayResult(
        water_start=water_start,
        harvested=harvested,
        available=available,
        demand=demand,
        supplied=supplied,
        overflow=overflow,
        shortfall=shortfall,
        water_end=water_end,
        met=met,
        demand_day=demand > 0,
        purchased=purchased,
        date=date,
    )


def simulate(
    series: RainfallSeries,
    spec: SystemSpec,
    demand: DemandSchedule,
    initial_water: float = 0.0,
) -> Trajectory:
    """Fold `step` over the rainfall record in date order.

    Pure and deterministic: identical inputs give an identical trajectory.
    initial_water must fit the tank.
    """
    initial_water = _require_nonneg("initial_water", initial_water)
    if initial_water > spec.tank_volume:
        raise InvalidInputError(
            f"initial_water {initial_water} L exceeds tank volume "
            f"{spec.tank_volume} L"
        )

    days = []
    water = initial_water
    for day, rain in series.items():
        result = step(
            water,
            harvest_volume(rain, spec),
            demand.on(day),
            spec.tank_volume,
            date=day,
        )
        days.append(result)
        water = result.water_end
    return Trajectory(initial_water=initial_water, days=tuple(days))
