"""Near-term performance forecast from an observed tank level.

Replays the same calendar window of every past year in the rainfall record,
starting each replay from the user-measured water level, then pools the
success/demand counts across years. The smallest end-of-window level across
years is the conservative "water left afterwards" estimate.

Drought strategies modify the request before simulation: a demand override
replaces the schedule over the horizon, and each one-time purchase adds
water at the start of its day, capped at the tank volume.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from datetime import date as Date, timedelta

from .balance import (
    DemandSchedule,
    RainfallSeries,
    SystemSpec,
    harvest_volume,
    step,
)
from .errors import InsufficientHistoryError, InvalidInputError
from .reliability import (
    WARN_NO_DEMAND,
    ReliabilityLabel,
    classify,
)


@dataclass(frozen=True)
class DemandOverride:
    """Replace the daily demand with a flat value over the horizon [L/day]."""

    liters_per_day: float

    def __post_init__(self):
        if not self.liters_per_day >= 0:
            raise InvalidInputError(
                f"demand override must be >= 0 L/day, got {self.liters_per_day}"
            )


@dataclass(frozen=True)
class Purchase:
    """One-time water purchase [L] landing at the start of day `on_day`
    (offset from the forecast start)."""

    volume: float
    on_day: int = 0

    def __post_init__(self):
        if not self.volume > 0:
            raise InvalidInputError(f"purchase volume must be > 0 L, got {self.volume}")
        if self.on_day < 0:
            raise InvalidInputError(f"purchase day must be >= 0, got {self.on_day}")


Strategy = DemandOverride | Purchase


@dataclass(frozen=True)
class ForecastRequest:
    """What the user asks: from `start_date` with `observed_water` liters in
    the tank, can the system cover `horizon_days` of demand?

    `purchase_overflow` is filled in by apply_strategies when a day-0
    purchase does not fit the tank.
    """

    start_date: Date
    observed_water: float
    spec: SystemSpec
    demand: DemandSchedule
    horizon_days: int = 30
    strategies: tuple[Strategy, ...] = ()
    purchase_overflow: float = 0.0

    def __post_init__(self):
        if not 0 <= self.observed_water <= self.spec.tank_volume:
            raise InvalidInputError(
                f"observed_water {self.observed_water} L must lie in "
                f"[0, {self.spec.tank_volume}] L"
            )
        if self.horizon_days < 1:
            raise InvalidInputError(
                f"horizon_days must be >= 1, got {self.horizon_days}"
            )
        object.__setattr__(self, "strategies", tuple(self.strategies))
        for strategy in self.strategies:
            if isinstance(strategy, Purchase) and strategy.on_day >= self.horizon_days:
                raise InvalidInputError(
                    f"purchase on day {strategy.on_day} is beyond the "
                    f"{self.horizon_days}-day horizon"
                )


@dataclass(frozen=True)
class ForecastReport:
    """Pooled outcome across replayed years."""

    probability: float | None
    label: ReliabilityLabel | None
    success_days: int
    demand_days: int
    per_year_end_water: dict[int, float]
    min_end_water: float
    years_used: tuple[int, ...]
    purchase_overflow: float = 0.0
    warnings: tuple[str, ...] = ()


def apply_strategies(request: ForecastRequest) -> ForecastRequest:
    """Normalize a request so its forecast reflects the chosen strategies.

    The last demand override wins and replaces the schedule outright.
    Day-0 purchases fold into the observed water (capped at the tank, the
    excess recorded as purchase_overflow); later purchases stay on the
    request and are added mid-replay. Idempotent.
    """
    if not request.strategies:
        return request

    demand = request.demand
    water = request.observed_water
    overflow = request.purchase_overflow
    remaining: list[Strategy] = []
    for strategy in request.strategies:
        if isinstance(strategy, DemandOverride):
            demand = DemandSchedule.constant(strategy.liters_per_day)
        elif strategy.on_day == 0:
            filled = min(water + strategy.volume, request.spec.tank_volume)
            overflow += max(0.0, water + strategy.volume - request.spec.tank_volume)
            water = filled
        else:
            remaining.append(strategy)

    return replace(
        request,
        observed_water=water,
        demand=demand,
        strategies=tuple(remaining),
        purchase_overflow=overflow,
    )


def _window_month_day(start: Date) -> tuple[int, int]:
    # leap days are dropped from alignment; Feb 29 starts count as Mar 1
    if (start.month, start.day) == (2, 29):
        return 3, 1
    return start.month, start.day


def _next_window_date(day: Date) -> Date:
    day = day + timedelta(days=1)
    if (day.month, day.day) == (2, 29):
        day = day + timedelta(days=1)
    return day


def _window_dates(year: int, month: int, day: int, horizon: int) -> list[Date]:
    dates = [Date(year, month, day)]
    for _ in range(horizon - 1):
        dates.append(_next_window_date(dates[-1]))
    return dates


def forecast(history: RainfallSeries, request: ForecastRequest) -> ForecastReport:
    """Pooled probability of covering demand over the horizon, replaying the
    rainfall of each past year aligned by month and day.

    A year contributes only if the record holds its entire window (windows
    crossing December 31 draw their tail from the following year); years
    lacking the window are skipped. No usable year at all is an error.
    """
    request = apply_strategies(request)
    spec = request.spec

    depths = {
        d: mm for d, mm in history.items() if not (d.month == 2 and d.day == 29)
    }
    month, day = _window_month_day(request.start_date)

    purchases: dict[int, float] = {}
    for strategy in request.strategies:
        if isinstance(strategy, Purchase):
            purchases[strategy.on_day] = purchases.get(strategy.on_day, 0.0) + strategy.volume

    success_days = 0
    demand_days = 0
    per_year_end: dict[int, float] = {}
    for year in range(history.start_date.year, history.end_date.year + 1):
        window = _window_dates(year, month, day, request.horizon_days)
        if any(d not in depths for d in window):
            continue
        water = request.observed_water
        for offset, rain_date in enumerate(window):
            result = step(
                water,
                harvest_volume(depths[rain_date], spec),
                request.demand.on(request.start_date + timedelta(days=offset)),
                spec.tank_volume,
                purchased=purchases.get(offset, 0.0),
                date=rain_date,
            )
            if result.demand_day:
                demand_days += 1
                if result.met:
                    success_days += 1
            water = result.water_end
        per_year_end[year] = water

    if not per_year_end:
        raise InsufficientHistoryError(
            f"no past year in {history.start_date}..{history.end_date} covers a "
            f"{request.horizon_days}-day window starting {month:02d}-{day:02d}"
        )

    warnings: tuple[str, ...] = ()
    if demand_days > 0:
        probability = success_days / demand_days
        label = classify(probability)
    else:
        probability = None
        label = None
        warnings = (WARN_NO_DEMAND,)

    return ForecastReport(
        probability=probability,
        label=label,
        success_days=success_days,
        demand_days=demand_days,
        per_year_end_water=per_year_end,
        min_end_water=min(per_year_end.values()),
        years_used=tuple(sorted(per_year_end)),
        purchase_overflow=request.purchase_overflow,
        warnings=warnings,
    )
