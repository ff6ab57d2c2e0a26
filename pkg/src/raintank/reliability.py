"""Historical reliability of a harvesting system.

One continuous pass over the record from an empty tank; reliability is the
fraction of positive-demand days the system covered, classified on a
five-band qualitative scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from datetime import date as Date
from enum import Enum

from .balance import DemandSchedule, RainfallSeries, SystemSpec, simulate
from .errors import InvalidInputError

#: histories shorter than this many days get the "short-history" warning
FIVE_YEARS_DAYS = 1825

WARN_SHORT_HISTORY = "short-history"
WARN_NO_DEMAND = "no-demand"


class ReliabilityLabel(str, Enum):
    UNLIKELY = "Unlikely"
    OCCASIONALLY = "Occasionally"
    FAIR = "Fair"
    GOOD = "Good"
    VERY_GOOD = "VeryGood"


def classify(probability: float) -> ReliabilityLabel:
    """Map a success probability onto the qualitative scale.

    Band edges belong to the band below them: 0.5, 0.6, 0.8 and 0.9 close
    Unlikely, Occasionally, Fair and Good respectively.
    """
    if not (isinstance(probability, (int, float)) and math.isfinite(probability)):
        raise InvalidInputError(f"probability must be finite, got {probability!r}")
    if not 0.0 <= probability <= 1.0:
        raise InvalidInputError(f"probability must be in [0, 1], got {probability}")
    if probability <= 0.5:
        return ReliabilityLabel.UNLIKELY
    if probability <= 0.6:
        return ReliabilityLabel.OCCASIONALLY
    if probability <= 0.8:
        return ReliabilityLabel.FAIR
    if probability <= 0.9:
        return ReliabilityLabel.GOOD
    return ReliabilityLabel.VERY_GOOD


def percent_of(probability: float | None) -> int | None:
    """Probability as a whole percent, rounded half-up (0.745 -> 75)."""
    if probability is None:
        return None
    return int(math.floor(probability * 100.0 + 0.5))


@dataclass(frozen=True)
class ReliabilityReport:
    """Outcome of one historical pass.

    probability is None (with the "no-demand" warning) when the schedule
    has no positive-demand day in the window; label follows probability.
    """

    probability: float | None
    label: ReliabilityLabel | None
    success_days: int
    demand_days: int
    window_start: Date
    window_end: Date
    spec: SystemSpec
    warnings: tuple[str, ...] = ()

    @property
    def percent(self) -> int | None:
        return percent_of(self.probability)


def estimate_reliability(
    history: RainfallSeries, spec: SystemSpec, demand: DemandSchedule
) -> ReliabilityReport:
    """Simulate the whole record from an empty tank and count demand days met.

    The pass is continuous: water carries across year boundaries, nothing is
    restarted. Records shorter than five years are accepted but flagged.
    """
    trajectory = simulate(history, spec, demand, initial_water=0.0)
    demand_days = 0
    success_days = 0
    for day in trajectory.days:
        if day.demand_day:
            demand_days += 1
            if day.met:
                success_days += 1

    warnings = []
    if len(history) < FIVE_YEARS_DAYS:
        warnings.append(WARN_SHORT_HISTORY)

    if demand_days > 0:
        probability = success_days / demand_days
        label = classify(probability)
    else:
        probability = None
        label = None
        warnings.append(WARN_NO_DEMAND)

    return ReliabilityReport(
        probability=probability,
        label=label,
        success_days=success_days,
        demand_days=demand_days,
        window_start=history.start_date,
        window_end=history.end_date,
        spec=spec,
        warnings=tuple(warnings),
    )


def compare_tank_variants(
    history: RainfallSeries,
    spec: SystemSpec,
    demand: DemandSchedule,
    fraction: float = 0.25,
) -> tuple[ReliabilityReport, ReliabilityReport, ReliabilityReport]:
    """Reliability for the tank shrunk and grown by `fraction`, alongside
    the tank as-is. Returns (smaller, current, larger)."""
    if not 0.0 < fraction < 1.0:
        raise InvalidInputError(f"fraction must be in (0, 1), got {fraction}")
    smaller = spec.with_tank_volume(spec.tank_volume * (1.0 - fraction))
    larger = spec.with_tank_volume(spec.tank_volume * (1.0 + fraction))
    return (
        estimate_reliability(history, smaller, demand),
        estimate_reliability(history, spec, demand),
        estimate_reliability(history, larger, demand),
    )
