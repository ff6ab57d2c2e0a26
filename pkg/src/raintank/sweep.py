"""Reliability curves over tank volume or runoff coefficient, and the
smallest tank that reaches the reliability plateau.

The "optimum" is operationalized as the smallest swept volume whose
probability comes within a tolerance (default half a percentage point) of
the best probability on the curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .balance import DemandSchedule, RainfallSeries, SystemSpec
from .errors import InvalidInputError, NoDemandError
from .formatting import format_decimal
from .reliability import ReliabilityLabel, estimate_reliability

DEFAULT_OPTIMUM_TOLERANCE = 0.005


class SweepParameter(str, Enum):
    TANK_VOLUME = "tank_volume"
    RUNOFF_COEFF = "runoff_coeff"


@dataclass(frozen=True)
class CurvePoint:
    value: float
    probability: float
    label: ReliabilityLabel


@dataclass(frozen=True)
class ReliabilityCurve:
    """Reliability as a function of one swept parameter, everything else
    held at `fixed_spec` / `fixed_demand`. Points ascend by value."""

    parameter: SweepParameter
    points: tuple[CurvePoint, ...]
    fixed_spec: SystemSpec
    fixed_demand: DemandSchedule

    def values(self) -> list[float]:
        return [p.value for p in self.points]

    def probabilities(self) -> list[float]:
        return [p.probability for p in self.points]


def _validated_values(parameter: SweepParameter, values) -> list[float]:
    values = [float(v) for v in values]
    if not values:
        raise InvalidInputError("sweep needs at least one parameter value")
    for i, v in enumerate(values):
        if not math.isfinite(v):
            raise InvalidInputError(f"sweep value #{i + 1} ({v!r}) is not finite")
        if parameter is SweepParameter.TANK_VOLUME and v <= 0:
            raise InvalidInputError(f"sweep value #{i + 1} ({v}) is not a valid tank volume")
        if parameter is SweepParameter.RUNOFF_COEFF and not 0.0 <= v <= 1.0:
            raise InvalidInputError(
                f"sweep value #{i + 1} ({v}) is not a valid runoff coefficient"
            )
        if i and values[i - 1] >= v:
            raise InvalidInputError(
                f"sweep values must be strictly ascending; value #{i + 1} ({v}) "
                f"does not exceed {values[i - 1]}"
            )
    return values


def reliability_curve(
    history: RainfallSeries,
    base_spec: SystemSpec,
    demand: DemandSchedule,
    parameter: SweepParameter,
    values,
) -> ReliabilityCurve:
    """One reliability estimate per swept value. Deterministic; grid points
    are independent of each other."""
    parameter = SweepParameter(parameter)
    values = _validated_values(parameter, values)

    points = []
    for v in values:
        if parameter is SweepParameter.TANK_VOLUME:
            spec = base_spec.with_tank_volume(v)
        else:
            spec = base_spec.with_runoff_coeff(v)
        report = estimate_reliability(history, spec, demand)
        if report.probability is None:
            raise NoDemandError(
                "demand schedule has no positive-demand day over the history; "
                "a reliability curve is undefined"
            )
        points.append(CurvePoint(v, report.probability, report.label))

    return ReliabilityCurve(
        parameter=parameter,
        points=tuple(points),
        fixed_spec=base_spec,
        fixed_demand=demand,
    )


def optimal_tank(
    curve: ReliabilityCurve, tolerance: float = DEFAULT_OPTIMUM_TOLERANCE
) -> tuple[float, float]:
    """Smallest swept volume whose probability is within `tolerance` of the
    curve's best; returns (volume, probability)."""
    if curve.parameter is not SweepParameter.TANK_VOLUME:
        raise InvalidInputError("optimal_tank needs a tank-volume curve")
    if not curve.points:
        raise InvalidInputError("optimal_tank needs a non-empty curve")
    if tolerance < 0:
        raise InvalidInputError(f"tolerance must be >= 0, got {tolerance}")
    best = max(p.probability for p in curve.points)
    for point in curve.points:
        if point.probability >= best - tolerance:
            return point.value, point.probability
    raise AssertionError("unreachable: the max itself satisfies the cut")


def runoff_comparison(
    history: RainfallSeries,
    base_spec: SystemSpec,
    demand: DemandSchedule,
    k_values,
    tank_values,
) -> list[ReliabilityCurve]:
    """One tank-volume curve per runoff coefficient, all on the same grid;
    curves for larger coefficients dominate pointwise."""
    k_values = [float(k) for k in k_values]
    if not k_values:
        raise InvalidInputError("runoff comparison needs at least one coefficient")
    for i, k in enumerate(k_values):
        if not (math.isfinite(k) and 0.0 <= k <= 1.0):
            raise InvalidInputError(
                f"runoff coefficient #{i + 1} ({k!r}) is not in [0, 1]"
            )
    return [
        reliability_curve(
            history,
            base_spec.with_runoff_coeff(k),
            demand,
            SweepParameter.TANK_VOLUME,
            tank_values,
        )
        for k in k_values
    ]


def curve_to_csv(curve: ReliabilityCurve) -> str:
    """Plot-ready CSV: `parameter_value,probability,label`, one point per row."""
    lines = ["parameter_value,probability,label"]
    for point in curve.points:
        lines.append(
            f"{format_decimal(point.value)},{format_decimal(point.probability)},"
            f"{point.label.value}"
        )
    return "\n".join(lines)
