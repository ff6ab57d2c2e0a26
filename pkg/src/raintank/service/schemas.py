"""Request/response models for the HTTP API (and the CLI's --json mode).

Wire convention: lowerCamelCase keys, volumes in liters with an L suffix in
the name, probabilities as fractions rounded to 4 decimals (displays render
percent), dates as ISO-8601 strings.
"""

from __future__ import annotations

from datetime import date as Date
from typing import Literal, Union

from pydantic import BaseModel, Field
from typing_extensions import Annotated

from ..balance import DemandSchedule, SystemSpec
from ..forecast import DemandOverride, ForecastReport, Purchase, Strategy
from ..records import ObservationRecord
from ..reliability import ReliabilityReport, percent_of
from ..sweep import ReliabilityCurve, SweepParameter

#: external names for sweep parameters <-> library enum
SWEEP_PARAMETER_NAMES = {
    "tank": SweepParameter.TANK_VOLUME,
    "runoff": SweepParameter.RUNOFF_COEFF,
}


def round_probability(p: float | None) -> float | None:
    return None if p is None else round(p, 4)


class SpecOut(BaseModel):
    catchmentAreaM2: float
    runoffCoeff: float
    tankVolumeL: float

    @classmethod
    def from_spec(cls, spec: SystemSpec) -> "SpecOut":
        return cls(
            catchmentAreaM2=spec.catchment_area,
            runoffCoeff=spec.runoff_coeff,
            tankVolumeL=spec.tank_volume,
        )


class DemandOut(BaseModel):
    constantLPerDay: float | None = None
    dated: dict[str, float] | None = None

    @classmethod
    def from_demand(cls, demand: DemandSchedule) -> "DemandOut":
        if demand.constant_value is not None:
            return cls(constantLPerDay=demand.constant_value)
        return cls(
            dated={d.isoformat(): v for d, v in sorted(demand.dated_values.items())}
        )


class SystemOut(BaseModel):
    name: str
    spec: SpecOut
    demand: DemandOut


class ReliabilityOut(BaseModel):
    probability: float | None
    percent: int | None
    label: str | None
    successDays: int
    demandDays: int
    windowStart: Date
    windowEnd: Date
    tankVolumeL: float
    warnings: list[str]

    @classmethod
    def from_report(cls, report: ReliabilityReport) -> "ReliabilityOut":
        return cls(
            probability=round_probability(report.probability),
            percent=report.percent,
            label=None if report.label is None else report.label.value,
            successDays=report.success_days,
            demandDays=report.demand_days,
            windowStart=report.window_start,
            windowEnd=report.window_end,
            tankVolumeL=report.spec.tank_volume,
            warnings=list(report.warnings),
        )


class VariantsOut(BaseModel):
    fraction: float
    smaller: ReliabilityOut
    current: ReliabilityOut
    larger: ReliabilityOut


class DemandOverrideIn(BaseModel):
    kind: Literal["demandOverride"] = "demandOverride"
    litersPerDay: float

    def to_strategy(self) -> Strategy:
        return DemandOverride(liters_per_day=self.litersPerDay)


class PurchaseIn(BaseModel):
    kind: Literal["purchase"] = "purchase"
    volumeL: float
    onDay: int = 0

    def to_strategy(self) -> Strategy:
        return Purchase(volume=self.volumeL, on_day=self.onDay)


StrategyIn = Annotated[
    Union[DemandOverrideIn, PurchaseIn], Field(discriminator="kind")
]


class ForecastIn(BaseModel):
    start: Date
    observedWaterL: float
    horizonDays: int = 30
    strategies: list[StrategyIn] = Field(default_factory=list)


class ForecastOut(BaseModel):
    probability: float | None
    percent: int | None
    label: str | None
    successDays: int
    demandDays: int
    minEndWaterL: float
    perYearEndWaterL: dict[int, float]
    yearsUsed: list[int]
    purchaseOverflowL: float
    warnings: list[str]

    @classmethod
    def from_report(cls, report: ForecastReport) -> "ForecastOut":
        return cls(
            probability=round_probability(report.probability),
            percent=percent_of(report.probability),
            label=None if report.label is None else report.label.value,
            successDays=report.success_days,
            demandDays=report.demand_days,
            minEndWaterL=report.min_end_water,
            perYearEndWaterL={y: report.per_year_end_water[y] for y in report.years_used},
            yearsUsed=list(report.years_used),
            purchaseOverflowL=report.purchase_overflow,
            warnings=list(report.warnings),
        )


class CurvePointOut(BaseModel):
    value: float
    probability: float
    label: str


class OptimalOut(BaseModel):
    tankVolumeL: float
    probability: float


class SweepOut(BaseModel):
    parameter: str
    points: list[CurvePointOut]
    optimal: OptimalOut | None = None

    @classmethod
    def from_curve(
        cls, curve: ReliabilityCurve, optimal: tuple[float, float] | None
    ) -> "SweepOut":
        external = {v: k for k, v in SWEEP_PARAMETER_NAMES.items()}[curve.parameter]
        return cls(
            parameter=external,
            points=[
                CurvePointOut(
                    value=p.value,
                    probability=round_probability(p.probability),
                    label=p.label.value,
                )
                for p in curve.points
            ],
            optimal=None
            if optimal is None
            else OptimalOut(
                tankVolumeL=optimal[0], probability=round_probability(optimal[1])
            ),
        )


class RecordIn(BaseModel):
    date: Date
    measuredWaterL: float
    potable: bool
    note: str | None = None

    def to_record(self) -> ObservationRecord:
        return ObservationRecord(
            date=self.date,
            measured_water=self.measuredWaterL,
            potable=self.potable,
            note=self.note,
        )


class RecordOut(BaseModel):
    date: Date
    measuredWaterL: float
    potable: bool
    note: str | None = None

    @classmethod
    def from_record(cls, record: ObservationRecord) -> "RecordOut":
        return cls(
            date=record.date,
            measuredWaterL=record.measured_water,
            potable=record.potable,
            note=record.note,
        )


class RecordsOut(BaseModel):
    records: list[RecordOut]


class HealthOut(BaseModel):
    status: str
    dataLoaded: bool


class ErrorBody(BaseModel):
    kind: str
    message: str
