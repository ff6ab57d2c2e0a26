"""raintank: daily water-balance simulation for rainwater harvesting tanks.

Estimates how reliably a catchment-plus-tank system meets a daily water
demand from historical rainfall, forecasts the next 30 days from an
observed tank level, sweeps tank sizes and runoff coefficients, and
evaluates drought strategies. Exposed as a library, a CLI, an HTTP
service and a web UI.
"""

from .balance import (
    CONSERVATION_TOL_L,
    DayResult,
    DemandSchedule,
    RainfallSeries,
    SystemSpec,
    Trajectory,
    harvest_volume,
    simulate,
    step,
)
from .errors import RainTankError
from .forecast import (
    DemandOverride,
    ForecastReport,
    ForecastRequest,
    Purchase,
    apply_strategies,
    forecast,
)
from .records import ObservationRecord, RecordStore
from .reliability import (
    ReliabilityLabel,
    ReliabilityReport,
    classify,
    compare_tank_variants,
    estimate_reliability,
)
from .sweep import (
    ReliabilityCurve,
    SweepParameter,
    curve_to_csv,
    optimal_tank,
    reliability_curve,
    runoff_comparison,
)

__version__ = "0.1.0"

__all__ = [
    "CONSERVATION_TOL_L",
    "DayResult",
    "DemandOverride",
    "DemandSchedule",
    "ForecastReport",
    "ForecastRequest",
    "ObservationRecord",
    "Purchase",
    "RainTankError",
    "RainfallSeries",
    "RecordStore",
    "ReliabilityCurve",
    "ReliabilityLabel",
    "ReliabilityReport",
    "SweepParameter",
    "SystemSpec",
    "Trajectory",
    "apply_strategies",
    "classify",
    "compare_tank_variants",
    "curve_to_csv",
    "estimate_reliability",
    "forecast",
    "harvest_volume",
    "optimal_tank",
    "reliability_curve",
    "runoff_comparison",
    "simulate",
    "step",
]
