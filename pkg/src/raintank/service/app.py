"""HTTP facade over the simulation library.

One system per server instance: the scenario (spec + demand), the rainfall
record and the observation store are loaded at startup and shared read-only
across requests; only the records store mutates, behind a single-writer
lock. Every error body is `{"kind": ..., "message": ...}`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import Depends, FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from ..balance import DemandSchedule, RainfallSeries, SystemSpec
from ..config import load_scenario
from ..errors import (
    DataUnavailableError,
    DuplicateDateError,
    InsufficientHistoryError,
    InvalidInputError,
    RainTankError,
    UnknownSystemError,
)
from ..forecast import ForecastRequest, forecast
from ..rainfall.csvio import read_csv_file
from ..records import RecordStore
from ..reliability import compare_tank_variants, estimate_reliability
from ..sweep import SweepParameter, optimal_tank, reliability_curve
from .schemas import (
    SWEEP_PARAMETER_NAMES,
    DemandOut,
    ForecastIn,
    ForecastOut,
    HealthOut,
    RecordIn,
    RecordOut,
    RecordsOut,
    ReliabilityOut,
    SpecOut,
    SweepOut,
    SystemOut,
    VariantsOut,
)

_STATUS_FOR_KIND = {
    "invalid-input": 400,
    "no-demand": 400,
    "malformed-row": 400,
    "gap": 400,
    "negative-rainfall": 400,
    "duplicate-date": 409,
    "insufficient-history": 422,
    "unknown-system": 404,
    "data-unavailable": 503,
}


@dataclass
class ServiceState:
    """Everything a running instance serves; immutable except the records
    store, which is guarded by `records_lock`."""

    name: str = "default"
    spec: SystemSpec | None = None
    demand: DemandSchedule | None = None
    history: RainfallSeries | None = None
    records: RecordStore | None = None
    load_error: str | None = None
    static_dir: Path | None = None
    records_lock: threading.Lock = field(default_factory=threading.Lock)

    def require_data(self) -> tuple[SystemSpec, DemandSchedule, RainfallSeries]:
        if self.load_error is not None:
            raise DataUnavailableError(self.load_error)
        if self.spec is None or self.demand is None or self.history is None:
            raise DataUnavailableError("no scenario/rainfall data loaded")
        return self.spec, self.demand, self.history

    def require_records(self) -> RecordStore:
        if self.records is None:
            raise DataUnavailableError("no records store configured")
        return self.records


def build_state(
    config_path: str | Path,
    rain_path: str | Path,
    records_path: str | Path | None = None,
    static_dir: str | Path | None = None,
) -> ServiceState:
    """Load scenario + rainfall, degrading to a 503-serving state on failure
    rather than refusing to start."""
    state = ServiceState()
    if static_dir is not None:
        state.static_dir = Path(static_dir)
    try:
        scenario = load_scenario(config_path)
        state.name = scenario.name
        state.spec = scenario.spec
        state.demand = scenario.demand
        state.history = read_csv_file(rain_path)
    except (RainTankError, OSError) as exc:
        state.load_error = f"failed to load data: {exc}"
        return state
    if records_path is None:
        records_path = Path(config_path).with_name("records.json")
    state.records = RecordStore(records_path, tank_volume=scenario.spec.tank_volume)
    return state


def create_app(state: ServiceState) -> FastAPI:
    app = FastAPI(title="raintank", docs_url="/api/docs", openapi_url="/api/openapi.json")

    @app.exception_handler(RainTankError)
    async def raintank_error(request: Request, exc: RainTankError):
        status = _STATUS_FOR_KIND.get(exc.kind, 400)
        return JSONResponse(
            status_code=status, content={"kind": exc.kind, "message": str(exc)}
        )

    @app.exception_handler(RequestValidationError)
    async def validation_error(request: Request, exc: RequestValidationError):
        first = exc.errors()[0] if exc.errors() else {}
        where = ".".join(str(p) for p in first.get("loc", ()))
        message = f"{where}: {first.get('msg', 'invalid request')}"
        return JSONResponse(
            status_code=400, content={"kind": "invalid-input", "message": message}
        )

    @app.exception_handler(StarletteHTTPException)
    async def http_error(request: Request, exc: StarletteHTTPException):
        return JSONResponse(
            status_code=exc.status_code,
            content={"kind": "http-error", "message": str(exc.detail)},
        )

    def check_system(system: str | None = Query(default=None)):
        if system is not None and system != state.name:
            raise UnknownSystemError(
                f"this instance serves {state.name!r}, not {system!r}"
            )

    @app.get("/api/health", response_model=HealthOut)
    def health():
        return HealthOut(status="ok", dataLoaded=state.load_error is None)

    @app.get("/api/system", response_model=SystemOut, dependencies=[Depends(check_system)])
    def system():
        spec, demand, _ = state.require_data()
        return SystemOut(
            name=state.name,
            spec=SpecOut.from_spec(spec),
            demand=DemandOut.from_demand(demand),
        )

    @app.get(
        "/api/reliability",
        response_model=ReliabilityOut,
        dependencies=[Depends(check_system)],
    )
    def reliability():
        spec, demand, history = state.require_data()
        return ReliabilityOut.from_report(estimate_reliability(history, spec, demand))

    @app.get(
        "/api/variants",
        response_model=VariantsOut,
        dependencies=[Depends(check_system)],
    )
    def variants(fraction: float = Query(default=0.25, gt=0.0, lt=1.0)):
        spec, demand, history = state.require_data()
        smaller, current, larger = compare_tank_variants(
            history, spec, demand, fraction
        )
        return VariantsOut(
            fraction=fraction,
            smaller=ReliabilityOut.from_report(smaller),
            current=ReliabilityOut.from_report(current),
            larger=ReliabilityOut.from_report(larger),
        )

    @app.post(
        "/api/forecast",
        response_model=ForecastOut,
        dependencies=[Depends(check_system)],
    )
    def forecast_endpoint(body: ForecastIn):
        spec, demand, history = state.require_data()
        request = ForecastRequest(
            start_date=body.start,
            observed_water=body.observedWaterL,
            spec=spec,
            demand=demand,
            horizon_days=body.horizonDays,
            strategies=tuple(s.to_strategy() for s in body.strategies),
        )
        return ForecastOut.from_report(forecast(history, request))

    @app.get("/api/sweep", response_model=SweepOut, dependencies=[Depends(check_system)])
    def sweep_endpoint(
        parameter: str = Query(),
        values: str = Query(),
        tolerance: float = Query(default=0.005, ge=0.0),
    ):
        spec, demand, history = state.require_data()
        kind = SWEEP_PARAMETER_NAMES.get(parameter)
        if kind is None:
            raise InvalidInputError(
                f"parameter must be one of {sorted(SWEEP_PARAMETER_NAMES)}, "
                f"got {parameter!r}"
            )
        try:
            grid = [float(v) for v in values.split(",") if v.strip()]
        except ValueError:
            raise InvalidInputError(f"values must be comma-separated numbers, got {values!r}")
        curve = reliability_curve(history, spec, demand, kind, grid)
        best = (
            optimal_tank(curve, tolerance)
            if kind is SweepParameter.TANK_VOLUME
            else None
        )
        return SweepOut.from_curve(curve, best)

    @app.get("/api/records", response_model=RecordsOut)
    def records_list():
        store = state.require_records()
        return RecordsOut(
            records=[RecordOut.from_record(r) for r in store.list_records()]
        )

    @app.post("/api/records", response_model=RecordOut, status_code=201)
    def records_add(body: RecordIn):
        store = state.require_records()
        record = body.to_record()
        with state.records_lock:
            store.add_record(record)
        return RecordOut.from_record(record)

    if state.static_dir is not None and state.static_dir.is_dir():
        app.mount(
            "/", StaticFiles(directory=state.static_dir, html=True), name="ui"
        )

    return app
