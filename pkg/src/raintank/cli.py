"""Command-line front door.

Thin client over the library: loads a scenario config plus a rainfall CSV,
runs the requested analysis and prints a human summary (or, with --json,
the same camelCase document the HTTP service serves). --out writes the
plot-ready artifact: CSV curves for sweep/variants, per-year end levels
for forecast, the canonical rainfall CSV for fetch, JSON elsewhere.

Exit codes: 0 success, 1 data/validation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import date as Date
from pathlib import Path

from .balance import DemandSchedule, RainfallSeries, SystemSpec
from .config import API_KEY_ENV, load_provider_config, load_scenario
from .errors import InvalidInputError, RainTankError
from .formatting import format_decimal
from .forecast import DemandOverride, ForecastRequest, Purchase, forecast
from .rainfall import (
    RainfallCache,
    StationQuery,
    fetch_history,
    parse_csv,
    write_csv,
)
from .records import ObservationRecord, RecordStore
from .reliability import (
    ReliabilityReport,
    compare_tank_variants,
    estimate_reliability,
)
from .service.schemas import (
    ForecastOut,
    RecordOut,
    RecordsOut,
    ReliabilityOut,
    SweepOut,
    VariantsOut,
)
from .sweep import (
    SweepParameter,
    curve_to_csv,
    optimal_tank,
    reliability_curve,
)

LOG_SPACED_POINTS = 24
DEFAULT_GRID_SPAN_DAYS = 120


def _load_rain(args) -> RainfallSeries:
    text = Path(args.rain).read_text(encoding="utf-8")
    series = parse_csv(text, fill_gaps=args.fill_zero)
    if args.fill_zero:
        data_rows = sum(1 for line in text.splitlines()[1:] if line.strip())
        filled = len(series) - data_rows
        if filled:
            print(f"filled {filled} missing days with 0 mm", file=sys.stderr)
    return series


def _warn(report: ReliabilityReport) -> None:
    for code in report.warnings:
        if code == "short-history":
            print(
                "warning: history shorter than 5 years (short-history)",
                file=sys.stderr,
            )


def _emit(args, payload_json: str, human: str, artifact: str | None = None) -> None:
    """Print the human or JSON form; write the machine artifact to --out."""
    if args.json:
        print(payload_json)
    else:
        print(human)
    if getattr(args, "out", None):
        Path(args.out).write_text(
            artifact if artifact is not None else payload_json, encoding="utf-8"
        )


def _fmt_prob(probability: float | None, n_s: int, n_d: int) -> str:
    if probability is None:
        return "undefined (no demand days in window)"
    return f"{probability * 100:.1f}% ({n_s}/{n_d} demand days met)"


def _reliability_human(name: str, spec: SystemSpec, report: ReliabilityReport) -> str:
    lines = [
        f"System:      {name} (A={spec.catchment_area:g} m2, "
        f"k={spec.runoff_coeff:g}, V={spec.tank_volume:g} L)",
        f"Window:      {report.window_start} .. {report.window_end} "
        f"({report.demand_days} demand days)",
        f"Reliability: {_fmt_prob(report.probability, report.success_days, report.demand_days)}",
        f"Label:       {report.label.value if report.label else '-'}",
    ]
    return "\n".join(lines)


def cmd_reliability(args) -> int:
    scenario = load_scenario(args.config)
    history = _load_rain(args)
    report = estimate_reliability(history, scenario.spec, scenario.demand)
    _warn(report)
    _emit(
        args,
        ReliabilityOut.from_report(report).model_dump_json(indent=2),
        _reliability_human(scenario.name, scenario.spec, report),
    )
    return 0


def cmd_variants(args) -> int:
    scenario = load_scenario(args.config)
    history = _load_rain(args)
    smaller, current, larger = compare_tank_variants(
        history, scenario.spec, scenario.demand, args.fraction
    )
    _warn(current)
    payload = VariantsOut(
        fraction=args.fraction,
        smaller=ReliabilityOut.from_report(smaller),
        current=ReliabilityOut.from_report(current),
        larger=ReliabilityOut.from_report(larger),
    )
    rows = [
        ("smaller", smaller),
        ("current", current),
        ("larger", larger),
    ]
    human_lines = [f"Tank variants (+/-{args.fraction * 100:g}%):"]
    for tag, report in rows:
        human_lines.append(
            f"  {tag:8} V={report.spec.tank_volume:10.1f} L  "
            f"{_fmt_prob(report.probability, report.success_days, report.demand_days)}"
            f"  [{report.label.value if report.label else '-'}]"
        )
    # the three variants form a tiny tank-size curve; same plot-ready schema
    csv_lines = ["parameter_value,probability,label"]
    for _, report in rows:
        csv_lines.append(
            f"{format_decimal(report.spec.tank_volume)},"
            f"{format_decimal(report.probability) if report.probability is not None else ''},"
            f"{report.label.value if report.label else ''}"
        )
    _emit(
        args,
        payload.model_dump_json(indent=2),
        "\n".join(human_lines),
        artifact="\n".join(csv_lines),
    )
    return 0


def _parse_purchase(text: str) -> Purchase:
    liters, _, day = text.partition("@")
    try:
        return Purchase(volume=float(liters), on_day=int(day) if day else 0)
    except ValueError:
        raise InvalidInputError(
            f"--purchase wants <liters>@<day>, got {text!r}"
        ) from None


def cmd_forecast(args) -> int:
    scenario = load_scenario(args.config)
    history = _load_rain(args)
    strategies = []
    if args.demand_override is not None:
        strategies.append(DemandOverride(liters_per_day=args.demand_override))
    for text in args.purchase or []:
        strategies.append(_parse_purchase(text))
    request = ForecastRequest(
        start_date=args.start,
        observed_water=args.water,
        spec=scenario.spec,
        demand=scenario.demand,
        horizon_days=args.horizon,
        strategies=tuple(strategies),
    )
    report = forecast(history, request)
    worst = min(report.per_year_end_water, key=report.per_year_end_water.get)
    human = "\n".join(
        [
            f"Forecast:      {args.start} +{args.horizon} days, "
            f"starting from {args.water:g} L",
            f"Replayed:      {len(report.years_used)} years "
            f"({', '.join(str(y) for y in report.years_used)})",
            f"Probability:   {_fmt_prob(report.probability, report.success_days, report.demand_days)}",
            f"Label:         {report.label.value if report.label else '-'}",
            f"Min end water: {report.min_end_water:g} L (worst year {worst})",
        ]
    )
    # per-replay-year end levels, the bar data behind the outlook charts
    csv_lines = ["year,end_water_l"]
    for year in report.years_used:
        csv_lines.append(f"{year},{format_decimal(report.per_year_end_water[year])}")
    _emit(
        args,
        ForecastOut.from_report(report).model_dump_json(indent=2),
        human,
        artifact="\n".join(csv_lines),
    )
    return 0


def _default_tank_grid(demand: DemandSchedule) -> list[float]:
    """24 log-spaced volumes spanning one day's to 120 days' demand."""
    import math

    if demand.constant_value is None or demand.constant_value <= 0:
        raise InvalidInputError(
            "--values is required unless the demand schedule is a positive constant"
        )
    lo = math.log(demand.constant_value)
    hi = math.log(demand.constant_value * DEFAULT_GRID_SPAN_DAYS)
    n = LOG_SPACED_POINTS
    return [math.exp(lo + i * (hi - lo) / (n - 1)) for i in range(n)]


def cmd_sweep(args) -> int:
    scenario = load_scenario(args.config)
    history = _load_rain(args)
    parameter = (
        SweepParameter.TANK_VOLUME if args.parameter == "tank" else SweepParameter.RUNOFF_COEFF
    )
    if args.values:
        values = [float(v) for v in args.values.split(",") if v.strip()]
    elif parameter is SweepParameter.TANK_VOLUME:
        values = _default_tank_grid(scenario.demand)
    else:
        raise InvalidInputError("--values is required for a runoff sweep")
    curve = reliability_curve(history, scenario.spec, scenario.demand, parameter, values)
    best = (
        optimal_tank(curve, args.tolerance)
        if parameter is SweepParameter.TANK_VOLUME
        else None
    )
    payload = SweepOut.from_curve(curve, best)
    human_lines = [f"Reliability vs {args.parameter}:"]
    for point in curve.points:
        human_lines.append(
            f"  {point.value:12.2f}  {point.probability * 100:6.1f}%  {point.label.value}"
        )
    if best is not None:
        human_lines.append(
            f"Optimum: {best[0]:g} L at {best[1] * 100:.1f}% "
            f"(within {args.tolerance:g} of the best)"
        )
    _emit(
        args,
        payload.model_dump_json(indent=2),
        "\n".join(human_lines),
        artifact=curve_to_csv(curve),
    )
    return 0


def cmd_fetch(args) -> int:
    query = StationQuery(
        latitude=args.lat,
        longitude=args.lon,
        start_date=args.start,
        end_date=args.end,
    )
    config = load_provider_config(
        args.provider_config, base_url=args.base_url, timeout=args.timeout
    )
    cache = RainfallCache(args.cache_dir) if args.cache_dir else None
    series = cache.get(query) if cache else None
    source = "cache"
    if series is None:
        source = "provider"
        if not config.api_key:
            print(
                f"warning: {API_KEY_ENV} is not set; the provider may reject the request",
                file=sys.stderr,
            )
        series = fetch_history(query, config)
        if cache:
            cache.put(query, series, provider="visual-crossing")
    summary = {
        "days": len(series),
        "startDate": series.start_date.isoformat(),
        "endDate": series.end_date.isoformat(),
        "totalMm": round(sum(series.depths), 3),
        "source": source,
    }
    human = (
        f"{len(series)} days of rainfall for ({args.lat:.5f}, {args.lon:.5f}) "
        f"from {source}; total {summary['totalMm']:g} mm"
    )
    _emit(args, json.dumps(summary, indent=2), human, artifact=write_csv(series))
    return 0


def cmd_record_add(args) -> int:
    tank_volume = None
    if args.config:
        tank_volume = load_scenario(args.config).spec.tank_volume
    store = RecordStore(args.store, tank_volume=tank_volume)
    record = ObservationRecord(
        date=args.date,
        measured_water=args.water,
        potable=args.potable,
        note=args.note,
    )
    store.add_record(record)
    print(
        f"recorded {args.water:g} L ({'potable' if args.potable else 'not potable'}) "
        f"on {args.date}"
    )
    return 0


def cmd_record_list(args) -> int:
    store = RecordStore(args.store)
    records = store.list_records(args.start, args.end)
    payload = RecordsOut(records=[RecordOut.from_record(r) for r in records])
    if args.json:
        print(payload.model_dump_json(indent=2))
    elif not records:
        print("no records")
    else:
        for r in records:
            note = f"  # {r.note}" if r.note else ""
            flag = "potable" if r.potable else "not potable"
            print(f"{r.date}  {r.measured_water:10.1f} L  {flag}{note}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import build_state, create_app

    state = build_state(
        args.config, args.rain, records_path=args.records, static_dir=args.static_dir
    )
    if state.load_error:
        print(f"warning: {state.load_error} (serving 503s)", file=sys.stderr)
    uvicorn.run(create_app(state), host=args.host, port=args.port)
    return 0


def _date_arg(text: str) -> Date:
    try:
        return Date.fromisoformat(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected YYYY-MM-DD, got {text!r}")


def _add_data_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", required=True, help="scenario YAML (system + demand)")
    parser.add_argument("--rain", required=True, help="rainfall CSV (date,rain_mm)")
    parser.add_argument(
        "--fill-zero",
        action="store_true",
        help="fill gaps in the rainfall record with 0 mm instead of failing",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--out", help="also write the result artifact to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="raintank",
        description="Rainwater harvesting tank simulator: reliability, forecasts, sizing",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reliability", help="historical reliability of the system")
    _add_data_args(p)
    p.set_defaults(func=cmd_reliability)

    p = sub.add_parser("variants", help="compare smaller/current/larger tanks")
    _add_data_args(p)
    p.add_argument("--fraction", type=float, default=0.25, help="size delta (default 0.25)")
    p.set_defaults(func=cmd_variants)

    p = sub.add_parser("forecast", help="30-day outlook from an observed tank level")
    _add_data_args(p)
    p.add_argument("--start", type=_date_arg, required=True, help="forecast start date")
    p.add_argument("--water", type=float, required=True, help="observed tank water [L]")
    p.add_argument("--horizon", type=int, default=30, help="days to look ahead (default 30)")
    p.add_argument(
        "--demand-override", type=float, help="replace demand with this value [L/day]"
    )
    p.add_argument(
        "--purchase",
        action="append",
        metavar="LITERS@DAY",
        help="one-time purchase, e.g. 1000@0 (repeatable)",
    )
    p.set_defaults(func=cmd_forecast)

    p = sub.add_parser("sweep", help="reliability curve over tank size or runoff")
    _add_data_args(p)
    p.add_argument(
        "--parameter", choices=["tank", "runoff"], default="tank", help="swept parameter"
    )
    p.add_argument("--values", help="comma-separated grid (default: log-spaced tank grid)")
    p.add_argument(
        "--tolerance",
        type=float,
        default=0.005,
        help="optimum plateau tolerance (default 0.005)",
    )
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("fetch", help="download daily rainfall history")
    p.add_argument("--lat", type=float, required=True)
    p.add_argument("--lon", type=float, required=True)
    p.add_argument("--from", dest="start", type=_date_arg, required=True)
    p.add_argument("--to", dest="end", type=_date_arg, required=True)
    p.add_argument("--cache-dir", help="on-disk rainfall cache directory")
    p.add_argument("--base-url", help="provider base URL override")
    p.add_argument("--timeout", type=float, help="request timeout [s]")
    p.add_argument("--provider-config", help="YAML with provider settings")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--out", help="write the fetched series as CSV to this file")
    p.set_defaults(func=cmd_fetch)

    p = sub.add_parser("record", help="monthly observation log")
    record_sub = p.add_subparsers(dest="record_command", required=True)

    q = record_sub.add_parser("add", help="append one observation")
    q.add_argument("--store", required=True, help="records JSON document")
    q.add_argument("--date", type=_date_arg, required=True)
    q.add_argument("--water", type=float, required=True, help="measured water [L]")
    q.add_argument("--potable", dest="potable", action="store_true", default=True)
    q.add_argument("--not-potable", dest="potable", action="store_false")
    q.add_argument("--note")
    q.add_argument("--config", help="scenario YAML, enables tank-volume validation")
    q.set_defaults(func=cmd_record_add)

    q = record_sub.add_parser("list", help="list observations, ascending")
    q.add_argument("--store", required=True, help="records JSON document")
    q.add_argument("--from", dest="start", type=_date_arg)
    q.add_argument("--to", dest="end", type=_date_arg)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_record_list)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--config", required=True)
    p.add_argument("--rain", required=True)
    p.add_argument("--records", help="records JSON document (default: records.json next to config)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static-dir", help="built web UI to serve at /")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RainTankError as exc:
        print(f"error [{exc.kind}]: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
