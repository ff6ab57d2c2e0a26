"""Acceptance gate: one test per release criterion, at the stated tolerance.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion. Every expected value here was frozen from the independent
naive oracle (tests/oracle.py) or hand arithmetic, never from the
implementation under test.
"""

import json
import random
import time
from datetime import date as Date, timedelta
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from raintank.balance import (
    CONSERVATION_TOL_L,
    DemandSchedule,
    RainfallSeries,
    SystemSpec,
    simulate,
)
from raintank.errors import (
    AuthError,
    DuplicateDateError,
    FetchError,
    GapError,
    IncompleteRangeError,
    NegativeRainfallError,
)
from raintank.forecast import ForecastRequest, Purchase, forecast
from raintank.rainfall import ProviderConfig, StationQuery, fetch_history, parse_csv, write_csv
from raintank.reliability import ReliabilityLabel, classify, estimate_reliability
from raintank.service import build_state, create_app
from raintank.sweep import SweepParameter, optimal_tank, reliability_curve

from conftest import TOY_CSV, TOY_YAML, two_year_series
from stub_provider import StubProvider, make_days_payload

GOLDEN_DIR = Path(__file__).parent / "golden"


def ok(line: str) -> None:
    print(f"\nPASS  {line}")


def test_hand_oracle_exactness():
    """3-day toy: trajectory [20, 0, 70], reliability 2/3, Fair, < 1 ms."""
    series = RainfallSeries(Date(2022, 1, 1), (10.0, 0.0, 20.0))
    spec = SystemSpec(10.0, 0.5, 100.0)
    demand = DemandSchedule.constant(30.0)

    simulate(series, spec, demand, 0.0)  # warm the path before timing
    started = time.perf_counter()
    trajectory = simulate(series, spec, demand, 0.0)
    report = estimate_reliability(series, spec, demand)
    elapsed = time.perf_counter() - started

    assert trajectory.water_levels() == [20.0, 0.0, 70.0]
    assert trajectory.met_flags() == [True, False, True]
    assert report.success_days == 2 and report.demand_days == 3
    assert report.probability == 2 / 3
    assert report.label is ReliabilityLabel.FAIR
    assert elapsed < 0.001, f"took {elapsed * 1e3:.3f} ms"
    ok(f"hand-oracle exactness: [20, 0, 70] L, 2/3, Fair in {elapsed * 1e6:.0f} us")


def test_forecast_pooled_oracle():
    """Two-year toy pools to exactly 2/3 with min end water 0 L."""
    report = forecast(
        two_year_series(),
        ForecastRequest(
            start_date=Date(2023, 6, 1),
            observed_water=40.0,
            spec=SystemSpec(10.0, 0.5, 100.0),
            demand=DemandSchedule.constant(30.0),
            horizon_days=3,
        ),
    )
    assert report.success_days == 4 and report.demand_days == 6
    assert report.probability == 2 / 3
    assert report.min_end_water == 0.0
    assert report.per_year_end_water == {2021: 70.0, 2022: 0.0}
    ok("forecast pooled oracle: P = 4/6 = 2/3, min end water 0 L")


def _random_scenario(rng: random.Random, n_days: int):
    wet = rng.uniform(0.05, 0.6)
    rain = [
        rng.uniform(0.1, 120.0) if rng.random() < wet else 0.0 for _ in range(n_days)
    ]
    spec = SystemSpec(
        catchment_area=rng.uniform(1.0, 400.0),
        runoff_coeff=rng.uniform(0.0, 1.0),
        tank_volume=rng.uniform(20.0, 40000.0),
    )
    start = Date(2018, 1, 1) + timedelta(days=rng.randint(0, 1000))
    series = RainfallSeries(start, tuple(rain))
    if rng.random() < 0.15:
        days = sorted(
            rng.sample(range(n_days), k=max(1, n_days // 3))
        )
        demand = DemandSchedule.dated(
            {start + timedelta(days=j): rng.uniform(0.0, 600.0) for j in days}
        )
    else:
        demand = DemandSchedule.constant(rng.uniform(0.0, 600.0))
    w0 = rng.uniform(0.0, spec.tank_volume)
    return series, spec, demand, w0


def test_conservation_over_randomized_scenarios():
    """>= 1000 random scenarios: ledger closes to 1e-6 L per day and per
    trajectory, in under 10 s."""
    rng = random.Random(20240601)
    started = time.perf_counter()
    total_days = 0
    for i in range(1000):
        n_days = rng.randint(1000, 1826) if i % 10 == 0 else rng.randint(10, 400)
        series, spec, demand, w0 = _random_scenario(rng, n_days)
        trajectory = simulate(series, spec, demand, w0)
        total_days += len(trajectory)
        for day in trajectory.days:
            assert abs(day.conservation_error()) < CONSERVATION_TOL_L
            assert 0.0 <= day.water_end <= spec.tank_volume
        whole = (
            trajectory.initial_water
            + trajectory.total("harvested")
            - trajectory.total("overflow")
            - trajectory.total("supplied")
            - trajectory.final_water
        )
        assert abs(whole) < CONSERVATION_TOL_L * max(1, len(trajectory))
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"took {elapsed:.1f} s"
    ok(
        f"conservation: 1000 scenarios / {total_days} simulated days balanced "
        f"to 1e-6 L in {elapsed:.1f} s"
    )


def test_monotonicity_suite():
    """>= 500 random scenarios: reliability non-decreasing in V, k, A;
    non-increasing under demand scaling; forecast non-decreasing in
    observed water and purchase volume."""
    rng = random.Random(987654)
    forecast_checked = 0
    for i in range(500):
        series, spec, demand, _ = _random_scenario(rng, rng.randint(30, 200))
        base = estimate_reliability(series, spec, demand)

        bigger_tank = estimate_reliability(
            series, spec.with_tank_volume(spec.tank_volume * 1.5), demand
        )
        better_k = estimate_reliability(
            series, spec.with_runoff_coeff(min(1.0, spec.runoff_coeff * 1.3 + 0.01)), demand
        )
        bigger_area = estimate_reliability(
            series,
            SystemSpec(spec.catchment_area * 1.6, spec.runoff_coeff, spec.tank_volume),
            demand,
        )
        heavier = estimate_reliability(series, spec, demand.scaled(1.0 + rng.random()))

        if base.probability is not None:
            assert bigger_tank.probability >= base.probability
            assert better_k.probability >= base.probability
            assert bigger_area.probability >= base.probability
            assert heavier.probability <= base.probability

        if i % 4 == 0:
            fc_series, fc_spec, _, fc_w0 = _random_scenario(rng, rng.randint(380, 430))
            fc_demand = DemandSchedule.constant(rng.uniform(5.0, 500.0))
            horizon = rng.randint(1, 15)

            def run_forecast(w0, strategies=()):
                return forecast(
                    fc_series,
                    ForecastRequest(
                        start_date=Date(2023, 3, 1),
                        observed_water=w0,
                        spec=fc_spec,
                        demand=fc_demand,
                        horizon_days=horizon,
                        strategies=strategies,
                    ),
                )

            low = run_forecast(fc_w0 * 0.5)
            high = run_forecast(min(fc_w0 * 0.5 + fc_spec.tank_volume * 0.2, fc_spec.tank_volume))
            assert high.probability >= low.probability
            small_buy = run_forecast(fc_w0 * 0.5, (Purchase(50.0, on_day=0),))
            big_buy = run_forecast(fc_w0 * 0.5, (Purchase(500.0, on_day=0),))
            assert big_buy.probability >= small_buy.probability >= low.probability
            forecast_checked += 1
    ok(
        f"monotonicity: 500 reliability scenarios and {forecast_checked} "
        f"forecast scenarios ordered correctly"
    )


def test_band_table():
    """The ten boundary probabilities map to the exact labels."""
    table = {
        0.0: "Unlikely",
        0.5: "Unlikely",
        0.50001: "Occasionally",
        0.6: "Occasionally",
        0.60001: "Fair",
        0.8: "Fair",
        0.80001: "Good",
        0.9: "Good",
        0.90001: "VeryGood",
        1.0: "VeryGood",
    }
    for p, expected in table.items():
        assert classify(p).value == expected, f"classify({p})"
    ok("qualitative band table: all 10 boundary points labeled exactly")


def test_constant_forcing_optimum():
    """With daily harvest equal to demand, the optimum tank is exactly one
    day's demand at probability 1."""
    demand_value = 30.0
    spec = SystemSpec(2.0, 0.5, 1000.0)  # k x A = 1 m2 so 30 mm -> 30 L
    series = RainfallSeries(Date(2022, 1, 1), (demand_value,) * 90)
    demand = DemandSchedule.constant(demand_value)
    curve = reliability_curve(
        series, spec, demand, SweepParameter.TANK_VOLUME,
        [5.0, 10.0, 20.0, 30.0, 45.0, 90.0, 300.0],
    )
    volume, probability = optimal_tank(curve)
    assert (volume, probability) == (demand_value, 1.0)
    ok(f"constant forcing: optimum tank exactly {demand_value:g} L at P = 1.0")


def test_csv_round_trip_and_error_kinds():
    """parse(write(.)) identity, bit-exact, on five years of synthetic data;
    gap, duplicate and negative inputs raise their own kinds."""
    rng = random.Random(7)
    depths = tuple(
        0.0 if rng.random() < 0.55 else round(rng.uniform(0.0, 140.0), rng.choice([0, 1, 2]))
        for _ in range(1826)
    )
    series = RainfallSeries(Date(2018, 1, 1), depths)
    text = write_csv(series)
    assert parse_csv(text) == series
    assert write_csv(parse_csv(text)) == text  # canonical fixpoint, bit-exact

    with pytest.raises(GapError):
        parse_csv("date,rain_mm\n2022-01-01,1\n2022-01-03,1")
    with pytest.raises(DuplicateDateError):
        parse_csv("date,rain_mm\n2022-01-01,1\n2022-01-01,2")
    with pytest.raises(NegativeRainfallError):
        parse_csv("date,rain_mm\n2022-01-01,-1")
    kinds = {GapError.kind, DuplicateDateError.kind, NegativeRainfallError.kind}
    assert len(kinds) == 3
    ok("CSV: 5-year round trip bit-exact; gap/duplicate/negative kinds distinct")


def test_fetch_robustness():
    """Stub provider: success, retry-after-500, auth failure and incomplete
    range all behave as specified; no partial series escapes."""
    stub = StubProvider()
    try:
        query = StationQuery(12.97, 77.59, Date(2022, 1, 1), Date(2022, 1, 3))
        config = ProviderConfig(
            base_url=stub.base_url, api_key="k", timeout=5.0,
            max_attempts=3, backoff_base=0.001,
        )

        stub.default_body = make_days_payload(Date(2022, 1, 1), [10, 0, 20])
        series = fetch_history(query, config)
        assert series.depths == (10.0, 0.0, 20.0)

        stub.enqueue(500)
        seen = len(stub.requests)
        series = fetch_history(query, config)
        assert series.depths == (10.0, 0.0, 20.0)
        assert len(stub.requests) - seen == 2  # the 500 plus one retry

        stub.enqueue(401)
        with pytest.raises(AuthError):
            fetch_history(query, config)

        stub.default_body = make_days_payload(Date(2022, 1, 1), [10, 0])
        with pytest.raises(IncompleteRangeError):
            fetch_history(query, config)

        for _ in range(3):
            stub.enqueue(503)
        with pytest.raises(FetchError):
            fetch_history(query, config)
    finally:
        stub.close()
    ok("fetch: success, retry-after-500, auth failure, incomplete range")


def test_service_contract_golden():
    """Golden JSON for /api/reliability, /api/forecast and /api/sweep on the
    toy fixtures, byte-stable across runs."""
    import tempfile

    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        (tmp / "toy.yaml").write_text(TOY_YAML)
        (tmp / "toy.csv").write_text(TOY_CSV)
        (tmp / "twoyear.csv").write_text(write_csv(two_year_series()))

        toy = TestClient(
            create_app(build_state(tmp / "toy.yaml", tmp / "toy.csv", tmp / "r1.json"))
        )
        two = TestClient(
            create_app(build_state(tmp / "toy.yaml", tmp / "twoyear.csv", tmp / "r2.json"))
        )

        checks = [
            ("reliability", lambda: toy.get("/api/reliability")),
            (
                "forecast",
                lambda: two.post(
                    "/api/forecast",
                    json={"start": "2023-06-01", "observedWaterL": 40.0, "horizonDays": 3},
                ),
            ),
            (
                "sweep",
                lambda: toy.get(
                    "/api/sweep", params={"parameter": "tank", "values": "10,50,100"}
                ),
            ),
        ]
        for name, call in checks:
            golden = (GOLDEN_DIR / f"{name}.json").read_bytes()
            first = call()
            second = call()
            assert first.status_code == 200
            assert first.content == golden, f"/api/{name} drifted from golden"
            assert first.content == second.content
            assert json.loads(first.content)  # well-formed
    ok("service contract: reliability/forecast/sweep byte-stable vs golden")
