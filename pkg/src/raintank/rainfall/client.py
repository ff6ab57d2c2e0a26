"""Daily-rainfall history client for weather providers.

Transport detail stays out of the simulation: an adapter maps one
provider's JSON into dated millimeter rows, the client wraps it with
retries, auth handling and range validation. A series is returned only
after it fully validates (gapless, complete coverage of the requested
range); anything less raises.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from datetime import date as Date, timedelta
from pathlib import Path

import requests

from ..balance import RainfallSeries
from ..errors import (
    AuthError,
    FetchError,
    IncompleteRangeError,
    InvalidInputError,
    SchemaMismatchError,
)

MM_PER_INCH = 25.4


@dataclass(frozen=True)
class StationQuery:
    """A point and an inclusive date range to fetch daily rainfall for."""

    latitude: float
    longitude: float
    start_date: Date
    end_date: Date

    def __post_init__(self):
        if not (math.isfinite(self.latitude) and -90.0 <= self.latitude <= 90.0):
            raise InvalidInputError(f"latitude {self.latitude!r} not in [-90, 90]")
        if not (math.isfinite(self.longitude) and -180.0 <= self.longitude <= 180.0):
            raise InvalidInputError(f"longitude {self.longitude!r} not in [-180, 180]")
        if self.start_date > self.end_date:
            raise InvalidInputError(
                f"start_date {self.start_date} is after end_date {self.end_date}"
            )

    @property
    def n_days(self) -> int:
        return (self.end_date - self.start_date).days + 1


@dataclass(frozen=True)
class ProviderConfig:
    """How to reach the provider. The API key comes from the environment or
    a config file, never from argv."""

    base_url: str
    api_key: str = field(default="", repr=False)
    timeout: float = 30.0
    max_attempts: int = 3
    backoff_base: float = 0.5

    def __post_init__(self):
        if self.timeout <= 0:
            raise InvalidInputError(f"timeout must be > 0 s, got {self.timeout}")
        if self.max_attempts < 1:
            raise InvalidInputError(
                f"max_attempts must be >= 1, got {self.max_attempts}"
            )


def _parse_days_payload(payload, unit: str) -> list[tuple[Date, float]]:
    """Rows out of a `{"days": [{"datetime": ..., "precip": ...}]}` payload."""
    if not isinstance(payload, dict) or not isinstance(payload.get("days"), list):
        raise SchemaMismatchError("payload has no 'days' list")
    rows = []
    for entry in payload["days"]:
        if not isinstance(entry, dict) or "datetime" not in entry:
            raise SchemaMismatchError(f"day entry without 'datetime': {entry!r}")
        try:
            day = Date.fromisoformat(str(entry["datetime"]))
        except ValueError:
            raise SchemaMismatchError(
                f"bad day datetime {entry['datetime']!r}"
            ) from None
        precip = entry.get("precip", 0.0)
        if precip is None:
            precip = 0.0  # providers use null for no measurable rain
        if not isinstance(precip, (int, float)) or not math.isfinite(float(precip)):
            raise SchemaMismatchError(f"bad precip {precip!r} on {day}")
        mm = float(precip) * (MM_PER_INCH if unit == "inch" else 1.0)
        if mm < 0:
            raise SchemaMismatchError(f"negative precip {mm} mm on {day}")
        rows.append((day, mm))
    return rows


class VisualCrossingAdapter:
    """Adapter for timeline-style endpoints that answer
    `GET {base}/{lat},{lon}?startDateTime&endDateTime&key=...` with a
    `days[].datetime/.precip` JSON body.

    `unit` is the provider's precip unit; inches convert to mm here, at the
    boundary.
    """

    name = "visual-crossing"

    def __init__(self, unit: str = "mm"):
        if unit not in ("mm", "inch"):
            raise InvalidInputError(f"unit must be 'mm' or 'inch', got {unit!r}")
        self.unit = unit

    def fetch_payload(self, query: StationQuery, config: ProviderConfig, transport):
        url = (
            f"{config.base_url.rstrip('/')}/"
            f"{query.latitude:.5f},{query.longitude:.5f}"
        )
        params = {
            "startDateTime": query.start_date.isoformat(),
            "endDateTime": query.end_date.isoformat(),
            "unitGroup": "metric" if self.unit == "mm" else "us",
            "include": "days",
            "key": config.api_key,
        }
        return transport(url, params)

    def to_rows(self, payload) -> list[tuple[Date, float]]:
        return _parse_days_payload(payload, self.unit)


class FixtureAdapter:
    """Offline adapter reading `days[]`-shaped JSON fixtures from a
    directory, one file per query named `{lat}_{lon}_{start}_{end}.json`
    with coordinates at 5 decimals."""

    name = "fixture"

    def __init__(self, root: str | Path):
        self.root = Path(root)

    def fixture_path(self, query: StationQuery) -> Path:
        return self.root / (
            f"{query.latitude:.5f}_{query.longitude:.5f}_"
            f"{query.start_date}_{query.end_date}.json"
        )

    def fetch_payload(self, query: StationQuery, config: ProviderConfig, transport):
        path = self.fixture_path(query)
        if not path.exists():
            raise FetchError(f"no fixture for query at {path}")
        try:
            return json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise SchemaMismatchError(f"fixture {path} is not JSON: {exc}") from None

    def to_rows(self, payload) -> list[tuple[Date, float]]:
        return _parse_days_payload(payload, "mm")


def _http_transport(config: ProviderConfig, session, sleep):
    """GET with bounded retries: 5xx and transport errors back off
    exponentially, auth failures and other client errors fail fast."""

    def transport(url: str, params: dict):
        last_error = None
        for attempt in range(1, config.max_attempts + 1):
            try:
                response = session.get(url, params=params, timeout=config.timeout)
            except requests.RequestException as exc:
                last_error = FetchError(f"transport error: {exc}")
            else:
                if response.status_code in (401, 403):
                    raise AuthError(
                        f"provider rejected credentials (HTTP {response.status_code})"
                    )
                if 200 <= response.status_code < 300:
                    try:
                        return response.json()
                    except ValueError as exc:
                        raise SchemaMismatchError(
                            f"response body is not JSON: {exc}"
                        ) from None
                if response.status_code < 500:
                    raise FetchError(f"HTTP {response.status_code} from provider")
                last_error = FetchError(f"HTTP {response.status_code} from provider")
            if attempt < config.max_attempts:
                sleep(config.backoff_base * 2 ** (attempt - 1))
        raise FetchError(
            f"giving up after {config.max_attempts} attempts: {last_error}"
        )

    return transport


def fetch_history(
    query: StationQuery,
    config: ProviderConfig,
    adapter=None,
    session=None,
    sleep=time.sleep,
) -> RainfallSeries:
    """Fetch and validate the daily rainfall series for a query.

    Never returns a partial result: every day of the range must be present
    exactly once or the fetch fails with the specific reason.
    """
    adapter = adapter or VisualCrossingAdapter()
    transport = _http_transport(config, session or requests.Session(), sleep)
    rows = adapter.to_rows(adapter.fetch_payload(query, config, transport))

    by_day: dict[Date, float] = {}
    for day, mm in rows:
        if day in by_day:
            raise SchemaMismatchError(f"provider repeated day {day}")
        by_day[day] = mm

    depths = []
    missing = []
    day = query.start_date
    while day <= query.end_date:
        if day in by_day:
            depths.append(by_day[day])
        else:
            missing.append(day)
        day += timedelta(days=1)
    if missing:
        shown = ", ".join(str(d) for d in missing[:3])
        more = "" if len(missing) <= 3 else f" (+{len(missing) - 3} more)"
        raise IncompleteRangeError(
            f"provider covered {len(by_day)}/{query.n_days} days; "
            f"missing {shown}{more}"
        )

    return RainfallSeries(start_date=query.start_date, depths=tuple(depths))
