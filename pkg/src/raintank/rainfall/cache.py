"""On-disk rainfall cache, keyed by station coordinates and date range.

Entries are the canonical CSV plus a JSON sidecar with fetch metadata.
Lookups hit only on the exact range; corrupt entries degrade to a miss
with a warning. Writes go through a temp file and an atomic rename.
"""

from __future__ import annotations

import json
import os
import tempfile
import warnings
from datetime import datetime, timezone
from pathlib import Path

from ..balance import RainfallSeries
from ..errors import RainTankError
from .client import StationQuery
from .csvio import parse_csv, write_csv


class CorruptCacheWarning(UserWarning):
    pass


def cache_key(query: StationQuery) -> str:
    """Coordinates rounded to 5 decimals plus the inclusive range."""
    return (
        f"{query.latitude:.5f}_{query.longitude:.5f}_"
        f"{query.start_date}_{query.end_date}"
    )


class RainfallCache:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _csv_path(self, query: StationQuery) -> Path:
        return self.root / f"{cache_key(query)}.csv"

    def _meta_path(self, query: StationQuery) -> Path:
        return self.root / f"{cache_key(query)}.meta.json"

    def get(self, query: StationQuery) -> RainfallSeries | None:
        """Exact-range hit or None. A broken entry warns and misses."""
        path = self._csv_path(query)
        if not path.exists():
            return None
        try:
            series = parse_csv(path.read_text(encoding="utf-8"))
        except (RainTankError, OSError, UnicodeDecodeError) as exc:
            warnings.warn(
                f"cache entry {path.name} is corrupt ({exc}); treating as miss",
                CorruptCacheWarning,
            )
            return None
        if series.start_date != query.start_date or series.end_date != query.end_date:
            warnings.warn(
                f"cache entry {path.name} covers {series.start_date}.."
                f"{series.end_date}, not the requested range; treating as miss",
                CorruptCacheWarning,
            )
            return None
        return series

    def put(self, query: StationQuery, series: RainfallSeries, provider: str = "") -> None:
        if series.start_date != query.start_date or series.end_date != query.end_date:
            raise RainTankError(
                "series range does not match the query; refusing to cache"
            )
        meta = {
            "fetchedAt": datetime.now(timezone.utc).isoformat(),
            "provider": provider,
            "latitude": round(query.latitude, 5),
            "longitude": round(query.longitude, 5),
            "startDate": query.start_date.isoformat(),
            "endDate": query.end_date.isoformat(),
        }
        self._write_atomic(self._csv_path(query), write_csv(series))
        self._write_atomic(self._meta_path(query), json.dumps(meta, indent=2))

    def _write_atomic(self, path: Path, text: str) -> None:
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(text)
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
