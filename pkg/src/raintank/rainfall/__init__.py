from .cache import CorruptCacheWarning, RainfallCache, cache_key
from .client import (
    FixtureAdapter,
    ProviderConfig,
    StationQuery,
    VisualCrossingAdapter,
    fetch_history,
)
from .csvio import (
    CSV_HEADER,
    parse_csv,
    read_csv_file,
    write_csv,
    write_csv_file,
)

__all__ = [
    "CSV_HEADER",
    "CorruptCacheWarning",
    "FixtureAdapter",
    "ProviderConfig",
    "RainfallCache",
    "StationQuery",
    "VisualCrossingAdapter",
    "cache_key",
    "fetch_history",
    "parse_csv",
    "read_csv_file",
    "write_csv",
    "write_csv_file",
]
