"""Canonical rainfall CSV: header `date,rain_mm`, one ISO-dated row per day.

The canonical form is LF-separated, BOM-free, ascending by date, with
shortest round-trip decimals; parse(write(series)) is the identity and a
second write is bit-identical.
"""

from __future__ import annotations

import math
from datetime import date as Date, timedelta
from pathlib import Path

from ..balance import RainfallSeries
from ..errors import (
    CsvFormatError,
    DuplicateDateError,
    GapError,
    NegativeRainfallError,
)
from ..formatting import format_decimal

CSV_HEADER = "date,rain_mm"


def parse_csv(text: str, *, fill_gaps: bool = False) -> RainfallSeries:
    """Parse rainfall CSV text into a validated, gapless series.

    Rows may arrive in any order; they are sorted by date. Duplicate dates,
    negative depths and malformed rows are hard errors carrying the line
    number. Missing days are a hard error too unless `fill_gaps` is set, in
    which case they become 0 mm.
    """
    lines = text.lstrip("﻿").splitlines()
    if not lines:
        raise CsvFormatError("empty input", line=1)
    if lines[0].strip() != CSV_HEADER:
        raise CsvFormatError(
            f"expected header {CSV_HEADER!r}, got {lines[0].strip()!r}", line=1
        )

    rows: dict[Date, float] = {}
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        fields = line.split(",")
        if len(fields) != 2:
            raise CsvFormatError(
                f"expected 2 fields, got {len(fields)}: {line!r}", line=lineno
            )
        try:
            day = Date.fromisoformat(fields[0].strip())
        except ValueError:
            raise CsvFormatError(f"bad date {fields[0]!r}", line=lineno) from None
        try:
            depth = float(fields[1])
        except ValueError:
            raise CsvFormatError(f"bad rainfall {fields[1]!r}", line=lineno) from None
        if not math.isfinite(depth):
            raise CsvFormatError(f"non-finite rainfall {fields[1]!r}", line=lineno)
        if depth < 0:
            raise NegativeRainfallError(
                f"line {lineno}: negative rainfall {depth} mm on {day}"
            )
        if day in rows:
            raise DuplicateDateError(f"line {lineno}: duplicate date {day}")
        rows[day] = depth

    if not rows:
        raise CsvFormatError("no data rows", line=len(lines))

    first = min(rows)
    last = max(rows)
    depths: list[float] = []
    day = first
    while day <= last:
        if day in rows:
            depths.append(rows[day])
        elif fill_gaps:
            depths.append(0.0)
        else:
            gap_start = day
            gap_end = day
            while gap_end + timedelta(days=1) not in rows:
                gap_end += timedelta(days=1)
            missing = (
                str(gap_start)
                if gap_start == gap_end
                else f"{gap_start}..{gap_end}"
            )
            raise GapError(
                f"rainfall record has a gap: missing {missing}",
                missing_start=gap_start,
                missing_end=gap_end,
            )
        day += timedelta(days=1)

    return RainfallSeries(start_date=first, depths=tuple(depths))


def write_csv(series: RainfallSeries) -> str:
    """Render the canonical CSV text for a series."""
    lines = [CSV_HEADER]
    for day, depth in series.items():
        lines.append(f"{day.isoformat()},{format_decimal(depth)}")
    return "\n".join(lines)


def read_csv_file(path: str | Path, *, fill_gaps: bool = False) -> RainfallSeries:
    return parse_csv(Path(path).read_text(encoding="utf-8"), fill_gaps=fill_gaps)


def write_csv_file(series: RainfallSeries, path: str | Path) -> None:
    Path(path).write_text(write_csv(series), encoding="utf-8")
