"""Monthly observation log: measured tank water and potability.

One JSON document per system, an array of records, written atomically.
"Monthly" is a convention only; any dated observation is accepted. A
record's measured water can seed a forecast's observed starting level.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass
from datetime import date as Date
from pathlib import Path

from .errors import DuplicateDateError, InvalidInputError


@dataclass(frozen=True)
class ObservationRecord:
    date: Date
    measured_water: float
    potable: bool
    note: str | None = None

    def __post_init__(self):
        if not isinstance(self.date, Date):
            raise InvalidInputError("record date must be a calendar date")
        if not (math.isfinite(self.measured_water) and self.measured_water >= 0):
            raise InvalidInputError(
                f"measured water must be >= 0 L, got {self.measured_water!r}"
            )

    def to_json_dict(self) -> dict:
        doc = {
            "date": self.date.isoformat(),
            "measuredWaterL": self.measured_water,
            "potable": self.potable,
        }
        if self.note is not None:
            doc["note"] = self.note
        return doc

    @classmethod
    def from_json_dict(cls, doc: dict) -> "ObservationRecord":
        try:
            return cls(
                date=Date.fromisoformat(doc["date"]),
                measured_water=float(doc["measuredWaterL"]),
                potable=bool(doc["potable"]),
                note=doc.get("note"),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"bad observation record {doc!r}: {exc}") from None


class RecordStore:
    """Single-writer observation log for one system.

    When constructed with the system's tank volume, records larger than the
    tank are rejected. Readers work on immutable snapshots; every mutation
    rewrites the document atomically.
    """

    def __init__(self, path: str | Path, tank_volume: float | None = None):
        self.path = Path(path)
        self.tank_volume = tank_volume

    def _load(self) -> list[ObservationRecord]:
        if not self.path.exists():
            return []
        try:
            raw = json.loads(self.path.read_text(encoding="utf-8"))
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise InvalidInputError(f"record store {self.path} is corrupt: {exc}")
        if not isinstance(raw, list):
            raise InvalidInputError(f"record store {self.path} is not a JSON array")
        records = [ObservationRecord.from_json_dict(doc) for doc in raw]
        records.sort(key=lambda r: r.date)
        return records

    def _save(self, records: list[ObservationRecord]) -> None:
        text = json.dumps([r.to_json_dict() for r in records], indent=2)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(
            dir=self.path.parent, prefix=self.path.name, suffix=".tmp"
        )
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(text)
            os.replace(tmp, self.path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

    def add_record(self, record: ObservationRecord) -> None:
        """Validate, append and persist. Duplicate dates and measurements
        over the tank volume are rejected with the store unchanged."""
        if self.tank_volume is not None and record.measured_water > self.tank_volume:
            raise InvalidInputError(
                f"measured water {record.measured_water} L exceeds the "
                f"{self.tank_volume} L tank"
            )
        records = self._load()
        if any(r.date == record.date for r in records):
            raise DuplicateDateError(f"a record for {record.date} already exists")
        records.append(record)
        records.sort(key=lambda r: r.date)
        self._save(records)

    def list_records(
        self, start: Date | None = None, end: Date | None = None
    ) -> list[ObservationRecord]:
        """Records ascending by date, optionally clipped to [start, end]."""
        records = self._load()
        if start is not None:
            records = [r for r in records if r.date >= start]
        if end is not None:
            records = [r for r in records if r.date <= end]
        return records
