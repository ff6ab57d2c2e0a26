import json
from datetime import date as Date

import pytest

from raintank.errors import DuplicateDateError, InvalidInputError
from raintank.records import ObservationRecord, RecordStore


@pytest.fixture
def store(tmp_path):
    return RecordStore(tmp_path / "records.json", tank_volume=10000.0)


def record(day=Date(2023, 6, 1), water=2000.0, potable=True, note=None):
    return ObservationRecord(date=day, measured_water=water, potable=potable, note=note)


class TestAddRecord:
    def test_add_then_list(self, store):
        store.add_record(record())
        records = store.list_records()
        assert len(records) == 1
        assert records[0].measured_water == 2000.0
        assert records[0].potable is True

    def test_duplicate_date_rejected_store_unchanged(self, store):
        store.add_record(record())
        with pytest.raises(DuplicateDateError):
            store.add_record(record(water=1.0))
        assert [r.measured_water for r in store.list_records()] == [2000.0]

    def test_over_tank_volume_rejected(self, store):
        with pytest.raises(InvalidInputError):
            store.add_record(record(water=12000.0))
        assert store.list_records() == []

    def test_no_volume_check_without_tank(self, tmp_path):
        store = RecordStore(tmp_path / "r.json")
        store.add_record(record(water=12000.0))
        assert len(store.list_records()) == 1

    def test_invalid_record_values(self):
        with pytest.raises(InvalidInputError):
            ObservationRecord(date=Date(2023, 6, 1), measured_water=-1.0, potable=True)
        with pytest.raises(InvalidInputError):
            ObservationRecord(date="2023-06-01", measured_water=1.0, potable=True)


class TestListRecords:
    def test_empty_store(self, store):
        assert store.list_records() == []

    def test_ascending_regardless_of_insertion_order(self, store):
        store.add_record(record(Date(2023, 8, 1)))
        store.add_record(record(Date(2023, 6, 1)))
        store.add_record(record(Date(2023, 7, 1)))
        assert [r.date for r in store.list_records()] == [
            Date(2023, 6, 1),
            Date(2023, 7, 1),
            Date(2023, 8, 1),
        ]

    def test_inclusive_range_filter(self, store):
        for month in (6, 7, 8):
            store.add_record(record(Date(2023, month, 1), water=month * 100.0))
        middle = store.list_records(Date(2023, 7, 1), Date(2023, 7, 31))
        assert [r.date for r in middle] == [Date(2023, 7, 1)]
        everything = store.list_records(Date(2023, 6, 1), Date(2023, 8, 1))
        assert len(everything) == 3


class TestPersistence:
    def test_round_trip_through_new_handle(self, tmp_path):
        path = tmp_path / "records.json"
        RecordStore(path, 10000.0).add_record(record(note="after the June rains"))
        reloaded = RecordStore(path, 10000.0).list_records()
        assert reloaded[0].note == "after the June rains"
        assert reloaded[0].date == Date(2023, 6, 1)

    def test_document_is_readable_json(self, tmp_path):
        path = tmp_path / "records.json"
        RecordStore(path, 10000.0).add_record(record())
        doc = json.loads(path.read_text())
        assert doc == [
            {"date": "2023-06-01", "measuredWaterL": 2000.0, "potable": True}
        ]

    def test_no_temp_residue(self, tmp_path):
        path = tmp_path / "records.json"
        store = RecordStore(path, 10000.0)
        for month in range(1, 7):
            store.add_record(record(Date(2023, month, 1)))
        assert list(tmp_path.glob("*.tmp")) == []

    def test_corrupt_document_is_loud(self, tmp_path):
        path = tmp_path / "records.json"
        path.write_text("{not json")
        with pytest.raises(InvalidInputError):
            RecordStore(path).list_records()

    def test_measured_water_can_seed_forecast(self, tmp_path, twoyear_series, toy_spec, toy_demand):
        from raintank.forecast import ForecastRequest, forecast

        store = RecordStore(tmp_path / "records.json", toy_spec.tank_volume)
        store.add_record(record(Date(2023, 6, 1), water=40.0))
        latest = store.list_records()[-1]
        report = forecast(
            twoyear_series,
            ForecastRequest(
                start_date=latest.date,
                observed_water=latest.measured_water,
                spec=toy_spec,
                demand=toy_demand,
                horizon_days=3,
            ),
        )
        assert report.probability == 2 / 3
