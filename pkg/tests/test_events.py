import datetime as dt
import random
from decimal import Decimal

import pytest

from farefabric.errors import InvalidInput
from farefabric.events import (
    EventCalendar,
    ExternalEvent,
    active_events,
    impact_factor,
    ingest_event,
    load_calendar_json,
)


def event(name="spring_festival", kind="festival", start="2026-04-28", end="2026-05-02",
          impact="1.25", routes=()):
    return ExternalEvent(
        name=name,
        kind=kind,
        start=dt.date.fromisoformat(start),
        end=dt.date.fromisoformat(end),
        impact=Decimal(impact),
        routes=tuple(routes),
    )


def calendar(*events):
    cal = EventCalendar()
    for e in events:
        cal = ingest_event(cal, e)
    return cal


class TestIngest:
    def test_add_then_present(self):
        cal = calendar(event())
        assert event() in cal.events

    def test_exact_duplicate_dropped(self):
        cal = calendar(event(), event())
        assert len(cal.events) == 1

    def test_near_duplicate_kept(self):
        cal = calendar(event(), event(impact="1.30"))
        assert len(cal.events) == 2

    def test_zero_impact_rejected(self):
        with pytest.raises(InvalidInput):
            event(impact="0")

    def test_inverted_dates_rejected(self):
        with pytest.raises(InvalidInput):
            event(start="2026-05-02", end="2026-04-28")

    def test_unknown_kind_rejected(self):
        with pytest.raises(InvalidInput):
            event(kind="eclipse")

    def test_clamp_range_must_bracket_one(self):
        with pytest.raises(InvalidInput):
            EventCalendar(clamp_range=(1.1, 2.0))
        with pytest.raises(InvalidInput):
            EventCalendar(clamp_range=(0.5, 0.9))


class TestActiveEvents:
    def test_date_outside_all_is_empty(self):
        assert active_events(calendar(event()), dt.date(2026, 6, 1), "LIS-BCN") == []

    def test_closed_interval_includes_both_boundaries(self):
        cal = calendar(event())
        assert active_events(cal, dt.date(2026, 4, 28), "LIS-BCN") == [event()]
        assert active_events(cal, dt.date(2026, 5, 2), "LIS-BCN") == [event()]
        assert active_events(cal, dt.date(2026, 4, 27), "LIS-BCN") == []
        assert active_events(cal, dt.date(2026, 5, 3), "LIS-BCN") == []

    def test_route_scoping(self):
        scoped = event(routes=("LIS-BCN",))
        cal = calendar(scoped)
        assert active_events(cal, dt.date(2026, 4, 30), "LIS-BCN") == [scoped]
        assert active_events(cal, dt.date(2026, 4, 30), "OPO-LYS") == []

    def test_empty_routes_applies_everywhere(self):
        cal = calendar(event())
        assert active_events(cal, dt.date(2026, 4, 30), "OPO-LYS") == [event()]

    def test_ingestion_order_preserved(self):
        first = event(name="a")
        second = event(name="b", kind="weather", impact="0.9")
        cal = calendar(first, second)
        assert active_events(cal, dt.date(2026, 4, 30), "R") == [first, second]


class TestImpactFactor:
    def test_no_events_is_exactly_one(self):
        factor = impact_factor(EventCalendar(), dt.date(2026, 4, 30), "LIS-BCN")
        assert factor == Decimal("1.0")

    def test_product_of_active_impacts(self):
        cal = calendar(event(impact="1.2"), event(name="storms", kind="weather", impact="0.9"))
        factor = impact_factor(cal, dt.date(2026, 4, 30), "LIS-BCN")
        assert factor == Decimal("1.08")

    def test_clamps_to_upper_bound(self):
        cal = calendar(*[event(name=f"e{i}", impact="1.5") for i in range(3)])
        factor = impact_factor(cal, dt.date(2026, 4, 30), "LIS-BCN")
        assert factor == Decimal("2.0")

    def test_clamps_to_lower_bound(self):
        cal = calendar(*[event(name=f"e{i}", kind="weather", impact="0.6") for i in range(3)])
        factor = impact_factor(cal, dt.date(2026, 4, 30), "LIS-BCN")
        assert factor == Decimal("0.5")

    def test_always_inside_clamp_range(self):
        rng = random.Random(13)
        names = iter(range(10_000))
        for _ in range(100):
            events = [
                event(name=f"e{next(names)}", impact=str(round(rng.uniform(0.1, 3.0), 2)))
                for _ in range(rng.randint(0, 5))
            ]
            factor = impact_factor(calendar(*events), dt.date(2026, 4, 30), "R")
            assert Decimal("0.5") <= factor <= Decimal("2.0")

    def test_ingestion_order_does_not_change_factor(self):
        a = event(name="a", impact="1.3")
        b = event(name="b", kind="weather", impact="0.8")
        c = event(name="c", kind="holiday", impact="1.1")
        date = dt.date(2026, 4, 30)
        factors = {
            impact_factor(calendar(*order), date, "R")
            for order in [(a, b, c), (c, b, a), (b, a, c)]
        }
        assert len(factors) == 1


class TestCalendarFile:
    def test_load_json_array(self, tmp_path):
        path = tmp_path / "calendar.json"
        path.write_text(
            '[{"name": "fest", "kind": "festival", "start": "2026-04-28",'
            ' "end": "2026-05-02", "impact": 1.25, "routes": ["LIS-BCN"]}]'
        )
        cal = load_calendar_json(str(path))
        assert len(cal.events) == 1
        assert cal.events[0].impact == Decimal("1.25")
        assert cal.events[0].routes == ("LIS-BCN",)

    def test_malformed_event_reported_with_index(self, tmp_path):
        path = tmp_path / "calendar.json"
        path.write_text('[{"name": "fest"}]')
        with pytest.raises(InvalidInput, match="event 0"):
            load_calendar_json(str(path))

    def test_non_array_rejected(self, tmp_path):
        path = tmp_path / "calendar.json"
        path.write_text('{"name": "fest"}')
        with pytest.raises(InvalidInput, match="array"):
            load_calendar_json(str(path))
