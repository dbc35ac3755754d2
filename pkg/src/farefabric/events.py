"""External event calendar and combined demand-impact multipliers.

Events carry a positive impact multiplier over a closed date range, optionally
scoped to specific routes. The combined factor for a date is the product of
active impacts, clamped to the calendar's range; with nothing active it is
exactly 1.0.
"""

from __future__ import annotations

import datetime as dt
import json
from dataclasses import dataclass, replace
from decimal import Decimal

from .errors import InvalidInput

EVENT_KINDS = ("holiday", "festival", "weather", "other")
DEFAULT_CLAMP_RANGE = (0.5, 2.0)


@dataclass(frozen=True)
class ExternalEvent:
    name: str
    kind: str
    start: dt.date
    end: dt.date
    impact: Decimal
    routes: tuple[str, ...] = ()  # empty = applies to all routes

    def __post_init__(self) -> None:
        if self.kind not in EVENT_KINDS:
            raise InvalidInput(f"event kind {self.kind!r} not one of {EVENT_KINDS}")
        if self.start > self.end:
            raise InvalidInput(f"event {self.name!r}: start {self.start} after end {self.end}")
        if self.impact <= 0:
            raise InvalidInput(f"event {self.name!r}: impact must be positive, got {self.impact}")

    def applies(self, date: dt.date, route: str) -> bool:
        return self.start <= date <= self.end and (not self.routes or route in self.routes)


@dataclass(frozen=True)
class EventCalendar:
    events: tuple[ExternalEvent, ...] = ()
    clamp_range: tuple[float, float] = DEFAULT_CLAMP_RANGE

    def __post_init__(self) -> None:
        low, high = self.clamp_range
        if not low <= 1.0 <= high:
            raise InvalidInput(f"clamp range {self.clamp_range} must bracket 1.0")


def ingest_event(calendar: EventCalendar, event: ExternalEvent) -> EventCalendar:
    """Append an event; exact duplicates are dropped."""
    if event in calendar.events:
        return calendar
    return replace(calendar, events=calendar.events + (event,))


def active_events(calendar: EventCalendar, date: dt.date, route: str) -> list[ExternalEvent]:
    """Events covering the date and route, in ingestion order."""
    return [e for e in calendar.events if e.applies(date, route)]


def impact_factor(calendar: EventCalendar, date: dt.date, route: str) -> Decimal:
    """Product of active impacts, clamped to the calendar range; 1.0 when idle."""
    active = active_events(calendar, date, route)
    if not active:
        return Decimal("1.0")
    factor = Decimal("1.0")
    for event in active:
        factor *= event.impact
    low = Decimal(str(calendar.clamp_range[0]))
    high = Decimal(str(calendar.clamp_range[1]))
    return min(max(factor, low), high)


def _parse_event(record: dict, where: str) -> ExternalEvent:
    try:
        return ExternalEvent(
            name=str(record["name"]),
            kind=str(record["kind"]),
            start=dt.date.fromisoformat(str(record["start"])),
            end=dt.date.fromisoformat(str(record["end"])),
            impact=Decimal(str(record["impact"])),
            routes=tuple(str(r) for r in record.get("routes", [])),
        )
    except (KeyError, TypeError, ValueError, ArithmeticError) as exc:
        raise InvalidInput(f"{where}: expected keys name, kind, start, end, impact") from exc


def load_calendar_json(path: str, clamp_range: tuple[float, float] = DEFAULT_CLAMP_RANGE) -> EventCalendar:
    """Read a JSON array of event objects into a calendar."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            records = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"{path}: invalid JSON ({exc.msg})") from exc
    if not isinstance(records, list):
        raise InvalidInput(f"{path}: expected a JSON array of events")
    calendar = EventCalendar(clamp_range=clamp_range)
    for i, record in enumerate(records):
        if not isinstance(record, dict):
            raise InvalidInput(f"{path}: event {i} is not an object")
        calendar = ingest_event(calendar, _parse_event(record, f"{path}: event {i}"))
    return calendar


def events_from_dicts(records: list[dict], clamp_range: tuple[float, float] = DEFAULT_CLAMP_RANGE) -> EventCalendar:
    """Build a calendar from already-parsed event dictionaries."""
    calendar = EventCalendar(clamp_range=clamp_range)
    for i, record in enumerate(records):
        calendar = ingest_event(calendar, _parse_event(record, f"event {i}"))
    return calendar
