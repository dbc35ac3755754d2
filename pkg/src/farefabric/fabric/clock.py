"""Discrete-event simulation clock.

Events fire in (fire_time, insertion_seq) order, so ties resolve by schedule
order and a fixed seed plus fixed inputs always produce the same trace. Event
callbacks may schedule further events; advance_until_idle drains the queue.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable

from ..errors import InvalidInput


@dataclass(frozen=True)
class TraceEntry:
    time: float
    label: str


class SimClock:
    def __init__(self, seed: int = 0) -> None:
        self.seed = seed
        self.now = 0.0
        self._seq = 0
        self._queue: list[tuple[float, int, str, Callable[[], None] | None]] = []

    def schedule(self, delay: float, label: str, action: Callable[[], None] | None = None) -> None:
        """Queue an event `delay` after now; zero delay fires after already-queued ties."""
        if delay < 0:
            raise InvalidInput(f"delay must be >= 0, got {delay}")
        heapq.heappush(self._queue, (self.now + delay, self._seq, label, action))
        self._seq += 1

    def advance_until_idle(self, max_events: int | None = None) -> list[TraceEntry]:
        """Run queued events in order until the queue empties; returns the trace."""
        trace: list[TraceEntry] = []
        executed = 0
        while self._queue:
            if max_events is not None and executed >= max_events:
                break
            fire_time, _, label, action = heapq.heappop(self._queue)
            self.now = fire_time  # never decreases: queue holds only future events
            trace.append(TraceEntry(time=fire_time, label=label))
            if action is not None:
                action()
            executed += 1
        return trace

    @property
    def pending(self) -> int:
        return len(self._queue)
