"""Load balancing over resolved service instances.

Round-robin keeps one cursor per service so traffic cycles evenly; least-loaded
picks the minimum in_flight counter, ties breaking toward registration order
(the order instances arrive in). Both are deterministic.
"""

from __future__ import annotations

import enum
from typing import Sequence

from ..errors import NoInstanceAvailable
from .registry import ServiceInstance


class Strategy(enum.Enum):
    ROUND_ROBIN = "round_robin"
    LEAST_LOADED = "least_loaded"


class LoadBalancer:
    def __init__(self, strategy: Strategy = Strategy.ROUND_ROBIN) -> None:
        self.strategy = strategy
        self._cursors: dict[str, int] = {}

    def route(self, service_name: str, instances: Sequence[ServiceInstance]) -> ServiceInstance:
        """Pick the next instance for a request."""
        if not instances:
            raise NoInstanceAvailable(f"no healthy instance of {service_name}")
        if self.strategy is Strategy.ROUND_ROBIN:
            cursor = self._cursors.get(service_name, 0)
            self._cursors[service_name] = cursor + 1
            return instances[cursor % len(instances)]
        return min(instances, key=lambda inst: inst.in_flight)  # stable min → registration order on ties
