"""Service registry with heartbeat-based health.

An instance is healthy when now - last_heartbeat <= ttl, boundary inclusive.
Resolution returns healthy instances in registration order. Operations take a
lock so the registry can back the threaded service mode; the simulation loop
itself is single-threaded.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from ..errors import AlreadyRegistered, NotFound

DEFAULT_HEARTBEAT_TTL = 3600.0


@dataclass
class ServiceInstance:
    service_name: str
    instance_id: str
    registered_at: float
    last_heartbeat: float
    in_flight: int = 0


class Registry:
    def __init__(self, heartbeat_ttl: float = DEFAULT_HEARTBEAT_TTL) -> None:
        if heartbeat_ttl <= 0:
            raise ValueError(f"heartbeat_ttl must be positive, got {heartbeat_ttl}")
        self.heartbeat_ttl = heartbeat_ttl
        self._instances: dict[str, list[ServiceInstance]] = {}
        self._lock = threading.Lock()

    def register(self, service_name: str, instance_id: str, now: float) -> ServiceInstance:
        with self._lock:
            siblings = self._instances.setdefault(service_name, [])
            if any(inst.instance_id == instance_id for inst in siblings):
                raise AlreadyRegistered(f"{service_name}/{instance_id} already registered")
            instance = ServiceInstance(
                service_name=service_name,
                instance_id=instance_id,
                registered_at=now,
                last_heartbeat=now,
            )
            siblings.append(instance)
            return instance

    def heartbeat(self, service_name: str, instance_id: str, now: float) -> None:
        with self._lock:
            for inst in self._instances.get(service_name, []):
                if inst.instance_id == instance_id:
                    inst.last_heartbeat = now
                    return
            raise NotFound(f"no instance {service_name}/{instance_id}")

    def heartbeat_all(self, now: float) -> None:
        """Refresh every registered instance, standing in for per-instance pumps."""
        with self._lock:
            for siblings in self._instances.values():
                for inst in siblings:
                    inst.last_heartbeat = now

    def is_healthy(self, instance: ServiceInstance, now: float) -> bool:
        return now - instance.last_heartbeat <= self.heartbeat_ttl

    def resolve(self, service_name: str, now: float) -> list[ServiceInstance]:
        """Healthy instances in registration order; unknown services resolve empty."""
        with self._lock:
            return [
                inst
                for inst in self._instances.get(service_name, [])
                if self.is_healthy(inst, now)
            ]

    def service_names(self) -> list[str]:
        with self._lock:
            return sorted(self._instances)
