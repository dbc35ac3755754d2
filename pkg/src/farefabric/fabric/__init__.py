"""Deterministic in-process service fabric: registry, balancing, cache, clock, latency."""

from .balancer import LoadBalancer, Strategy
from .cache import DEFAULT_CACHE_TTL, MISS, CacheStore
from .clock import SimClock, TraceEntry
from .latency import DEFAULT_LATENCY, LatencyModel, LatencyParams, sample_latency
from .registry import DEFAULT_HEARTBEAT_TTL, Registry, ServiceInstance

__all__ = [
    "CacheStore",
    "DEFAULT_CACHE_TTL",
    "DEFAULT_HEARTBEAT_TTL",
    "DEFAULT_LATENCY",
    "LatencyModel",
    "LatencyParams",
    "LoadBalancer",
    "MISS",
    "Registry",
    "ServiceInstance",
    "SimClock",
    "Strategy",
    "TraceEntry",
    "sample_latency",
]
