"""Bounded TTL cache with LRU eviction and hit/miss accounting.

Entries expire strictly at put-time + ttl; a read at exactly expires_at is a
miss. Reads of expired keys evict them on the spot. When a put would exceed
capacity, expired entries are purged first and only then is the
least-recently-used live entry evicted.
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass
from typing import Any, Hashable

from ..errors import InvalidInput

DEFAULT_CACHE_TTL = 300.0


class _Miss:
    __slots__ = ()

    def __repr__(self) -> str:
        return "MISS"

    def __bool__(self) -> bool:
        return False


MISS = _Miss()


@dataclass
class _Entry:
    value: Any
    expires_at: float


class CacheStore:
    def __init__(self, capacity: int) -> None:
        if capacity < 1:
            raise InvalidInput(f"cache capacity must be >= 1, got {capacity}")
        self.capacity = capacity
        self.hits = 0
        self.misses = 0
        self._entries: OrderedDict[Hashable, _Entry] = OrderedDict()
        self._lock = threading.Lock()

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)

    def _purge_expired(self, now: float) -> None:
        dead = [key for key, entry in self._entries.items() if now >= entry.expires_at]
        for key in dead:
            del self._entries[key]

    def put(self, key: Hashable, value: Any, ttl: float, now: float) -> None:
        if ttl <= 0:
            raise InvalidInput(f"cache ttl must be positive, got {ttl}")
        with self._lock:
            if key in self._entries:
                del self._entries[key]
            elif len(self._entries) >= self.capacity:
                self._purge_expired(now)
                if len(self._entries) >= self.capacity:
                    self._entries.popitem(last=False)  # least recently used
            self._entries[key] = _Entry(value=value, expires_at=now + ttl)

    def get(self, key: Hashable, now: float) -> Any:
        """Value for key, or MISS; hits refresh recency, expired reads evict."""
        with self._lock:
            entry = self._entries.get(key)
            if entry is None:
                self.misses += 1
                return MISS
            if now >= entry.expires_at:
                del self._entries[key]
                self.misses += 1
                return MISS
            self._entries.move_to_end(key)
            self.hits += 1
            return entry.value
