"""Deterministic derivation of independent RNG streams from one scenario seed."""

from __future__ import annotations

import hashlib


def derive_seed(seed: int, label: str) -> int:
    """Map (seed, label) to a stable 64-bit child seed.

    Labels partition a scenario seed into independent streams (arrivals, wtp,
    per-pair latency, ...) so adding a consumer never shifts another stream.
    """
    digest = hashlib.sha256(f"{seed}/{label}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")
