"""Inter-service latency model.

Each (source, destination) pair draws from its own seeded lognormal stream, so
call order on one pair never disturbs another and a fixed seed reproduces the
same sample sequence. Pairs without explicit parameters use the default pair.
Samples are in milliseconds.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Mapping

from ..errors import InvalidInput
from ..seeds import derive_seed


@dataclass(frozen=True)
class LatencyParams:
    mu: float  # ln(milliseconds)
    sigma: float

    def __post_init__(self) -> None:
        if self.sigma < 0:
            raise InvalidInput(f"sigma must be >= 0, got {self.sigma}")

    @property
    def mean_ms(self) -> float:
        return math.exp(self.mu + self.sigma**2 / 2)


DEFAULT_LATENCY = LatencyParams(mu=math.log(5.0), sigma=0.5)


class LatencyModel:
    def __init__(
        self,
        seed: int,
        pairs: Mapping[tuple[str, str], LatencyParams] | None = None,
        default: LatencyParams = DEFAULT_LATENCY,
    ) -> None:
        self.seed = seed
        self.pairs = dict(pairs or {})
        self.default = default
        self._streams: dict[tuple[str, str], random.Random] = {}

    def params_for(self, src: str, dst: str) -> LatencyParams:
        return self.pairs.get((src, dst), self.default)

    def _stream(self, src: str, dst: str) -> random.Random:
        key = (src, dst)
        if key not in self._streams:
            self._streams[key] = random.Random(derive_seed(self.seed, f"latency/{src}->{dst}"))
        return self._streams[key]

    def sample(self, src: str, dst: str) -> float:
        """One latency draw in milliseconds for the src → dst hop."""
        params = self.params_for(src, dst)
        if params.sigma == 0:
            self._stream(src, dst).random()  # keep stream position moving uniformly
            return math.exp(params.mu)
        return self._stream(src, dst).lognormvariate(params.mu, params.sigma)


def sample_latency(model: LatencyModel, src: str, dst: str) -> float:
    return model.sample(src, dst)
