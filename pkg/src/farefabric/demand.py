"""Demand history, linear-trend forecasting, and accuracy metrics.

Bookings land in fixed-width time buckets per route. Forecasts fit an OLS
linear trend over bucket indices and extrapolate, clamping at zero because
demand cannot go negative. MAPE excludes zero-actual points; elasticity is the
slope of a log-log regression of quantity on price.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from .errors import InsufficientData, InvalidInput, UndefinedMetric


@dataclass(frozen=True)
class DemandHistory:
    route: str
    bucket_width: float  # simulated minutes
    start_time: float = 0.0
    counts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.bucket_width <= 0:
            raise InvalidInput(f"bucket_width must be positive, got {self.bucket_width}")
        for i, count in enumerate(self.counts):
            if count < 0:
                raise InvalidInput(f"bucket {i} has negative count {count}")

    def bucket_start(self, index: int) -> float:
        return self.start_time + index * self.bucket_width

    @property
    def buckets(self) -> tuple[tuple[float, int], ...]:
        return tuple((self.bucket_start(i), c) for i, c in enumerate(self.counts))

    @property
    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class DemandForecast:
    horizon: int
    values: tuple[float, ...]
    method: str

    def __post_init__(self) -> None:
        if len(self.values) != self.horizon:
            raise InvalidInput(f"{len(self.values)} values for horizon {self.horizon}")
        for v in self.values:
            if v < 0:
                raise InvalidInput(f"forecast values must be >= 0, got {v}")


@dataclass(frozen=True)
class ElasticityEstimate:
    epsilon: float
    r_squared: float
    n_points: int

    def __post_init__(self) -> None:
        if self.n_points < 2:
            raise InvalidInput(f"elasticity needs >= 2 points, got {self.n_points}")
        if not 0.0 <= self.r_squared <= 1.0:
            raise InvalidInput(f"r_squared {self.r_squared} outside [0, 1]")


def ingest_booking(history: DemandHistory, time: float, count: int = 1) -> DemandHistory:
    """Return a new history with `count` bookings added to the bucket holding `time`.

    Buckets between the current end and `time` are materialized as zeros so the
    series stays contiguous.
    """
    if count < 1:
        raise InvalidInput(f"count must be >= 1, got {count}")
    if time < history.start_time:
        raise InvalidInput(f"time {time} precedes history start {history.start_time}")
    index = int((time - history.start_time) // history.bucket_width)
    counts = list(history.counts)
    while len(counts) <= index:
        counts.append(0)
    counts[index] += count
    return replace(history, counts=tuple(counts))


def ingest_bookings_jsonl(histories: dict[str, DemandHistory], path: str) -> dict[str, DemandHistory]:
    """Bulk-load bookings from a JSON-lines file with keys time, route, count."""
    updated = dict(histories)
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise InvalidInput(f"{path}:{lineno}: invalid JSON ({exc.msg})") from exc
            try:
                time = float(record["time"])
                route = str(record["route"])
                count = int(record.get("count", 1))
            except (KeyError, TypeError, ValueError) as exc:
                raise InvalidInput(f"{path}:{lineno}: expected keys time, route, count") from exc
            if route not in updated:
                raise InvalidInput(f"{path}:{lineno}: unknown route {route!r}")
            updated[route] = ingest_booking(updated[route], time, count)
    return updated


def _linear_fit(xs: Sequence[float], ys: Sequence[float]) -> tuple[float, float]:
    """OLS fit returning (slope, intercept)."""
    design = np.column_stack([np.asarray(xs, dtype=float), np.ones(len(xs))])
    solution, _, _, _ = np.linalg.lstsq(design, np.asarray(ys, dtype=float), rcond=None)
    return float(solution[0]), float(solution[1])


def forecast_demand(history: DemandHistory, horizon: int) -> DemandForecast:
    """Linear-trend forecast over the next `horizon` buckets, clamped at zero."""
    if horizon < 1:
        raise InvalidInput(f"horizon must be >= 1, got {horizon}")
    n = len(history.counts)
    if n < 2:
        raise InsufficientData(f"forecast needs >= 2 buckets, have {n}")
    slope, intercept = _linear_fit(range(n), history.counts)
    values = tuple(max(0.0, intercept + slope * (n + step)) for step in range(horizon))
    return DemandForecast(horizon=horizon, values=values, method="linear_trend")


def mape(actual: Sequence[float], forecast: Sequence[float]) -> float:
    """Mean absolute percentage error; points with actual == 0 are excluded."""
    if len(actual) != len(forecast):
        raise InvalidInput(f"length mismatch: {len(actual)} actuals, {len(forecast)} forecasts")
    if len(actual) == 0:
        raise InvalidInput("mape needs at least one point")
    terms = [abs(a - f) / abs(a) for a, f in zip(actual, forecast) if a != 0]
    if not terms:
        raise UndefinedMetric("mape undefined: all actual values are zero")
    return 100.0 * sum(terms) / len(terms)


def rmse(actual: Sequence[float], forecast: Sequence[float]) -> float:
    """Root mean squared error."""
    if len(actual) != len(forecast):
        raise InvalidInput(f"length mismatch: {len(actual)} actuals, {len(forecast)} forecasts")
    if len(actual) == 0:
        raise InvalidInput("rmse needs at least one point")
    return math.sqrt(sum((a - f) ** 2 for a, f in zip(actual, forecast)) / len(actual))


def estimate_elasticity(observations: Iterable[tuple[float, float]]) -> ElasticityEstimate:
    """Price elasticity: OLS slope of ln(quantity) on ln(price), with fit r²."""
    pairs = list(observations)
    if len(pairs) < 2:
        raise InsufficientData(f"elasticity needs >= 2 observations, have {len(pairs)}")
    for price, quantity in pairs:
        if price <= 0 or quantity <= 0:
            raise InvalidInput(f"prices and quantities must be positive, got ({price}, {quantity})")
    log_p = [math.log(p) for p, _ in pairs]
    log_q = [math.log(q) for _, q in pairs]
    if len(set(log_p)) == 1:
        raise InvalidInput("elasticity undefined: all prices identical")
    slope, intercept = _linear_fit(log_p, log_q)
    mean_q = sum(log_q) / len(log_q)
    ss_tot = sum((q - mean_q) ** 2 for q in log_q)
    ss_res = sum((q - (intercept + slope * p)) ** 2 for p, q in zip(log_p, log_q))
    if ss_tot == 0.0:
        r_squared = 1.0 if ss_res <= 1e-18 else 0.0
    else:
        r_squared = max(0.0, min(1.0, 1.0 - ss_res / ss_tot))
    return ElasticityEstimate(epsilon=slope, r_squared=r_squared, n_points=len(pairs))
