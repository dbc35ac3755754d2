"""Report value types produced by scenario runs and mode comparisons."""

from __future__ import annotations

from dataclasses import dataclass

from ..money import Money


@dataclass(frozen=True)
class ScenarioReport:
    seed: int
    mode: str
    currency: str
    total_revenue: Money
    bookings_accepted: int
    offers_made: int
    mean_satisfaction: float | None
    mean_response_time_ms: float
    demand_forecast_mape: float | None
    response_time_histogram: tuple[tuple[float, float, int], ...]  # (bin_low_ms, bin_high_ms, count)
    throughput_series: tuple[tuple[float, int], ...]  # (window_start_hours, requests)
    latency_series: tuple[tuple[str, str, float, float, int], ...]  # (src, dst, window_start_hours, mean_ms, samples)
    revenue_daily: tuple[tuple[int, Money], ...]
    satisfaction_daily: tuple[tuple[int, float | None], ...]
    bookings_by_route: tuple[tuple[str, int], ...]
    cache_hits: int
    cache_misses: int


@dataclass(frozen=True)
class SeedOutcome:
    seed: int
    dynamic_revenue: Money
    fixed_revenue: Money
    uplift_pct: float | None  # None when fixed revenue is zero
    dynamic_satisfaction: float | None
    fixed_satisfaction: float | None


@dataclass(frozen=True)
class UpliftReport:
    currency: str
    per_seed: tuple[SeedOutcome, ...]
    mean_uplift_pct: float | None
    mean_dynamic_satisfaction: float | None
    mean_fixed_satisfaction: float | None
