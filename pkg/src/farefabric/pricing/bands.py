"""Lead-time and load-factor band tables for rule-based fares.

Lead-time bands partition days-to-departure into (min_exclusive, max_inclusive]
intervals, the last one open-ended. Load-factor bands are step thresholds on
seats_sold / capacity. Both are plain config tables; the defaults implement the
common discount-early / mark-up-late rule and a scarcity ladder.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal

from ..errors import InvalidInput
from ..money import Money


@dataclass(frozen=True)
class LeadTimeBand:
    min_days_exclusive: int
    max_days_inclusive: int | None  # None = open-ended
    multiplier: Decimal


@dataclass(frozen=True)
class LeadTimeBands:
    bands: tuple[LeadTimeBand, ...]

    def __post_init__(self) -> None:
        if not self.bands:
            raise InvalidInput("lead-time bands: at least one band required")
        first = self.bands[0]
        if first.min_days_exclusive >= 0:
            raise InvalidInput(
                f"lead-time bands: first band must cover day 0 "
                f"(min_days_exclusive {first.min_days_exclusive} excludes it)"
            )
        prev = first
        for band in self.bands[1:]:
            if prev.max_days_inclusive is None:
                raise InvalidInput("lead-time bands: only the last band may be open-ended")
            if band.min_days_exclusive != prev.max_days_inclusive:
                lo, hi = sorted((prev.max_days_inclusive, band.min_days_exclusive))
                kind = "gap" if band.min_days_exclusive > prev.max_days_inclusive else "overlap"
                raise InvalidInput(f"lead-time bands: {kind} between {lo} and {hi}")
            prev = band
        if prev.max_days_inclusive is not None:
            raise InvalidInput("lead-time bands: last band must be open-ended to cover all lead times")
        for band in self.bands:
            if band.multiplier <= 0:
                raise InvalidInput(f"lead-time bands: multiplier must be positive, got {band.multiplier}")

    def multiplier_for(self, days_to_departure: int) -> Decimal:
        if days_to_departure < 0:
            raise InvalidInput(f"days_to_departure must be >= 0, got {days_to_departure}")
        for band in self.bands:
            if days_to_departure > band.min_days_exclusive and (
                band.max_days_inclusive is None or days_to_departure <= band.max_days_inclusive
            ):
                return band.multiplier
        raise InvalidInput(f"no lead-time band contains {days_to_departure}")  # unreachable after validation


@dataclass(frozen=True)
class LoadFactorBand:
    min_load_factor: float  # inclusive threshold in [0, 1]
    multiplier: Decimal


@dataclass(frozen=True)
class LoadFactorBands:
    bands: tuple[LoadFactorBand, ...]

    def __post_init__(self) -> None:
        if not self.bands:
            raise InvalidInput("load-factor bands: at least one band required")
        if self.bands[0].min_load_factor != 0.0:
            raise InvalidInput(
                f"load-factor bands: thresholds must start at 0.0, got {self.bands[0].min_load_factor}"
            )
        prev_threshold = -1.0
        prev_mult: Decimal | None = None
        for band in self.bands:
            if not 0.0 <= band.min_load_factor <= 1.0:
                raise InvalidInput(f"load-factor bands: threshold {band.min_load_factor} outside [0, 1]")
            if band.min_load_factor <= prev_threshold:
                raise InvalidInput(
                    f"load-factor bands: thresholds must be strictly increasing at {band.min_load_factor}"
                )
            if band.multiplier <= 0:
                raise InvalidInput(f"load-factor bands: multiplier must be positive, got {band.multiplier}")
            if prev_mult is not None and band.multiplier < prev_mult:
                raise InvalidInput(
                    f"load-factor bands: multipliers must be non-decreasing, "
                    f"{band.multiplier} follows {prev_mult}"
                )
            prev_threshold = band.min_load_factor
            prev_mult = band.multiplier

    def multiplier_for(self, load_factor: float) -> Decimal:
        if not 0.0 <= load_factor <= 1.0:
            raise InvalidInput(f"load factor {load_factor} outside [0, 1]")
        chosen = self.bands[0].multiplier
        for band in self.bands:
            if band.min_load_factor <= load_factor:
                chosen = band.multiplier
        return chosen


DEFAULT_LEAD_TIME_BANDS = LeadTimeBands(
    (
        LeadTimeBand(-1, 30, Decimal("1.5")),
        LeadTimeBand(30, 60, Decimal("1.0")),
        LeadTimeBand(60, None, Decimal("0.8")),
    )
)

DEFAULT_LOAD_FACTOR_BANDS = LoadFactorBands(
    (
        LoadFactorBand(0.0, Decimal("1.0")),
        LoadFactorBand(0.5, Decimal("1.1")),
        LoadFactorBand(0.8, Decimal("1.3")),
    )
)


def rule_based_fare(base_fare: Money, days_to_departure: int, bands: LeadTimeBands = DEFAULT_LEAD_TIME_BANDS) -> Money:
    """Price by booking lead time: base fare times the matching band multiplier."""
    mult = bands.multiplier_for(days_to_departure)
    return Money.of(base_fare.amount * mult, base_fare.currency)


def load_factor_multiplier(capacity: int, seats_sold: int, bands: LoadFactorBands = DEFAULT_LOAD_FACTOR_BANDS) -> Decimal:
    """Scarcity multiplier for the current load factor (seats_sold / capacity)."""
    if capacity <= 0:
        raise InvalidInput(f"capacity must be positive, got {capacity}")
    if seats_sold < 0 or seats_sold > capacity:
        raise InvalidInput(f"seats_sold {seats_sold} outside [0, {capacity}]")
    return bands.multiplier_for(seats_sold / capacity)
