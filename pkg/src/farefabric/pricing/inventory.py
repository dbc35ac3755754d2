"""Inventory state, threshold-trigger price actions, and fare-class allocation.

The trigger policy encodes two revenue-management reflexes: raise fares once a
flight is nearly sold out, and discount last-minute gluts to fill seats. Both
thresholds and magnitudes come from config. Fare-class booking limits are
reallocated proportionally to forecast demand with largest-remainder rounding
so they always sum exactly to capacity.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Mapping

from ..errors import InvalidInput


class ActionKind(enum.Enum):
    RAISE = "raise"
    DISCOUNT = "discount"
    HOLD = "hold"


@dataclass(frozen=True)
class PriceAction:
    kind: ActionKind
    magnitude: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.magnitude <= 1.0:
            raise InvalidInput(f"action magnitude {self.magnitude} outside [0, 1]")
        if self.kind is ActionKind.HOLD and self.magnitude != 0.0:
            raise InvalidInput("hold action must have magnitude 0")


@dataclass(frozen=True)
class InventoryState:
    capacity: int
    seats_sold: int
    days_to_departure: int
    fare_class_limits: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.capacity <= 0:
            raise InvalidInput(f"capacity must be positive, got {self.capacity}")
        if not 0 <= self.seats_sold <= self.capacity:
            raise InvalidInput(f"seats_sold {self.seats_sold} outside [0, {self.capacity}]")
        if self.days_to_departure < 0:
            raise InvalidInput(f"days_to_departure must be >= 0, got {self.days_to_departure}")
        if self.fare_class_limits and sum(self.fare_class_limits.values()) != self.capacity:
            raise InvalidInput(
                f"fare class limits sum to {sum(self.fare_class_limits.values())}, "
                f"capacity is {self.capacity}"
            )

    @property
    def load_factor(self) -> float:
        return self.seats_sold / self.capacity

    @property
    def remaining_fraction(self) -> float:
        return (self.capacity - self.seats_sold) / self.capacity


@dataclass(frozen=True)
class TriggerPolicy:
    scarcity_threshold: float = 0.2
    last_minute_days: int = 3
    glut_threshold: float = 0.5
    raise_pct: float = 0.10
    discount_pct: float = 0.20

    def __post_init__(self) -> None:
        for name in ("scarcity_threshold", "glut_threshold", "raise_pct", "discount_pct"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise InvalidInput(f"{name} {value} outside [0, 1]")
        if self.last_minute_days < 0:
            raise InvalidInput(f"last_minute_days must be >= 0, got {self.last_minute_days}")


DEFAULT_TRIGGER_POLICY = TriggerPolicy()


def heuristic_trigger(state: InventoryState, policy: TriggerPolicy = DEFAULT_TRIGGER_POLICY) -> PriceAction:
    """Threshold trigger: raise on scarcity, discount last-minute gluts, else hold.

    Raise wins if both conditions fire.
    """
    if state.remaining_fraction <= policy.scarcity_threshold:
        return PriceAction(ActionKind.RAISE, policy.raise_pct)
    if (
        state.days_to_departure <= policy.last_minute_days
        and state.remaining_fraction >= policy.glut_threshold
    ):
        return PriceAction(ActionKind.DISCOUNT, policy.discount_pct)
    return PriceAction(ActionKind.HOLD, 0.0)


def reallocate_fare_classes(forecast: Mapping[str, float], capacity: int) -> dict[str, int]:
    """Booking limits proportional to forecast demand, summing exactly to capacity.

    Largest-remainder rounding; an all-zero forecast splits capacity equally.
    Remainder seats go to the largest fractional parts, ties breaking by
    ascending class name.
    """
    if capacity <= 0:
        raise InvalidInput(f"capacity must be positive, got {capacity}")
    if not forecast:
        raise InvalidInput("forecast must name at least one fare class")
    for name, demand in forecast.items():
        if demand < 0 or not math.isfinite(demand):
            raise InvalidInput(f"forecast for {name!r} must be non-negative and finite, got {demand}")

    names = sorted(forecast)
    total = sum(forecast[name] for name in names)
    if total == 0:
        shares = {name: capacity / len(names) for name in names}
    else:
        shares = {name: capacity * forecast[name] / total for name in names}

    limits = {name: math.floor(shares[name]) for name in names}
    remainder = capacity - sum(limits.values())
    by_fraction = sorted(names, key=lambda name: (-(shares[name] - limits[name]), name))
    for name in by_fraction[:remainder]:
        limits[name] += 1
    return limits
