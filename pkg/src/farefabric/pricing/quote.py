"""Quote composition: the full multiplier chain behind every priced offer.

The chain order is fixed: lead-time band, load-factor band, event factor,
competitor delta, then clamp to [floor, ceiling]. Each factor is quantized to
six decimal places on entry and the chain runs in high-precision Decimal, so
replaying the recorded steps reproduces the final price bit for bit and
scaling the base fare scales the unclamped result exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_UP, localcontext

from ..errors import InvalidInput
from ..money import CENT, Money
from .bands import (
    DEFAULT_LEAD_TIME_BANDS,
    DEFAULT_LOAD_FACTOR_BANDS,
    LeadTimeBands,
    LoadFactorBands,
    load_factor_multiplier,
)
from .inventory import InventoryState

FACTOR_QUANTUM = Decimal("0.000001")
CHAIN_PRECISION = 60

STEP_LEAD_TIME = "lead_time"
STEP_LOAD_FACTOR = "load_factor"
STEP_EVENT = "event"
STEP_COMPETITOR = "competitor"  # recorded value is the delta, applied as (1 + delta)


@dataclass(frozen=True)
class QuoteConfig:
    lead_time_bands: LeadTimeBands = DEFAULT_LEAD_TIME_BANDS
    load_factor_bands: LoadFactorBands = DEFAULT_LOAD_FACTOR_BANDS


DEFAULT_QUOTE_CONFIG = QuoteConfig()


@dataclass(frozen=True)
class FareQuote:
    final_price: Money
    base_fare: Money
    applied_steps: tuple[tuple[str, Decimal], ...]
    clamped: bool
    floor: Money
    ceiling: Money
    raw_price: Decimal  # chain product before clamping and cent rounding


def _quantize_factor(value: "Decimal | float | int", name: str) -> Decimal:
    if isinstance(value, Decimal):
        raw = value
    elif isinstance(value, float):
        raw = Decimal(repr(value))
    else:
        raw = Decimal(value)
    if not raw.is_finite():
        raise InvalidInput(f"{name} must be finite, got {value}")
    return raw.quantize(FACTOR_QUANTUM, rounding=ROUND_HALF_UP)


def _run_chain(base: Decimal, steps: tuple[tuple[str, Decimal], ...]) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = CHAIN_PRECISION
        price = +base
        for name, value in steps:
            factor = (1 + value) if name == STEP_COMPETITOR else value
            price = price * factor
        return price


def compose_quote(
    base_fare: Money,
    days_to_departure: int,
    inventory: InventoryState,
    event_factor: "Decimal | float" = Decimal("1.0"),
    competitor_delta: float = 0.0,
    floor: Money | None = None,
    ceiling: Money | None = None,
    config: QuoteConfig = DEFAULT_QUOTE_CONFIG,
) -> FareQuote:
    """Compose the fare chain and clamp to the [floor, ceiling] corridor."""
    currency = base_fare.currency
    if floor is None:
        floor = Money(Decimal("0.00"), currency)
    if ceiling is None:
        ceiling = Money(Decimal("9999999.99"), currency)
    if floor.currency != currency or ceiling.currency != currency:
        raise InvalidInput("base fare, floor, and ceiling must share a currency")
    if floor > ceiling:
        raise InvalidInput(f"floor {floor} exceeds ceiling {ceiling}")
    if not -1.0 <= competitor_delta <= 1.0:
        raise InvalidInput(f"competitor_delta {competitor_delta} outside [-1, 1]")

    event = _quantize_factor(event_factor, "event_factor")
    if event <= 0:
        raise InvalidInput(f"event_factor must be positive, got {event_factor}")

    steps = (
        (STEP_LEAD_TIME, _quantize_factor(config.lead_time_bands.multiplier_for(days_to_departure), "lead-time multiplier")),
        (STEP_LOAD_FACTOR, _quantize_factor(
            load_factor_multiplier(inventory.capacity, inventory.seats_sold, config.load_factor_bands),
            "load-factor multiplier",
        )),
        (STEP_EVENT, event),
        (STEP_COMPETITOR, _quantize_factor(competitor_delta, "competitor_delta")),
    )

    raw = _run_chain(base_fare.amount, steps)
    clamped = raw < floor.amount or raw > ceiling.amount
    bounded = min(max(raw, floor.amount), ceiling.amount)
    final = Money(bounded.quantize(CENT, rounding=ROUND_HALF_UP), currency)

    return FareQuote(
        final_price=final,
        base_fare=base_fare,
        applied_steps=steps,
        clamped=clamped,
        floor=floor,
        ceiling=ceiling,
        raw_price=raw,
    )


def replay_quote(quote: FareQuote) -> Money:
    """Recompute the final price from the recorded steps; must match exactly."""
    raw = _run_chain(quote.base_fare.amount, quote.applied_steps)
    bounded = min(max(raw, quote.floor.amount), quote.ceiling.amount)
    return Money(bounded.quantize(CENT, rounding=ROUND_HALF_UP), quote.base_fare.currency)
