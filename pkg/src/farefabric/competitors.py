"""Competitor quote store, market position, and bounded price adjustments.

Quotes arrive from a JSON-lines feed. The store keeps one quote per
(competitor, route): the latest by observation time, last write winning ties.
Position is measured against the cheapest rival; recommendations step toward
it without exceeding the configured step or crossing the price floor.
"""

from __future__ import annotations

import enum
import json
import statistics
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InvalidInput, NoData
from .money import Money

PARITY_BAND_DEFAULT = 0.01


class Stance(enum.Enum):
    PREMIUM = "premium"
    PARITY = "parity"
    UNDERCUT = "undercut"


@dataclass(frozen=True)
class CompetitorQuote:
    competitor: str
    route: str
    price: Money
    observed_at: float

    def __post_init__(self) -> None:
        if self.price.amount <= 0:
            raise InvalidInput(f"competitor price must be positive, got {self.price}")


QuoteBook = Mapping[tuple[str, str], CompetitorQuote]


@dataclass(frozen=True)
class MarketPosition:
    our_price: Money
    cheapest_rival: Money
    median_rival: Money
    gap_vs_cheapest: float
    stance: Stance


@dataclass(frozen=True)
class AdjustmentPolicy:
    max_step: float = 0.05
    floor: Money = Money.of(0, "USD")

    def __post_init__(self) -> None:
        if not 0.0 < self.max_step <= 1.0:
            raise InvalidInput(f"max_step {self.max_step} outside (0, 1]")


def ingest_competitor_quote(book: QuoteBook, quote: CompetitorQuote) -> dict[tuple[str, str], CompetitorQuote]:
    """Return a new book holding the freshest quote per (competitor, route)."""
    key = (quote.competitor, quote.route)
    updated = dict(book)
    existing = updated.get(key)
    if existing is None or quote.observed_at >= existing.observed_at:
        updated[key] = quote
    return updated


def quotes_for_route(book: QuoteBook, route: str) -> list[CompetitorQuote]:
    """All stored quotes for a route, ordered by competitor id for determinism."""
    return sorted(
        (q for q in book.values() if q.route == route),
        key=lambda q: q.competitor,
    )


def load_feed_jsonl(path: str, book: QuoteBook | None = None) -> dict[tuple[str, str], CompetitorQuote]:
    """Load a JSON-lines feed {competitor, route, price, observed_at} into a book."""
    updated: dict[tuple[str, str], CompetitorQuote] = dict(book or {})
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
                quote = CompetitorQuote(
                    competitor=str(record["competitor"]),
                    route=str(record["route"]),
                    price=Money.of(record["price"], str(record.get("currency", "USD"))),
                    observed_at=float(record["observed_at"]),
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise InvalidInput(
                    f"{path}:{lineno}: expected keys competitor, route, price, observed_at"
                ) from exc
            except InvalidInput as exc:
                raise InvalidInput(f"{path}:{lineno}: {exc}") from exc
            updated = ingest_competitor_quote(updated, quote)
    return updated


def market_position(
    our_price: Money,
    rivals: Sequence[CompetitorQuote],
    parity_band: float = PARITY_BAND_DEFAULT,
) -> MarketPosition:
    """Our standing against the cheapest rival; median kept for reporting."""
    if not rivals:
        raise NoData("market position needs at least one rival quote")
    prices = sorted(q.price for q in rivals)
    cheapest = prices[0]
    median = statistics.median_low(prices)
    gap = float((our_price.amount - cheapest.amount) / cheapest.amount)
    if abs(gap) <= parity_band:
        stance = Stance.PARITY
    elif gap > parity_band:
        stance = Stance.PREMIUM
    else:
        stance = Stance.UNDERCUT
    return MarketPosition(
        our_price=our_price,
        cheapest_rival=cheapest,
        median_rival=median,
        gap_vs_cheapest=gap,
        stance=stance,
    )


def recommend_adjustment(position: MarketPosition, policy: AdjustmentPolicy) -> float:
    """Signed fraction stepping our price toward the cheapest rival.

    Magnitude never exceeds max_step; downward moves stop exactly at the floor.
    Parity recommends no change.
    """
    if position.stance is Stance.PARITY:
        return 0.0
    delta = max(-policy.max_step, min(policy.max_step, -position.gap_vs_cheapest))
    if delta < 0 and position.our_price.amount > 0:
        floor_delta = float(policy.floor.amount / position.our_price.amount) - 1.0
        delta = max(delta, min(floor_delta, 0.0))
    return delta
