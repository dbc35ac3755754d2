"""Customer arrival generation and willingness-to-pay draws.

Arrivals follow a nonhomogeneous Poisson process realized by thinning: draw
candidate gaps at the profile's peak rate, then accept each candidate with
probability rate(t) / max_rate. Willingness to pay is lognormal. Everything is
driven by named, seed-derived streams so a comparison's two arms can share one
customer population exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from decimal import Decimal
from typing import Sequence

from ..errors import InvalidInput
from ..money import Money
from ..seeds import derive_seed


@dataclass(frozen=True)
class ArrivalProfile:
    duration_hours: float
    segments: tuple[tuple[float, float], ...]  # (start_hour, rate per hour)

    def __post_init__(self) -> None:
        if self.duration_hours <= 0:
            raise InvalidInput(f"duration_hours must be positive, got {self.duration_hours}")
        if not self.segments:
            raise InvalidInput("arrival profile needs at least one segment")
        if self.segments[0][0] != 0.0:
            raise InvalidInput(f"first segment must start at hour 0, got {self.segments[0][0]}")
        prev = -1.0
        for start, rate in self.segments:
            if start <= prev:
                raise InvalidInput(f"segment starts must increase, got {start} after {prev}")
            if start >= self.duration_hours:
                raise InvalidInput(f"segment start {start} is beyond duration {self.duration_hours}")
            if rate < 0:
                raise InvalidInput(f"rates must be >= 0, got {rate}")
            prev = start

    def rate_at(self, t_hours: float) -> float:
        rate = self.segments[0][1]
        for start, seg_rate in self.segments:
            if start <= t_hours:
                rate = seg_rate
        return rate

    @property
    def max_rate(self) -> float:
        return max(rate for _, rate in self.segments)


@dataclass(frozen=True)
class WtpParams:
    mu: float  # ln(price units)
    sigma: float

    def __post_init__(self) -> None:
        if self.sigma < 0:
            raise InvalidInput(f"sigma must be >= 0, got {self.sigma}")


@dataclass(frozen=True)
class CustomerParams:
    loyalty_rate: float = 0.2
    trip_frequency_mean: float = 2.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.loyalty_rate <= 1.0:
            raise InvalidInput(f"loyalty_rate {self.loyalty_rate} outside [0, 1]")
        if self.trip_frequency_mean <= 0:
            raise InvalidInput(f"trip_frequency_mean must be positive, got {self.trip_frequency_mean}")


@dataclass(frozen=True)
class CustomerDraw:
    arrival_hour: float
    route: str
    wtp: Money
    lead_days: int
    trip_frequency: int
    loyalty: bool

    def __post_init__(self) -> None:
        if self.wtp.amount <= 0:
            raise InvalidInput("willingness to pay must be positive")


def generate_arrivals(profile: ArrivalProfile, rng: random.Random) -> list[float]:
    """Arrival times in hours, strictly inside [0, duration), via thinning."""
    peak = profile.max_rate
    if peak == 0:
        return []
    times: list[float] = []
    t = 0.0
    while True:
        t += rng.expovariate(peak)
        if t >= profile.duration_hours:
            break
        if rng.random() * peak < profile.rate_at(t):
            times.append(t)
    return times


def sample_wtp(params: WtpParams, rng: random.Random, currency: str = "USD") -> Money:
    """One positive willingness-to-pay draw, rounded to cents (at least one)."""
    draw = rng.lognormvariate(params.mu, params.sigma)
    money = Money.of(draw, currency)
    if money.amount == 0:
        return Money(Decimal("0.01"), currency)
    return money


def lead_days_for(arrival_hour: float, duration_hours: float) -> int:
    """Whole days between the arrival and departure at the end of the horizon."""
    return max(0, int((duration_hours - arrival_hour) // 24.0))


def build_customer_stream(
    profile: ArrivalProfile,
    wtp: WtpParams,
    customer: CustomerParams,
    routes: Sequence[str],
    seed: int,
    currency: str = "USD",
) -> tuple[CustomerDraw, ...]:
    """The full customer population for one seed.

    Arrival, route, willingness-to-pay, and profile features come from separate
    derived streams; both arms of a comparison consume this same tuple, which
    is what makes common-random-numbers comparisons exact.
    """
    if not routes:
        raise InvalidInput("at least one route required")
    arrival_rng = random.Random(derive_seed(seed, "arrivals"))
    route_rng = random.Random(derive_seed(seed, "routes"))
    wtp_rng = random.Random(derive_seed(seed, "wtp"))
    profile_rng = random.Random(derive_seed(seed, "profile"))

    draws = []
    for t in generate_arrivals(profile, arrival_rng):
        route = routes[route_rng.randrange(len(routes))] if len(routes) > 1 else routes[0]
        draws.append(
            CustomerDraw(
                arrival_hour=t,
                route=route,
                wtp=sample_wtp(wtp, wtp_rng, currency),
                lead_days=lead_days_for(t, profile.duration_hours),
                trip_frequency=min(20, int(profile_rng.expovariate(1.0 / customer.trip_frequency_mean))),
                loyalty=profile_rng.random() < customer.loyalty_rate,
            )
        )
    return tuple(draws)
