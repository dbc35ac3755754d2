"""Scenario execution: the full quote pipeline over the simulated fabric.

Each arrival is a quote request routed gateway → pricing. In dynamic mode the
pricing instance consults the demand, competitor, and event services (through
the cache) and composes the full multiplier chain; in fixed mode it returns
the base fare. The purchase rule is a deterministic threshold: buy iff price
does not exceed willingness to pay and seats remain. Everything runs on the
seeded discrete-event clock, so a config plus seed fully determines the report.
"""

from __future__ import annotations

import datetime as dt
import math
from dataclasses import dataclass, field
from decimal import Decimal
from typing import TYPE_CHECKING

from ..competitors import AdjustmentPolicy, CompetitorQuote, market_position, recommend_adjustment
from ..demand import DemandHistory, forecast_demand, ingest_booking, mape
from ..errors import ConfigValidationError, UndefinedMetric
from ..events import impact_factor
from ..fabric.balancer import LoadBalancer
from ..fabric.cache import MISS, CacheStore
from ..fabric.clock import SimClock
from ..fabric.latency import LatencyModel
from ..fabric.registry import Registry
from ..money import Money
from ..pricing.quote import QuoteConfig, compose_quote
from ..pricing.inventory import InventoryState
from ..reporting import histogram
from ..seeds import derive_seed
from .arrivals import CustomerDraw, build_customer_stream
from .reports import ScenarioReport

if TYPE_CHECKING:
    from ..config import RouteConfig, ScenarioConfig

MINUTES_PER_DAY = 1440.0


def satisfaction_score(price: Money, wtp: Money) -> float | None:
    """Normalized consumer surplus for a purchase; None when priced out."""
    if wtp.amount <= 0:
        raise ValueError("willingness to pay must be positive")
    if price > wtp:
        return None
    return float((wtp.amount - price.amount) / wtp.amount)


@dataclass
class _RouteState:
    cfg: RouteConfig
    seats_sold: int = 0
    history: DemandHistory = None  # set in __post_init__
    predictions: dict[int, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.history = DemandHistory(route=self.cfg.route, bucket_width=MINUTES_PER_DAY)


class _Simulation:
    def __init__(self, cfg: ScenarioConfig, customers: tuple[CustomerDraw, ...], mode: str) -> None:
        self.cfg = cfg
        self.customers = customers
        self.mode = mode
        self.duration_s = cfg.arrival_profile.duration_hours * 3600.0
        self.departure_date = cfg.start_date + dt.timedelta(days=int(cfg.arrival_profile.duration_hours // 24))

        self.clock = SimClock(seed=cfg.seed)
        self.registry = Registry(heartbeat_ttl=cfg.fabric.heartbeat_ttl_seconds)
        for service, count in cfg.fabric.instances:
            for i in range(count):
                self.registry.register(service, f"{service}-{i}", now=0.0)
        self.balancer = LoadBalancer(cfg.fabric.balancer)
        self.cache = CacheStore(cfg.fabric.cache_capacity)
        self.latency = LatencyModel(
            derive_seed(cfg.seed, "latency"), cfg.fabric.latency_map(), cfg.fabric.latency_default
        )
        self.compute = cfg.fabric.compute_map()
        self.quote_cfg = QuoteConfig(cfg.lead_time_bands, cfg.load_factor_bands)
        self.adjust_policy_by_route = {
            r.route: AdjustmentPolicy(max_step=cfg.adjustment.max_step, floor=r.floor) for r in cfg.routes
        }
        self.scripts_by_route = {
            r.route: [s for s in cfg.competitors if s.route == r.route] for r in cfg.routes
        }
        self.routes = {r.route: _RouteState(r) for r in cfg.routes}

        self.offers = 0
        self.accepted = 0
        self.revenue = Decimal("0.00")
        self.satisfaction_scores: list[float] = []
        self.response_times_ms: list[float] = []
        self.revenue_by_day: dict[int, Decimal] = {}
        self.satisfaction_by_day: dict[int, list[float]] = {}
        self.throughput: dict[int, int] = {}
        self.latency_windows: dict[tuple[str, str, int], tuple[float, int]] = {}

    def _pick_instance(self, service: str):
        instances = self.registry.resolve(service, self.clock.now)
        return self.balancer.route(service, instances)

    def _hop(self, src: str, dst: str, window: int) -> float:
        sample = self.latency.sample(src, dst)
        total, count = self.latency_windows.get((src, dst, window), (0.0, 0))
        self.latency_windows[(src, dst, window)] = (total + sample, count + 1)
        return sample

    def _forecast_current_day(self, state: _RouteState, day: int) -> float | None:
        """Predict today's bookings from the completed days so far."""
        if day < 2:
            return None
        counts = list(state.history.counts[:day])
        counts += [0] * (day - len(counts))
        full_days = DemandHistory(route=state.cfg.route, bucket_width=MINUTES_PER_DAY, counts=tuple(counts))
        return forecast_demand(full_days, 1).values[0]

    def _consult_demand(self, state: _RouteState, day: int, window: int) -> float:
        key = ("demand", state.cfg.route, day)
        cached = self.cache.get(key, self.clock.now)
        if cached is not MISS:
            return 0.0
        forecast_value = self._forecast_current_day(state, day)
        if forecast_value is not None and day not in state.predictions:
            state.predictions[day] = forecast_value
        self.cache.put(key, forecast_value, self.cfg.fabric.cache_ttl_seconds, self.clock.now)
        self._pick_instance("demand")
        return self._hop("pricing", "demand", window) + self.compute["demand"]

    def _consult_competitor(
        self, state: _RouteState, draw: CustomerDraw, day: int, window: int, tentative: Money
    ) -> tuple[float, float]:
        key = ("competitor", state.cfg.route, day)
        cached = self.cache.get(key, self.clock.now)
        if cached is not MISS:
            return cached, 0.0
        scripts = self.scripts_by_route[state.cfg.route]
        if scripts:
            rivals = [
                CompetitorQuote(s.competitor, s.route, s.price_at(draw.arrival_hour), observed_at=self.clock.now)
                for s in scripts
            ]
            position = market_position(tentative, rivals, self.cfg.adjustment.parity_band)
            delta = recommend_adjustment(position, self.adjust_policy_by_route[state.cfg.route])
        else:
            delta = 0.0
        self.cache.put(key, delta, self.cfg.fabric.cache_ttl_seconds, self.clock.now)
        self._pick_instance("competitor")
        return delta, self._hop("pricing", "competitor", window) + self.compute["competitor"]

    def _consult_event(self, route: str, day: int, window: int) -> tuple[Decimal, float]:
        key = ("event", route)
        cached = self.cache.get(key, self.clock.now)
        if cached is not MISS:
            return cached, 0.0
        factor = impact_factor(self.cfg.events, self.departure_date, route)
        self.cache.put(key, factor, self.cfg.fabric.cache_ttl_seconds, self.clock.now)
        self._pick_instance("event")
        return factor, self._hop("pricing", "event", window) + self.compute["event"]

    def _handle_arrival(self, draw: CustomerDraw) -> None:
        state = self.routes[draw.route]
        day = int(draw.arrival_hour // 24)
        window = int(draw.arrival_hour // self.cfg.report.throughput_window_hours)
        self.offers += 1
        self.throughput[window] = self.throughput.get(window, 0) + 1

        self._pick_instance("gateway")
        pricing_instance = self._pick_instance("pricing")
        pricing_instance.in_flight += 1
        response_ms = self.compute["gateway"] + self._hop("gateway", "pricing", window) + self.compute["pricing"]

        if self.mode == "dynamic":
            response_ms += self._consult_demand(state, day, window)
            event_factor, event_ms = self._consult_event(draw.route, day, window)
            response_ms += event_ms
            inventory = InventoryState(
                capacity=state.cfg.capacity,
                seats_sold=state.seats_sold,
                days_to_departure=draw.lead_days,
            )
            tentative = compose_quote(
                state.cfg.base_fare,
                draw.lead_days,
                inventory,
                event_factor,
                0.0,
                state.cfg.floor,
                state.cfg.ceiling,
                self.quote_cfg,
            ).final_price
            delta, competitor_ms = self._consult_competitor(state, draw, day, window, tentative)
            response_ms += competitor_ms
            price = compose_quote(
                state.cfg.base_fare,
                draw.lead_days,
                inventory,
                event_factor,
                delta,
                state.cfg.floor,
                state.cfg.ceiling,
                self.quote_cfg,
            ).final_price
        else:
            price = state.cfg.base_fare

        pricing_instance.in_flight -= 1
        self.response_times_ms.append(response_ms)

        if state.seats_sold < state.cfg.capacity:
            score = satisfaction_score(price, draw.wtp)
            if score is not None:
                state.seats_sold += 1
                self.accepted += 1
                self.revenue += price.amount
                self.satisfaction_scores.append(score)
                self.revenue_by_day[day] = self.revenue_by_day.get(day, Decimal("0.00")) + price.amount
                self.satisfaction_by_day.setdefault(day, []).append(score)
                state.history = ingest_booking(state.history, draw.arrival_hour * 60.0, 1)

    def run(self) -> ScenarioReport:
        interval = self.cfg.fabric.heartbeat_ttl_seconds / 2.0

        def pump() -> None:
            self.registry.heartbeat_all(self.clock.now)
            if self.clock.now + interval <= self.duration_s:
                self.clock.schedule(interval, "heartbeat", pump)

        self.clock.schedule(0.0, "heartbeat", pump)
        for i, draw in enumerate(self.customers):
            self.clock.schedule(
                draw.arrival_hour * 3600.0,
                f"arrival/{i}",
                lambda d=draw: self._handle_arrival(d),
            )
        self.clock.advance_until_idle()
        return self._build_report()

    def _mape_over_predictions(self) -> float | None:
        actuals: list[float] = []
        predictions: list[float] = []
        for route in sorted(self.routes):
            state = self.routes[route]
            counts = state.history.counts
            for day in sorted(state.predictions):
                actuals.append(float(counts[day]) if day < len(counts) else 0.0)
                predictions.append(state.predictions[day])
        if not actuals:
            return None
        try:
            return mape(actuals, predictions)
        except UndefinedMetric:
            return None

    def _build_report(self) -> ScenarioReport:
        n_days = max(1, math.ceil(self.cfg.arrival_profile.duration_hours / 24.0))
        n_windows = max(1, math.ceil(self.cfg.arrival_profile.duration_hours / self.cfg.report.throughput_window_hours))
        window_hours = self.cfg.report.throughput_window_hours

        satisfaction_daily = []
        for day in range(n_days):
            scores = self.satisfaction_by_day.get(day)
            satisfaction_daily.append((day, sum(scores) / len(scores) if scores else None))

        latency_series = tuple(
            (src, dst, windex * window_hours, total / count, count)
            for (src, dst, windex), (total, count) in sorted(self.latency_windows.items())
        )

        return ScenarioReport(
            seed=self.cfg.seed,
            mode=self.mode,
            currency=self.cfg.currency,
            total_revenue=Money(self.revenue.quantize(Decimal("0.01")), self.cfg.currency),
            bookings_accepted=self.accepted,
            offers_made=self.offers,
            mean_satisfaction=(
                sum(self.satisfaction_scores) / len(self.satisfaction_scores)
                if self.satisfaction_scores
                else None
            ),
            mean_response_time_ms=(
                sum(self.response_times_ms) / len(self.response_times_ms) if self.response_times_ms else 0.0
            ),
            demand_forecast_mape=self._mape_over_predictions(),
            response_time_histogram=histogram(self.response_times_ms, self.cfg.report.histogram_bin_ms),
            throughput_series=tuple(
                (w * window_hours, self.throughput.get(w, 0)) for w in range(n_windows)
            ),
            latency_series=latency_series,
            revenue_daily=tuple(
                (day, Money(self.revenue_by_day.get(day, Decimal("0.00")).quantize(Decimal("0.01")), self.cfg.currency))
                for day in range(n_days)
            ),
            satisfaction_daily=tuple(satisfaction_daily),
            bookings_by_route=tuple((route, self.routes[route].seats_sold) for route in sorted(self.routes)),
            cache_hits=self.cache.hits,
            cache_misses=self.cache.misses,
        )


def simulate(cfg: ScenarioConfig, customers: tuple[CustomerDraw, ...], mode: str) -> ScenarioReport:
    """Run one arm over a prebuilt customer population."""
    if mode not in ("dynamic", "fixed"):
        raise ConfigValidationError(f"mode must be 'dynamic' or 'fixed', got {mode!r}")
    known = {r.route for r in cfg.routes}
    for customer in customers:
        if customer.route not in known:
            raise ConfigValidationError(f"customer references unknown route {customer.route!r}")
    return _Simulation(cfg, customers, mode).run()


def run_scenario(cfg: ScenarioConfig) -> ScenarioReport:
    """Run the configured scenario; a pure function of (config, seed)."""
    customers = build_customer_stream(
        cfg.arrival_profile,
        cfg.wtp,
        cfg.customer,
        [r.route for r in cfg.routes],
        cfg.seed,
        cfg.currency,
    )
    return simulate(cfg, customers, cfg.mode)
