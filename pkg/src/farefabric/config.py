"""Scenario configuration: strict parsing, defaults, and echoing.

Configs are JSON documents. Validation is strict: unknown keys are rejected and
every failure message names the offending key, so golden configs cannot drift
silently. `to_dict` echoes a fully-defaulted document that re-parses to an
equal config.
"""

from __future__ import annotations

import datetime as dt
import json
from dataclasses import dataclass, replace
from decimal import Decimal, InvalidOperation
from typing import Any, Mapping

from .competitors import PARITY_BAND_DEFAULT
from .errors import ConfigValidationError, InvalidInput
from .events import DEFAULT_CLAMP_RANGE, EventCalendar, events_from_dicts
from .fabric.balancer import Strategy
from .fabric.cache import DEFAULT_CACHE_TTL
from .fabric.latency import DEFAULT_LATENCY, LatencyParams
from .fabric.registry import DEFAULT_HEARTBEAT_TTL
from .money import Money
from .pricing.bands import (
    DEFAULT_LEAD_TIME_BANDS,
    DEFAULT_LOAD_FACTOR_BANDS,
    LeadTimeBand,
    LeadTimeBands,
    LoadFactorBand,
    LoadFactorBands,
)
from .pricing.inventory import TriggerPolicy
from .sim.arrivals import ArrivalProfile, CustomerParams, WtpParams

SERVICES = ("gateway", "pricing", "demand", "competitor", "event")
MODES = ("dynamic", "fixed")
DEFAULT_START_DATE = dt.date(2026, 1, 1)
DEFAULT_INSTANCES = {"gateway": 1, "pricing": 2, "demand": 1, "competitor": 1, "event": 1}
DEFAULT_COMPUTE_MS = {"gateway": 0.2, "pricing": 1.0, "demand": 0.5, "competitor": 0.3, "event": 0.2}
DEFAULT_CEILING = Decimal("9999999.99")


@dataclass(frozen=True)
class RouteConfig:
    route: str
    capacity: int
    base_fare: Money
    floor: Money
    ceiling: Money


@dataclass(frozen=True)
class AdjustmentConfig:
    max_step: float = 0.05
    parity_band: float = PARITY_BAND_DEFAULT


@dataclass(frozen=True)
class CompetitorScript:
    competitor: str
    route: str
    schedule: tuple[tuple[float, Money], ...]  # (start_hour, price)

    def price_at(self, t_hours: float) -> Money:
        price = self.schedule[0][1]
        for start, p in self.schedule:
            if start <= t_hours:
                price = p
        return price


@dataclass(frozen=True)
class FabricConfig:
    cache_ttl_seconds: float = DEFAULT_CACHE_TTL
    cache_capacity: int = 1024
    heartbeat_ttl_seconds: float = DEFAULT_HEARTBEAT_TTL
    balancer: Strategy = Strategy.ROUND_ROBIN
    instances: tuple[tuple[str, int], ...] = tuple(sorted(DEFAULT_INSTANCES.items()))
    compute_cost_ms: tuple[tuple[str, float], ...] = tuple(sorted(DEFAULT_COMPUTE_MS.items()))
    latency_default: LatencyParams = DEFAULT_LATENCY
    latency_pairs: tuple[tuple[tuple[str, str], LatencyParams], ...] = ()

    def instances_map(self) -> dict[str, int]:
        return dict(self.instances)

    def compute_map(self) -> dict[str, float]:
        return dict(self.compute_cost_ms)

    def latency_map(self) -> dict[tuple[str, str], LatencyParams]:
        return dict(self.latency_pairs)


@dataclass(frozen=True)
class ReportParams:
    histogram_bin_ms: float = 5.0
    throughput_window_hours: float = 1.0


@dataclass(frozen=True)
class ScenarioConfig:
    seed: int
    routes: tuple[RouteConfig, ...]
    arrival_profile: ArrivalProfile
    wtp: WtpParams
    mode: str = "dynamic"
    currency: str = "USD"
    start_date: dt.date = DEFAULT_START_DATE
    lead_time_bands: LeadTimeBands = DEFAULT_LEAD_TIME_BANDS
    load_factor_bands: LoadFactorBands = DEFAULT_LOAD_FACTOR_BANDS
    trigger_policy: TriggerPolicy = TriggerPolicy()
    adjustment: AdjustmentConfig = AdjustmentConfig()
    customer: CustomerParams = CustomerParams()
    competitors: tuple[CompetitorScript, ...] = ()
    events: EventCalendar = EventCalendar()
    fabric: FabricConfig = FabricConfig()
    segment_multipliers: tuple[tuple[int, float], ...] = ()
    report: ReportParams = ReportParams()

    def route_map(self) -> dict[str, RouteConfig]:
        return {r.route: r for r in self.routes}

    def with_seed(self, seed: int) -> "ScenarioConfig":
        return replace(self, seed=seed)

    def with_mode(self, mode: str) -> "ScenarioConfig":
        if mode not in MODES:
            raise InvalidInput(f"mode must be one of {MODES}, got {mode!r}")
        return replace(self, mode=mode)

    def to_dict(self) -> dict:
        """Fully-defaulted echo of this config; re-parses to an equal config."""
        return {
            "seed": self.seed,
            "mode": self.mode,
            "currency": self.currency,
            "start_date": self.start_date.isoformat(),
            "routes": {
                r.route: {
                    "capacity": r.capacity,
                    "base_fare": float(r.base_fare.amount),
                    "floor": float(r.floor.amount),
                    "ceiling": float(r.ceiling.amount),
                }
                for r in self.routes
            },
            "lead_time_bands": [
                {
                    "min_days": band.min_days_exclusive + 1,
                    "max_days": band.max_days_inclusive,
                    "multiplier": float(band.multiplier),
                }
                for band in self.lead_time_bands.bands
            ],
            "load_factor_bands": [
                {"min_load_factor": band.min_load_factor, "multiplier": float(band.multiplier)}
                for band in self.load_factor_bands.bands
            ],
            "trigger_policy": {
                "scarcity_threshold": self.trigger_policy.scarcity_threshold,
                "last_minute_days": self.trigger_policy.last_minute_days,
                "glut_threshold": self.trigger_policy.glut_threshold,
                "raise_pct": self.trigger_policy.raise_pct,
                "discount_pct": self.trigger_policy.discount_pct,
            },
            "adjustment_policy": {
                "max_step": self.adjustment.max_step,
                "parity_band": self.adjustment.parity_band,
            },
            "arrival_profile": {
                "duration_hours": self.arrival_profile.duration_hours,
                "segments": [
                    {"start_hour": start, "rate_per_hour": rate}
                    for start, rate in self.arrival_profile.segments
                ],
            },
            "wtp": {"mu": self.wtp.mu, "sigma": self.wtp.sigma},
            "customer": {
                "loyalty_rate": self.customer.loyalty_rate,
                "trip_frequency_mean": self.customer.trip_frequency_mean,
            },
            "competitors": [
                {
                    "competitor": script.competitor,
                    "route": script.route,
                    "schedule": [
                        {"start_hour": start, "price": float(price.amount)}
                        for start, price in script.schedule
                    ],
                }
                for script in self.competitors
            ],
            "events": [
                {
                    "name": e.name,
                    "kind": e.kind,
                    "start": e.start.isoformat(),
                    "end": e.end.isoformat(),
                    "impact": float(e.impact),
                    "routes": list(e.routes),
                }
                for e in self.events.events
            ],
            "event_clamp": list(self.events.clamp_range),
            "fabric": {
                "cache_ttl_seconds": self.fabric.cache_ttl_seconds,
                "cache_capacity": self.fabric.cache_capacity,
                "heartbeat_ttl_seconds": self.fabric.heartbeat_ttl_seconds,
                "balancer": self.fabric.balancer.value,
                "instances": dict(self.fabric.instances),
                "compute_cost_ms": dict(self.fabric.compute_cost_ms),
                "latency_default": {
                    "mu": self.fabric.latency_default.mu,
                    "sigma": self.fabric.latency_default.sigma,
                },
                "latency_pairs": [
                    {"src": src, "dst": dst, "mu": params.mu, "sigma": params.sigma}
                    for (src, dst), params in self.fabric.latency_pairs
                ],
            },
            "segment_multipliers": {str(k): v for k, v in self.segment_multipliers},
            "report": {
                "histogram_bin_ms": self.report.histogram_bin_ms,
                "throughput_window_hours": self.report.throughput_window_hours,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _check_keys(obj: Mapping[str, Any], where: str, required: tuple[str, ...], optional: tuple[str, ...]) -> None:
    for key in obj:
        if key not in required and key not in optional:
            raise ConfigValidationError(f"{where}: unknown key {key!r}")
    for key in required:
        if key not in obj:
            raise ConfigValidationError(f"{where}: missing key {key!r}")


def _as_object(value: Any, where: str) -> Mapping[str, Any]:
    if not isinstance(value, Mapping):
        raise ConfigValidationError(f"{where}: expected an object")
    return value


def _as_array(value: Any, where: str) -> list:
    if not isinstance(value, list):
        raise ConfigValidationError(f"{where}: expected an array")
    return value


def _as_int(value: Any, where: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigValidationError(f"{where}: expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ConfigValidationError(f"{where}: must be >= {minimum}, got {value}")
    return value


def _as_float(value: Any, where: str, minimum: float | None = None, maximum: float | None = None) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigValidationError(f"{where}: expected a number, got {value!r}")
    out = float(value)
    if minimum is not None and out < minimum:
        raise ConfigValidationError(f"{where}: must be >= {minimum}, got {out}")
    if maximum is not None and out > maximum:
        raise ConfigValidationError(f"{where}: must be <= {maximum}, got {out}")
    return out


def _as_str(value: Any, where: str, choices: tuple[str, ...] | None = None) -> str:
    if not isinstance(value, str):
        raise ConfigValidationError(f"{where}: expected a string, got {value!r}")
    if choices is not None and value not in choices:
        raise ConfigValidationError(f"{where}: must be one of {choices}, got {value!r}")
    return value


def _as_money(value: Any, where: str, currency: str) -> Money:
    if isinstance(value, bool) or not isinstance(value, (int, float, str)):
        raise ConfigValidationError(f"{where}: expected a money amount, got {value!r}")
    try:
        money = Money.of(value, currency)
    except (InvalidInput, InvalidOperation) as exc:
        raise ConfigValidationError(f"{where}: {exc}") from exc
    return money


def _as_date(value: Any, where: str) -> dt.date:
    if not isinstance(value, str):
        raise ConfigValidationError(f"{where}: expected an ISO date string, got {value!r}")
    try:
        return dt.date.fromisoformat(value)
    except ValueError as exc:
        raise ConfigValidationError(f"{where}: invalid date {value!r}") from exc


def _parse_routes(raw: Any, currency: str) -> tuple[RouteConfig, ...]:
    obj = _as_object(raw, "routes")
    if not obj:
        raise ConfigValidationError("routes: at least one route required")
    routes = []
    for route_id in sorted(obj):
        where = f"routes.{route_id}"
        spec = _as_object(obj[route_id], where)
        _check_keys(spec, where, required=("capacity", "base_fare"), optional=("floor", "ceiling"))
        capacity = _as_int(spec["capacity"], f"{where}.capacity", minimum=1)
        base_fare = _as_money(spec["base_fare"], f"{where}.base_fare", currency)
        floor = _as_money(spec.get("floor", 0), f"{where}.floor", currency)
        ceiling = (
            _as_money(spec["ceiling"], f"{where}.ceiling", currency)
            if "ceiling" in spec
            else Money(DEFAULT_CEILING, currency)
        )
        if floor > ceiling:
            raise ConfigValidationError(f"{where}.floor: floor {floor} exceeds ceiling {ceiling}")
        routes.append(RouteConfig(route_id, capacity, base_fare, floor, ceiling))
    return tuple(routes)


def _parse_lead_time_bands(raw: Any) -> LeadTimeBands:
    entries = _as_array(raw, "lead_time_bands")
    if not entries:
        raise ConfigValidationError("lead_time_bands: at least one band required")
    bands = []
    prev_max: int | None = None
    for i, entry in enumerate(entries):
        where = f"lead_time_bands[{i}]"
        obj = _as_object(entry, where)
        _check_keys(obj, where, required=("min_days", "max_days", "multiplier"), optional=())
        min_days = _as_int(obj["min_days"], f"{where}.min_days", minimum=0)
        max_days = None if obj["max_days"] is None else _as_int(obj["max_days"], f"{where}.max_days", minimum=0)
        multiplier = _as_float(obj["multiplier"], f"{where}.multiplier")
        if i == 0 and min_days != 0:
            raise ConfigValidationError(f"{where}.min_days: first band must start at 0, got {min_days}")
        if prev_max is not None:
            if min_days > prev_max + 1:
                raise ConfigValidationError(
                    f"{where}.min_days: gap between {prev_max} and {min_days}"
                )
            if min_days <= prev_max:
                raise ConfigValidationError(
                    f"{where}.min_days: overlap between {min_days} and {prev_max}"
                )
        if max_days is not None and max_days < min_days:
            raise ConfigValidationError(f"{where}.max_days: {max_days} precedes min_days {min_days}")
        if i < len(entries) - 1 and max_days is None:
            raise ConfigValidationError(f"{where}.max_days: only the last band may be open-ended")
        if i == len(entries) - 1 and max_days is not None:
            raise ConfigValidationError(f"{where}.max_days: last band must be open-ended (max_days null)")
        bands.append(LeadTimeBand(min_days - 1, max_days, Decimal(str(multiplier))))
        prev_max = max_days
    try:
        return LeadTimeBands(tuple(bands))
    except InvalidInput as exc:
        raise ConfigValidationError(f"lead_time_bands: {exc}") from exc


def _parse_load_factor_bands(raw: Any) -> LoadFactorBands:
    entries = _as_array(raw, "load_factor_bands")
    bands = []
    for i, entry in enumerate(entries):
        where = f"load_factor_bands[{i}]"
        obj = _as_object(entry, where)
        _check_keys(obj, where, required=("min_load_factor", "multiplier"), optional=())
        threshold = _as_float(obj["min_load_factor"], f"{where}.min_load_factor", minimum=0.0, maximum=1.0)
        multiplier = _as_float(obj["multiplier"], f"{where}.multiplier")
        bands.append(LoadFactorBand(threshold, Decimal(str(multiplier))))
    try:
        return LoadFactorBands(tuple(bands))
    except InvalidInput as exc:
        raise ConfigValidationError(f"load_factor_bands: {exc}") from exc


def _parse_trigger_policy(raw: Any) -> TriggerPolicy:
    obj = _as_object(raw, "trigger_policy")
    _check_keys(
        obj,
        "trigger_policy",
        required=(),
        optional=("scarcity_threshold", "last_minute_days", "glut_threshold", "raise_pct", "discount_pct"),
    )
    defaults = TriggerPolicy()
    try:
        return TriggerPolicy(
            scarcity_threshold=_as_float(
                obj.get("scarcity_threshold", defaults.scarcity_threshold),
                "trigger_policy.scarcity_threshold", 0.0, 1.0,
            ),
            last_minute_days=_as_int(
                obj.get("last_minute_days", defaults.last_minute_days),
                "trigger_policy.last_minute_days", minimum=0,
            ),
            glut_threshold=_as_float(
                obj.get("glut_threshold", defaults.glut_threshold),
                "trigger_policy.glut_threshold", 0.0, 1.0,
            ),
            raise_pct=_as_float(obj.get("raise_pct", defaults.raise_pct), "trigger_policy.raise_pct", 0.0, 1.0),
            discount_pct=_as_float(
                obj.get("discount_pct", defaults.discount_pct), "trigger_policy.discount_pct", 0.0, 1.0,
            ),
        )
    except InvalidInput as exc:
        raise ConfigValidationError(f"trigger_policy: {exc}") from exc


def _parse_arrival_profile(raw: Any) -> ArrivalProfile:
    obj = _as_object(raw, "arrival_profile")
    _check_keys(obj, "arrival_profile", required=("duration_hours", "segments"), optional=())
    duration = _as_float(obj["duration_hours"], "arrival_profile.duration_hours")
    entries = _as_array(obj["segments"], "arrival_profile.segments")
    segments = []
    for i, entry in enumerate(entries):
        where = f"arrival_profile.segments[{i}]"
        seg = _as_object(entry, where)
        _check_keys(seg, where, required=("start_hour", "rate_per_hour"), optional=())
        segments.append(
            (
                _as_float(seg["start_hour"], f"{where}.start_hour", minimum=0.0),
                _as_float(seg["rate_per_hour"], f"{where}.rate_per_hour", minimum=0.0),
            )
        )
    try:
        return ArrivalProfile(duration_hours=duration, segments=tuple(segments))
    except InvalidInput as exc:
        raise ConfigValidationError(f"arrival_profile: {exc}") from exc


def _parse_competitors(raw: Any, currency: str, route_ids: set[str]) -> tuple[CompetitorScript, ...]:
    entries = _as_array(raw, "competitors")
    scripts = []
    for i, entry in enumerate(entries):
        where = f"competitors[{i}]"
        obj = _as_object(entry, where)
        _check_keys(obj, where, required=("competitor", "route", "schedule"), optional=())
        route = _as_str(obj["route"], f"{where}.route")
        if route not in route_ids:
            raise ConfigValidationError(f"{where}.route: unknown route {route!r}")
        schedule_entries = _as_array(obj["schedule"], f"{where}.schedule")
        if not schedule_entries:
            raise ConfigValidationError(f"{where}.schedule: at least one entry required")
        schedule = []
        prev = -1.0
        for j, sched in enumerate(schedule_entries):
            sched_where = f"{where}.schedule[{j}]"
            sched_obj = _as_object(sched, sched_where)
            _check_keys(sched_obj, sched_where, required=("start_hour", "price"), optional=())
            start = _as_float(sched_obj["start_hour"], f"{sched_where}.start_hour", minimum=0.0)
            if j == 0 and start != 0.0:
                raise ConfigValidationError(f"{sched_where}.start_hour: first entry must start at 0")
            if start <= prev:
                raise ConfigValidationError(f"{sched_where}.start_hour: starts must increase")
            price = _as_money(sched_obj["price"], f"{sched_where}.price", currency)
            if price.amount <= 0:
                raise ConfigValidationError(f"{sched_where}.price: must be positive")
            schedule.append((start, price))
            prev = start
        scripts.append(
            CompetitorScript(
                competitor=_as_str(obj["competitor"], f"{where}.competitor"),
                route=route,
                schedule=tuple(schedule),
            )
        )
    return tuple(scripts)


def _parse_events(raw: Any, clamp: tuple[float, float], route_ids: set[str]) -> EventCalendar:
    entries = _as_array(raw, "events")
    dicts = []
    for i, entry in enumerate(entries):
        where = f"events[{i}]"
        obj = _as_object(entry, where)
        _check_keys(obj, where, required=("name", "kind", "start", "end", "impact"), optional=("routes",))
        event_routes = [
            _as_str(r, f"{where}.routes") for r in _as_array(obj.get("routes", []), f"{where}.routes")
        ]
        for route in event_routes:
            if route not in route_ids:
                raise ConfigValidationError(f"{where}.routes: unknown route {route!r}")
        dicts.append(
            {
                "name": _as_str(obj["name"], f"{where}.name"),
                "kind": _as_str(obj["kind"], f"{where}.kind"),
                "start": _as_date(obj["start"], f"{where}.start").isoformat(),
                "end": _as_date(obj["end"], f"{where}.end").isoformat(),
                "impact": _as_float(obj["impact"], f"{where}.impact"),
                "routes": event_routes,
            }
        )
    try:
        return events_from_dicts(dicts, clamp_range=clamp)
    except InvalidInput as exc:
        raise ConfigValidationError(f"events: {exc}") from exc


def _parse_fabric(raw: Any) -> FabricConfig:
    obj = _as_object(raw, "fabric")
    _check_keys(
        obj,
        "fabric",
        required=(),
        optional=(
            "cache_ttl_seconds",
            "cache_capacity",
            "heartbeat_ttl_seconds",
            "balancer",
            "instances",
            "compute_cost_ms",
            "latency_default",
            "latency_pairs",
        ),
    )
    defaults = FabricConfig()

    instances = dict(DEFAULT_INSTANCES)
    if "instances" in obj:
        inst_obj = _as_object(obj["instances"], "fabric.instances")
        for service in inst_obj:
            if service not in SERVICES:
                raise ConfigValidationError(f"fabric.instances: unknown key {service!r}")
            instances[service] = _as_int(inst_obj[service], f"fabric.instances.{service}", minimum=1)

    compute = dict(DEFAULT_COMPUTE_MS)
    if "compute_cost_ms" in obj:
        comp_obj = _as_object(obj["compute_cost_ms"], "fabric.compute_cost_ms")
        for service in comp_obj:
            if service not in SERVICES:
                raise ConfigValidationError(f"fabric.compute_cost_ms: unknown key {service!r}")
            compute[service] = _as_float(comp_obj[service], f"fabric.compute_cost_ms.{service}", minimum=0.0)

    latency_default = defaults.latency_default
    if "latency_default" in obj:
        lat_obj = _as_object(obj["latency_default"], "fabric.latency_default")
        _check_keys(lat_obj, "fabric.latency_default", required=("mu", "sigma"), optional=())
        latency_default = LatencyParams(
            mu=_as_float(lat_obj["mu"], "fabric.latency_default.mu"),
            sigma=_as_float(lat_obj["sigma"], "fabric.latency_default.sigma", minimum=0.0),
        )

    latency_pairs: list[tuple[tuple[str, str], LatencyParams]] = []
    if "latency_pairs" in obj:
        for i, entry in enumerate(_as_array(obj["latency_pairs"], "fabric.latency_pairs")):
            where = f"fabric.latency_pairs[{i}]"
            pair_obj = _as_object(entry, where)
            _check_keys(pair_obj, where, required=("src", "dst", "mu", "sigma"), optional=())
            latency_pairs.append(
                (
                    (
                        _as_str(pair_obj["src"], f"{where}.src", choices=SERVICES),
                        _as_str(pair_obj["dst"], f"{where}.dst", choices=SERVICES),
                    ),
                    LatencyParams(
                        mu=_as_float(pair_obj["mu"], f"{where}.mu"),
                        sigma=_as_float(pair_obj["sigma"], f"{where}.sigma", minimum=0.0),
                    ),
                )
            )
    latency_pairs.sort(key=lambda item: item[0])

    return FabricConfig(
        cache_ttl_seconds=_as_float(
            obj.get("cache_ttl_seconds", defaults.cache_ttl_seconds), "fabric.cache_ttl_seconds"
        ),
        cache_capacity=_as_int(obj.get("cache_capacity", defaults.cache_capacity), "fabric.cache_capacity", minimum=1),
        heartbeat_ttl_seconds=_as_float(
            obj.get("heartbeat_ttl_seconds", defaults.heartbeat_ttl_seconds), "fabric.heartbeat_ttl_seconds"
        ),
        balancer=Strategy(_as_str(obj.get("balancer", defaults.balancer.value), "fabric.balancer",
                                  choices=tuple(s.value for s in Strategy))),
        instances=tuple(sorted(instances.items())),
        compute_cost_ms=tuple(sorted(compute.items())),
        latency_default=latency_default,
        latency_pairs=tuple(latency_pairs),
    )


TOP_LEVEL_REQUIRED = ("seed", "routes", "arrival_profile", "wtp")
TOP_LEVEL_OPTIONAL = (
    "mode",
    "currency",
    "start_date",
    "lead_time_bands",
    "load_factor_bands",
    "trigger_policy",
    "adjustment_policy",
    "customer",
    "competitors",
    "events",
    "event_clamp",
    "fabric",
    "segment_multipliers",
    "report",
)


def parse_scenario_config(document: "str | Mapping[str, Any]") -> ScenarioConfig:
    """Validate a JSON config document (text or parsed) into a ScenarioConfig."""
    if isinstance(document, str):
        try:
            raw = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ConfigValidationError(f"config is not valid JSON: {exc.msg} (line {exc.lineno})") from exc
    else:
        raw = document
    obj = _as_object(raw, "config")
    _check_keys(obj, "config", required=TOP_LEVEL_REQUIRED, optional=TOP_LEVEL_OPTIONAL)

    seed = _as_int(obj["seed"], "seed")
    mode = _as_str(obj.get("mode", "dynamic"), "mode", choices=MODES)
    currency = _as_str(obj.get("currency", "USD"), "currency")
    start_date = _as_date(obj.get("start_date", DEFAULT_START_DATE.isoformat()), "start_date")

    routes = _parse_routes(obj["routes"], currency)
    route_ids = {r.route for r in routes}

    lead_bands = (
        _parse_lead_time_bands(obj["lead_time_bands"]) if "lead_time_bands" in obj else DEFAULT_LEAD_TIME_BANDS
    )
    load_bands = (
        _parse_load_factor_bands(obj["load_factor_bands"]) if "load_factor_bands" in obj else DEFAULT_LOAD_FACTOR_BANDS
    )
    trigger = _parse_trigger_policy(obj.get("trigger_policy", {}))

    adj_obj = _as_object(obj.get("adjustment_policy", {}), "adjustment_policy")
    _check_keys(adj_obj, "adjustment_policy", required=(), optional=("max_step", "parity_band"))
    adjustment = AdjustmentConfig(
        max_step=_as_float(adj_obj.get("max_step", AdjustmentConfig().max_step), "adjustment_policy.max_step", 0.0, 1.0),
        parity_band=_as_float(
            adj_obj.get("parity_band", AdjustmentConfig().parity_band), "adjustment_policy.parity_band", 0.0, 1.0
        ),
    )
    if adjustment.max_step <= 0:
        raise ConfigValidationError("adjustment_policy.max_step: must be > 0")

    profile = _parse_arrival_profile(obj["arrival_profile"])

    wtp_obj = _as_object(obj["wtp"], "wtp")
    _check_keys(wtp_obj, "wtp", required=("mu", "sigma"), optional=())
    wtp = WtpParams(mu=_as_float(wtp_obj["mu"], "wtp.mu"), sigma=_as_float(wtp_obj["sigma"], "wtp.sigma", minimum=0.0))

    cust_obj = _as_object(obj.get("customer", {}), "customer")
    _check_keys(cust_obj, "customer", required=(), optional=("loyalty_rate", "trip_frequency_mean"))
    try:
        customer = CustomerParams(
            loyalty_rate=_as_float(
                cust_obj.get("loyalty_rate", CustomerParams().loyalty_rate), "customer.loyalty_rate", 0.0, 1.0
            ),
            trip_frequency_mean=_as_float(
                cust_obj.get("trip_frequency_mean", CustomerParams().trip_frequency_mean),
                "customer.trip_frequency_mean",
            ),
        )
    except InvalidInput as exc:
        raise ConfigValidationError(f"customer: {exc}") from exc

    competitors = _parse_competitors(obj.get("competitors", []), currency, route_ids)

    clamp_raw = obj.get("event_clamp", list(DEFAULT_CLAMP_RANGE))
    clamp_arr = _as_array(clamp_raw, "event_clamp")
    if len(clamp_arr) != 2:
        raise ConfigValidationError("event_clamp: expected [min_factor, max_factor]")
    clamp = (_as_float(clamp_arr[0], "event_clamp[0]", minimum=0.0), _as_float(clamp_arr[1], "event_clamp[1]"))
    if not clamp[0] <= 1.0 <= clamp[1]:
        raise ConfigValidationError(f"event_clamp: range {clamp} must bracket 1.0")
    events = _parse_events(obj.get("events", []), clamp, route_ids)

    fabric = _parse_fabric(obj.get("fabric", {}))

    seg_obj = _as_object(obj.get("segment_multipliers", {}), "segment_multipliers")
    segments = []
    for key in seg_obj:
        try:
            index = int(key)
        except ValueError:
            raise ConfigValidationError(f"segment_multipliers: unknown key {key!r} (expected integer index)")
        mult = _as_float(seg_obj[key], f"segment_multipliers.{key}")
        if mult <= 0:
            raise ConfigValidationError(f"segment_multipliers.{key}: must be positive")
        segments.append((index, mult))
    segments.sort()

    rep_obj = _as_object(obj.get("report", {}), "report")
    _check_keys(rep_obj, "report", required=(), optional=("histogram_bin_ms", "throughput_window_hours"))
    report = ReportParams(
        histogram_bin_ms=_as_float(
            rep_obj.get("histogram_bin_ms", ReportParams().histogram_bin_ms), "report.histogram_bin_ms"
        ),
        throughput_window_hours=_as_float(
            rep_obj.get("throughput_window_hours", ReportParams().throughput_window_hours),
            "report.throughput_window_hours",
        ),
    )
    if report.histogram_bin_ms <= 0:
        raise ConfigValidationError("report.histogram_bin_ms: must be > 0")
    if report.throughput_window_hours <= 0:
        raise ConfigValidationError("report.throughput_window_hours: must be > 0")

    return ScenarioConfig(
        seed=seed,
        mode=mode,
        currency=currency,
        start_date=start_date,
        routes=routes,
        lead_time_bands=lead_bands,
        load_factor_bands=load_bands,
        trigger_policy=trigger,
        adjustment=adjustment,
        arrival_profile=profile,
        wtp=wtp,
        customer=customer,
        competitors=competitors,
        events=events,
        fabric=fabric,
        segment_multipliers=tuple(segments),
        report=report,
    )


def load_scenario_config(path: str) -> ScenarioConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_scenario_config(fh.read())
