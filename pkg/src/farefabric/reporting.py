"""Report serialization: histogram binning, summary JSON, and CSV bundles.

Output is the regression medium, so it is strictly deterministic: fixed column
orders, money at two decimal places, fractional values at six, sorted JSON
keys. Rerunning an identical report produces byte-identical files.
"""

from __future__ import annotations

import csv
import json
import os
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInput
from .money import Money
from .sim.reports import ScenarioReport, SeedOutcome, UpliftReport

SATISFACTION_NOTE = "satisfaction is a simulated proxy (normalized consumer surplus)"

SCENARIO_FILES = (
    "summary.json",
    "response_times.csv",
    "throughput.csv",
    "latency.csv",
    "revenue_daily.csv",
    "satisfaction_daily.csv",
)
COMPARISON_FILES = ("summary.json", "comparison.csv")


@dataclass(frozen=True)
class ReportBundle:
    out_dir: str
    files: tuple[str, ...]

    def path(self, name: str) -> str:
        return os.path.join(self.out_dir, name)


def histogram(values: Sequence[float], bin_width: float) -> tuple[tuple[float, float, int], ...]:
    """Left-closed right-open bins from 0, emitted from first to last occupied."""
    if bin_width <= 0:
        raise InvalidInput(f"bin_width must be positive, got {bin_width}")
    if not values:
        return ()
    for v in values:
        if v < 0:
            raise InvalidInput(f"histogram values must be >= 0, got {v}")
    counts = Counter(int(v // bin_width) for v in values)
    lo, hi = min(counts), max(counts)
    return tuple((i * bin_width, (i + 1) * bin_width, counts.get(i, 0)) for i in range(lo, hi + 1))


def _frac(value: float | None) -> float | None:
    return None if value is None else float(value)


def scenario_report_to_dict(report: ScenarioReport) -> dict:
    return {
        "kind": "scenario",
        "seed": report.seed,
        "mode": report.mode,
        "currency": report.currency,
        "total_revenue": str(report.total_revenue.amount),
        "bookings_accepted": report.bookings_accepted,
        "offers_made": report.offers_made,
        "mean_satisfaction": _frac(report.mean_satisfaction),
        "mean_response_time_ms": float(report.mean_response_time_ms),
        "demand_forecast_mape": _frac(report.demand_forecast_mape),
        "response_time_histogram": [[low, high, count] for low, high, count in report.response_time_histogram],
        "throughput_series": [[start, requests] for start, requests in report.throughput_series],
        "latency_series": [
            [src, dst, start, mean_ms, samples] for src, dst, start, mean_ms, samples in report.latency_series
        ],
        "revenue_daily": [[day, str(revenue.amount)] for day, revenue in report.revenue_daily],
        "satisfaction_daily": [[day, _frac(score)] for day, score in report.satisfaction_daily],
        "bookings_by_route": [[route, count] for route, count in report.bookings_by_route],
        "cache_hits": report.cache_hits,
        "cache_misses": report.cache_misses,
        "notes": SATISFACTION_NOTE,
    }


def scenario_report_from_dict(data: dict) -> ScenarioReport:
    currency = data["currency"]
    return ScenarioReport(
        seed=data["seed"],
        mode=data["mode"],
        currency=currency,
        total_revenue=Money.of(data["total_revenue"], currency),
        bookings_accepted=data["bookings_accepted"],
        offers_made=data["offers_made"],
        mean_satisfaction=data["mean_satisfaction"],
        mean_response_time_ms=data["mean_response_time_ms"],
        demand_forecast_mape=data["demand_forecast_mape"],
        response_time_histogram=tuple((low, high, count) for low, high, count in data["response_time_histogram"]),
        throughput_series=tuple((start, requests) for start, requests in data["throughput_series"]),
        latency_series=tuple(
            (src, dst, start, mean_ms, samples) for src, dst, start, mean_ms, samples in data["latency_series"]
        ),
        revenue_daily=tuple((day, Money.of(revenue, currency)) for day, revenue in data["revenue_daily"]),
        satisfaction_daily=tuple((day, score) for day, score in data["satisfaction_daily"]),
        bookings_by_route=tuple((route, count) for route, count in data["bookings_by_route"]),
        cache_hits=data["cache_hits"],
        cache_misses=data["cache_misses"],
    )


def uplift_report_to_dict(report: UpliftReport) -> dict:
    return {
        "kind": "comparison",
        "currency": report.currency,
        "mean_uplift_pct": _frac(report.mean_uplift_pct),
        "mean_dynamic_satisfaction": _frac(report.mean_dynamic_satisfaction),
        "mean_fixed_satisfaction": _frac(report.mean_fixed_satisfaction),
        "per_seed": [
            {
                "seed": o.seed,
                "dynamic_revenue": str(o.dynamic_revenue.amount),
                "fixed_revenue": str(o.fixed_revenue.amount),
                "uplift_pct": _frac(o.uplift_pct),
                "dynamic_satisfaction": _frac(o.dynamic_satisfaction),
                "fixed_satisfaction": _frac(o.fixed_satisfaction),
            }
            for o in report.per_seed
        ],
        "notes": SATISFACTION_NOTE,
    }


def uplift_report_from_dict(data: dict) -> UpliftReport:
    currency = data["currency"]
    return UpliftReport(
        currency=currency,
        per_seed=tuple(
            SeedOutcome(
                seed=o["seed"],
                dynamic_revenue=Money.of(o["dynamic_revenue"], currency),
                fixed_revenue=Money.of(o["fixed_revenue"], currency),
                uplift_pct=o["uplift_pct"],
                dynamic_satisfaction=o["dynamic_satisfaction"],
                fixed_satisfaction=o["fixed_satisfaction"],
            )
            for o in data["per_seed"]
        ),
        mean_uplift_pct=data["mean_uplift_pct"],
        mean_dynamic_satisfaction=data["mean_dynamic_satisfaction"],
        mean_fixed_satisfaction=data["mean_fixed_satisfaction"],
    )


def report_from_json(text: str) -> "ScenarioReport | UpliftReport":
    data = json.loads(text)
    if data.get("kind") == "comparison":
        return uplift_report_from_dict(data)
    return scenario_report_from_dict(data)


def _fmt6(value: float | None) -> str:
    return "" if value is None else f"{value:.6f}"


def _write_csv(path: str, header: list[str], rows: list[list[str]]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _write_json(path: str, data: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _emit_scenario_csvs(report: ScenarioReport, out_dir: str) -> None:
    _write_csv(
        os.path.join(out_dir, "response_times.csv"),
        ["bin_low_ms", "bin_high_ms", "count"],
        [[_fmt6(low), _fmt6(high), str(count)] for low, high, count in report.response_time_histogram],
    )
    _write_csv(
        os.path.join(out_dir, "throughput.csv"),
        ["window_start_hours", "requests"],
        [[_fmt6(start), str(requests)] for start, requests in report.throughput_series],
    )
    _write_csv(
        os.path.join(out_dir, "latency.csv"),
        ["src", "dst", "window_start_hours", "mean_ms", "samples"],
        [
            [src, dst, _fmt6(start), _fmt6(mean_ms), str(samples)]
            for src, dst, start, mean_ms, samples in report.latency_series
        ],
    )
    _write_csv(
        os.path.join(out_dir, "revenue_daily.csv"),
        ["day", "revenue"],
        [[str(day), str(revenue.amount)] for day, revenue in report.revenue_daily],
    )
    _write_csv(
        os.path.join(out_dir, "satisfaction_daily.csv"),
        ["day", "mean_satisfaction"],
        [[str(day), _fmt6(score)] for day, score in report.satisfaction_daily],
    )


def _emit_comparison_csv(report: UpliftReport, out_dir: str) -> None:
    _write_csv(
        os.path.join(out_dir, "comparison.csv"),
        ["seed", "dynamic_revenue", "fixed_revenue", "uplift_pct", "dynamic_satisfaction", "fixed_satisfaction"],
        [
            [
                str(o.seed),
                str(o.dynamic_revenue.amount),
                str(o.fixed_revenue.amount),
                _fmt6(o.uplift_pct),
                _fmt6(o.dynamic_satisfaction),
                _fmt6(o.fixed_satisfaction),
            ]
            for o in report.per_seed
        ],
    )


def emit_report(
    report: "ScenarioReport | UpliftReport",
    out_dir: str,
    formats: Sequence[str] = ("json", "csv"),
) -> ReportBundle:
    """Write the report bundle into out_dir; reruns are byte-identical."""
    for fmt in formats:
        if fmt not in ("json", "csv"):
            raise InvalidInput(f"unknown format {fmt!r} (expected json and/or csv)")
    os.makedirs(out_dir, exist_ok=True)
    files: list[str] = []
    is_comparison = isinstance(report, UpliftReport)
    if "json" in formats:
        data = uplift_report_to_dict(report) if is_comparison else scenario_report_to_dict(report)
        _write_json(os.path.join(out_dir, "summary.json"), data)
        files.append("summary.json")
    if "csv" in formats:
        if is_comparison:
            _emit_comparison_csv(report, out_dir)
            files.append("comparison.csv")
        else:
            _emit_scenario_csvs(report, out_dir)
            files.extend(SCENARIO_FILES[1:])
    return ReportBundle(out_dir=out_dir, files=tuple(sorted(files)))
