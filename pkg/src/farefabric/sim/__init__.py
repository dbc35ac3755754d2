"""Scenario simulation: arrivals, the pricing loop, and mode comparison."""

from .arrivals import (
    ArrivalProfile,
    CustomerDraw,
    CustomerParams,
    WtpParams,
    build_customer_stream,
    generate_arrivals,
    sample_wtp,
)
from .compare import compare_pricing_modes, seeds_from
from .reports import ScenarioReport, SeedOutcome, UpliftReport
from .scenario import run_scenario, satisfaction_score, simulate

__all__ = [
    "ArrivalProfile",
    "CustomerDraw",
    "CustomerParams",
    "ScenarioReport",
    "SeedOutcome",
    "UpliftReport",
    "WtpParams",
    "build_customer_stream",
    "compare_pricing_modes",
    "generate_arrivals",
    "run_scenario",
    "sample_wtp",
    "satisfaction_score",
    "seeds_from",
    "simulate",
]
