"""Dynamic-versus-fixed comparison with common random numbers.

Each seed builds one customer population; both arms consume it unchanged, so
arrival times and willingness-to-pay draws are identical pair-by-pair and the
revenue difference is attributable to pricing alone.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

from ..errors import InvalidInput

if TYPE_CHECKING:
    from ..config import ScenarioConfig
from .arrivals import build_customer_stream
from .reports import SeedOutcome, UpliftReport
from .scenario import simulate


def compare_pricing_modes(cfg: "ScenarioConfig", seeds: Sequence[int]) -> UpliftReport:
    if not seeds:
        raise InvalidInput("compare needs at least one seed")
    outcomes = []
    for seed in seeds:
        seeded = cfg.with_seed(seed)
        customers = build_customer_stream(
            seeded.arrival_profile,
            seeded.wtp,
            seeded.customer,
            [r.route for r in seeded.routes],
            seed,
            seeded.currency,
        )
        dynamic = simulate(seeded, customers, "dynamic")
        fixed = simulate(seeded, customers, "fixed")
        if fixed.total_revenue.amount == 0:
            uplift = None
        else:
            uplift = float(
                (dynamic.total_revenue.amount - fixed.total_revenue.amount)
                / fixed.total_revenue.amount
                * 100
            )
        outcomes.append(
            SeedOutcome(
                seed=seed,
                dynamic_revenue=dynamic.total_revenue,
                fixed_revenue=fixed.total_revenue,
                uplift_pct=uplift,
                dynamic_satisfaction=dynamic.mean_satisfaction,
                fixed_satisfaction=fixed.mean_satisfaction,
            )
        )

    uplifts = [o.uplift_pct for o in outcomes if o.uplift_pct is not None]
    dyn_sat = [o.dynamic_satisfaction for o in outcomes if o.dynamic_satisfaction is not None]
    fix_sat = [o.fixed_satisfaction for o in outcomes if o.fixed_satisfaction is not None]
    return UpliftReport(
        currency=cfg.currency,
        per_seed=tuple(outcomes),
        mean_uplift_pct=sum(uplifts) / len(uplifts) if uplifts else None,
        mean_dynamic_satisfaction=sum(dyn_sat) / len(dyn_sat) if dyn_sat else None,
        mean_fixed_satisfaction=sum(fix_sat) / len(fix_sat) if fix_sat else None,
    )


def seeds_from(base_seed: int, count: int) -> list[int]:
    """The seed list used by the command line: count seeds starting at base_seed."""
    if count < 1:
        raise InvalidInput(f"seed count must be >= 1, got {count}")
    return [base_seed + i for i in range(count)]
