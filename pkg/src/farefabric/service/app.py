"""HTTP service exposing quoting, scenario runs, and mode comparison.

A thin layer over the core package: endpoints validate with pydantic, call the
same functions the CLI uses, and return the serialized report dictionaries.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..config import parse_scenario_config
from ..errors import ConfigValidationError, FarefabricError, InvalidInput
from ..money import Money
from ..pricing.inventory import InventoryState
from ..pricing.quote import compose_quote
from ..reporting import scenario_report_to_dict, uplift_report_to_dict
from ..sim.compare import compare_pricing_modes, seeds_from
from ..sim.scenario import run_scenario
from .schemas import (
    CompareRequest,
    CompareResponse,
    HealthResponse,
    QuoteRequest,
    QuoteResponse,
    QuoteStep,
    ScenarioRunRequest,
    ScenarioRunResponse,
)

app = FastAPI(title="farefabric", version=__version__)


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/quote", response_model=QuoteResponse)
def quote(request: QuoteRequest) -> QuoteResponse:
    try:
        inventory = InventoryState(
            capacity=request.capacity,
            seats_sold=request.seats_sold,
            days_to_departure=request.days_to_departure,
        )
        result = compose_quote(
            Money.of(request.base_fare, request.currency),
            request.days_to_departure,
            inventory,
            request.event_factor,
            request.competitor_delta,
            None if request.floor is None else Money.of(request.floor, request.currency),
            None if request.ceiling is None else Money.of(request.ceiling, request.currency),
        )
    except InvalidInput as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return QuoteResponse(
        final_price=str(result.final_price.amount),
        base_fare=str(result.base_fare.amount),
        currency=result.final_price.currency,
        applied_steps=[QuoteStep(name=name, value=str(value)) for name, value in result.applied_steps],
        clamped=result.clamped,
    )


@app.post("/scenarios/run", response_model=ScenarioRunResponse)
def scenarios_run(request: ScenarioRunRequest) -> ScenarioRunResponse:
    try:
        cfg = parse_scenario_config(request.config)
        if request.seed is not None:
            cfg = cfg.with_seed(request.seed)
        report = run_scenario(cfg)
    except ConfigValidationError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except FarefabricError as exc:
        raise HTTPException(status_code=500, detail=str(exc)) from exc
    return ScenarioRunResponse(summary=scenario_report_to_dict(report))


@app.post("/scenarios/compare", response_model=CompareResponse)
def scenarios_compare(request: CompareRequest) -> CompareResponse:
    try:
        cfg = parse_scenario_config(request.config)
        report = compare_pricing_modes(cfg, seeds_from(cfg.seed, request.seeds))
    except ConfigValidationError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except FarefabricError as exc:
        raise HTTPException(status_code=500, detail=str(exc)) from exc
    return CompareResponse(summary=uplift_report_to_dict(report))
