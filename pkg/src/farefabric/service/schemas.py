"""Request and response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class QuoteRequest(BaseModel):
    base_fare: float = Field(ge=0)
    days_to_departure: int = Field(ge=0)
    capacity: int = Field(ge=1)
    seats_sold: int = Field(ge=0)
    event_factor: float = Field(default=1.0, gt=0)
    competitor_delta: float = Field(default=0.0, ge=-1.0, le=1.0)
    floor: float | None = Field(default=None, ge=0)
    ceiling: float | None = Field(default=None, ge=0)
    currency: str = "USD"


class QuoteStep(BaseModel):
    name: str
    value: str


class QuoteResponse(BaseModel):
    final_price: str
    base_fare: str
    currency: str
    applied_steps: list[QuoteStep]
    clamped: bool


class ScenarioRunRequest(BaseModel):
    config: dict
    seed: int | None = None


class ScenarioRunResponse(BaseModel):
    summary: dict


class CompareRequest(BaseModel):
    config: dict
    seeds: int = Field(ge=1)


class CompareResponse(BaseModel):
    summary: dict


class HealthResponse(BaseModel):
    status: str
    version: str
