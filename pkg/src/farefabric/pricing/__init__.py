"""Pricing algorithms: band rules, regression, segmentation, triggers, quotes."""

from .bands import (
    DEFAULT_LEAD_TIME_BANDS,
    DEFAULT_LOAD_FACTOR_BANDS,
    LeadTimeBand,
    LeadTimeBands,
    LoadFactorBand,
    LoadFactorBands,
    load_factor_multiplier,
    rule_based_fare,
)
from .inventory import (
    DEFAULT_TRIGGER_POLICY,
    ActionKind,
    InventoryState,
    PriceAction,
    TriggerPolicy,
    heuristic_trigger,
    reallocate_fare_classes,
)
from .quote import (
    DEFAULT_QUOTE_CONFIG,
    STEP_COMPETITOR,
    STEP_EVENT,
    STEP_LEAD_TIME,
    STEP_LOAD_FACTOR,
    FareQuote,
    QuoteConfig,
    compose_quote,
    replay_quote,
)
from .regression import RegressionModel, fit_price_regression, predict_price
from .segmentation import Segmentation, assign_segment, segment_customers, segment_fare

__all__ = [
    "ActionKind",
    "DEFAULT_LEAD_TIME_BANDS",
    "DEFAULT_LOAD_FACTOR_BANDS",
    "DEFAULT_QUOTE_CONFIG",
    "DEFAULT_TRIGGER_POLICY",
    "FareQuote",
    "InventoryState",
    "LeadTimeBand",
    "LeadTimeBands",
    "LoadFactorBand",
    "LoadFactorBands",
    "PriceAction",
    "QuoteConfig",
    "RegressionModel",
    "STEP_COMPETITOR",
    "STEP_EVENT",
    "STEP_LEAD_TIME",
    "STEP_LOAD_FACTOR",
    "Segmentation",
    "TriggerPolicy",
    "assign_segment",
    "compose_quote",
    "fit_price_regression",
    "heuristic_trigger",
    "load_factor_multiplier",
    "predict_price",
    "reallocate_fare_classes",
    "replay_quote",
    "rule_based_fare",
    "segment_customers",
    "segment_fare",
]
