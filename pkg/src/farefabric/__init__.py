"""farefabric: a deterministic dynamic-pricing engine for travel fares.

Five pricing algorithm families (band rules, regression, segmentation,
fare-class triggers, quote composition), three supporting analysis services
(demand, competitors, events), a simulated in-process service fabric, and a
seeded scenario harness that compares dynamic against fixed pricing.
"""

from .config import ScenarioConfig, load_scenario_config, parse_scenario_config
from .errors import (
    AlreadyRegistered,
    ConfigValidationError,
    FarefabricError,
    InsufficientData,
    InvalidInput,
    NoData,
    NoInstanceAvailable,
    NotFound,
    UndefinedMetric,
)
from .money import Money
from .reporting import ReportBundle, emit_report, histogram
from .sim import compare_pricing_modes, run_scenario

__version__ = "0.1.0"

__all__ = [
    "AlreadyRegistered",
    "ConfigValidationError",
    "FarefabricError",
    "InsufficientData",
    "InvalidInput",
    "Money",
    "NoData",
    "NoInstanceAvailable",
    "NotFound",
    "ReportBundle",
    "ScenarioConfig",
    "UndefinedMetric",
    "compare_pricing_modes",
    "emit_report",
    "histogram",
    "load_scenario_config",
    "parse_scenario_config",
    "run_scenario",
    "__version__",
]
