"""Least-squares price regression on booking features.

Fits price = intercept + coefficients . features with ordinary least squares.
Rank-deficient design matrices are allowed; the fit is the minimum-norm
solution, so collinear feature sets still produce a usable model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from typing import Sequence

import numpy as np

from ..errors import InsufficientData, InvalidInput
from ..money import Money


@dataclass(frozen=True)
class RegressionModel:
    feature_names: tuple[str, ...]
    intercept: float
    coefficients: tuple[float, ...]

    def predict(self, features: Sequence[float]) -> float:
        if len(features) != len(self.coefficients):
            raise InvalidInput(
                f"expected {len(self.coefficients)} features, got {len(features)}"
            )
        return self.intercept + float(np.dot(self.coefficients, np.asarray(features, dtype=float)))


def fit_price_regression(
    rows: Sequence[Sequence[float]],
    prices: Sequence[float],
    feature_names: Sequence[str] | None = None,
) -> RegressionModel:
    """Fit OLS price regression; returns the minimum-norm solution when singular."""
    if len(rows) == 0:
        raise InsufficientData("regression needs at least one observation")
    if len(rows) != len(prices):
        raise InvalidInput(f"{len(rows)} feature rows but {len(prices)} prices")
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise InvalidInput(f"feature row {i} has {len(row)} values, expected {width}")
    if feature_names is None:
        names = tuple(f"x{i}" for i in range(width))
    else:
        if len(feature_names) != width:
            raise InvalidInput(
                f"{len(feature_names)} feature names for {width} features"
            )
        names = tuple(feature_names)

    x = np.asarray(rows, dtype=float)
    y = np.asarray(prices, dtype=float)
    if not np.all(np.isfinite(x)) or not np.all(np.isfinite(y)):
        raise InvalidInput("regression inputs must be finite")

    design = np.hstack([np.ones((x.shape[0], 1)), x])
    solution, _, _, _ = np.linalg.lstsq(design, y, rcond=None)
    return RegressionModel(
        feature_names=names,
        intercept=float(solution[0]),
        coefficients=tuple(float(c) for c in solution[1:]),
    )


def predict_price(model: RegressionModel, features: Sequence[float], floor: Money, ceiling: Money) -> Money:
    """Model prediction as money, clamped into [floor, ceiling]."""
    if floor.currency != ceiling.currency:
        raise InvalidInput(f"floor currency {floor.currency} != ceiling currency {ceiling.currency}")
    if floor > ceiling:
        raise InvalidInput(f"floor {floor} exceeds ceiling {ceiling}")
    value = model.predict(features)
    if not math.isfinite(value):
        raise InvalidInput("prediction is not finite")
    # Clamp before quantizing so out-of-corridor predictions (including
    # negative ones) land exactly on the corridor bound.
    raw = Decimal(repr(value))
    if raw < floor.amount:
        return floor
    if raw > ceiling.amount:
        return ceiling
    return Money.of(raw, floor.currency)
