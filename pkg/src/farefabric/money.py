"""Money values with cent precision.

Amounts are Decimals quantized to two places. Intermediate pricing math happens
on raw Decimals outside this type; Money is the boundary representation, and
rounding (half-up) happens exactly once, when a raw value becomes Money.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_UP

from .errors import InvalidInput

CENT = Decimal("0.01")


@dataclass(frozen=True, order=False)
class Money:
    amount: Decimal
    currency: str = "USD"

    def __post_init__(self) -> None:
        if not isinstance(self.amount, Decimal):
            raise InvalidInput(f"Money.amount must be Decimal, got {type(self.amount).__name__}")
        if self.amount != self.amount.quantize(CENT):
            raise InvalidInput(f"Money.amount must have cent precision, got {self.amount}")
        if self.amount < 0:
            raise InvalidInput(f"Money.amount must be non-negative, got {self.amount}")

    @classmethod
    def of(cls, value: "Decimal | str | int | float", currency: str = "USD") -> "Money":
        """Build Money from a raw value, rounding half-up to cents."""
        if isinstance(value, float):
            # repr of the builtin float (shortest round-trip form); float
            # subclasses like numpy scalars repr differently.
            raw = Decimal(repr(float(value)))
        elif isinstance(value, Decimal):
            raw = value
        else:
            raw = Decimal(str(value))
        if raw < 0:
            raise InvalidInput(f"money value must be non-negative, got {value}")
        return cls(raw.quantize(CENT, rounding=ROUND_HALF_UP), currency)

    def _check_same_currency(self, other: "Money") -> None:
        if self.currency != other.currency:
            raise InvalidInput(f"currency mismatch: {self.currency} vs {other.currency}")

    def __lt__(self, other: "Money") -> bool:
        self._check_same_currency(other)
        return self.amount < other.amount

    def __le__(self, other: "Money") -> bool:
        self._check_same_currency(other)
        return self.amount <= other.amount

    def __gt__(self, other: "Money") -> bool:
        self._check_same_currency(other)
        return self.amount > other.amount

    def __ge__(self, other: "Money") -> bool:
        self._check_same_currency(other)
        return self.amount >= other.amount

    def __add__(self, other: "Money") -> "Money":
        self._check_same_currency(other)
        return Money(self.amount + other.amount, self.currency)

    def __float__(self) -> float:
        return float(self.amount)

    def __str__(self) -> str:
        return f"{self.amount} {self.currency}"


def zero(currency: str = "USD") -> Money:
    return Money(Decimal("0.00"), currency)
