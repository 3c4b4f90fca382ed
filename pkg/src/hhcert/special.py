"""Log-Gamma, Euler Beta and the Jagers bracket for the s-convex midpoint constant."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    x = float(x)
    if not x > 0.0 or not math.isfinite(x):
        raise DomainError(f"log_gamma needs a finite x > 0, got {x}")
    # libm lgamma is accurate to a few ulp on the positive axis
    return math.lgamma(x)


def beta(x: float, y: float) -> float:
    """Euler Beta function Gamma(x) Gamma(y) / Gamma(x + y)."""
    x, y = float(x), float(y)
    if not (x > 0.0 and y > 0.0):
        raise DomainError(f"beta needs positive arguments, got ({x}, {y})")
    return math.exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y))


@dataclass(frozen=True)
class JagersBounds:
    lower: float
    middle: float
    upper: float
    s: float

    def ordered(self, slack: float = 0.0) -> bool:
        return self.lower <= self.middle + slack and self.middle <= self.upper + slack


def jagers_bounds(s: float) -> JagersBounds:
    """The three closed-form expressions bracketing the best constant c(s).

    ``lower <= c(s) <= middle <= upper``; all three collapse to 1 at s = 1.
    """
    s = float(s)
    if not 0.0 < s <= 1.0:
        raise DomainError(f"s must lie in (0, 1], got {s}")
    lower = (2.0 ** (s + 1.0) - 1.0) / (s + 2.0)
    middle = 2.0 ** ((s - 1.0) / (s + 1.0)) * (math.expm1(s * math.log(2.0)) / s) ** (s / (s + 1.0))
    upper = (2.0 ** (s + 1.0) - 2.0 ** (s - 1.0) - 1.0) / (s + 1.0)
    return JagersBounds(lower, middle, upper, s)


def hh_left_constant(s: float) -> float:
    """The left constant ``2^(s-1)`` of the s-convex Hermite-Hadamard sandwich."""
    return 2.0 ** (s - 1.0)
