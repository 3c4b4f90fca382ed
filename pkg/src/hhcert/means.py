"""Two-argument means of positive reals.

Everything is written in terms of ``lo = min(a, b)`` and the relative gap
``x = hi/lo - 1`` so that near-equal pairs go through ``log1p``/``expm1``
instead of differencing large logarithms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import DomainError

#: Relative gap below which a pair is treated as equal.
EQUAL_REL = 1e-14

CHAIN_ORDER = ("H", "G", "L", "I", "A")


@dataclass(frozen=True)
class PositivePair:
    a: float
    b: float

    def __post_init__(self):
        for v in (self.a, self.b):
            if not (math.isfinite(v) and v > 0.0):
                raise DomainError(f"means need two positive finite numbers, got ({self.a}, {self.b})")

    def split(self) -> Tuple[float, float, float]:
        """Return ``(lo, hi, x)`` with ``x = hi/lo - 1``; ``x`` is 0 for equal pairs."""
        lo, hi = (self.a, self.b) if self.a <= self.b else (self.b, self.a)
        if hi - lo <= EQUAL_REL * hi:
            return lo, hi, 0.0
        return lo, hi, (hi - lo) / lo


def _pair(p) -> PositivePair:
    if isinstance(p, PositivePair):
        return p
    a, b = p
    return PositivePair(float(a), float(b))


@dataclass(frozen=True)
class MeanValue:
    tag: str
    value: float
    r: Optional[float] = None

    def to_dict(self) -> dict:
        out = {"tag": self.tag, "value": self.value}
        if self.r is not None:
            out["r"] = self.r
        return out


def mean_arithmetic(p) -> float:
    p = _pair(p)
    return 0.5 * p.a + 0.5 * p.b


def mean_geometric(p) -> float:
    p = _pair(p)
    prod = p.a * p.b
    if math.isfinite(prod) and prod >= 1e-300:
        return math.sqrt(prod)
    return math.sqrt(p.a) * math.sqrt(p.b)


def mean_harmonic(p) -> float:
    p = _pair(p)
    lo, hi, x = p.split()
    if x == 0.0:
        return lo
    return 2.0 * lo * (hi / (lo + hi))


def mean_logarithmic(p) -> float:
    p = _pair(p)
    lo, hi, x = p.split()
    if x == 0.0:
        return lo
    return (hi - lo) / math.log1p(x)


def mean_identric(p) -> float:
    p = _pair(p)
    lo, hi, x = p.split()
    if x == 0.0:
        return lo
    return lo * math.exp(((1.0 + x) * math.log1p(x) - x) / x)


def _log_expm1_over(u: float, v: float) -> float:
    """log((e^u - 1) / v) for u, v of the same sign, without overflow."""
    if u > 0.0:
        top = u + math.log1p(-math.exp(-u)) if u > 30.0 else math.log(math.expm1(u))
        return top - math.log(v)
    return math.log(-math.expm1(u)) - math.log(-v)


def mean_p_logarithmic(p, r: float) -> float:
    """L_r(a, b); r = 0 gives the identric mean and r = -1 the logarithmic mean."""
    p = _pair(p)
    r = float(r)
    if r == 0.0:
        return mean_identric(p)
    if r == -1.0:
        return mean_logarithmic(p)
    lo, hi, x = p.split()
    if x == 0.0:
        return lo
    u = (r + 1.0) * math.log1p(x)
    v = (r + 1.0) * x
    return lo * math.exp(_log_expm1_over(u, v) / r)


def all_means(p, r: Optional[float] = None) -> List[MeanValue]:
    p = _pair(p)
    out = [
        MeanValue("A", mean_arithmetic(p)),
        MeanValue("G", mean_geometric(p)),
        MeanValue("H", mean_harmonic(p)),
        MeanValue("L", mean_logarithmic(p)),
        MeanValue("I", mean_identric(p)),
    ]
    if r is not None:
        out.append(MeanValue("L_p", mean_p_logarithmic(p, r), float(r)))
    return out


@dataclass(frozen=True)
class ChainCheck:
    values: Tuple[float, float, float, float, float]
    verdict: str
    worst_gap: float

    def as_dict(self) -> dict:
        return dict(zip(CHAIN_ORDER, self.values))


def means_chain_check(p, slack: float = 1e-12) -> ChainCheck:
    """Check H <= G <= L <= I <= A; ``worst_gap`` is the largest scaled reversal."""
    p = _pair(p)
    vals = (
        mean_harmonic(p),
        mean_geometric(p),
        mean_logarithmic(p),
        mean_identric(p),
        mean_arithmetic(p),
    )
    worst = max((lo - hi) / max(1.0, abs(hi)) for lo, hi in zip(vals, vals[1:]))
    return ChainCheck(vals, "pass" if worst <= slack else "fail", worst)
