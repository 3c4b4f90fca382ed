"""Composite midpoint and trapezoid rules with a-priori error certificates."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import ConfigurationError
from .fnmodel import ConvexityReport, DifferentiableFunction, Interval, as_array_fn, check_s_convexity
from .hhbounds import HYPOTHESIS_GRID, cor1_formula, dominates, tightness, trapezoid_formula
from .integrate import oracle_integral, reference_integral  # noqa: F401  (re-exported)

RULES = ("midpoint", "trapezoid")


@dataclass(frozen=True)
class Partition:
    nodes: Tuple[float, ...]

    def __post_init__(self):
        nodes = tuple(float(x) for x in self.nodes)
        if len(nodes) < 2:
            raise ConfigurationError("a partition needs at least 2 nodes")
        arr = np.asarray(nodes)
        if not np.all(np.isfinite(arr)) or not np.all(np.diff(arr) > 0):
            raise ConfigurationError("partition nodes must be finite and strictly increasing")
        object.__setattr__(self, "nodes", nodes)

    @property
    def a(self) -> float:
        return self.nodes[0]

    @property
    def b(self) -> float:
        return self.nodes[-1]

    @property
    def pieces(self) -> int:
        return len(self.nodes) - 1

    def arrays(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(left nodes, right nodes, widths)."""
        x = np.asarray(self.nodes)
        return x[:-1], x[1:], np.diff(x)


def uniform_partition(interval: Interval, pieces: int) -> Partition:
    if int(pieces) != pieces or pieces < 1:
        raise ConfigurationError(f"pieces must be a positive integer, got {pieces}")
    nodes = np.linspace(interval.a, interval.b, int(pieces) + 1)
    nodes[0], nodes[-1] = interval.a, interval.b
    return Partition(tuple(nodes.tolist()))


def _as_partition(K) -> Partition:
    return K if isinstance(K, Partition) else Partition(tuple(K))


def composite_midpoint(f, K) -> float:
    K = _as_partition(K)
    lo, hi, w = K.arrays()
    vals = as_array_fn(f, 0.5 * (lo + hi)) * w
    return float(np.sum(vals))


def composite_trapezoid(f, K) -> float:
    K = _as_partition(K)
    _, _, w = K.arrays()
    y = as_array_fn(f, K.nodes)
    return float(np.sum(0.5 * (y[:-1] + y[1:]) * w))


@dataclass(frozen=True)
class QuadratureResult:
    rule: str
    value: float
    error_bound: float
    oracle_error: float
    weak_bound: float
    variant: str = "corrected"
    hypothesis: Optional[ConvexityReport] = None
    pieces: int = 0
    extras: Dict[str, float] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return dominates(self.error_bound, self.oracle_error)

    @property
    def hypothesis_ok(self) -> bool:
        return self.hypothesis is None or self.hypothesis.passed

    @property
    def tightness(self) -> float:
        return tightness(self.oracle_error, self.error_bound)

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "variant": self.variant,
            "pieces": self.pieces,
            "value": self.value,
            "error_bound": self.error_bound,
            "weak_bound": self.weak_bound,
            "oracle_error": self.oracle_error,
            "tightness": self.tightness,
            "holds": self.holds,
            "hypothesis_ok": self.hypothesis_ok,
            "hypothesis": self.hypothesis.to_dict() if self.hypothesis else None,
            "extras": dict(self.extras),
        }


def _check_sq(s: float, q: float) -> None:
    if not 0.0 < s <= 1.0:
        raise ConfigurationError(f"s must lie in (0, 1], got {s}")
    if not (q >= 1.0 and math.isfinite(q)):
        raise ConfigurationError(f"q must be a finite number >= 1, got {q}")


def _hypothesis(f: DifferentiableFunction, order: int, K: Partition, s: float, q: float) -> ConvexityReport:
    def g(x):
        return np.abs(f.deriv(order, x)) ** q

    return check_s_convexity(g, Interval(K.a, K.b), s, HYPOTHESIS_GRID)


def _oracle(f: DifferentiableFunction, K: Partition) -> float:
    # per-cell integrals keep the oracle accurate when the partition is fine
    lo, hi, _ = K.arrays()
    return math.fsum(oracle_integral(f, float(x), float(y)) for x, y in zip(lo, hi))


def midpoint_error_bound(f: DifferentiableFunction, K, s: float = 1.0, q: float = 1.0, variant: str = "corrected") -> QuadratureResult:
    """Certified bound on |int f - midpoint sum| from |f'| at the nodes.

    ``corrected`` sums ``h * cor1(cell)`` with the (b-a)-homogeneous
    midpoint-type inequality, giving a first-order certificate that uses
    |f'| at each cell's ends and midpoint. ``printed`` evaluates the stated
    per-cell term ``h^3/2 (|f'(x_m)| + |f'(x_m+1)|)``, which decays like
    h^2 but is not a valid bound on short cells.
    """
    K = _as_partition(K)
    _check_sq(s, q)
    f.require_interval(Interval(K.a, K.b), 1)
    lo, hi, w = K.arrays()
    da = np.abs(np.asarray(f.deriv(1, lo), dtype=float))
    db = np.abs(np.asarray(f.deriv(1, hi), dtype=float))
    dm = np.abs(np.asarray(f.deriv(1, 0.5 * (lo + hi)), dtype=float))
    tight_c, weak_c = cor1_formula(w, da, dm, db, s, q, "corrected")
    _, weak_p = cor1_formula(w, da, dm, db, s, q, "printed")
    corrected = float(np.sum(w * tight_c))
    corrected_weak = float(np.sum(w * weak_c))
    printed = float(np.sum(w * weak_p))
    value = composite_midpoint(f.eval, K)
    err = abs(value - _oracle(f, K))
    if variant == "corrected":
        bound, weak = corrected, corrected_weak
    elif variant == "printed":
        bound, weak = printed, printed
    else:
        raise ConfigurationError(f"variant must be 'corrected' or 'printed', got {variant!r}")
    return QuadratureResult(
        "midpoint", value, bound, err, weak, variant, _hypothesis(f, 1, K, s, q), K.pieces,
        {"corrected": corrected, "corrected_weak": corrected_weak, "printed": printed},
    )


def trapezoid_error_bound(f: DifferentiableFunction, K, s: float = 1.0, q: float = 1.0, variant: str = "corrected") -> QuadratureResult:
    """Certified bound on |int f - trapezoid sum| from |f''| at the nodes.

    The stated form has no discrepancy, so both variants agree. The weak
    (absolute-sum) form is reported alongside; dominance is judged against
    the tight one.
    """
    if variant not in ("corrected", "printed"):
        raise ConfigurationError(f"variant must be 'corrected' or 'printed', got {variant!r}")
    K = _as_partition(K)
    _check_sq(s, q)
    f.require_interval(Interval(K.a, K.b), 2)
    lo, hi, w = K.arrays()
    d2a = np.abs(np.asarray(f.deriv(2, lo), dtype=float))
    d2b = np.abs(np.asarray(f.deriv(2, hi), dtype=float))
    tight, weak = trapezoid_formula(w, d2a, d2b, s, q, "corrected")
    bound = float(np.sum(w * tight))
    weak_total = float(np.sum(w * weak))
    value = composite_trapezoid(f.eval, K)
    err = abs(value - _oracle(f, K))
    return QuadratureResult(
        "trapezoid", value, bound, err, weak_total, variant, _hypothesis(f, 2, K, s, q), K.pieces,
        {"corrected": bound, "printed": bound, "weak": weak_total},
    )


@dataclass(frozen=True)
class ConvergenceStudy:
    rule: str
    variant: str
    rows: Tuple[Tuple[int, float, float, float], ...]
    slope: float

    CSV_HEADER = ("pieces", "value", "bound", "oracle_error")

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.CSV_HEADER)
        for pieces, value, bound, err in self.rows:
            writer.writerow([pieces, repr(value), repr(bound), repr(err)])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "variant": self.variant,
            "slope": self.slope,
            "rows": [dict(zip(self.CSV_HEADER, row)) for row in self.rows],
        }


def convergence_study(
    f: DifferentiableFunction,
    interval: Interval,
    rule: str,
    s: float = 1.0,
    q: float = 1.0,
    pieces_list: Iterable[int] = (2, 4, 8, 16, 32),
    variant: str = "corrected",
) -> ConvergenceStudy:
    """Uniform-refinement table; ``slope`` fits log(bound) against log(pieces)."""
    if rule == "midpoint":
        fn = midpoint_error_bound
    elif rule == "trapezoid":
        fn = trapezoid_error_bound
    else:
        raise ConfigurationError(f"rule must be one of {RULES}, got {rule!r}")
    pieces_list = [int(k) for k in pieces_list]
    if len(pieces_list) < 1:
        raise ConfigurationError("pieces_list is empty")
    rows: List[Tuple[int, float, float, float]] = []
    for k in pieces_list:
        r = fn(f, uniform_partition(interval, k), s, q, variant)
        rows.append((k, r.value, r.error_bound, r.oracle_error))
    slope = _loglog_slope([r[0] for r in rows], [r[2] for r in rows])
    return ConvergenceStudy(rule, variant, tuple(rows), slope)


def _loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    pts = [(math.log(x), math.log(y)) for x, y in zip(xs, ys) if y > 0.0]
    if len(pts) < 2:
        return math.nan
    lx, ly = zip(*pts)
    return float(np.polyfit(lx, ly, 1)[0])
