"""Differentiable function catalog and lattice checks for s-convexity.

Every catalog entry carries closed-form derivatives; no automatic
differentiation is used anywhere, because the bound formulas need exact
derivative magnitudes at interval endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import ConfigurationError, DomainError

#: Used as ``max_order`` for entries whose derivatives exist to every order.
UNBOUNDED_ORDER = 2**31 - 1

#: Absolute violation (scaled by ``max(1, |rhs|)``) tolerated by the lattice checks.
LATTICE_TOL = 1e-12

CATALOG_NAMES = (
    "exp",
    "neg_log",
    "sqrt",
    "pow_s",
    "pow",
    "one_minus_x_pow_n",
    "reciprocal",
    "poly",
)


def as_array_fn(g: Callable, x) -> np.ndarray:
    """Evaluate ``g`` on an array, falling back to a scalar loop."""
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        try:
            y = np.asarray(g(x), dtype=float)
            if y.shape == x.shape:
                return y
            if y.ndim == 0:
                return np.full(x.shape, float(y))
        except (TypeError, ValueError):
            pass
        flat = [float(g(float(v))) for v in x.ravel()]
    return np.asarray(flat, dtype=float).reshape(x.shape)


@dataclass(frozen=True)
class Interval:
    a: float
    b: float
    open_left: bool = False
    open_right: bool = False

    def __post_init__(self):
        if math.isnan(self.a) or math.isnan(self.b) or not self.a < self.b:
            raise DomainError(f"interval needs a < b, got [{self.a}, {self.b}]")

    @property
    def width(self) -> float:
        return self.b - self.a

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.a + self.b)

    def contains_point(self, x: float) -> bool:
        left = x > self.a if self.open_left else x >= self.a
        right = x < self.b if self.open_right else x <= self.b
        return left and right

    def covers(self, other: "Interval", closure: bool = False) -> bool:
        """True when ``other`` (taken as closed) lies inside this interval.

        With ``closure=True`` the open flags of ``self`` are ignored.
        """
        if closure:
            return self.a <= other.a and other.b <= self.b
        return self.contains_point(other.a) and self.contains_point(other.b)

    def __str__(self) -> str:
        lb = "(" if self.open_left else "["
        rb = ")" if self.open_right else "]"
        return f"{lb}{self.a:g}, {self.b:g}{rb}"


def _falling(r: float, k: int) -> float:
    out = 1.0
    for j in range(k):
        out *= r - j
    return out


@dataclass(frozen=True)
class DifferentiableFunction:
    """A real function with closed-form derivatives up to ``max_order``.

    ``deriv(k, x)`` returns the k-th derivative; ``k = 0`` is the value.
    Evaluation accepts scalars or numpy arrays.
    """

    name: str
    params: Tuple[float, ...]
    domain: Interval
    max_order: int
    _kernel: Callable[[int, np.ndarray], np.ndarray] = field(repr=False, compare=False)

    def eval(self, x):
        return self.deriv(0, x)

    __call__ = eval

    def deriv(self, k: int, x):
        if k < 0 or k > self.max_order:
            raise DomainError(f"{self.name}: derivative order {k} exceeds max_order {self.max_order}")
        scalar = np.ndim(x) == 0
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            y = self._kernel(k, np.asarray(x, dtype=float))
        return float(y) if scalar else y

    def derivative(self, k: int) -> Callable:
        return lambda x: self.deriv(k, x)

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        return self.name + ":" + ",".join(repr(float(p)) for p in self.params)

    def require_interval(self, interval: Interval, order: int = 0) -> None:
        """Raise unless ``interval`` is usable for derivatives up to ``order``.

        Order-0 use only needs the closure of the domain; endpoint values are
        then checked for finiteness.
        """
        if order > self.max_order:
            raise DomainError(f"{self.name}: order {order} > max_order {self.max_order}")
        if not self.domain.covers(interval, closure=True):
            raise DomainError(f"{interval} is not inside the domain {self.domain} of {self.label}")
        for k in range(order + 1):
            ends = (self.deriv(k, interval.a), self.deriv(k, interval.b))
            if not all(math.isfinite(v) for v in ends):
                raise DomainError(f"{self.label}: derivative {k} not finite at an endpoint of {interval}")


def _power_kernel(r: float):
    def kernel(k, x):
        c = _falling(r, k)
        if c == 0.0:
            return np.zeros_like(x)
        return c * np.power(x, r - k)

    return kernel


_REALS = Interval(-math.inf, math.inf, True, True)
_POSITIVE = Interval(0.0, math.inf, True, True)
_NONNEG_OPEN0 = Interval(0.0, math.inf, True, True)
_NONNEG = Interval(0.0, math.inf, False, True)


def _make_exp(params):
    _arity("exp", params, 0)
    return DifferentiableFunction("exp", (), _REALS, UNBOUNDED_ORDER, lambda k, x: np.exp(x))


def _neg_log_kernel(k, x):
    if k == 0:
        return -np.log(x)
    return (-1.0) ** k * math.factorial(k - 1) / np.power(x, k)


def _make_neg_log(params):
    _arity("neg_log", params, 0)
    return DifferentiableFunction("neg_log", (), _POSITIVE, UNBOUNDED_ORDER, _neg_log_kernel)


def _make_sqrt(params):
    _arity("sqrt", params, 0)
    return DifferentiableFunction("sqrt", (), _NONNEG_OPEN0, UNBOUNDED_ORDER, _power_kernel(0.5))


def _make_pow_s(params):
    _arity("pow_s", params, 1)
    s = float(params[0])
    if not 0.0 < s <= 1.0:
        raise ConfigurationError(f"pow_s needs s in (0, 1], got {s}")
    # x^s has an unbounded derivative at 0 unless s == 1
    domain = _NONNEG if s == 1.0 else _NONNEG_OPEN0
    return DifferentiableFunction("pow_s", (s,), domain, UNBOUNDED_ORDER, _power_kernel(s))


def _make_pow(params):
    _arity("pow", params, 1)
    r = float(params[0])
    if not math.isfinite(r):
        raise ConfigurationError("pow exponent must be finite")
    if r >= 0 and r == int(r):
        return DifferentiableFunction("pow", (r,), _REALS, UNBOUNDED_ORDER, _power_kernel(r))
    domain = _NONNEG_OPEN0 if r > 0 else _POSITIVE
    return DifferentiableFunction("pow", (r,), domain, UNBOUNDED_ORDER, _power_kernel(r))


def _make_one_minus_x_pow_n(params):
    _arity("one_minus_x_pow_n", params, 1)
    n = float(params[0])
    if n != int(n) or abs(n) < 2:
        raise ConfigurationError(f"one_minus_x_pow_n needs an integer n with |n| >= 2, got {n}")
    n = int(n)

    def kernel(k, x):
        c = _falling(n, k) * (-1.0) ** k
        if c == 0.0:
            return np.zeros_like(x)
        return c * np.power(1.0 - x, n - k)

    domain = _REALS if n > 0 else Interval(-math.inf, 1.0, True, True)
    return DifferentiableFunction("one_minus_x_pow_n", (float(n),), domain, UNBOUNDED_ORDER, kernel)


def _make_reciprocal(params):
    _arity("reciprocal", params, 0)

    def kernel(k, x):
        return (-1.0) ** k * math.factorial(k) / np.power(x, k + 1)

    return DifferentiableFunction("reciprocal", (), _POSITIVE, UNBOUNDED_ORDER, kernel)


def _make_poly(params):
    if len(params) == 0:
        raise ConfigurationError("poly needs at least one coefficient")
    coeffs = np.asarray([float(c) for c in params])
    if not np.all(np.isfinite(coeffs)):
        raise ConfigurationError("poly coefficients must be finite")

    def kernel(k, x):
        if k >= len(coeffs):
            return np.zeros_like(x)
        return P.polyval(x, P.polyder(coeffs, k)) + np.zeros_like(x)

    return DifferentiableFunction("poly", tuple(coeffs.tolist()), _REALS, UNBOUNDED_ORDER, kernel)


def _arity(name, params, n):
    if len(params) != n:
        raise ConfigurationError(f"{name} takes {n} parameter(s), got {len(params)}")


_BUILDERS = {
    "exp": _make_exp,
    "neg_log": _make_neg_log,
    "sqrt": _make_sqrt,
    "pow_s": _make_pow_s,
    "pow": _make_pow,
    "one_minus_x_pow_n": _make_one_minus_x_pow_n,
    "reciprocal": _make_reciprocal,
    "poly": _make_poly,
}


def catalog_get(name: str, params: Sequence[float] = ()) -> DifferentiableFunction:
    """Look up a catalog entry.

    >>> catalog_get("poly", [0, 0, 1]).deriv(1, 0.5)
    1.0
    """
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ConfigurationError(f"unknown function {name!r}; known: {', '.join(CATALOG_NAMES)}") from None
    return builder(tuple(params))


def parse_function_spec(text: str) -> DifferentiableFunction:
    """Parse ``NAME[:v1,v2,...]`` into a catalog entry."""
    name, _, rest = text.partition(":")
    params = []
    if rest.strip():
        try:
            params = [float(v) for v in rest.split(",")]
        except ValueError:
            raise ConfigurationError(f"cannot parse parameters in {text!r}") from None
    return catalog_get(name.strip(), params)


@dataclass(frozen=True)
class ConvexityReport:
    verdict: str
    s: float
    worst_violation: float
    witness: Optional[Tuple[float, float, float]] = None
    kind: str = "s-convex"
    domain_violation: bool = False

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "kind": self.kind,
            "s": self.s,
            "worst_violation": self.worst_violation,
            "witness": list(self.witness) if self.witness else None,
            "domain_violation": self.domain_violation,
        }


def _lattice_check(g, interval: Interval, s: float, grid_n: int, concave: bool) -> ConvexityReport:
    if not 0.0 < s <= 1.0:
        raise ConfigurationError(f"s must lie in (0, 1], got {s}")
    if grid_n < 3:
        raise ConfigurationError("grid_n must be at least 3")
    a, b = interval.a, interval.b
    xs = np.linspace(a, b, grid_n)
    lam = np.linspace(0.0, 1.0, grid_n)
    X = lam[None, None, :] * xs[:, None, None] + (1.0 - lam[None, None, :]) * xs[None, :, None]
    np.clip(X, a, b, out=X)
    gx = as_array_fn(g, xs)
    lhs = as_array_fn(g, X)
    if not (np.all(np.isfinite(gx)) and np.all(np.isfinite(lhs))):
        raise DomainError(f"non-finite evaluation on {interval}")
    rhs = np.power(lam, s)[None, None, :] * gx[:, None, None] + np.power(1.0 - lam, s)[None, None, :] * gx[None, :, None]
    diff = (rhs - lhs) if concave else (lhs - rhs)
    scaled = diff / np.maximum(1.0, np.abs(rhs))
    idx = np.unravel_index(int(np.argmax(scaled)), scaled.shape)
    worst = max(0.0, float(scaled[idx]))
    witness = None
    if worst > LATTICE_TOL:
        witness = (float(xs[idx[0]]), float(xs[idx[1]]), float(lam[idx[2]]))

    # the defining inequality is stated for maps into the non-negative reals
    neg = float(-gx.min())
    domain_violation = neg > LATTICE_TOL
    if domain_violation:
        worst = max(worst, neg)
        if witness is None:
            x0 = float(xs[int(np.argmin(gx))])
            witness = (x0, x0, 1.0)
    verdict = "fail" if worst > LATTICE_TOL else "pass"
    kind = "s-concave" if concave else "s-convex"
    return ConvexityReport(verdict, float(s), worst, witness, kind, domain_violation)


def check_s_convexity(g: Callable, interval: Interval, s: float, grid_n: int = 11) -> ConvexityReport:
    """Test ``g(t x + (1-t) y) <= t^s g(x) + (1-t)^s g(y)`` on a lattice.

    The lattice is ``grid_n`` points in each of x, y (over the interval) and
    t (over [0, 1], endpoints included).
    """
    return _lattice_check(g, interval, s, grid_n, concave=False)


def check_concavity(g: Callable, interval: Interval, s: float = 1.0, grid_n: int = 11) -> ConvexityReport:
    """Reverse of :func:`check_s_convexity`; ``s = 1`` is ordinary concavity."""
    return _lattice_check(g, interval, s, grid_n, concave=True)


def central_diff(g: Callable, x: float, h: float = 1e-5) -> float:
    return (g(x + h) - g(x - h)) / (2.0 * h)
