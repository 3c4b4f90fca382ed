"""Hermite-Hadamard type bounds for functions with s-convex (or concave) derivatives.

Every ``bound_*`` function returns a :class:`BoundResult` holding the closed
form bound next to the left-hand side measured with the reference
integrator. Hypotheses are always checked on a lattice and reported, never
enforced here; callers that need a certificate look at ``hypothesis_ok``.

Where a printed statement disagrees with the inequality its proof actually
establishes, ``variant="corrected"`` (the default) evaluates the form that
follows from the proof and ``variant="printed"`` the form as stated. The
other form is always kept in ``extras``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from .errors import ConfigurationError, DomainError
from .fnmodel import (
    ConvexityReport,
    DifferentiableFunction,
    Interval,
    check_concavity,
    check_s_convexity,
)
from .integrate import ORACLE_TOL, integrate, oracle_integral
from .special import beta

HYPOTHESIS_GRID = 11
DOMINANCE_RTOL = 1e-9
VARIANTS = ("corrected", "printed")


@dataclass(frozen=True)
class BoundInput:
    f: DifferentiableFunction
    interval: Interval
    lam: Optional[float] = None
    n: int = 1
    s: float = 1.0
    q: float = 1.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ConfigurationError(f"n must be a positive integer, got {self.n}")
        if self.n > self.f.max_order:
            raise ConfigurationError(f"n = {self.n} exceeds max_order of {self.f.label}")
        if not 0.0 < self.s <= 1.0:
            raise ConfigurationError(f"s must lie in (0, 1], got {self.s}")
        if not self.q >= 1.0 or not math.isfinite(self.q):
            raise ConfigurationError(f"q must be a finite number >= 1, got {self.q}")
        if self.lam is not None and not self.interval.a <= self.lam <= self.interval.b:
            raise DomainError(f"lambda = {self.lam} is outside {self.interval}")

    @property
    def p(self) -> float:
        return math.inf if self.q == 1.0 else self.q / (self.q - 1.0)

    @property
    def inv_p(self) -> float:
        """1/p, which is 0 in the q = 1 limit."""
        return 1.0 - 1.0 / self.q


@dataclass(frozen=True)
class BoundResult:
    theorem_id: str
    bound: float
    lhs: float
    hypothesis: Optional[ConvexityReport]
    variant: str = "corrected"
    notes: Tuple[str, ...] = ()
    extras: Dict[str, float] = field(default_factory=dict)

    @property
    def tightness(self) -> float:
        return tightness(self.lhs, self.bound)

    @property
    def hypothesis_ok(self) -> bool:
        return self.hypothesis is None or self.hypothesis.passed

    @property
    def holds(self) -> bool:
        return dominates(self.bound, self.lhs)

    @property
    def verdict(self) -> str:
        if not self.holds:
            return "violated"
        return "holds"

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "variant": self.variant,
            "bound": self.bound,
            "lhs": self.lhs,
            "tightness": self.tightness,
            "holds": self.holds,
            "hypothesis_ok": self.hypothesis_ok,
            "hypothesis": self.hypothesis.to_dict() if self.hypothesis else None,
            "notes": list(self.notes),
            "extras": dict(self.extras),
        }


def tightness(lhs: float, bound: float) -> float:
    """lhs / bound; a zero bound with a roundoff-level lhs counts as 0."""
    if bound == 0.0:
        return 0.0 if dominates(0.0, lhs) else math.inf
    return lhs / bound


def dominates(bound: float, lhs: float, rtol: float = DOMINANCE_RTOL) -> bool:
    return lhs <= bound + rtol * (1.0 + abs(bound))


# ----------------------------------------------------------------- helpers


def _check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise ConfigurationError(f"variant must be one of {VARIANTS}, got {variant!r}")
    return variant


def _holder_unweighted(n: int, inp: BoundInput) -> float:
    """(n p + 1)^(-1/p), equal to 1 in the q = 1 limit."""
    if inp.q == 1.0:
        return 1.0
    p = inp.p
    return (n * p + 1.0) ** (-1.0 / p)


def _abs_deriv(f: DifferentiableFunction, n: int, x: float) -> float:
    v = abs(f.deriv(n, x))
    if not math.isfinite(v):
        raise DomainError(f"|f^({n})| of {f.label} is not finite at {x}")
    return v


def _hypothesis(inp: BoundInput, kind: str, s: Optional[float] = None, power: Optional[float] = None):
    n, f = inp.n, inp.f
    q = inp.q if power is None else power
    s = inp.s if s is None else s

    def g(x):
        return np.abs(f.deriv(n, x)) ** q

    try:
        if kind == "convex":
            return check_s_convexity(g, inp.interval, s, HYPOTHESIS_GRID)
        return check_concavity(g, inp.interval, s, HYPOTHESIS_GRID)
    except DomainError:
        return ConvexityReport("fail", s, math.inf, None, "s-concave" if kind == "concave" else "s-convex", True)


def _prepare(inp: BoundInput, needs_lambda: bool) -> None:
    inp.f.require_interval(inp.interval, inp.n)
    if needs_lambda and inp.lam is None:
        raise ConfigurationError("this bound needs lambda")


def _notes_for(inp: BoundInput) -> Tuple[str, ...]:
    if inp.interval.a < 0:
        return ("interval extends below 0; the statements assume I inside [0, inf)",)
    return ()


# ------------------------------------------------------------ identities


def lambda_lhs(f: DifferentiableFunction, interval: Interval, lam: float, n: int) -> float:
    """|(-1)^n int f + sum_m (-1)^(n-m+2) [((lam-a)^m - (lam-b)^m)/m!] f^(m-1)(lam)|."""
    a, b = interval.a, interval.b
    total = (-1.0) ** n * oracle_integral(f, a, b)
    terms = [total]
    for m in range(1, n + 1):
        coef = ((lam - a) ** m - (lam - b) ** m) / math.factorial(m)
        terms.append((-1.0) ** (n - m + 2) * coef * f.deriv(m - 1, lam))
    return abs(math.fsum(terms))


def symmetric_lhs(f: DifferentiableFunction, interval: Interval, n: int, halved: bool) -> float:
    """Endpoint-symmetric left side used by the lambda-free theorems.

    ``halved=False``: |sum_m (-1)^(n-m+2) (b-a)^m/m! [f^(m-1)(b) - (-1)^m f^(m-1)(a)] + 2(-1)^n int f|.
    ``halved=True`` uses (b-a)^m/(2 m!) and a single integral (exactly half).
    """
    a, b = interval.a, interval.b
    w = b - a
    scale = 0.5 if halved else 1.0
    terms = [2.0 * scale * (-1.0) ** n * oracle_integral(f, a, b)]
    for m in range(1, n + 1):
        coef = scale * w**m / math.factorial(m)
        terms.append((-1.0) ** (n - m + 2) * coef * (f.deriv(m - 1, b) - (-1.0) ** m * f.deriv(m - 1, a)))
    return abs(math.fsum(terms))


def lemma3_residual(f: DifferentiableFunction, interval: Interval, t: float, n: int, tol: float = 1e-11) -> float:
    """Absolute residual of the n-th order integral identity at the point ``t``.

    left  = (-1)^n int_a^b f
    right = sum_m (-1)^(n-m+1) [((t-a)^m - (t-b)^m)/m!] f^(m-1)(t)
            + (1/n!) [int_a^t (x-a)^n f^(n) + int_t^b (x-b)^n f^(n)]
    """
    a, b = interval.a, interval.b
    if not a <= t <= b:
        raise DomainError(f"t = {t} is outside {interval}")
    if int(n) != n or n < 1 or n > f.max_order:
        raise ConfigurationError(f"invalid order n = {n} for {f.label}")
    left = (-1.0) ** n * integrate(f.eval, a, b, tol)
    parts = []
    for m in range(1, n + 1):
        coef = ((t - a) ** m - (t - b) ** m) / math.factorial(m)
        parts.append((-1.0) ** (n - m + 1) * coef * f.deriv(m - 1, t))
    i1 = integrate(lambda x: (x - a) ** n * f.deriv(n, x), a, t, tol)
    i2 = integrate(lambda x: (x - b) ** n * f.deriv(n, x), t, b, tol)
    parts.append((i1 + i2) / math.factorial(n))
    return abs(left - math.fsum(parts))


def midpoint_identity_sides(f: DifferentiableFunction, interval: Interval) -> Tuple[float, float]:
    """Both sides of the first-order midpoint identity.

    f(m) - mean(f) = (b-a)/4 int_0^1 (1-t) [f'(t a + (1-t) m) - f'(t b + (1-t) m)] dt
    """
    a, b = interval.a, interval.b
    m = interval.midpoint
    left = f.eval(m) - integrate(f.eval, a, b, ORACLE_TOL) / (b - a)

    def kernel(t):
        return (1.0 - t) * (f.deriv(1, t * a + (1.0 - t) * m) - f.deriv(1, t * b + (1.0 - t) * m))

    right = (b - a) / 4.0 * integrate(kernel, 0.0, 1.0, ORACLE_TOL)
    return left, right


def trapezoid_identity_sides(f: DifferentiableFunction, interval: Interval) -> Tuple[float, float]:
    """Both sides of (f(a)+f(b))/2 - mean(f) = (b-a)^2/2 int_0^1 t(1-t) f''(t a + (1-t) b) dt."""
    a, b = interval.a, interval.b
    left = 0.5 * (f.eval(a) + f.eval(b)) - integrate(f.eval, a, b, ORACLE_TOL) / (b - a)
    right = (b - a) ** 2 / 2.0 * integrate(
        lambda t: t * (1.0 - t) * f.deriv(2, t * a + (1.0 - t) * b), 0.0, 1.0, ORACLE_TOL
    )
    return left, right


# ------------------------------------------------------ s-HH sandwich (t1)


@dataclass(frozen=True)
class HHSandwich:
    lower: float
    mean: float
    upper: float
    hypothesis: ConvexityReport

    def holds(self, slack: float = 1e-10) -> bool:
        return self.lower <= self.mean + slack and self.mean <= self.upper + slack


def hh_bounds_s(f: DifferentiableFunction, interval: Interval, s: float) -> HHSandwich:
    """2^(s-1) f(mid) <= mean of f <= (f(a) + f(b)) / (s + 1) for s-convex f >= 0."""
    if not 0.0 < s <= 1.0:
        raise ConfigurationError(f"s must lie in (0, 1], got {s}")
    f.require_interval(interval, 0)
    a, b = interval.a, interval.b
    fa, fb, fm = f.eval(a), f.eval(b), f.eval(interval.midpoint)
    if not all(math.isfinite(v) for v in (fa, fb, fm)):
        raise DomainError(f"non-finite endpoint values of {f.label} on {interval}")
    try:
        report = check_s_convexity(f.eval, interval, s, HYPOTHESIS_GRID)
    except DomainError:
        report = ConvexityReport("fail", s, math.inf, None, "s-convex", True)
    mean = oracle_integral(f, a, b) / (b - a)
    return HHSandwich(2.0 ** (s - 1.0) * fm, mean, (fa + fb) / (s + 1.0), report)


# ------------------------------------------------------- lambda theorems


def _side_widths(inp: BoundInput, n: int) -> Tuple[float, float]:
    a, b = inp.interval.a, inp.interval.b
    return (inp.lam - a) ** (n + 1), (b - inp.lam) ** (n + 1)


def bound_t2(inp: BoundInput, variant: str = "corrected") -> BoundResult:
    """|f^(n)| s-convex: Beta-weighted endpoint and lambda values."""
    _check_variant(variant)
    _prepare(inp, True)
    n, s, f = inp.n, inp.s, inp.f
    a, b, lam = inp.interval.a, inp.interval.b, inp.lam
    wl, wr = _side_widths(inp, n)
    ga, gb, gl = _abs_deriv(f, n, a), _abs_deriv(f, n, b), _abs_deriv(f, n, lam)
    value = (beta(s + 1, n + 1) * (wl * ga + wr * gb) + beta(1, n + s + 1) * (wl + wr) * gl) / math.factorial(n)
    lhs = lambda_lhs(f, inp.interval, lam, n)
    return BoundResult("t2", value, lhs, _hypothesis(inp, "convex", power=1.0), variant, _notes_for(inp))


def t3_value(inp: BoundInput) -> float:
    n, s, q, f = inp.n, inp.s, inp.q, inp.f
    a, b, lam = inp.interval.a, inp.interval.b, inp.lam
    wl, wr = _side_widths(inp, n)
    b1, b2 = beta(s + 1, n + 1), beta(1, n + s + 1)
    gl = _abs_deriv(f, n, lam) ** q
    left = (b1 * _abs_deriv(f, n, a) ** q + b2 * gl) ** (1.0 / q)
    right = (b1 * _abs_deriv(f, n, b) ** q + b2 * gl) ** (1.0 / q)
    return (n + 1.0) ** (-inp.inv_p) / math.factorial(n) * (wl * left + wr * right)


def bound_t3(inp: BoundInput, variant: str = "corrected") -> BoundResult:
    """|f^(n)|^q s-convex, Hoelder with the (1-t)^n weight."""
    _check_variant(variant)
    _prepare(inp, True)
    lhs = lambda_lhs(inp.f, inp.interval, inp.lam, inp.n)
    return BoundResult("t3", t3_value(inp), lhs, _hypothesis(inp, "convex"), variant, _notes_for(inp))


def t4_value(inp: BoundInput) -> float:
    n, f = inp.n, inp.f
    a, b, lam = inp.interval.a, inp.interval.b, inp.lam
    wl, wr = _side_widths(inp, n)
    inner = wl * _abs_deriv(f, n, 0.5 * (a + lam)) + wr * _abs_deriv(f, n, 0.5 * (b + lam))
    return _holder_unweighted(n, inp) / math.factorial(n) * inner


def bound_t4(inp: BoundInput, variant: str = "corrected") -> BoundResult:
    """|f^(n)|^q concave: Jensen at the half-way points."""
    _check_variant(variant)
    _prepare(inp, True)
    lhs = lambda_lhs(inp.f, inp.interval, inp.lam, inp.n)
    return BoundResult("t4", t4_value(inp), lhs, _hypothesis(inp, "concave", s=1.0), variant, _notes_for(inp))


def t5_value(inp: BoundInput) -> float:
    n, s, q, f = inp.n, inp.s, inp.q, inp.f
    a, b, lam = inp.interval.a, inp.interval.b, inp.lam
    wl, wr = _side_widths(inp, n)
    gl = _abs_deriv(f, n, lam) ** q
    left = (_abs_deriv(f, n, a) ** q + gl) ** (1.0 / q)
    right = (_abs_deriv(f, n, b) ** q + gl) ** (1.0 / q)
    return _holder_unweighted(n, inp) / math.factorial(n) * (1.0 / (s + 1.0)) ** (1.0 / q) * (wl * left + wr * right)


def bound_t5(inp: BoundInput, variant: str = "corrected") -> BoundResult:
    """|f^(n)|^q s-convex, unweighted Hoelder."""
    _check_variant(variant)
    _prepare(inp, True)
    lhs = lambda_lhs(inp.f, inp.interval, inp.lam, inp.n)
    return BoundResult("t5", t5_value(inp), lhs, _hypothesis(inp, "convex"), variant, _notes_for(inp))


def bound_t7(inp: BoundInput, variant: str = "corrected") -> BoundResult:
    """|f^(n)|^q s-concave; reduces to t4 at s = 1."""
    _check_variant(variant)
    _prepare(inp, True)
    value = t4_value(inp) * 2.0 ** ((inp.s - 1.0) / inp.q)
    lhs = lambda_lhs(inp.f, inp.interval, inp.lam, inp.n)
    return BoundResult("t7", value, lhs, _hypothesis(inp, "concave"), variant, _notes_for(inp))


# --------------------------------------------------- endpoint theorems


def t6_values(inp: BoundInput) -> Dict[str, float]:
    """Both forms of the two-brace endpoint bound.

    The proof gives the factor (1/(n+1))^(1/p); the statement prints the
    exponent q/(q-1), i.e. (1/(n+1))^p, which is 0 in the q = 1 limit.
    """
    n, s, q, f = inp.n, inp.s, inp.q, inp.f
    a, b = inp.interval.a, inp.interval.b
    b1, b2 = beta(s + 1, n + 1), beta(1, n + s + 1)
    ga, gb = _abs_deriv(f, n, a) ** q, _abs_deriv(f, n, b) ** q
    braces = (b1 * ga + b2 * gb) ** (1.0 / q) + (b1 * gb + b2 * ga) ** (1.0 / q)
    lead = (b - a) ** (n + 1) / math.factorial(n) * braces
    printed_factor = 0.0 if q == 1.0 else (n + 1.0) ** (-inp.p)
    return {
        "corrected": lead * (n + 1.0) ** (-inp.inv_p),
        "printed": lead * printed_factor,
    }


def bound_t6(inp: BoundInput, variant: str = "corrected") -> BoundResult:
    _check_variant(variant)
    _prepare(inp, False)
    values = t6_values(inp)
    lhs = symmetric_lhs(inp.f, inp.interval, inp.n, halved=False)
    notes = _notes_for(inp) + (
        f"printed exponent q/(q-1) gives {values['printed']!r}; proof exponent 1/p gives {values['corrected']!r}",
    )
    return BoundResult("t6", values[variant], lhs, _hypothesis(inp, "convex"), variant, notes, values)


def t8_value(inp: BoundInput) -> float:
    n = inp.n
    a, b = inp.interval.a, inp.interval.b
    g_mid = _abs_deriv(inp.f, n, inp.interval.midpoint)
    return (b - a) ** (n + 1) / math.factorial(n) * _holder_unweighted(n, inp) * g_mid


def t8_value_beta_form(inp: BoundInput) -> float:
    """Same bound written with (Beta(np+1, 1))^(1/p)."""
    n = inp.n
    a, b = inp.interval.a, inp.interval.b
    factor = 1.0 if inp.q == 1.0 else beta(n * inp.p + 1.0, 1.0) ** inp.inv_p
    return (b - a) ** (n + 1) / math.factorial(n) * factor * _abs_deriv(inp.f, n, inp.interval.midpoint)


def bound_t8(inp: BoundInput, variant: str = "corrected") -> BoundResult:
    """|f^(n)|^q concave, endpoint-symmetric form."""
    _check_variant(variant)
    _prepare(inp, False)
    lhs = symmetric_lhs(inp.f, inp.interval, inp.n, halved=True)
    return BoundResult("t8", t8_value(inp), lhs, _hypothesis(inp, "concave", s=1.0), variant, _notes_for(inp))


def bound_t9(inp: BoundInput, variant: str = "corrected") -> BoundResult:
    """|f^(n)|^q s-convex, endpoint-symmetric form."""
    _check_variant(variant)
    _prepare(inp, False)
    n, s, q, f = inp.n, inp.s, inp.q, inp.f
    a, b = inp.interval.a, inp.interval.b
    ends = (_abs_deriv(f, n, a) ** q + _abs_deriv(f, n, b) ** q) ** (1.0 / q)
    value = (b - a) ** (n + 1) / math.factorial(n) * _holder_unweighted(n, inp) * (s + 1.0) ** (-1.0 / q) * ends
    lhs = symmetric_lhs(f, inp.interval, n, halved=True)
    return BoundResult("t9", value, lhs, _hypothesis(inp, "convex"), variant, _notes_for(inp))


def bound_t10(inp: BoundInput, variant: str = "corrected") -> BoundResult:
    """|f^(n)|^q s-concave, endpoint-symmetric form; t8 at s = 1."""
    _check_variant(variant)
    _prepare(inp, False)
    value = t8_value(inp) * 2.0 ** ((inp.s - 1.0) / inp.q)
    lhs = symmetric_lhs(inp.f, inp.interval, inp.n, halved=True)
    return BoundResult("t10", value, lhs, _hypothesis(inp, "concave"), variant, _notes_for(inp))


# ------------------------------------------------------------ corollaries


def cor1_formula(width: float, da: float, dm: float, db: float, s: float, q: float, variant: str) -> Tuple[float, float]:
    """Midpoint-type bound on |f(m) - mean f| from derivative magnitudes.

    Returns ``(tight, weak)``. ``da, dm, db`` are |f'| at a, the midpoint
    and b. The corrected form carries ``width``; the printed one ``width**2``.
    """
    _check_variant(variant)
    inv_p = 1.0 - 1.0 / q
    holder = 1.0 if q == 1.0 else (q / (q - 1.0) + 1.0) ** (-inv_p)
    scale = width if variant == "corrected" else width**2
    c = holder * (1.0 / (s + 1.0)) ** (1.0 / q)
    brackets = (da**q + dm**q) ** (1.0 / q) + (db**q + dm**q) ** (1.0 / q)
    return scale / 4.0 * c * brackets, scale / 2.0 * c * (da + db)


def bound_cor1_midpoint(
    f: DifferentiableFunction, interval: Interval, s: float = 1.0, q: float = 1.0, variant: str = "corrected"
) -> BoundResult:
    """|f((a+b)/2) - mean f| for |f'|^q s-convex.

    The printed statement carries (b-a)^2 where normalising the n = 1,
    lambda = (a+b)/2 case of t5 by (b-a) gives (b-a); the printed form is
    not homogeneous and fails on short intervals.
    """
    _check_variant(variant)
    inp = BoundInput(f, interval, interval.midpoint, 1, s, q)
    _prepare(inp, True)
    a, b = interval.a, interval.b
    da, dm, db = (_abs_deriv(f, 1, x) for x in (a, interval.midpoint, b))
    tight_c, weak_c = cor1_formula(b - a, da, dm, db, s, q, "corrected")
    tight_p, weak_p = cor1_formula(b - a, da, dm, db, s, q, "printed")
    extras = {"corrected": tight_c, "printed": tight_p, "weak_corrected": weak_c, "weak_printed": weak_p}
    lhs = abs(f.eval(interval.midpoint) - oracle_integral(f, a, b) / (b - a))
    tight, weak = (tight_c, weak_c) if variant == "corrected" else (tight_p, weak_p)
    notes = _notes_for(inp) + (f"weak (absolute-sum) form: {weak!r}",)
    return BoundResult("cor1", tight, lhs, _hypothesis(inp, "convex"), variant, notes, extras)


def trapezoid_formula(width: float, d2a: float, d2b: float, s: float, q: float, variant: str = "corrected") -> Tuple[float, float]:
    """Trapezoid-type bound on |(f(a)+f(b))/2 - mean f| from |f''| at the endpoints.

    Returns ``(tight, weak)``; at s = 1 the constant is (1/12)^(1/q). The
    printed variant repeats |f''(a)| in place of |f''(b)| in the tight form.
    """
    _check_variant(variant)
    inv_p = 1.0 - 1.0 / q
    prefactor = width**2 / 2.0 * 6.0 ** (-inv_p) * (1.0 / ((s + 2.0) * (s + 3.0))) ** (1.0 / q)
    other = d2b if variant == "corrected" else d2a
    return prefactor * (d2a**q + other**q) ** (1.0 / q), prefactor * (d2a + d2b)


def bound_cor2_trapezoid(
    f: DifferentiableFunction, interval: Interval, q: float = 1.0, variant: str = "corrected"
) -> BoundResult:
    """|(f(a)+f(b))/2 - mean f| for |f''|^q convex."""
    _check_variant(variant)
    inp = BoundInput(f, interval, None, 2, 1.0, q)
    _prepare(inp, False)
    a, b = interval.a, interval.b
    d2a, d2b = _abs_deriv(f, 2, a), _abs_deriv(f, 2, b)
    tight_c, weak = trapezoid_formula(b - a, d2a, d2b, 1.0, q, "corrected")
    tight_p, _ = trapezoid_formula(b - a, d2a, d2b, 1.0, q, "printed")
    extras = {"corrected": tight_c, "printed": tight_p, "weak": weak}
    lhs = abs(0.5 * (f.eval(a) + f.eval(b)) - oracle_integral(f, a, b) / (b - a))
    value = tight_c if variant == "corrected" else tight_p
    notes = _notes_for(inp) + (f"weak (absolute-sum) form: {weak!r}",)
    return BoundResult("cor2", value, lhs, _hypothesis(inp, "convex", s=1.0), variant, notes, extras)


# --------------------------------------------------------------- dispatch

LAMBDA_THEOREMS = ("t2", "t3", "t4", "t5", "t7")
ENDPOINT_THEOREMS = ("t6", "t8", "t9", "t10")
BOUND_IDS = ("t2", "t3", "t4", "t5", "t6", "cor1", "cor2", "t7", "t8", "t9", "t10")

_BY_ID: Dict[str, Callable[..., BoundResult]] = {
    "t2": bound_t2,
    "t3": bound_t3,
    "t4": bound_t4,
    "t5": bound_t5,
    "t6": bound_t6,
    "t7": bound_t7,
    "t8": bound_t8,
    "t9": bound_t9,
    "t10": bound_t10,
}

#: Which bounds have distinct printed and corrected forms.
HAS_PRINTED_VARIANT = frozenset({"t6", "cor1", "cor2"})


def evaluate_bound(
    theorem_id: str,
    f: DifferentiableFunction,
    interval: Interval,
    lam: Optional[float] = None,
    n: int = 1,
    s: float = 1.0,
    q: float = 1.0,
    variant: str = "corrected",
) -> BoundResult:
    """Uniform entry point used by the audit engine and the CLI."""
    if theorem_id == "cor1":
        return bound_cor1_midpoint(f, interval, s, q, variant)
    if theorem_id == "cor2":
        if s != 1.0:
            raise ConfigurationError("cor2 is the s = 1 case; use the trapezoid certificate for other s")
        return bound_cor2_trapezoid(f, interval, q, variant)
    try:
        fn = _BY_ID[theorem_id]
    except KeyError:
        raise ConfigurationError(f"unknown theorem {theorem_id!r}; known: {', '.join(BOUND_IDS)}") from None
    if theorem_id in ENDPOINT_THEOREMS:
        lam = None
    return fn(BoundInput(f, interval, lam, n, s, q), variant)
