"""Grid audit of every stated inequality against the oracle.

A case is a claim id, a variant and a flat mapping of primitive inputs
(functions are stored by their catalog label), so any record can be
replayed in isolation or shipped to a worker process.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import hhbounds
from .errors import ConfigurationError, DomainError
from .fnmodel import Interval, parse_function_spec
from .hhbounds import dominates, evaluate_bound, hh_bounds_s, tightness
from .means import (
    PositivePair,
    mean_arithmetic,
    mean_geometric,
    mean_harmonic,
    mean_identric,
    mean_logarithmic,
    mean_p_logarithmic,
)
from .quadrature import midpoint_error_bound, trapezoid_error_bound, uniform_partition
from .special import hh_left_constant, jagers_bounds

BOUND_CLAIMS = ("t2", "t3", "t4", "t5", "t6", "t7", "t8", "t9", "t10", "cor1", "cor2")
CLAIMS = (
    ("t1",)
    + BOUND_CLAIMS
    + ("q_prop1", "q_prop2", "m_prop1", "m_prop2", "m_prop3", "m_prop4", "chain", "jagers")
)
VERDICTS = ("holds", "violated", "hypothesis_unmet")
PRINTED, CORRECTED = "as_printed", "corrected"

#: Claims whose printed statement differs from what the proof supports.
DISCREPANT = frozenset({"t6", "cor1", "cor2", "q_prop1", "m_prop1"})
#: Claims evaluated only as printed (no derivation to correct against).
PRINTED_ONLY = frozenset({"m_prop2", "m_prop3", "m_prop4"})

PROP3_CONVENTION = "convention: A^(1/2) read as sqrt(A(a,b)), L_p^2 as (L_p(a,b))^2 with r = p, q = p/(p-1)"


@dataclass(frozen=True)
class AuditCase:
    claim_id: str
    variant: str
    inputs: Tuple[Tuple[str, Any], ...]

    @classmethod
    def make(cls, claim_id: str, variant: str, **inputs) -> "AuditCase":
        return cls(claim_id, variant, tuple(sorted(inputs.items())))

    def get(self, key: str, default=None):
        for k, v in self.inputs:
            if k == key:
                return v
        return default

    def as_dict(self) -> dict:
        return {"claim_id": self.claim_id, "variant": self.variant, "inputs": dict(self.inputs)}

    @classmethod
    def from_dict(cls, d: dict) -> "AuditCase":
        return cls.make(d["claim_id"], d["variant"], **d["inputs"])

    def key(self) -> Tuple[int, str, str]:
        return (CLAIMS.index(self.claim_id), json.dumps(dict(self.inputs), sort_keys=True), self.variant)


@dataclass(frozen=True)
class AuditRecord:
    case: AuditCase
    stated: float
    measured: float
    verdict: str
    tightness: float
    note: str = ""

    @property
    def violated(self) -> bool:
        return self.verdict == "violated"

    def to_dict(self) -> dict:
        t = self.tightness
        return {
            "case": self.case.as_dict(),
            "stated": self.stated,
            "measured": self.measured,
            "verdict": self.verdict,
            "tightness": t if math.isfinite(t) else None,
            "note": self.note,
        }


def _record(case: AuditCase, stated: float, measured: float, hypothesis_ok: bool = True, note: str = "") -> AuditRecord:
    held = dominates(stated, measured)
    notes = [note] if note else []
    if not hypothesis_ok:
        verdict = "hypothesis_unmet"
        notes.append("inequality held" if held else "inequality failed")
    else:
        verdict = "holds" if held else "violated"
    return AuditRecord(case, float(stated), float(measured), verdict, tightness(measured, stated), "; ".join(notes))


def _worst_link(links: Sequence[Tuple[str, float, float]]) -> Tuple[str, float, float]:
    """Pick the link (name, smaller, larger) closest to reversal."""
    return max(links, key=lambda l: (l[1] - l[2]) / max(1.0, abs(l[2])))


# ------------------------------------------------------------- evaluation


def _interval(case: AuditCase) -> Interval:
    return Interval(float(case.get("a")), float(case.get("b")))


def _eval_t1(case):
    f = parse_function_spec(case.get("fn"))
    sw = hh_bounds_s(f, _interval(case), float(case.get("s")))
    name, lo, hi = _worst_link([("lower<=mean", sw.lower, sw.mean), ("mean<=upper", sw.mean, sw.upper)])
    return _record(case, hi, lo, sw.hypothesis.passed, f"tightest link {name}")


def _eval_bound(case):
    f = parse_function_spec(case.get("fn"))
    lam = case.get("lam")
    res = evaluate_bound(
        case.claim_id,
        f,
        _interval(case),
        None if lam is None else float(lam),
        int(case.get("n", 1)),
        float(case.get("s", 1.0)),
        float(case.get("q", 1.0)),
        "printed" if case.variant == PRINTED else "corrected",
    )
    return _record(case, res.bound, res.lhs, res.hypothesis_ok)


def _eval_quad(case):
    f = parse_function_spec(case.get("fn"))
    K = uniform_partition(_interval(case), int(case.get("pieces")))
    fn = midpoint_error_bound if case.claim_id == "q_prop1" else trapezoid_error_bound
    variant = "printed" if case.variant == PRINTED else "corrected"
    res = fn(f, K, float(case.get("s")), float(case.get("q")), variant)
    return _record(case, res.error_bound, res.oracle_error, res.hypothesis_ok)


def _pair(case) -> PositivePair:
    return PositivePair(float(case.get("a")), float(case.get("b")))


def _eval_m_prop1(case):
    pair = _pair(case)
    a, b = pair.a, pair.b
    measured = abs(mean_arithmetic(pair) - mean_logarithmic(pair))
    if case.variant == PRINTED:
        width2 = (b - a) ** 2
    else:
        width2 = (math.log(b) - math.log(a)) ** 2
    stated = width2 / 3.0 * mean_arithmetic((abs(a), abs(b)))
    return _record(case, stated, measured)


def _eval_m_prop2(case):
    pair = _pair(case)
    p = float(case.get("p"))
    a, b = pair.a, pair.b
    measured = abs(mean_geometric(pair) / mean_identric(pair))
    stated = math.exp(-((b - a) ** 2) / 2.0 * (2.0 / (p + 1.0)) ** 2 / mean_harmonic(pair))
    return _record(case, stated, measured)


def _eval_m_prop3(case):
    pair = _pair(case)
    p = float(case.get("p"))
    q = p / (p - 1.0)
    a, b = pair.a, pair.b
    measured = abs(math.sqrt(mean_arithmetic(pair)) - mean_p_logarithmic(pair, p) ** 2)
    stated = (b - a) ** 2 / (2.0 * (p + 1.0) ** (1.0 / p)) * 0.5 ** (1.0 / q) / mean_harmonic((math.sqrt(a), math.sqrt(b)))
    return _record(case, stated, measured, note=PROP3_CONVENTION)


def _eval_m_prop4(case):
    a, b = float(case.get("a")), float(case.get("b"))
    n, s, q = int(case.get("n")), float(case.get("s")), float(case.get("q"))
    u, v = 1.0 - a, 1.0 - b
    measured = abs(mean_arithmetic((u**n, v**n)) - mean_p_logarithmic((u, v), n) ** n)
    lead = (b - a) ** 2 / 12.0 ** ((q - 1.0) / q) * (n * (n - 1.0) / ((s + 2.0) * (s + 3.0))) ** (1.0 / q)
    if case.get("form") == "tight":
        stated = lead * mean_arithmetic((abs(u) ** (q * (n - 1)), abs(v) ** (q * (n - 1)))) ** (1.0 / q)
    else:
        stated = lead * mean_arithmetic((abs(u) ** (n - 1), abs(v) ** (n - 1)))
    return _record(case, stated, measured)


def _eval_chain(case):
    pair = _pair(case)
    vals = dict(
        H=mean_harmonic(pair),
        G=mean_geometric(pair),
        L=mean_logarithmic(pair),
        I=mean_identric(pair),
        A=mean_arithmetic(pair),
    )
    order = "HGLIA"
    links = [(f"{x}<={y}", vals[x], vals[y]) for x, y in zip(order, order[1:])]
    name, lo, hi = _worst_link(links)
    return _record(case, hi, lo, note=f"tightest link {name}")


def _eval_jagers(case):
    s = float(case.get("s"))
    jb = jagers_bounds(s)
    links = [
        ("2^(s-1)<=lower", hh_left_constant(s), jb.lower),
        ("lower<=middle", jb.lower, jb.middle),
        ("middle<=upper", jb.middle, jb.upper),
    ]
    name, lo, hi = _worst_link(links)
    return _record(case, hi, lo, note=f"tightest link {name}")


_EVALUATORS = {
    "t1": _eval_t1,
    "q_prop1": _eval_quad,
    "q_prop2": _eval_quad,
    "m_prop1": _eval_m_prop1,
    "m_prop2": _eval_m_prop2,
    "m_prop3": _eval_m_prop3,
    "m_prop4": _eval_m_prop4,
    "chain": _eval_chain,
    "jagers": _eval_jagers,
}
_EVALUATORS.update({c: _eval_bound for c in BOUND_CLAIMS})


def evaluate_case(case: AuditCase) -> AuditRecord:
    try:
        fn = _EVALUATORS[case.claim_id]
    except KeyError:
        raise ConfigurationError(f"unknown claim {case.claim_id!r}") from None
    return fn(case)


def replay(record) -> AuditRecord:
    """Re-evaluate a record (or its dict form) from its stored inputs alone."""
    case = record.case if isinstance(record, AuditRecord) else AuditCase.from_dict(record["case"])
    return evaluate_case(case)


# ------------------------------------------------------------------ grids

#: (label, a, b) pool. Intervals are chosen so every derivative is finite.
FUNCTION_POOL: Tuple[Tuple[str, float, float], ...] = (
    ("exp", 0.0, 3.0),
    ("neg_log", 0.2, 4.0),
    ("sqrt", 0.1, 4.0),
    ("pow_s:0.5", 0.0, 2.0),
    ("pow_s:0.25", 0.1, 3.0),
    ("reciprocal", 0.2, 4.0),
    ("one_minus_x_pow_n:3", 0.0, 0.8),
    ("one_minus_x_pow_n:-2", 0.0, 0.8),
    ("poly:0,0,1", 0.0, 1.0),
    ("poly:1,-2,0,1", 0.0, 2.0),
    ("poly:0,0,0.5,0,-0.08333333333333333", 0.0, 1.0),
    ("pow:1.5", 0.5, 2.0),
    ("pow:2.5", 0.0, 2.0),
    ("pow:3.5", 0.5, 3.0),
)


@dataclass(frozen=True)
class GridSpec:
    name: str
    seed: int = 0
    functions: Tuple[Tuple[str, float, float], ...] = FUNCTION_POOL
    random_intervals: int = 1
    n_values: Tuple[int, ...] = (1, 2, 3, 4)
    s_values: Tuple[float, ...] = (0.25, 0.5, 0.75, 1.0)
    q_values: Tuple[float, ...] = (1.0, 1.5, 2.0, 3.0)
    lambda_modes: Tuple[str, ...] = ("a", "quarter", "mid", "random", "b")
    pieces: Tuple[int, ...] = (1, 2, 4, 8)
    pairs: int = 200
    chain_pairs: int = 1000
    jagers_points: int = 1000
    p_values: Tuple[float, ...] = (1.5, 2.0, 3.0)
    prop4_n: Tuple[int, ...] = (2, 3, -2)


GRIDS = {
    "full": GridSpec("full"),
    "small": GridSpec(
        "small",
        functions=(FUNCTION_POOL[0], FUNCTION_POOL[1], FUNCTION_POOL[8], FUNCTION_POOL[11]),
        random_intervals=0,
        n_values=(1, 2),
        s_values=(0.5, 1.0),
        q_values=(1.0, 2.0),
        lambda_modes=("a", "mid", "b"),
        pieces=(2, 4),
        pairs=10,
        chain_pairs=50,
        jagers_points=50,
        p_values=(2.0,),
        prop4_n=(2,),
    ),
}


def grid_spec(name: str = "full", seed: int = 0) -> GridSpec:
    try:
        base = GRIDS[name]
    except KeyError:
        raise ConfigurationError(f"unknown grid {name!r}; known: {', '.join(GRIDS)}") from None
    return GridSpec(**{**base.__dict__, "seed": int(seed)})


def _rng(spec: GridSpec, claim_id: str) -> np.random.Generator:
    return np.random.default_rng([spec.seed, CLAIMS.index(claim_id)])


def _supports(label: str, a: float, b: float, order: int) -> bool:
    try:
        parse_function_spec(label).require_interval(Interval(a, b), order)
    except (DomainError, ConfigurationError):
        return False
    return True


def _intervals(spec: GridSpec, rng) -> List[Tuple[str, float, float]]:
    out = []
    for label, a, b in spec.functions:
        out.append((label, a, b))
        for _ in range(spec.random_intervals):
            lo, hi = np.sort(rng.uniform(a, b, size=2))
            if hi - lo < 1e-3 * (b - a):
                hi = min(b, lo + 0.1 * (b - a))
            out.append((label, float(lo), float(hi)))
    return out


def _lambda(mode: str, a: float, b: float, rng) -> float:
    if mode == "a":
        return a
    if mode == "b":
        return b
    if mode == "mid":
        return 0.5 * (a + b)
    if mode == "quarter":
        return a + 0.25 * (b - a)
    return float(rng.uniform(a, b))


def _variants(claim_id: str) -> Tuple[str, ...]:
    if claim_id in DISCREPANT:
        return (PRINTED, CORRECTED)
    if claim_id in PRINTED_ONLY:
        return (PRINTED,)
    return (CORRECTED,)


def _positive_pairs(rng, count: int, hi: float) -> List[Tuple[float, float]]:
    raw = rng.uniform(0.0, hi, size=(count, 2))
    raw = np.where(raw <= 0.0, hi, raw)
    return [(float(min(x, y)), float(max(x, y))) for x, y in raw]


def build_cases(claim_id: str, spec: GridSpec) -> List[AuditCase]:
    if claim_id not in CLAIMS:
        raise ConfigurationError(f"unknown claim {claim_id!r}")
    rng = _rng(spec, claim_id)
    variants = _variants(claim_id)
    cases: List[AuditCase] = []

    def add(**inputs):
        for v in variants:
            cases.append(AuditCase.make(claim_id, v, **inputs))

    if claim_id in BOUND_CLAIMS or claim_id in ("t1", "q_prop1", "q_prop2"):
        fns = _intervals(spec, rng)
        s_values = (1.0,) if claim_id in ("t4", "t8", "cor2") else spec.s_values
        min_order = {"t1": 0, "q_prop1": 1, "cor1": 1, "q_prop2": 2, "cor2": 2}.get(claim_id)
        if min_order is not None:
            fns = [t for t in fns if _supports(*t, min_order)]
        if claim_id == "t1":
            for label, a, b in fns:
                for s in s_values:
                    add(fn=label, a=a, b=b, s=s)
        elif claim_id in ("q_prop1", "q_prop2"):
            for label, a, b in fns:
                for k in spec.pieces:
                    for s in s_values:
                        for q in spec.q_values:
                            add(fn=label, a=a, b=b, pieces=k, s=s, q=q)
        elif claim_id in ("cor1", "cor2"):
            for label, a, b in fns:
                for s in s_values:
                    for q in spec.q_values:
                        add(fn=label, a=a, b=b, s=s, q=q)
        else:
            for label, a, b in fns:
                for n in spec.n_values:
                    if not _supports(label, a, b, n):
                        continue
                    for s in s_values:
                        for q in spec.q_values:
                            if claim_id in hhbounds.LAMBDA_THEOREMS:
                                for mode in spec.lambda_modes:
                                    add(fn=label, a=a, b=b, lam=_lambda(mode, a, b, rng), n=n, s=s, q=q)
                            else:
                                add(fn=label, a=a, b=b, n=n, s=s, q=q)
    elif claim_id == "m_prop1":
        pairs = [(0.1, 0.2), (1.0, 2.0)] + _positive_pairs(rng, spec.pairs, 5.0)
        for a, b in pairs:
            add(a=a, b=b)
    elif claim_id == "m_prop2":
        for a, b in [(1.0, 2.0), (1.0, 10.0)] + _positive_pairs(rng, spec.pairs, 10.0):
            for p in spec.p_values:
                add(a=a, b=b, p=p)
    elif claim_id == "m_prop3":
        for a, b in [(1.0, 1.0), (1.0, 4.0), (0.5, 2.0)] + _positive_pairs(rng, spec.pairs, 10.0):
            for p in spec.p_values:
                add(a=a, b=b, p=p)
    elif claim_id == "m_prop4":
        pairs = [(0.1, 0.4), (0.2, 0.3)] + [(float(x), float(y)) for x, y in np.sort(rng.uniform(0.0, 0.9, (spec.pairs, 2)), axis=1)]
        for a, b in pairs:
            for n in spec.prop4_n:
                for s in spec.s_values:
                    for q in spec.q_values:
                        for form in ("tight", "weak"):
                            add(a=a, b=b, n=n, s=s, q=q, form=form)
    elif claim_id == "chain":
        for a, b in _positive_pairs(rng, spec.chain_pairs, 100.0):
            add(a=a, b=b)
    elif claim_id == "jagers":
        for s in np.linspace(1.0 / spec.jagers_points, 1.0, spec.jagers_points):
            add(s=float(s))
    return cases


def _run(cases: List[AuditCase], jobs: int) -> List[AuditRecord]:
    cases = sorted(cases, key=AuditCase.key)
    if jobs > 1 and len(cases) > 64:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(evaluate_case, cases, chunksize=max(1, len(cases) // (8 * jobs))))
    return [evaluate_case(c) for c in cases]


def audit_claim(claim_id: str, spec: Optional[GridSpec] = None, jobs: int = 1) -> List[AuditRecord]:
    """Evaluate every case of ``claim_id`` on ``spec`` (default: full grid, seed 0)."""
    spec = spec or grid_spec("full")
    return _run(build_cases(claim_id, spec), jobs)


def audit_all(spec: Optional[GridSpec] = None, claims: Iterable[str] = CLAIMS, jobs: int = 1) -> List[AuditRecord]:
    spec = spec or grid_spec("full")
    cases: List[AuditCase] = []
    for c in claims:
        cases.extend(build_cases(c, spec))
    return _run(cases, jobs)


def audit_means_prop1(pair, variant: str = PRINTED) -> AuditRecord:
    a, b = pair
    return evaluate_case(AuditCase.make("m_prop1", variant, a=float(a), b=float(b)))


def audit_means_prop2(pair, p: float) -> AuditRecord:
    a, b = pair
    return evaluate_case(AuditCase.make("m_prop2", PRINTED, a=float(a), b=float(b), p=float(p)))


def audit_means_prop3(pair, p: float, q: Optional[float] = None) -> AuditRecord:
    """``q`` is accepted for symmetry with the statement but must be conjugate to ``p``."""
    a, b = pair
    if q is not None and abs(1.0 / p + 1.0 / q - 1.0) > 1e-12:
        raise ConfigurationError(f"p = {p} and q = {q} are not conjugate")
    return evaluate_case(AuditCase.make("m_prop3", PRINTED, a=float(a), b=float(b), p=float(p)))


def audit_means_prop4(pair, n: int, s: float, q: float, form: str = "tight") -> AuditRecord:
    a, b = pair
    if form not in ("tight", "weak"):
        raise ConfigurationError(f"form must be 'tight' or 'weak', got {form!r}")
    return evaluate_case(
        AuditCase.make("m_prop4", PRINTED, a=float(a), b=float(b), n=int(n), s=float(s), q=float(q), form=form)
    )


def audit_summary(records: Iterable[AuditRecord]) -> Dict[str, Dict[str, Any]]:
    """Per claim and variant: counts, max tightness among holding cases, violated inputs."""
    groups: Dict[Tuple[int, str], List[AuditRecord]] = {}
    for r in records:
        groups.setdefault((CLAIMS.index(r.case.claim_id), r.case.variant), []).append(r)
    out: Dict[str, Dict[str, Any]] = {}
    for (idx, variant), recs in sorted(groups.items()):
        recs = sorted(recs, key=lambda r: r.case.key())
        holding = [r.tightness for r in recs if r.verdict == "holds"]
        out[f"{CLAIMS[idx]}/{variant}"] = {
            "claim_id": CLAIMS[idx],
            "variant": variant,
            "cases": len(recs),
            "holds": sum(r.verdict == "holds" for r in recs),
            "violations": sum(r.violated for r in recs),
            "hypothesis_unmet": sum(r.verdict == "hypothesis_unmet" for r in recs),
            "max_tightness": max(holding) if holding else None,
            "violated_inputs": [dict(r.case.inputs) for r in recs if r.violated],
        }
    return out
