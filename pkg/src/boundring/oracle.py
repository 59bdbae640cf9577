"""Numeric certification of unboundedness along monomial curves.

Along ``x_i(t) = s_i * exp(u0_i + t d_i)`` with u0 in the log polyhedron and
d an asymptotic direction the curve stays in the tentacle, so growth of |f|
there proves f unbounded.  Values are computed in interval arithmetic and a
certificate only uses lower bounds, so the oracle can under-certify but never
over-certify.
"""

from __future__ import annotations

import itertools
from contextlib import contextmanager
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np
from scipy.optimize import linprog

from .algebra import Polynomial
from .boundedring import is_bounded
from .setmodel import SetSpec, SignRegime, Tentacle, recession_cone, require_valid

iv = mpmath.iv


def _rational(q: Fraction):
    """Enclosing interval of an exact rational."""
    q = Fraction(q)
    return iv.mpf(q.numerator) / q.denominator


@contextmanager
def _working_precision(bits: int):
    old = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = old


@dataclass(frozen=True)
class OracleParams:
    scales: int = 40
    threshold: float = 1e6
    ratio: Fraction = Fraction(3, 2)
    window: int = 5
    precision: int = 160


@dataclass(frozen=True)
class CurveSpec:
    direction: tuple
    offset: tuple
    signs: tuple[int, ...]
    schedule: tuple[int, ...]


@dataclass
class GrowthVerdict:
    unbounded_certified: bool
    max_abs: mpmath.mpf
    trace: list = field(default_factory=list)
    curve: CurveSpec | None = None


def log_offset(t: Tentacle) -> tuple[Fraction, ...]:
    """A strictly interior point of the log polyhedron.

    Maximizes a uniform slack r <= log 2 (the slack of halving every
    constant), then checks the rounded point in interval arithmetic.
    """
    rows = [(c.normal, c.bound) for c in t.constraints if any(c.normal)]
    n = t.n
    if not rows:
        return (Fraction(0),) * n
    A = np.array([list(a) + [1.0] for a, _ in rows], dtype=float)
    b = np.array([math.log(C) for _, C in rows])
    cost = np.zeros(n + 1)
    cost[-1] = -1.0
    bounds = [(-50, 50)] * n + [(None, math.log(2))]
    res = linprog(cost, A_ub=A, b_ub=b, bounds=bounds, method="highs")
    if res.status != 0 or res.x[-1] <= 0:
        raise ValueError("log polyhedron has no interior point")
    u0 = tuple(Fraction(float(x)).limit_denominator(10**6) for x in res.x[:n])
    with _working_precision(OracleParams.precision):
        for a, C in rows:
            lhs = sum(iv.mpf(int(ai)) * _rational(x) for ai, x in zip(a, u0))
            if not (lhs < iv.log(_rational(C))):
                raise ValueError("rounded interior point left the log polyhedron")
    return u0


def _abs_lower(x) -> mpmath.mpf:
    a, b = x.a, x.b
    if a <= 0 <= b:
        return mpmath.mpf(0)
    return min(abs(mpmath.mpf(a)), abs(mpmath.mpf(b)))


def _abs_upper(x) -> mpmath.mpf:
    return max(abs(mpmath.mpf(x.a)), abs(mpmath.mpf(x.b)))


def _eval_on_curve(f: Polynomial, curve: CurveSpec, t: int):
    coords = []
    for s, u, d in zip(curve.signs, curve.offset, curve.direction):
        arg = _rational(u) + t * iv.mpf(int(d))
        coords.append(s * iv.exp(arg))
    total = iv.mpf(0)
    for e, c in f.terms.items():
        term = _rational(c)
        for x, k in zip(coords, e):
            if k:
                term = term * x**k
        total = total + term
    return total


def sample_curve(f: Polynomial, curve: CurveSpec, params: OracleParams = OracleParams()) -> GrowthVerdict:
    lowers, uppers = [], []
    with _working_precision(params.precision):
        for t in curve.schedule:
            val = _eval_on_curve(f, curve, t)
            lowers.append(_abs_lower(val))
            uppers.append(_abs_upper(val))
    m = params.window
    certified = False
    if len(lowers) > m:
        tail = range(len(lowers) - m, len(lowers))
        rho = mpmath.mpf(params.ratio.numerator) / params.ratio.denominator
        certified = lowers[-1] > params.threshold and all(
            lowers[k] >= rho * uppers[k - 1] for k in tail
        )
    return GrowthVerdict(certified, max(uppers) if uppers else mpmath.mpf(0), lowers, curve)


def _curves(t: Tentacle, direction, params: OracleParams):
    u0 = log_offset(t)
    schedule = tuple(2**k for k in range(params.scales + 1))
    if t.sign_regime == SignRegime.POSITIVE:
        sign_sets = [(1,) * t.n]
    else:
        sign_sets = list(itertools.product((1, -1), repeat=t.n))
    for signs in sign_sets:
        yield CurveSpec(tuple(direction), u0, signs, schedule)


def certify_unbounded(
    f: Polynomial,
    s: SetSpec,
    hint: Sequence[int] | None = None,
    params: OracleParams = OracleParams(),
) -> GrowthVerdict:
    """Try to prove f unbounded on s; a negative answer proves nothing."""
    require_valid(s)
    best = GrowthVerdict(False, mpmath.mpf(0), [])
    for t in s.tentacles:
        cone = recession_cone(t)
        if hint is not None:
            if not cone.contains(hint):
                continue
            directions = [tuple(hint)]
        else:
            directions = list(cone.generators)
        for d in directions:
            for curve in _curves(t, d, params):
                v = sample_curve(f, curve, params)
                if v.unbounded_certified:
                    return v
                if v.max_abs >= best.max_abs:
                    best = v
    if not best.trace:
        # no asymptotic direction anywhere: report |f| at an interior point
        t = s.tentacles[0]
        curve = CurveSpec((0,) * s.n, log_offset(t), (1,) * s.n, (0,))
        best = sample_curve(f, curve, params)
    return best


@dataclass
class ConsistencyReport:
    checked: int
    disagreements: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def _monomials(n: int, degree_bound: int):
    for deg in range(degree_bound + 1):
        for e in itertools.product(range(deg + 1), repeat=n):
            if sum(e) == deg:
                yield e


def consistency_check(s: SetSpec, degree_bound: int, params: OracleParams = OracleParams()) -> ConsistencyReport:
    """Compare symbolic membership with the oracle on every monomial up to the degree bound."""
    require_valid(s)
    report = ConsistencyReport(0)
    for e in _monomials(s.n, degree_bound):
        f = Polynomial.monomial(e)
        verdict = is_bounded(f, s)
        report.checked += 1
        if verdict.bounded:
            g = certify_unbounded(f, s, None, params)
            if g.unbounded_certified:
                report.disagreements.append((e, "bounded symbolically, certified unbounded"))
        else:
            g = certify_unbounded(f, s, verdict.violating_direction, params)
            if not g.unbounded_certified:
                report.disagreements.append((e, "unbounded symbolically, oracle did not certify"))
    return report
