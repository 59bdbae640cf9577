"""Shared fixtures: golden sets, random set generators and brute-force oracles."""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import numpy as np
from hypothesis import assume, strategies as st
from scipy.optimize import linprog

from boundring.dsl import parse_set
from boundring.setmodel import MonomialConstraint, SetSpec, Tentacle, validate

STRIP = parse_set("vars x, y; set strip = { |x| <= 1 };")
T_SET = parse_set("vars x, y; set T = { |x| <= 1 and |x*y| <= 1 };")
THREEGEN = parse_set("vars x, y; set S = { |x^2*y| <= 1 and |x^2*y^3| <= 1 };")
DIAGONAL = parse_set("vars x, y; set D = { |x| <= |y| and |y| <= |x| };")
BOX = parse_set("vars x, y; set box = { |x| <= 1 and |y| <= 1 };")
WEDGE = parse_set("vars x, y; set wedge = { |y| <= |x| };")

GOLDEN = {"strip": STRIP, "T": T_SET, "threegen": THREEGEN}

BOUNDS = (Fraction(1, 2), Fraction(1), Fraction(2))


def random_set(rng: random.Random, n: int = 2, tentacles=(1, 3), constraints=(1, 3), entry=4) -> SetSpec:
    """Random valid set; resamples until validation passes."""
    while True:
        ts = []
        for _ in range(rng.randint(*tentacles)):
            cons = []
            for _ in range(rng.randint(*constraints)):
                a = (0,) * n
                while not any(a):
                    a = tuple(rng.randint(-entry, entry) for _ in range(n))
                cons.append(MonomialConstraint.from_normal(a, rng.choice(BOUNDS)))
            ts.append(Tentacle(tuple(cons), n))
        s = SetSpec(tuple(ts), n)
        if validate(s).ok:
            return s


def random_sets(count: int, seed: int, **kw) -> list[SetSpec]:
    rng = random.Random(seed)
    return [random_set(rng, **kw) for _ in range(count)]


@st.composite
def valid_sets(draw, n: int = 2, max_tentacles: int = 3, max_constraints: int = 3, entry: int = 4):
    """Hypothesis strategy for valid sets; invalid draws are filtered out."""
    normal = st.tuples(*[st.integers(-entry, entry)] * n).filter(any)
    constraint = st.builds(MonomialConstraint.from_normal, normal, st.sampled_from(BOUNDS))
    tentacle = st.lists(constraint, min_size=1, max_size=max_constraints).map(
        lambda cs: Tentacle(tuple(cs), n)
    )
    ts = draw(st.lists(tentacle, min_size=1, max_size=max_tentacles))
    s = SetSpec(tuple(ts), n)
    assume(validate(s).ok)
    return s


# -- independent oracles ---------------------------------------------------------


def lp_monomial_bounded(e, s: SetSpec) -> bool:
    """Is <e, u> bounded above on every log polyhedron?  Decided by a floating LP."""
    # HiGHS presolve can report an unbounded problem as infeasible
    for t in s.tentacles:
        rows = [c.normal for c in t.constraints if any(c.normal)]
        if not rows:
            if any(e):
                return False
            continue
        A = np.array(rows, dtype=float)
        b = np.array([math.log(c.bound) for c in t.constraints if any(c.normal)])
        res = linprog(-np.array(e, dtype=float), A_ub=A, b_ub=b,
                      bounds=[(None, None)] * s.n, method="highs", options={"presolve": False})
        if res.status == 3:
            return False
        assert res.status == 0, res.message
    return True


def lattice_points(n: int, max_sum: int):
    for e in itertools.product(range(max_sum + 1), repeat=n):
        if sum(e) <= max_sum:
            yield e


def representable_table(basis, n: int, max_sum: int) -> dict:
    """Which points of the box are nonnegative integer combinations of the basis."""
    pts = sorted(lattice_points(n, max_sum), key=sum)
    rep = {}
    for p in pts:
        if not any(p):
            rep[p] = True
            continue
        rep[p] = any(
            all(pi >= bi for pi, bi in zip(p, b)) and rep[tuple(pi - bi for pi, bi in zip(p, b))]
            for b in basis
        )
    return rep


def lp_slack(rows, n: int) -> float:
    """max r with <a, u> + r <= log C for all rows, r capped at 1."""
    A = np.array([list(a) + [1.0] for a, _ in rows], dtype=float)
    b = np.array([math.log(C) for _, C in rows])
    c = np.zeros(n + 1)
    c[-1] = -1
    res = linprog(c, A_ub=A, b_ub=b, bounds=[(None, None)] * n + [(None, 1.0)], method="highs", options={"presolve": False})
    assert res.status == 0, res.message
    return float(res.x[-1])


# lines printed by the acceptance suite at the end of the session
ACCEPTANCE_LOG: list[str] = []
