"""Acceptance criteria, one test each; every test records a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py`` (lines appear in the terminal summary)
or ``python tests/test_acceptance.py``.
"""

import contextlib
import io
import itertools
import random
import sys
import time

from boundring.algebra import Polynomial, parse_polynomial
from boundring.boundedring import (
    bounded_monoid,
    intersection_monoid,
    proper_witness,
    verify_witness,
)
from boundring.cli import EXIT_INVALID, run
from boundring.completion2d import compatible_completion
from boundring.oracle import certify_unbounded, consistency_check
from boundring.polyhedra import dot, lattice_is_full
from boundring.setmodel import recession_cone, recession_cones, validate
from boundring.valuation import MonomialValuation, value

import support
from support import BOX, DIAGONAL, THREEGEN, GOLDEN, STRIP, T_SET, WEDGE, lattice_points, random_sets, representable_table

XY = ("x", "y")


def record(num: int, title: str, ok: bool, detail: str, started: float):
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'}  {title}  ({detail}; {time.perf_counter() - started:.2f}s)"
    support.ACCEPTANCE_LOG.append(line)
    print(line)
    assert ok, line


def generators(s):
    return set(bounded_monoid(s).generator_strings(XY))


def permuted_equal(m, target) -> bool:
    k = len(target)
    return len(m) == k and any(
        all(m[p[i]][p[j]] == target[i][j] for i in range(k) for j in range(k))
        for p in itertools.permutations(range(k))
    )


def test_criterion_01_strip():
    t0 = time.perf_counter()
    gens = generators(STRIP)
    report = compatible_completion(STRIP)
    rays = [b.inserted_ray for b in report.blowups]
    rng = random.Random(101)
    v = MonomialValuation((0, -1))
    bad = 0
    for _ in range(50):
        terms = {(rng.randint(0, 8), rng.randint(0, 8)): rng.choice([-4, -1, 1, 3, 7]) for _ in range(rng.randint(1, 6))}
        f = Polynomial(2, terms)
        if value(v, f) != min(-j for (_, j) in f.terms):
            bad += 1
    ok = gens == {"x"} and rays == [(0, -1)] and bad == 0
    record(1, "strip reproduction", ok, f"generators={sorted(gens)}, blow-ups={rays}, valuation mismatches={bad}/50", t0)


def test_criterion_02_t():
    t0 = time.perf_counter()
    gens = generators(T_SET)
    r = compatible_completion(T_SET)
    rays = [b.inserted_ray for b in r.blowups]
    ok = (
        gens == {"x", "x*y"}
        and rays == [(0, -1), (1, -1)]
        and set(r.touched) == {(1, -1)}
        and set(r.untouched) == {(-1, -1), (0, -1)}
        and permuted_equal(r.m_d, ((0, 1), (1, -2)))
        and r.trdeg_verdict == "two"
    )
    detail = f"generators={sorted(gens)}, blow-ups={rays}, M_D={[list(x) for x in r.m_d]}, verdict={r.trdeg_verdict}"
    record(2, "T reproduction", ok, detail, t0)


def test_criterion_03_example():
    t0 = time.perf_counter()
    gens = generators(THREEGEN)
    sigma = recession_cone(THREEGEN.tentacles[0])
    w = proper_witness(THREEGEN).witness
    strict = w is not None and all(dot(w, d) < 0 for d in sigma.rays) and not sigma.lineality
    ok = gens == {"x*y", "x^2*y", "x^2*y^3"} and strict and verify_witness((1, 1), THREEGEN)
    record(3, "worked example reproduction", ok,
           f"generators={sorted(gens)}, witness={w}, extreme directions={list(sigma.rays)}, (1,1) verified", t0)


def test_criterion_04_route_equivalence():
    t0 = time.perf_counter()
    sets = random_sets(200, seed=2024)
    mismatches = sum(compatible_completion(s).ring.basis != bounded_monoid(s).basis for s in sets)
    record(4, "route equivalence", mismatches == 0, f"{mismatches} mismatches over {len(sets)} random sets", t0)


def _cone_points(s, max_sum):
    """Lattice points e >= 0 with <e, d> <= 0 for every asymptotic direction d."""
    dirs = [d for c in recession_cones(s) for d in c.generators]
    return {e for e in lattice_points(s.n, max_sum) if all(dot(e, d) <= 0 for d in dirs)}


def test_criterion_05_brute_force_monoid():
    t0 = time.perf_counter()
    sets = list(GOLDEN.values()) + random_sets(50, seed=77)
    failures = 0
    for s in sets:
        basis = bounded_monoid(s).basis.elements
        rep = representable_table(basis, 2, 12)
        inside = _cone_points(s, 12)
        if {p for p, ok in rep.items() if ok} != inside:
            failures += 1
            continue
        for b in basis:
            others = [x for x in basis if x != b]
            if representable_table(others, 2, sum(b))[b]:
                failures += 1
                break
    record(5, "brute-force monoid oracle", failures == 0, f"{failures} failures over {len(sets)} sets, degree <= 12", t0)


def test_criterion_06_saturation():
    t0 = time.perf_counter()
    sets = list(GOLDEN.values()) + [BOX, WEDGE] + random_sets(50, seed=78)
    violations = 0
    for s in sets:
        basis = bounded_monoid(s).basis.elements
        rep = representable_table(basis, 2, 32)
        for e in lattice_points(2, 8):
            for k in range(1, 5):
                if rep[tuple(k * x for x in e)] and not rep[e]:
                    violations += 1
    record(6, "saturation", violations == 0, f"{violations} violations over {len(sets)} monoids, k <= 4, |e| <= 8", t0)


def test_criterion_07_union_law():
    t0 = time.perf_counter()
    direct = bounded_monoid(STRIP.union(T_SET)).generator_strings(XY)
    rng = random.Random(79)
    bad = 0
    for _ in range(50):
        a, b = support.random_set(rng), support.random_set(rng)
        if bounded_monoid(a.union(b)).basis != intersection_monoid([a, b]).basis:
            bad += 1
    ok = direct == ["x"] and bad == 0
    record(7, "union law", ok, f"B(strip u T) = R[{', '.join(direct)}], {bad} mismatches over 50 pairs", t0)


def test_criterion_08_diagnostics():
    t0 = time.perf_counter()
    d = validate(DIAGONAL)
    text = "vars x, y; set D = { |x| <= |y| and |y| <= |x| };"
    sink = io.StringIO()
    with contextlib.redirect_stdout(sink), contextlib.redirect_stderr(sink):
        code = run(["diagnose", "-e", text])
        code_ring = run(["ring", "-e", text])
    b = validate(BOX)
    box_basis = bounded_monoid(BOX).basis.elements
    ok = (
        d.noetherian_obstruction
        and any("B_V(S) is not noetherian" in m for m in d.messages)
        and code == EXIT_INVALID
        and code_ring == EXIT_INVALID
        and not b.unbounded
        and not b.noetherian_obstruction
        and box_basis == ((1, 0), (0, 1))
    )
    record(8, "diagnostics", ok,
           f"diagonal obstruction={d.noetherian_obstruction} exit={code_ring}; box unbounded={b.unbounded} basis={list(box_basis)}", t0)


def test_criterion_09_compatibility():
    t0 = time.perf_counter()
    wedge = compatible_completion(WEDGE)
    strip = compatible_completion(STRIP)
    ok = len(wedge.blowups) == 0 and wedge.ring.basis.elements == () and len(strip.blowups) == 1
    record(9, "compatibility criterion", ok,
           f"wedge blow-ups={len(wedge.blowups)} B=R, strip blow-ups={len(strip.blowups)}", t0)


def test_criterion_10_oracle_consistency():
    t0 = time.perf_counter()
    counts = {}
    for name, s in GOLDEN.items():
        rep = consistency_check(s, 6)
        counts[name] = len(rep.disagreements)
    y = certify_unbounded(parse_polynomial("y", XY), STRIP, (0, 1)).unbounded_certified
    xy = certify_unbounded(parse_polynomial("x*y", XY), T_SET).unbounded_certified
    ok = all(c == 0 for c in counts.values()) and y and not xy
    record(10, "oracle consistency", ok, f"disagreements={counts}, y on strip certified={y}, xy on T certified={xy}", t0)


def test_criterion_11_four_conditions():
    t0 = time.perf_counter()
    violations = 0
    for s in random_sets(100, seed=80):
        m = bounded_monoid(s)
        a = m.trdeg == 2
        b = lattice_is_full(m.basis.elements, 2)
        c = proper_witness(s).witness is not None
        if not (a == b == c):
            violations += 1
    record(11, "trdeg / lattice / witness equivalence", violations == 0, f"{violations} violations over 100 sets", t0)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
