"""Toric completions of the affine plane compatible with a tentacle set.

A smooth complete fan in Z^2 containing (1,0) and (0,1) is a completion of
A^2; every other ray has a negative coordinate and is a divisor at infinity.
Blowing up a torus-fixed point inserts the sum of the two rays of a cone.

A curve with log-direction d escapes towards the orbit of the fan cone whose
relative interior contains -d, so the closure of S meets the divisor of a
ray w densely iff -w is an asymptotic direction of some tentacle, and misses
it iff no negated asymptotic direction lies in the open star of w.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .boundedring import BoundedMonoid, monoid_from_cone
from .polyhedra import LatticeCone, dot, intersect, is_primitive
from .setmodel import SetSpec, recession_cones, require_valid

Ray = tuple[int, int]


class CrossCheckError(RuntimeError):
    """Two independent computations disagree; indicates an engine bug."""


def det(a: Sequence[int], b: Sequence[int]) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _half(v: Ray) -> int:
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def angle_key(v: Ray):
    """Exact counter-clockwise angle order starting at (1, 0)."""
    h = _half(v)
    # cotangent-like comparison within a half plane
    return (h, Fraction(-v[0], abs(v[0]) + abs(v[1])) if h == 0 else Fraction(v[0], abs(v[0]) + abs(v[1])))


def sort_by_angle(rays):
    return sorted(rays, key=angle_key)


@dataclass(frozen=True)
class Fan2D:
    rays: tuple[Ray, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        order = sorted(range(len(self.rays)), key=lambda i: angle_key(self.rays[i]))
        object.__setattr__(self, "rays", tuple(tuple(self.rays[i]) for i in order))
        object.__setattr__(self, "labels", tuple(self.labels[i] for i in order))

    def cones(self) -> list[tuple[Ray, Ray]]:
        k = len(self.rays)
        return [(self.rays[i], self.rays[(i + 1) % k]) for i in range(k)]

    def neighbors(self, i: int) -> tuple[Ray, Ray]:
        k = len(self.rays)
        return self.rays[(i - 1) % k], self.rays[(i + 1) % k]

    def label(self, ray: Ray) -> str:
        return self.labels[self.rays.index(tuple(ray))]

    def is_smooth(self) -> bool:
        return all(det(a, b) == 1 for a, b in self.cones())

    def is_complete(self) -> bool:
        """Consecutive cones are strictly convex and wind exactly once."""
        if len(self.rays) < 3 or any(det(a, b) <= 0 for a, b in self.cones()):
            return False
        # every step turns left and the total turn is one full circle
        turns = sum(1 for a, b in self.cones() if angle_key(b) <= angle_key(a))
        return turns == 1

    def self_intersection(self, i: int) -> int:
        """c with u_prev + u_next = -c u_i."""
        u = self.rays[i]
        p, q = self.neighbors(i)
        s = (p[0] + q[0], p[1] + q[1])
        k = 0 if u[0] else 1
        c = -Fraction(s[k], u[k])
        if c.denominator != 1 or (s[0] != -c * u[0] or s[1] != -c * u[1]):
            raise CrossCheckError(f"neighbors of {u} do not satisfy the smoothness relation")
        return int(c)


@dataclass(frozen=True)
class BlowupStep:
    inserted_ray: Ray
    parent_cone: tuple[Ray, Ray]
    label: str


@dataclass(frozen=True)
class DivisorRecord:
    ray: Ray
    at_infinity: bool
    touched: bool
    self_intersection: int
    label: str


@dataclass(frozen=True)
class CompletionReport:
    fan: Fan2D
    blowups: tuple[BlowupStep, ...]
    divisors: tuple[DivisorRecord, ...]
    ring: BoundedMonoid
    m_d: tuple[tuple[int, ...], ...]
    trdeg_verdict: str

    @property
    def touched(self) -> list[Ray]:
        return [d.ray for d in self.divisors if d.touched]

    @property
    def untouched(self) -> list[Ray]:
        return [d.ray for d in self.divisors if d.at_infinity and not d.touched]


def initial_fan() -> Fan2D:
    return Fan2D(((1, 0), (0, 1), (-1, -1)), ("x=0", "y=0", "L"))


def insert_ray(fan: Fan2D, target: Sequence[int]) -> tuple[Fan2D, list[BlowupStep]]:
    """Stellar-subdivide until ``target`` is a ray of the fan."""
    target = tuple(int(x) for x in target)
    if len(target) != 2 or not is_primitive(target):
        raise ValueError(f"target {target} must be a nonzero primitive vector in Z^2")
    steps: list[BlowupStep] = []
    count = sum(1 for l in fan.labels if l.startswith("E"))
    while target not in fan.rays:
        for a, b in fan.cones():
            if det(a, target) >= 0 and det(target, b) >= 0:
                break
        else:  # pragma: no cover - complete fans cover the plane
            raise CrossCheckError("target not covered by the fan")
        new = (a[0] + b[0], a[1] + b[1])
        count += 1
        label = f"E{count}"
        steps.append(BlowupStep(new, (a, b), label))
        fan = Fan2D(fan.rays + (new,), fan.labels + (label,))
    return fan, steps


def _side_inside(cone: LatticeCone, r: Ray, q: Ray) -> bool:
    """Is r + eps*q in the cone for all small eps > 0 (with r in the cone)?"""
    for a in cone.facets:
        ar = dot(a, r)
        if ar > 0 or (ar == 0 and dot(a, q) > 0):
            return False
    return all(dot(b, r) == 0 and dot(b, q) == 0 for b in cone.equations)


def boundary_rays(cones: Sequence[LatticeCone]) -> list[Ray]:
    """Rays on the angular boundary of the union of planar cones."""
    candidates = {g for c in cones for g in c.generators}
    out = []
    for r in candidates:
        ccw = (-r[1], r[0])
        cw = (r[1], -r[0])
        inside = [c for c in cones if c.contains(r)]
        if not inside:
            continue
        left = any(_side_inside(c, r, ccw) for c in inside)
        right = any(_side_inside(c, r, cw) for c in inside)
        if not (left and right):
            out.append(r)
    return sort_by_angle(out)


def meets_open_star(cone: LatticeCone, fan: Fan2D, i: int) -> bool:
    """Does the cone meet the ray i or the open 2-cones adjacent to it?"""
    w = fan.rays[i]
    if cone.contains(w):
        return True
    p, q = fan.neighbors(i)
    for a, b in ((p, w), (w, q)):
        piece = intersect(cone, LatticeCone.from_generators(2, [a, b]))
        if piece.is_zero():
            continue
        mid = tuple(sum(col) for col in zip(*piece.rays))
        if det(a, mid) > 0 and det(mid, b) > 0:
            return True
    return False


def _negated(c: LatticeCone) -> LatticeCone:
    return LatticeCone.from_generators(c.n, [tuple(-x for x in g) for g in c.generators])


def compatible_completion(s: SetSpec) -> CompletionReport:
    if s.n != 2:
        raise ValueError("the completion route is planar only (n = 2)")
    require_valid(s)
    neg = [_negated(c) for c in recession_cones(s)]

    fan = initial_fan()
    blowups: list[BlowupStep] = []
    for r in boundary_rays(neg):
        if r[0] < 0 or r[1] < 0:
            fan, steps = insert_ray(fan, r)
            blowups.extend(steps)

    divisors = []
    for i, w in enumerate(fan.rays):
        at_inf = w[0] < 0 or w[1] < 0
        touched = at_inf and any(c.contains(w) for c in neg)
        if at_inf and not touched and any(meets_open_star(c, fan, i) for c in neg):
            raise CrossCheckError(f"divisor {fan.labels[i]} {w} is met but not densely")
        divisors.append(DivisorRecord(w, at_inf, touched, fan.self_intersection(i), fan.labels[i]))

    normals = [(-1, 0), (0, -1)] + [tuple(-x for x in d.ray) for d in divisors if d.touched]
    ring = monoid_from_cone(LatticeCone.from_normals(2, normals))
    m_d = _matrix(fan, divisors)
    verdict = definiteness_verdict(m_d, ring.trdeg)
    return CompletionReport(fan, tuple(blowups), tuple(divisors), ring, m_d, verdict)


def _matrix(fan: Fan2D, divisors: Sequence[DivisorRecord]) -> tuple[tuple[int, ...], ...]:
    idx = [i for i, d in enumerate(divisors) if d.at_infinity and not d.touched]
    k = len(fan.rays)
    rows = []
    for i in idx:
        row = []
        for j in idx:
            if i == j:
                row.append(divisors[i].self_intersection)
            else:
                row.append(1 if (i - j) % k in (1, k - 1) else 0)
        rows.append(tuple(row))
    return tuple(rows)


def intersection_matrix(report: CompletionReport) -> tuple[tuple[int, ...], ...]:
    return _matrix(report.fan, report.divisors)


def inertia(m: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a symmetric rational matrix.

    Diagonalizes by congruence over the rationals, so the counts are exact.
    """
    a = [[Fraction(x) for x in row] for row in m]
    size = len(a)
    for row in a:
        if len(row) != size:
            raise ValueError("matrix must be square")
    for i in range(size):
        for j in range(size):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix must be symmetric")
    pos = neg = 0
    k = 0
    while k < size:
        piv = next((i for i in range(k, size) if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, size) for j in range(i + 1, size) if a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # row/col i += row/col j makes a[i][i] = 2 a[i][j]
            for t in range(size):
                a[i][t] += a[j][t]
            for t in range(size):
                a[t][i] += a[t][j]
            piv = i
        a[k], a[piv] = a[piv], a[k]
        for row in a:
            row[k], row[piv] = row[piv], row[k]
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, size):
            f = a[i][k] / p
            if f:
                for t in range(k, size):
                    a[i][t] -= f * a[k][t]
        for i in range(k + 1, size):
            a[k][i] = Fraction(0)
            a[i][k] = Fraction(0)
        k += 1
    return pos, neg, size - pos - neg


def definiteness_verdict(m: Sequence[Sequence[int]], monoid_trdeg: int | None = None) -> str:
    """'zero' for negative definite, 'two' with a positive eigenvalue, else 'inconclusive'."""
    pos, neg, _ = inertia(m)
    if neg == len(m):
        verdict = "zero"
    elif pos > 0:
        verdict = "two"
    else:
        verdict = "inconclusive"
    if monoid_trdeg is not None:
        if (verdict == "zero" and monoid_trdeg != 0) or (verdict == "two" and monoid_trdeg != 2):
            raise CrossCheckError(
                f"intersection matrix says trdeg {verdict} but the monoid has trdeg {monoid_trdeg}"
            )
    return verdict
