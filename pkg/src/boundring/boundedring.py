"""The direct route: B(S) as the monoid algebra of a dual cone.

For a valid set, x^e is bounded on S exactly when ``<e, d> <= 0`` for every
asymptotic direction d of every tentacle, and a polynomial is bounded exactly
when all of its monomials are.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from functools import reduce
from typing import Sequence

from .algebra import ExponentVector, Polynomial, format_monomial
from .polyhedra import (
    HilbertBasis,
    LatticeCone,
    dot,
    hilbert_basis,
    intersect,
    lattice_contains,
    lattice_rank,
    relative_interior_point,
)
from .setmodel import SetSpec, recession_cones, require_valid


@dataclass(frozen=True)
class BoundedMonoid:
    basis: HilbertBasis
    dual_data: LatticeCone
    trdeg: int

    def contains(self, e: Sequence[int]) -> bool:
        return all(x >= 0 for x in e) and self.dual_data.contains(e)

    def generator_strings(self, variables: Sequence[str]) -> list[str]:
        return [format_monomial(e, variables) for e in self.basis.elements]


@dataclass(frozen=True)
class MembershipVerdict:
    bounded: bool
    violating_exponent: ExponentVector | None = None
    violating_direction: tuple[int, ...] | None = None
    per_divisor_values: dict = field(default_factory=dict)


@dataclass(frozen=True)
class WitnessResult:
    witness: ExponentVector | None
    reason: str


def exponent_cone(s: SetSpec) -> LatticeCone:
    """Orthant intersected with the dual of the sum of all recession cones."""
    cones = recession_cones(s)
    n = s.n
    normals = [tuple(-int(i == j) for j in range(n)) for i in range(n)]
    for c in cones:
        normals.extend(c.generators)
    return LatticeCone.from_normals(n, normals)


def monoid_from_cone(cone: LatticeCone) -> BoundedMonoid:
    hb = hilbert_basis(cone)
    return BoundedMonoid(hb, cone, lattice_rank(hb.elements))


def bounded_monoid(s: SetSpec) -> BoundedMonoid:
    require_valid(s)
    return monoid_from_cone(exponent_cone(s))


def intersection_monoid(parts: Sequence[SetSpec]) -> BoundedMonoid:
    """Monoid of the union computed as an intersection of the parts' exponent cones."""
    cones = [exponent_cone(p) for p in parts]
    for p in parts:
        require_valid(p)
    return monoid_from_cone(reduce(intersect, cones))


def _divisor_weights(s: SetSpec) -> list[tuple[int, ...]]:
    seen = []
    for c in recession_cones(s):
        for d in c.generators:
            if any(x > 0 for x in d):
                w = tuple(-x for x in d)
                if w not in seen:
                    seen.append(w)
    return sorted(seen)


def is_bounded(f: Polynomial, s: SetSpec) -> MembershipVerdict:
    require_valid(s)
    if f.n != s.n:
        raise ValueError("polynomial and set live in different dimensions")
    cones = recession_cones(s)
    weights = _divisor_weights(s)
    values = {
        w: (min(dot(w, e) for e in f.terms) if f.terms else None) for w in weights
    }
    for e in sorted(f.terms, key=lambda e: (sum(e), e)):
        best = None
        for c in cones:
            for d in c.generators:
                p = dot(e, d)
                if p > 0 and (best is None or p > best[0] or (p == best[0] and d < best[1])):
                    best = (p, d)
        if best is not None:
            return MembershipVerdict(False, e, best[1], values)
    return MembershipVerdict(True, None, None, values)


def trdeg(s: SetSpec) -> int:
    return bounded_monoid(s).trdeg


def fraction_field_contains(e: Sequence[int], s: SetSpec) -> bool:
    """Is the monomial x^e in the fraction field of B(S)?"""
    if any(x < 0 for x in e):
        raise ValueError("exponent must be nonnegative")
    m = bounded_monoid(s)
    return lattice_contains(m.basis.elements, tuple(e))


def verify_witness(e: Sequence[int], s: SetSpec) -> bool:
    """x^e is bounded and strictly decays along every asymptotic direction."""
    e = tuple(e)
    if any(x < 0 for x in e) or not any(e):
        return False
    for c in recession_cones(s):
        if c.lineality:
            return False
        if any(dot(e, d) >= 0 for d in c.rays):
            return False
    return True


def proper_witness(s: SetSpec) -> WitnessResult:
    require_valid(s)
    cone = exponent_cone(s)
    if cone.dimension() < s.n:
        return WitnessResult(None, "trdeg < n: no such h exists")
    p = relative_interior_point(cone)
    g = reduce(gcd, p, 0)
    e = tuple(x // g for x in p)
    if not verify_witness(e, s):
        raise AssertionError(f"interior point {e} failed strict verification")
    return WitnessResult(e, "interior point of the exponent cone, strict on every direction")
