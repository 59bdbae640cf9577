"""Monomial valuations v_w(f) = min <w, e> over the support of f."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import Polynomial
from .polyhedra import dot, is_primitive
from .setmodel import SetSpec, recession_cones


@dataclass(frozen=True)
class MonomialValuation:
    weight: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weight)
        if not is_primitive(w):
            raise ValueError(f"weight {w} must be nonzero and primitive")
        object.__setattr__(self, "weight", w)


def value(v: MonomialValuation, f: Polynomial) -> int | float:
    """Integer valuation, ``math.inf`` for the zero polynomial."""
    if len(v.weight) != f.n:
        raise ValueError("weight and polynomial dimensions differ")
    if f.is_zero():
        return math.inf
    return min(dot(v.weight, e) for e in f.terms)


def is_regular_along(v: MonomialValuation, f: Polynomial) -> bool:
    return value(v, f) >= 0


def compatible_with(v: MonomialValuation, s: SetSpec) -> bool:
    """The divisor of ``v`` is met densely by S: ``-w`` is an asymptotic direction."""
    neg = tuple(-x for x in v.weight)
    return any(c.contains(neg) for c in recession_cones(s))
