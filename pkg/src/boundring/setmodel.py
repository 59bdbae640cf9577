"""Tentacle sets: finite unions of regions cut out by monomial inequalities.

A constraint ``|x^alpha| <= C |x^beta|`` becomes ``<alpha - beta, u> <= log C``
in the coordinates ``u_i = log|x_i|``.  Points on coordinate hyperplanes are
taken as limits of the torus part, so a tentacle is the closure of its
intersection with the torus ``(R^*)^n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import ExponentVector, check_exponent, default_variables
from .polyhedra import (
    LatticeCone,
    MultiplicativeSystem,
    feasible,
    full_dimensional,
    implicit_equality_rank,
)


class SignRegime(str, enum.Enum):
    ABSOLUTE = "absolute"
    POSITIVE = "positive-orthant"


class ValidationError(ValueError):
    """The set is outside the class the ring engine handles."""

    def __init__(self, diagnostics: DensityDiagnostics):
        super().__init__("; ".join(diagnostics.messages) or "invalid set")
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class MonomialConstraint:
    alpha: ExponentVector
    beta: ExponentVector
    bound: Fraction = Fraction(1)

    def __post_init__(self):
        alpha = tuple(check_exponent(int(x)) for x in self.alpha)
        beta = tuple(check_exponent(int(x)) for x in self.beta)
        if len(alpha) != len(beta):
            raise ValueError("alpha and beta must have the same length")
        if any(x < 0 for x in alpha + beta):
            raise ValueError("constraint exponents must be nonnegative")
        bound = Fraction(self.bound)
        if bound <= 0:
            raise ValueError("constraint bound must be positive")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "bound", bound)

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def normal(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.alpha, self.beta))

    @classmethod
    def from_normal(cls, normal: Sequence[int], bound=1) -> MonomialConstraint:
        """Constraint with the given log-space normal, split into positive parts."""
        alpha = tuple(max(x, 0) for x in normal)
        beta = tuple(max(-x, 0) for x in normal)
        return cls(alpha, beta, Fraction(bound))


@dataclass(frozen=True)
class Tentacle:
    constraints: tuple[MonomialConstraint, ...]
    n: int
    sign_regime: SignRegime = SignRegime.ABSOLUTE

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        object.__setattr__(self, "sign_regime", SignRegime(self.sign_regime))
        for c in self.constraints:
            if c.n != self.n:
                raise ValueError(f"constraint has {c.n} variables, tentacle has {self.n}")


@dataclass(frozen=True)
class SetSpec:
    tentacles: tuple[Tentacle, ...]
    n: int
    variables: tuple[str, ...] = ()
    name: str = "S"

    def __post_init__(self):
        object.__setattr__(self, "tentacles", tuple(self.tentacles))
        if not self.tentacles:
            raise ValueError("a set needs at least one tentacle")
        if any(t.n != self.n for t in self.tentacles):
            raise ValueError("all tentacles must share the variable count")
        if not self.variables:
            object.__setattr__(self, "variables", default_variables(self.n))
        elif len(self.variables) != self.n:
            raise ValueError("variable names do not match n")
        object.__setattr__(self, "variables", tuple(self.variables))

    def union(self, other: SetSpec) -> SetSpec:
        if other.n != self.n:
            raise ValueError("cannot unite sets in different dimensions")
        return SetSpec(self.tentacles + other.tentacles, self.n, self.variables,
                       f"{self.name}|{other.name}")

    @classmethod
    def single(cls, constraints, n: int, regime=SignRegime.ABSOLUTE, **kw) -> SetSpec:
        return cls((Tentacle(tuple(constraints), n, regime),), n, **kw)


@dataclass(frozen=True)
class DensityDiagnostics:
    zariski_dense_at_infinity: bool
    unbounded: bool
    conductor_zero: bool
    noetherian_obstruction: bool
    messages: tuple[str, ...] = ()
    feasible: tuple[bool, ...] = ()
    full_dimensional: tuple[bool, ...] = ()
    log_dimension: tuple[int, ...] = ()

    @property
    def ok(self) -> bool:
        """All tentacles feasible and full-dimensional."""
        return all(self.feasible) and all(self.full_dimensional)

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "zariski_dense_at_infinity": self.zariski_dense_at_infinity,
            "unbounded": self.unbounded,
            "conductor_zero": self.conductor_zero,
            "noetherian_obstruction": self.noetherian_obstruction,
            "feasible": list(self.feasible),
            "full_dimensional": list(self.full_dimensional),
            "log_dimension": list(self.log_dimension),
            "messages": list(self.messages),
        }


def log_model(t: Tentacle) -> MultiplicativeSystem:
    """One row ``(alpha - beta, C)`` per constraint.

    The model does not depend on the sign chamber: in the absolute regime
    every chamber maps onto the same log polyhedron.
    """
    return MultiplicativeSystem(t.n, tuple((c.normal, c.bound) for c in t.constraints))


@lru_cache(maxsize=4096)
def recession_cone(t: Tentacle) -> LatticeCone:
    if not feasible(log_model(t)):
        raise ValueError("recession cone of an empty tentacle")
    return _recession(t)


def _recession(t: Tentacle) -> LatticeCone:
    return LatticeCone.from_normals(t.n, [c.normal for c in t.constraints if any(c.normal)])


def escapes_to_infinity(cone: LatticeCone) -> bool:
    """Does the cone contain a direction in which some |x_i| grows?"""
    return any(any(x > 0 for x in g) for g in cone.generators)


@lru_cache(maxsize=4096)
def validate(s: SetSpec) -> DensityDiagnostics:
    """Per-tentacle checks plus the set-level density findings.

    A tentacle is unbounded when its recession cone has a direction with a
    positive coordinate.  The set is Zariski dense at infinity when some
    full-dimensional tentacle is unbounded; if the set is unbounded but not
    dense at infinity its ring is not noetherian.
    """
    messages = []
    feas, fulldim, dims = [], [], []
    unbounded_full = unbounded_thin = False
    for i, t in enumerate(s.tentacles):
        sys = log_model(t)
        f = feasible(sys)
        fd = f and full_dimensional(sys)
        feas.append(f)
        fulldim.append(fd)
        if not f:
            dims.append(-1)
            messages.append(f"tentacle {i + 1}: log model is empty (tentacle misses the torus)")
            continue
        dims.append(s.n - implicit_equality_rank(sys))
        if not fd:
            messages.append(
                f"tentacle {i + 1}: log polyhedron has dimension {dims[-1]} < {s.n}"
            )
        if escapes_to_infinity(_recession(t)):
            if fd:
                unbounded_full = True
            else:
                unbounded_thin = True
    unbounded = unbounded_full or unbounded_thin
    dense = unbounded_full
    obstruction = unbounded and not dense
    if obstruction:
        messages.append(
            "S is unbounded but not Zariski dense at infinity: B_V(S) is not noetherian"
        )
    if not unbounded and all(feas):
        messages.append("S is bounded: B(S) = R[V]")
    if unbounded_thin and dense:
        messages.append("lower-dimensional unbounded tentacle: ring computation unsupported")
    return DensityDiagnostics(
        zariski_dense_at_infinity=dense,
        unbounded=unbounded,
        conductor_zero=dense,
        noetherian_obstruction=obstruction,
        messages=tuple(messages),
        feasible=tuple(feas),
        full_dimensional=tuple(fulldim),
        log_dimension=tuple(dims),
    )


def require_valid(s: SetSpec) -> DensityDiagnostics:
    diag = validate(s)
    if not diag.ok:
        raise ValidationError(diag)
    return diag


def recession_cones(s: SetSpec) -> list[LatticeCone]:
    return [recession_cone(t) for t in s.tentacles]
