"""Exact rational polyhedral cones.

A :class:`LatticeCone` keeps both descriptions of a cone

    V:  cone(rays) + span(lineality)
    H:  {d : <a, d> <= 0 for a in facets, <b, d> = 0 for b in equations}

with every vector primitive and integral.  Conversions use the double
description method over :class:`fractions.Fraction`; the cones here are
small (n <= 4) so nothing is tuned for speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Sequence

Vector = tuple[int, ...]


class ConeError(ValueError):
    pass


class HilbertBasisError(ConeError):
    """The enumeration cap was reached before the basis was certified."""


# -- vector helpers -----------------------------------------------------------


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def primitive(v: Sequence) -> Vector:
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    fr = [Fraction(x) for x in v]
    den = reduce(math.lcm, (x.denominator for x in fr), 1)
    ints = [int(x * den) for x in fr]
    g = reduce(math.gcd, (abs(x) for x in ints), 0)
    if g == 0:
        raise ConeError("zero vector has no primitive representative")
    return tuple(x // g for x in ints)


def is_primitive(v: Sequence[int]) -> bool:
    return any(v) and reduce(math.gcd, (abs(int(x)) for x in v), 0) == 1


def _row_reduce(rows: Iterable[Sequence], n: int) -> list[list[Fraction]]:
    """Reduced row echelon form (nonzero rows only)."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivot_row = 0
    for col in range(n):
        piv = next((i for i in range(pivot_row, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[pivot_row], m[piv] = m[piv], m[pivot_row]
        p = m[pivot_row][col]
        m[pivot_row] = [x / p for x in m[pivot_row]]
        for i in range(len(m)):
            if i != pivot_row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return [r for r in m[:pivot_row]]


def rank(rows: Iterable[Sequence], n: int | None = None) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    return len(_row_reduce(rows, n if n is not None else len(rows[0])))


def nullspace(rows: Sequence[Sequence], n: int) -> list[list[Fraction]]:
    """Basis of {x : r.x = 0 for all rows}."""
    rref = _row_reduce(rows, n)
    pivots = []
    for r in rref:
        pivots.append(next(i for i, x in enumerate(r) if x != 0))
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, p in zip(rref, pivots):
            v[p] = -r[f]
        basis.append(v)
    return basis


def _project_out(v: Sequence[Fraction], basis: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Orthogonal projection of ``v`` onto the complement of span(basis)."""
    ortho: list[list[Fraction]] = []
    for b in basis:
        w = [Fraction(x) for x in b]
        for o in ortho:
            c = dot(w, o) / dot(o, o)
            w = [x - c * y for x, y in zip(w, o)]
        if any(w):
            ortho.append(w)
    out = [Fraction(x) for x in v]
    for o in ortho:
        c = dot(out, o) / dot(o, o)
        out = [x - c * y for x, y in zip(out, o)]
    return out


def _canonical_lineality(basis: Sequence[Sequence], n: int) -> tuple[Vector, ...]:
    return tuple(primitive(r) for r in _row_reduce(basis, n))


# -- double description -------------------------------------------------------


def _int_primitive(v: list[int]) -> list[int]:
    g = reduce(math.gcd, v, 0)
    return [x // g for x in v] if g > 1 else v


def _int_rank(rows: Sequence[Sequence[int]], n: int) -> int:
    """Rank by fraction-free elimination over the integers."""
    m = [list(r) for r in rows]
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        for i in range(r + 1, len(m)):
            f = m[i][col]
            if f:
                m[i] = _int_primitive([p * x - f * y for x, y in zip(m[i], m[r])])
        r += 1
        if r == len(m):
            break
    return r


@lru_cache(maxsize=8192)
def _double_description(n: int, normals: tuple[Vector, ...]):
    """V-representation of {d : <a, d> <= 0 for all a in normals}.

    Returns ``(rays, lineality)`` with rays orthogonal to the lineality space,
    both as primitive integer tuples.  All intermediate vectors are kept as
    primitive integer lists.
    """
    lin: list[list[int]] = [[int(i == j) for j in range(n)] for i in range(n)]
    rays: list[list[int]] = []
    done: list[tuple[int, ...]] = []

    def active(r):
        return [a for a in done if dot(a, r) == 0]

    for a in normals:
        if not any(a):
            continue
        k = next((i for i, l in enumerate(lin) if dot(a, l) != 0), None)
        if k is not None:
            l = lin.pop(k)
            al = dot(a, l)
            if al > 0:
                l = [-x for x in l]
                al = -al
            # positive multiples of v - (<a,v>/<a,l>) l
            lin = [_int_primitive([-al * x + dot(a, m) * y for x, y in zip(m, l)]) for m in lin]
            rays = [_int_primitive([-al * x + dot(a, r) * y for x, y in zip(r, l)]) for r in rays]
            rays.append(l)
        else:
            pos, neg, zero = [], [], []
            for r in rays:
                v = dot(a, r)
                (pos if v > 0 else neg if v < 0 else zero).append(r)
            target = n - len(lin) - 2
            new = []
            for p in pos:
                zp = active(p)
                for q in neg:
                    common = [b for b in zp if dot(b, q) == 0]
                    if len(common) < target or _int_rank(common, n) != target:
                        continue
                    ap, aq = dot(a, p), dot(a, q)
                    new.append(_int_primitive([ap * y - aq * x for x, y in zip(p, q)]))
            rays = neg + zero + new
        done.append(a)
        # drop zero and redundant rays, dedupe by direction
        seen = {}
        need = n - len(lin) - 1
        for r in rays:
            if not any(r):
                continue
            key = tuple(r)
            if key in seen:
                continue
            act = active(r)
            if len(act) < need or _int_rank(act, n) != need:
                continue
            seen[key] = r
        rays = list(seen.values())

    lineality = _canonical_lineality(lin, n) if lin else ()
    out = set()
    for r in rays:
        p = _project_out(r, lineality) if lineality else r
        if any(p):
            out.add(primitive(p))
    return tuple(sorted(out)), lineality


# -- cones ----------------------------------------------------------------------


@dataclass(frozen=True)
class LatticeCone:
    """Rational polyhedral cone in R^n with both representations.

    Build instances with :meth:`from_normals` or :meth:`from_generators`;
    the fields are canonical, so ``==`` compares cones.
    """

    n: int
    rays: tuple[Vector, ...]
    lineality: tuple[Vector, ...]
    facets: tuple[Vector, ...]
    equations: tuple[Vector, ...]

    @classmethod
    def from_normals(cls, n: int, normals: Iterable[Sequence[int]]) -> LatticeCone:
        normals = [tuple(int(x) for x in a) for a in normals]
        for a in normals:
            if len(a) != n:
                raise ConeError(f"normal {a} has wrong length for n={n}")
        rays, lin = _double_description(n, tuple(normals))
        gens = list(rays) + list(lin) + [tuple(-x for x in l) for l in lin]
        facets, eqs = _double_description(n, tuple(gens))
        return cls(n, rays, lin, facets, eqs)

    @classmethod
    def from_generators(cls, n: int, generators: Iterable[Sequence[int]]) -> LatticeCone:
        generators = [tuple(int(x) for x in g) for g in generators]
        for g in generators:
            if len(g) != n:
                raise ConeError(f"generator {g} has wrong length for n={n}")
        facets, eqs = _double_description(n, tuple(generators))
        normals = list(facets) + list(eqs) + [tuple(-x for x in e) for e in eqs]
        rays, lin = _double_description(n, tuple(normals))
        return cls(n, rays, lin, facets, eqs)

    @classmethod
    def zero(cls, n: int) -> LatticeCone:
        return cls.from_generators(n, [])

    @classmethod
    def full(cls, n: int) -> LatticeCone:
        return cls.from_normals(n, [])

    @classmethod
    def orthant(cls, n: int) -> LatticeCone:
        return cls.from_normals(n, [tuple(-int(i == j) for j in range(n)) for i in range(n)])

    @property
    def generators(self) -> tuple[Vector, ...]:
        """Rays followed by each lineality vector and its negative."""
        return self.rays + tuple(
            v for l in self.lineality for v in (l, tuple(-x for x in l))
        )

    @property
    def normals(self) -> tuple[Vector, ...]:
        return self.facets + tuple(
            v for e in self.equations for v in (e, tuple(-x for x in e))
        )

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    def is_zero(self) -> bool:
        return not self.rays and not self.lineality

    def contains(self, v: Sequence) -> bool:
        return all(dot(a, v) <= 0 for a in self.facets) and all(
            dot(b, v) == 0 for b in self.equations
        )

    def in_interior(self, v: Sequence) -> bool:
        """Strictly inside: full-dimensional cone and every facet inequality strict."""
        return not self.equations and all(dot(a, v) < 0 for a in self.facets)

    def dimension(self) -> int:
        return self.n - len(self.equations)

    def __repr__(self):
        return f"LatticeCone(n={self.n}, rays={list(self.rays)}, lineality={list(self.lineality)})"


def dual_cone(c: LatticeCone) -> LatticeCone:
    """{e : <e, d> <= 0 for all d in c}."""
    return LatticeCone.from_normals(c.n, c.generators)


def extreme_rays(c: LatticeCone) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
    """Extreme rays modulo lineality, and the lineality as +/- pairs."""
    pairs = tuple(v for l in c.lineality for v in (l, tuple(-x for x in l)))
    return c.rays, pairs


def cone_dimension(c: LatticeCone) -> int:
    return c.dimension()


def relative_interior_point(c: LatticeCone) -> Vector | None:
    if c.is_zero():
        return None
    return tuple(sum(col) for col in zip(*c.rays)) if c.rays else (0,) * c.n


def minkowski_sum(c1: LatticeCone, c2: LatticeCone) -> LatticeCone:
    if c1.n != c2.n:
        raise ConeError("dimension mismatch")
    return LatticeCone.from_generators(c1.n, c1.generators + c2.generators)


def intersect(c1: LatticeCone, c2: LatticeCone) -> LatticeCone:
    if c1.n != c2.n:
        raise ConeError("dimension mismatch")
    return LatticeCone.from_normals(c1.n, c1.normals + c2.normals)


# -- lattices -------------------------------------------------------------------


def smith_normal_form(matrix: Sequence[Sequence[int]]):
    """Return ``(U, D, V)`` with ``U @ A @ V == D`` diagonal and U, V unimodular.

    ``A`` is given as a list of integer rows.
    """
    A = [list(map(int, r)) for r in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(M, i, j):
        M[i], M[j] = M[j], M[i]

    def swap_cols(M, i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]

    def add_row(M, src, dst, k):  # row dst += k * row src
        M[dst] = [x + k * y for x, y in zip(M[dst], M[src])]

    def add_col(M, src, dst, k):
        for row in M:
            row[dst] += k * row[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(A, t, i)
        swap_rows(U, t, i)
        swap_cols(A, t, j)
        swap_cols(V, t, j)
        while True:
            changed = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(A, t, i, -q)
                    add_row(U, t, i, -q)
                    if A[i][t]:
                        swap_rows(A, t, i)
                        swap_rows(U, t, i)
                        changed = True
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(A, t, j, -q)
                    add_col(V, t, j, -q)
                    if A[t][j]:
                        swap_cols(A, t, j)
                        swap_cols(V, t, j)
                        changed = True
            if changed:
                continue
            # divisibility of the remaining block
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(A, bad[0], t, 1)
            add_row(U, bad[0], t, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, A, V


def lattice_contains(generators: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Is ``v`` an integer combination of the generators?"""
    if not any(v):
        return True
    if not generators:
        return False
    U, D, V = smith_normal_form(generators)
    # v = x A  <=>  v V = (x U^-1) D
    w = [sum(v[i] * V[i][j] for i in range(len(v))) for j in range(len(v))]
    for j, wj in enumerate(w):
        d = D[j][j] if j < len(D) else 0
        if d == 0:
            if wj != 0:
                return False
        elif wj % d:
            return False
    return True


def lattice_rank(generators: Sequence[Sequence[int]]) -> int:
    return rank(generators) if generators else 0


def lattice_is_full(generators: Sequence[Sequence[int]], n: int) -> bool:
    """Do the generators span all of Z^n as a group?"""
    if not generators:
        return n == 0
    _, D, _ = smith_normal_form(generators)
    diag = [D[i][i] for i in range(min(len(D), n))]
    return len(diag) == n and all(d == 1 for d in diag)


# -- Hilbert bases --------------------------------------------------------------


@dataclass(frozen=True)
class HilbertBasis:
    elements: tuple[Vector, ...]
    rank: int


def _det2(a, b) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (abs(a), (1 if a >= 0 else -1), 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def _hilbert_basis_2d(v1: Vector, v2: Vector) -> list[Vector]:
    """Continued-fraction walk from v1 to v2 along the boundary of the hull."""
    if _det2(v1, v2) < 0:
        v1, v2 = v2, v1
    out = [v1]
    cur = v1
    while True:
        D = _det2(cur, v2)
        if D == 1:
            break
        # w with det(cur, w) = 1: cur[0]*w[1] - cur[1]*w[0] = 1
        g, s, t = _ext_gcd(cur[0], -cur[1])
        assert g == 1
        w = (t, s)
        # shift along cur until w enters the cone
        k = -((_det2(w, v2)) // D)  # ceil(-det(w, v2) / D)
        nxt = (w[0] + k * cur[0], w[1] + k * cur[1])
        if nxt == v2:
            break
        out.append(nxt)
        cur = nxt
    out.append(v2)
    return out


def _bounded_points(c: LatticeCone, cap: int):
    """Lattice points of a cone inside the orthant with coordinate sum <= cap, by degree."""
    n = c.n
    for deg in range(1, cap + 1):
        for comp in _compositions(deg, n):
            if c.contains(comp):
                yield comp


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _in_orthant(c: LatticeCone) -> bool:
    return not c.lineality and all(x >= 0 for r in c.rays for x in r)


def hilbert_basis(c: LatticeCone, max_degree: int = 400) -> HilbertBasis:
    """Minimal generating set of the monoid c ∩ Z^n (c inside the orthant).

    Planar cones use the continued-fraction walk.  Otherwise lattice points
    are enumerated by degree up to the sum of the extreme-ray degrees, which
    bounds every Hilbert-basis element; a bound above ``max_degree`` raises.
    """
    if not _in_orthant(c):
        raise ConeError("hilbert_basis needs a cone inside the nonnegative orthant")
    rays = c.rays
    dim = c.dimension()
    if not rays:
        return HilbertBasis((), 0)
    if len(rays) == 1:
        return HilbertBasis((rays[0],), 1)
    if dim == 2 and len(rays) == 2:
        if c.n == 2:
            elems = _hilbert_basis_2d(*rays)
        else:
            elems = _hilbert_basis_plane(c)
        return HilbertBasis(tuple(sorted(set(elems), key=_grlex)), 2)
    cap = sum(sum(r) for r in rays)
    if cap > max_degree:
        raise HilbertBasisError(f"degree bound {cap} exceeds cap {max_degree}")
    basis: list[Vector] = []
    for p in _bounded_points(c, cap):
        if not any(c.contains(tuple(x - y for x, y in zip(p, h))) for h in basis):
            basis.append(p)
    return HilbertBasis(tuple(sorted(basis, key=_grlex)), dim)


def _hilbert_basis_plane(c: LatticeCone) -> list[Vector]:
    """2-dimensional cone in higher ambient dimension: enumerate."""
    cap = sum(sum(r) for r in c.rays)
    basis: list[Vector] = []
    for p in _bounded_points(c, cap):
        if not any(c.contains(tuple(x - y for x, y in zip(p, h))) for h in basis):
            basis.append(p)
    return basis


def _grlex(e: Vector):
    return (sum(e), tuple(-x for x in e))


# -- feasibility of multiplicative systems ------------------------------------


@dataclass(frozen=True)
class MultiplicativeSystem:
    """Rows ``(a, C)`` meaning ``<a, u> <= log C`` with C > 0 rational."""

    n: int
    rows: tuple[tuple[Vector, Fraction], ...]

    def __post_init__(self):
        rows = []
        for a, C in self.rows:
            a = tuple(int(x) for x in a)
            C = Fraction(C)
            if len(a) != self.n:
                raise ValueError("row length mismatch")
            if C <= 0:
                raise ValueError("constants must be positive")
            rows.append((a, C))
        object.__setattr__(self, "rows", tuple(rows))


def _power_product(constants: Sequence[Fraction], lam: Sequence[int]) -> Fraction:
    out = Fraction(1)
    for C, k in zip(constants, lam):
        if k:
            out *= C**k
    return out


@lru_cache(maxsize=4096)
def _certificate_cone(sys: MultiplicativeSystem) -> tuple[list[Fraction], LatticeCone | None]:
    rows = [(a, C) for a, C in sys.rows if any(a)]
    m = len(rows)
    constants = [C for _, C in rows]
    if m == 0:
        return constants, None
    normals = [tuple(-int(i == j) for j in range(m)) for i in range(m)]
    for k in range(sys.n):
        col = tuple(a[k] for a, _ in rows)
        if any(col):
            normals.append(col)
            normals.append(tuple(-x for x in col))
    return constants, LatticeCone.from_normals(m, normals)


def feasible(sys: MultiplicativeSystem) -> bool:
    """Exact nonemptiness of {u : <a_i, u> <= log C_i}.

    Infeasible iff a nonnegative dependency sum(l_i a_i) = 0 has
    prod(C_i^l_i) < 1; only extreme dependencies need checking.
    """
    if any(not any(a) and C < 1 for a, C in sys.rows):
        return False
    constants, cone = _certificate_cone(sys)
    if cone is None:
        return True
    return all(_power_product(constants, lam) >= 1 for lam in cone.rays)


def infeasibility_certificate(sys: MultiplicativeSystem) -> tuple[int, ...] | None:
    """Dependency vector over the non-constant rows witnessing emptiness, if any."""
    constants, cone = _certificate_cone(sys)
    if cone is None:
        return None
    for lam in cone.rays:
        if _power_product(constants, lam) < 1:
            return lam
    return None


def full_dimensional(sys: MultiplicativeSystem) -> bool:
    """Does the system have an interior point (all inequalities strict)?

    Constant rows with C >= 1 never bind.
    """
    if not feasible(sys):
        return False
    constants, cone = _certificate_cone(sys)
    if cone is None:
        return True
    return all(_power_product(constants, lam) > 1 for lam in cone.rays)


def implicit_equality_rank(sys: MultiplicativeSystem) -> int:
    """Rank of the rows forced to hold with equality; n minus this is the dimension."""
    constants, cone = _certificate_cone(sys)
    if cone is None or not feasible(sys):
        return 0
    rows = [a for a, _ in sys.rows if any(a)]
    tight = set()
    for lam in cone.rays:
        if _power_product(constants, lam) == 1:
            tight.update(i for i, k in enumerate(lam) if k)
    return rank([rows[i] for i in sorted(tight)], sys.n) if tight else 0


__all__ = [
    "ConeError",
    "HilbertBasis",
    "HilbertBasisError",
    "LatticeCone",
    "MultiplicativeSystem",
    "cone_dimension",
    "dot",
    "dual_cone",
    "extreme_rays",
    "feasible",
    "full_dimensional",
    "hilbert_basis",
    "implicit_equality_rank",
    "infeasibility_certificate",
    "intersect",
    "is_primitive",
    "lattice_contains",
    "lattice_is_full",
    "lattice_rank",
    "minkowski_sum",
    "nullspace",
    "primitive",
    "rank",
    "relative_interior_point",
    "smith_normal_form",
]
