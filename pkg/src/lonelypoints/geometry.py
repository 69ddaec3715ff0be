"""Lattices, cones, dilated standard simplices, and loneliness tests.

Points are plain integer tuples.  Corner cones are numbered 0..m, matching
the simplex vertices d*e_0, ..., d*e_m with e_0 the origin; coordinate axes
are numbered 1..m so that "axis i" and "corner cone i" agree for i >= 1.
Edge arguments index into a cone's generator list (0-based).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg

Point = tuple[int, ...]


def _as_point(v) -> Point:
    out = []
    for x in v:
        n = int(x)
        if n != x:
            raise ValueError("coordinates must be integers")
        out.append(n)
    return tuple(out)


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _scaled(c, v):
    return tuple(c * a for a in v)


class Lattice:
    """Additive subgroup of Z^m spanned by integer generators.

    The Hermite normal form of the generators is computed eagerly and every
    membership or reduction question is answered by exact back-substitution
    against it.  Instances are immutable and safe to share.
    """

    def __init__(self, ambient_dim: int, generators=()):
        if ambient_dim < 0:
            raise ValueError("ambient dimension must be nonnegative")
        gens = tuple(_as_point(g) for g in generators)
        if any(len(g) != ambient_dim for g in gens):
            raise ValueError("generator length does not match ambient dimension")
        self.ambient_dim = ambient_dim
        self.generators = gens
        self.basis, self.dim = linalg.hnf(gens)
        self._pivots = linalg.pivot_columns(self.basis)

    def __repr__(self):
        return f"Lattice({self.ambient_dim}, {list(self.generators)})"

    def __eq__(self, other):
        return (
            isinstance(other, Lattice)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def _check(self, v) -> Point:
        v = _as_point(v)
        if len(v) != self.ambient_dim:
            raise ValueError("point dimension does not match the lattice")
        return v

    def member(self, v) -> bool:
        """Exact membership of an integer vector."""
        residue = list(self._check(v))
        for row, col in zip(self.basis, self._pivots):
            q, r = divmod(residue[col], row[col])
            if r != 0:
                return False
            residue = [a - q * b for a, b in zip(residue, row)]
        return not any(residue)

    def reduce(self, v) -> Point:
        """Canonical representative of v modulo the lattice.

        Two vectors reduce to the same tuple exactly when they are
        equivalent, so the result can serve as an equivalence-class key.
        """
        residue = list(self._check(v))
        for row, col in zip(self.basis, self._pivots):
            q = residue[col] // row[col]
            residue = [a - q * b for a, b in zip(residue, row)]
        return tuple(residue)

    def equivalent(self, u, v) -> bool:
        """Whether u - v lies in the lattice."""
        return self.member(_sub(self._check(u), self._check(v)))


class Cone:
    """Cone spanned by nonnegative combinations of integer generators.

    Generators must be linearly independent over the rationals, so each one
    spans an edge and coordinates with respect to them are unique.
    """

    def __init__(self, ambient_dim: int, generators):
        gens = tuple(_as_point(g) for g in generators)
        if any(len(g) != ambient_dim for g in gens):
            raise ValueError("generator length does not match ambient dimension")
        if any(not any(g) for g in gens):
            raise ValueError("cone generators must be nonzero")
        if linalg.hnf(gens)[1] != len(gens):
            raise ValueError("cone generators must be linearly independent")
        self.ambient_dim = ambient_dim
        self.generators = gens

    def __repr__(self):
        return f"Cone({self.ambient_dim}, {list(self.generators)})"

    def coordinates(self, v):
        """Rational coordinates of v with respect to the generators, or None
        when v is outside their span."""
        if len(v) != self.ambient_dim:
            raise ValueError("point dimension does not match the cone")
        rows = [
            [self.generators[j][r] for j in range(len(self.generators))]
            for r in range(self.ambient_dim)
        ]
        solved = linalg.solve_rational(rows, v, ncols=len(self.generators))
        return None if solved is None else solved[0]

    def contains(self, v) -> bool:
        """Membership test: v is a nonnegative rational combination of the
        generators."""
        coords = self.coordinates(v)
        return coords is not None and all(c >= 0 for c in coords)

    def combination(self, coeffs) -> Point:
        """Integer point with the given generator coefficients."""
        point = [0] * self.ambient_dim
        for c, g in zip(coeffs, self.generators):
            for r in range(self.ambient_dim):
                point[r] += c * g[r]
        return tuple(point)


def corner_cone(ambient_dim: int, corner: int) -> Cone:
    """Corner cone of the standard simplex at vertex `corner` in {0..m}.

    Generators are the nonzero differences e_j - e_corner in the order
    j = 0..m; cone 0 is the nonnegative orthant.
    """
    m = ambient_dim
    if not 0 <= corner <= m:
        raise ValueError(f"corner must be in 0..{m}")
    gens = []
    for j in range(m + 1):
        if j == corner:
            continue
        v = [0] * m
        if j >= 1:
            v[j - 1] += 1
        if corner >= 1:
            v[corner - 1] -= 1
        gens.append(tuple(v))
    return Cone(m, gens)


@dataclass(frozen=True)
class DilatedSimplex:
    """d-fold dilation of the standard simplex in Z^m; its integer points are
    the nonnegative vectors with coordinate sum at most d."""

    ambient_dim: int
    dilation: int

    def __post_init__(self):
        if self.ambient_dim < 0 or self.dilation < 0:
            raise ValueError("dimension and dilation must be nonnegative")

    def contains(self, v) -> bool:
        return (
            len(v) == self.ambient_dim
            and all(x >= 0 for x in v)
            and sum(v) <= self.dilation
        )

    def point_count(self) -> int:
        return math.comb(self.dilation + self.ambient_dim, self.ambient_dim)

    def integer_points(self):
        """Lexicographically ordered iterator over the integer points."""

        def rec(parts, budget):
            if parts == 0:
                yield ()
                return
            for x in range(budget + 1):
                for rest in rec(parts - 1, budget - x):
                    yield (x,) + rest

        return rec(self.ambient_dim, self.dilation)


def balance(v) -> int:
    """Sum of the components."""
    return sum(v)


def is_visible(v, axis: int) -> bool:
    """Whether v has all components nonnegative except component `axis`,
    which is nonpositive and at least as large in absolute value as the sum
    of the others.  For axis >= 1 this is exactly membership in the corner
    cone with the same number."""
    if not 1 <= axis <= len(v):
        raise ValueError(f"axis must be in 1..{len(v)}")
    pivot = v[axis - 1]
    if pivot > 0:
        return False
    rest = 0
    for j, x in enumerate(v):
        if j != axis - 1:
            if x < 0:
                return False
            rest += x
    return -pivot >= rest


def _check_pair(lat: Lattice, cone: Cone):
    if lat.ambient_dim != cone.ambient_dim:
        raise ValueError("lattice and cone live in different dimensions")


def lattice_cone_meeting(lat: Lattice, cone: Cone):
    """Nonzero integer point in the intersection of lattice and cone, or
    None when the intersection is trivial.

    Feasibility of { lambda free, beta >= 0 : sum lambda_t b_t = sum beta_j
    c_j, sum beta_j = 1 } over the rationals is equivalent to the existence
    of a nonzero lattice point in the cone, because any rational solution
    scales by a positive integer into one.
    """
    _check_pair(lat, cone)
    k = len(lat.basis)
    n = len(cone.generators)
    rows = [
        [lat.basis[t][r] for t in range(k)]
        + [-cone.generators[j][r] for j in range(n)]
        for r in range(lat.ambient_dim)
    ]
    problem = linalg.LPProblem.build(
        rows,
        [0] * lat.ambient_dim,
        [False] * k + [True] * n,
        normalization=[0] * k + [1] * n,
    )
    witness = linalg.lp_feasible(problem)
    if witness is None:
        return None
    _, scaled = linalg.scale_to_integers(witness)
    return cone.combination(scaled[k:])


def lattice_cone_trivial(lat: Lattice, cone: Cone) -> bool:
    """Whether the lattice meets the cone only in the origin."""
    return lattice_cone_meeting(lat, cone) is None


def edge_lonely_violation(lat: Lattice, cone: Cone, edge: int):
    """Certificate that (lattice + multiples of c_edge) meets the cone
    outside the ray of c_edge: a pair (point, t) with point in the cone but
    not on the ray and point - t*c_edge in the lattice.  None when no such
    point exists."""
    _check_pair(lat, cone)
    n = len(cone.generators)
    if not 0 <= edge < n:
        raise ValueError(f"edge index must be in 0..{n - 1}")
    k = len(lat.basis)
    c = cone.generators[edge]
    rows = [
        [lat.basis[t][r] for t in range(k)]
        + [c[r]]
        + [-cone.generators[j][r] for j in range(n)]
        for r in range(lat.ambient_dim)
    ]
    normalization = [0] * (k + 1) + [int(j != edge) for j in range(n)]
    problem = linalg.LPProblem.build(
        rows,
        [0] * lat.ambient_dim,
        [False] * (k + 1) + [True] * n,
        normalization=normalization,
    )
    witness = linalg.lp_feasible(problem)
    if witness is None:
        return None
    _, scaled = linalg.scale_to_integers(witness)
    point = cone.combination(scaled[k + 1:])
    return point, scaled[k]


def edge_lonely_condition(lat: Lattice, cone: Cone, edge: int) -> bool:
    """Whether (lattice + multiples of c_edge) meets the cone exactly in the
    ray of c_edge.  Together with a trivial lattice-cone intersection this
    makes every point of that ray lonely."""
    return edge_lonely_violation(lat, cone, edge) is None


def is_lonely_in_cone(lat: Lattice, cone: Cone, point) -> bool:
    """Whether `point` is the only integer point of the cone in its residue
    class modulo the lattice.

    Raises ValueError if `point` is not in the cone.  When the lattice meets
    the cone nontrivially nothing is lonely; otherwise the region of lattice
    translates of `point` inside the cone is a bounded polytope, whose
    integer points are enumerated inside exact per-coordinate LP bounds.
    """
    _check_pair(lat, cone)
    point = _as_point(point)
    if not cone.contains(point):
        raise ValueError("point lies outside the cone")
    if not lattice_cone_trivial(lat, cone):
        return False
    k = len(lat.basis)
    if k == 0:
        return True
    n = len(cone.generators)
    rows = [
        [lat.basis[t][r] for t in range(k)]
        + [-cone.generators[j][r] for j in range(n)]
        for r in range(lat.ambient_dim)
    ]
    problem = linalg.LPProblem.build(
        rows, [-x for x in point], [False] * k + [True] * n
    )
    ranges = []
    for t in range(k):
        objective = [Fraction(int(j == t)) for j in range(k + n)]
        lo = linalg.lp_extremum(problem, objective, maximize=False)
        hi = linalg.lp_extremum(problem, objective, maximize=True)
        if lo is None or hi is None:
            raise AssertionError("translate polytope cannot be empty")
        ranges.append(range(math.ceil(lo), math.floor(hi) + 1))
    for alpha in itertools.product(*ranges):
        if not any(alpha):
            continue
        candidate = tuple(
            point[r] + sum(alpha[t] * lat.basis[t][r] for t in range(k))
            for r in range(lat.ambient_dim)
        )
        if cone.contains(candidate):
            return False
    return True


def switch_cone_witness(c, l, alpha: int, i: int, j: int):
    """From v = l + alpha*c in corner cone i, with c = e_j - e_i a slanted
    edge, produce beta > 0 such that l - beta*c is a nonzero point of corner
    cone j.  Returns (beta, point)."""
    c = _as_point(c)
    l = _as_point(l)
    m = len(c)
    if len(l) != m:
        raise ValueError("vectors live in different dimensions")
    if not (1 <= i <= m and 1 <= j <= m and i != j):
        raise ValueError("axes must be distinct and in 1..m")
    expected = tuple(
        (1 if r == j - 1 else 0) - (1 if r == i - 1 else 0) for r in range(m)
    )
    if c != expected:
        raise ValueError("edge vector must be exactly e_j - e_i")
    if alpha < 0:
        raise ValueError("alpha must be a natural number")
    v = _add(l, _scaled(alpha, c))
    if not is_visible(v, i):
        raise ValueError("l + alpha*c must lie in corner cone i")
    gamma = max(-v[i - 1], alpha) + 1
    beta = gamma - alpha
    v_tilde = _sub(l, _scaled(beta, c))
    assert beta > 0 and any(v_tilde) and is_visible(v_tilde, j)
    return beta, v_tilde
