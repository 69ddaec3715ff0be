"""Counting and enumerating lonely points.

A point of a set is lonely with respect to a lattice when no other integer
point of the set lies in its residue class.  This module decides whether a
cone holds infinitely many lonely points, counts them when finite via a
staircase search over generator coefficients, sums the corner-cone counts to
get the eventual count for large simplex dilations, and provides a
brute-force enumeration over a single dilated simplex as an independent
oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .geometry import (
    Cone,
    DilatedSimplex,
    Lattice,
    Point,
    corner_cone,
    edge_lonely_condition,
    is_lonely_in_cone,
    lattice_cone_trivial,
)


class ResourceLimitError(RuntimeError):
    """An enumeration would exceed the configured size limit."""


@dataclass(frozen=True)
class LonelyCount:
    """Number of lonely points: an exact natural number or infinite."""

    value: int | None  # None encodes an infinite count

    def __post_init__(self):
        if self.value is not None and self.value < 0:
            raise ValueError("count must be nonnegative")

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __add__(self, other: "LonelyCount") -> "LonelyCount":
        if self.is_infinite or other.is_infinite:
            return INFINITE
        return LonelyCount(self.value + other.value)

    def __str__(self):
        return "infinity" if self.is_infinite else str(self.value)


INFINITE = LonelyCount(None)


@dataclass(frozen=True)
class StaircaseStep:
    """Snapshot of one staircase iteration.

    `selected` and the `todo`/`blocked` entries are coefficient vectors with
    respect to the cone generators; step 0 records the initial state and has
    no selected vector or verdict.  `blocked` lists the nonlonely vectors in
    discovery order.
    """

    index: int
    selected: tuple[int, ...] | None
    lonely: bool | None
    todo: tuple[tuple[int, ...], ...]
    blocked: tuple[tuple[int, ...], ...]
    count: int


def has_infinitely_many_lonely_points(lat: Lattice, cone: Cone) -> bool:
    """Whether the cone contains infinitely many lonely points.

    False as soon as the lattice meets the cone outside the origin; otherwise
    true exactly when some edge ray stays lonely as a whole, which happens
    when lattice translates of that ray never re-enter the cone off the ray.
    """
    if not lattice_cone_trivial(lat, cone):
        return False
    return any(
        edge_lonely_condition(lat, cone, i) for i in range(len(cone.generators))
    )


def _selection_key(coeffs):
    # minimal 1-norm first; ties processed in descending lexicographic order,
    # i.e. the order of graded-lex monomials on the generator exponents
    return sum(coeffs), tuple(-c for c in coeffs)


def _staircase(lat: Lattice, cone: Cone):
    """Search the cone for lonely points, walking generator-coefficient
    vectors outward from the origin and pruning cones rooted at nonlonely
    points.  Requires a finite lonely count with the origin lonely."""
    n = len(cone.generators)
    todo = {tuple(int(i == j) for j in range(n)) for i in range(n)}
    blocked_points: list[Point] = []
    blocked_coeffs: list[tuple[int, ...]] = []
    lonely_points: list[Point] = [cone.combination((0,) * n)]
    count = 1
    steps = [StaircaseStep(0, None, None, tuple(sorted(todo)), (), count)]
    index = 0
    while todo:
        index += 1
        v = min(todo, key=_selection_key)
        todo.remove(v)
        point = cone.combination(v)
        if is_lonely_in_cone(lat, cone, point):
            count += 1
            lonely_points.append(point)
            for i in range(n):
                child = tuple(x + int(t == i) for t, x in enumerate(v))
                child_point = cone.combination(child)
                if all(
                    not cone.contains(
                        tuple(a - b for a, b in zip(child_point, blocked))
                    )
                    for blocked in blocked_points
                ):
                    todo.add(child)
            verdict = True
        else:
            blocked_points.append(point)
            blocked_coeffs.append(v)
            verdict = False
        steps.append(
            StaircaseStep(
                index,
                v,
                verdict,
                tuple(sorted(todo)),
                tuple(blocked_coeffs),
                count,
            )
        )
    return count, lonely_points, steps


def staircase_trace(lat: Lattice, cone: Cone):
    """Count the lonely points of the cone and return the full iteration
    trace: (LonelyCount, steps).  The trace is empty when the count is
    infinite or when the origin is not lonely."""
    if has_infinitely_many_lonely_points(lat, cone):
        return INFINITE, ()
    if not is_lonely_in_cone(lat, cone, (0,) * cone.ambient_dim):
        return LonelyCount(0), ()
    count, _, steps = _staircase(lat, cone)
    return LonelyCount(count), tuple(steps)


def number_of_lonely_points(lat: Lattice, cone: Cone) -> LonelyCount:
    """Exact number of lonely points of the cone."""
    return staircase_trace(lat, cone)[0]


def lonely_points_in_cone(lat: Lattice, cone: Cone) -> tuple[Point, ...]:
    """The lonely points themselves, sorted; raises ValueError when there
    are infinitely many."""
    if has_infinitely_many_lonely_points(lat, cone):
        raise ValueError("the cone has infinitely many lonely points")
    if not is_lonely_in_cone(lat, cone, (0,) * cone.ambient_dim):
        return ()
    _, points, _ = _staircase(lat, cone)
    return tuple(sorted(points))


def ultimate_number_of_lonely_points(lat: Lattice) -> LonelyCount:
    """Limit of the number of lonely points of the dilated standard simplex
    as the dilation grows: the sum over all corner cones, with an infinite
    summand absorbing."""
    total = LonelyCount(0)
    for corner in range(lat.ambient_dim + 1):
        total += number_of_lonely_points(lat, corner_cone(lat.ambient_dim, corner))
        if total.is_infinite:
            break
    return total


def enumerate_lonely_simplex(
    lat: Lattice, dilation: int, max_points: int | None = None
) -> tuple[Point, ...]:
    """Brute-force oracle: lonely points of the dilated standard simplex,
    sorted lexicographically.

    Groups the integer points of the simplex by canonical representative
    modulo the lattice and keeps the singleton classes.  `max_points` bounds
    the number of enumerated points; exceeding it raises ResourceLimitError.
    """
    simplex = DilatedSimplex(lat.ambient_dim, dilation)
    if max_points is not None and simplex.point_count() > max_points:
        raise ResourceLimitError(
            f"simplex holds {simplex.point_count()} points, limit is {max_points}"
        )
    classes: dict[Point, list[Point]] = {}
    for point in simplex.integer_points():
        classes.setdefault(lat.reduce(point), []).append(point)
    return tuple(
        sorted(members[0] for members in classes.values() if len(members) == 1)
    )


class DimensionGuarantee(enum.Enum):
    """Which sufficient smallness condition on the lattice dimension holds."""

    THEOREM_1 = "theorem1"
    COROLLARY_2 = "corollary2"
    NONE = "none"


def dimension_bound_guarantee(lat: Lattice) -> DimensionGuarantee:
    """Classify the lattice by the dimension bounds that force structure on
    its corner cones.

    THEOREM_1 when 3*dim < m - 4: some corner cone then has a slanted edge
    that is entirely lonely, hence infinitely many lonely points.
    COROLLARY_2 when only 3*dim < 2*m holds (m >= 3): some corner cone then
    meets the lattice trivially.  Purely arithmetic; the geometric
    consequences are checked elsewhere.
    """
    m = lat.ambient_dim
    k = lat.dim
    if 3 * k < m - 4:
        return DimensionGuarantee.THEOREM_1
    if m >= 3 and 3 * k < 2 * m:
        return DimensionGuarantee.COROLLARY_2
    return DimensionGuarantee.NONE
