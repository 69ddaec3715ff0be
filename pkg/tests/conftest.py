"""Shared brute-force oracles for the test suite.

These helpers deliberately avoid the library code paths they are used to
check: corner-cone membership is a closed-form sign test, and lattice
elements are enumerated from raw generator combinations.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def corner_member(v, corner: int) -> bool:
    """Closed-form membership in corner cone `corner` of the standard
    simplex: nonnegative orthant for 0, sign-dominance test otherwise."""
    if corner == 0:
        return all(x >= 0 for x in v)
    pivot = v[corner - 1]
    rest = [x for j, x in enumerate(v) if j != corner - 1]
    return pivot <= 0 and all(x >= 0 for x in rest) and -pivot >= sum(rest)


def lattice_combinations(generators, bound: int):
    """All integer combinations of the generators with coefficients in
    [-bound, bound], as a list of tuples (the zero vector included)."""
    if not generators:
        return [()]
    m = len(generators[0])
    combos = []
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=len(generators)):
        vec = tuple(
            sum(c * g[r] for c, g in zip(coeffs, generators)) for r in range(m)
        )
        combos.append(vec)
    return combos


def on_ray(w, c) -> bool:
    """Whether w is a nonnegative rational multiple of c."""
    k = next(i for i, x in enumerate(c) if x != 0)
    t = Fraction(w[k], c[k])
    return t >= 0 and all(Fraction(x) == t * y for x, y in zip(w, c))


def corner_coords(v, corner: int):
    """Coordinates of v with respect to the generators of corner cone
    `corner`, in generator-list order (closed form, independent of the
    library's solver): the slot of -e_corner carries minus the coordinate
    sum, every other slot carries the matching component of v."""
    m = len(v)
    if corner == 0:
        return list(v)
    coords = [-sum(v)]
    for j in range(1, m + 1):
        if j != corner:
            coords.append(v[j - 1])
    return coords


def edge_violation_bruteforce(generators, corner: int, edge: int, bound: int):
    """Whether some lattice combination with coefficients in [-bound, bound]
    plus an integer multiple of the edge generator lands in the corner cone
    off the edge ray.

    Adding a multiple of the edge generator shifts exactly the edge slot of
    the cone coordinates, so a combination witnesses a violation iff its
    other coordinates are all nonnegative and not all zero; the required
    multiple always exists and needs no bound of its own.
    """
    for v in lattice_combinations(generators, bound):
        coords = corner_coords(v, corner)
        rest = coords[:edge] + coords[edge + 1:]
        if all(x >= 0 for x in rest) and any(rest):
            return True
    return False


def fm_feasible(rows, rhs, nonneg) -> bool:
    """Fourier-Motzkin elimination oracle for A x = b with the flagged
    variables constrained nonnegative."""
    nvars = len(nonneg)
    ineqs = []  # (coeffs, const) meaning coeffs . x <= const
    for r, b in zip(rows, rhs):
        row = [Fraction(x) for x in r]
        ineqs.append((row, Fraction(b)))
        ineqs.append(([-x for x in row], -Fraction(b)))
    for i, nn in enumerate(nonneg):
        if nn:
            row = [Fraction(0)] * nvars
            row[i] = Fraction(-1)
            ineqs.append((row, Fraction(0)))
    for var in range(nvars):
        pos = [q for q in ineqs if q[0][var] > 0]
        neg = [q for q in ineqs if q[0][var] < 0]
        rest = [q for q in ineqs if q[0][var] == 0]
        for p, n in itertools.product(pos, neg):
            s, t = p[0][var], -n[0][var]
            row = [t * a + s * b for a, b in zip(p[0], n[0])]
            rest.append((row, t * p[1] + s * n[1]))
        ineqs = rest
    return all(const >= 0 for _, const in ineqs)


def lonely_subset(lat, points):
    """Lonely points of an arbitrary finite point set: the singleton residue
    classes modulo the lattice."""
    groups = {}
    for p in points:
        groups.setdefault(lat.reduce(p), []).append(p)
    return sorted(ps[0] for ps in groups.values() if len(ps) == 1)
