import itertools
import random
from fractions import Fraction

import pytest

from conftest import (
    corner_member,
    edge_violation_bruteforce,
    lattice_combinations,
    lonely_subset,
    on_ray,
)
from lonelypoints.geometry import (
    Cone,
    DilatedSimplex,
    Lattice,
    balance,
    corner_cone,
    edge_lonely_condition,
    edge_lonely_violation,
    is_lonely_in_cone,
    is_visible,
    lattice_cone_meeting,
    lattice_cone_trivial,
    switch_cone_witness,
)

L23 = Lattice(2, [(2, -3)])
C0 = corner_cone(2, 0)
C1 = corner_cone(2, 1)


def test_corner_cone_generators():
    assert C0.generators == ((1, 0), (0, 1))
    assert C1.generators == ((-1, 0), (-1, 1))
    assert corner_cone(4, 2).generators == (
        (0, -1, 0, 0),
        (1, -1, 0, 0),
        (0, -1, 1, 0),
        (0, -1, 0, 1),
    )
    with pytest.raises(ValueError):
        corner_cone(3, 4)


def test_cone_rejects_bad_generators():
    with pytest.raises(ValueError):
        Cone(2, [(0, 0)])
    with pytest.raises(ValueError):
        Cone(2, [(1, 1), (2, 2)])


def test_cone_contains():
    assert C0.contains((3, 5))
    assert not C0.contains((-1, 0))
    assert C1.contains((-2, 1))  # coordinates (1, 1)
    assert C1.coordinates((-2, 1)) == (Fraction(1), Fraction(1))
    # rational points are fine
    assert C0.contains((Fraction(1, 2), Fraction(3, 7)))


def test_lattice_membership():
    assert L23.member((4, -6))
    assert not L23.member((2, 3))
    checker = Lattice(2, [(2, 0), (0, 2), (1, 1)])
    assert checker.member((3, 1))
    # checkerboard: membership iff coordinate sum is even
    for v in itertools.product(range(-3, 4), repeat=2):
        assert checker.member(v) == (sum(v) % 2 == 0)


def test_equivalence():
    assert Lattice(2, [(1, 1)]).equivalent((0, 5), (1, 6))
    assert L23.equivalent((7, -2), (7, -2))
    assert L23.equivalent((5, 0), (3, 3))


def test_canonical_representative():
    assert L23.reduce((4, -6)) == (0, 0)
    assert L23.reduce((5, 0)) == L23.reduce((3, 3))
    assert Lattice(2).reduce((9, -1)) == (9, -1)
    # class key property on random points
    rng = random.Random(52)
    for _ in range(200):
        u = (rng.randint(-9, 9), rng.randint(-9, 9))
        v = (rng.randint(-9, 9), rng.randint(-9, 9))
        assert (L23.reduce(u) == L23.reduce(v)) == L23.equivalent(u, v)


def test_lattice_cone_trivial_examples():
    assert lattice_cone_trivial(L23, C0)
    # brute force agrees out to a wide coefficient range
    assert all(
        not corner_member(v, 0)
        for v in lattice_combinations(L23.generators, 30)
        if any(v)
    )
    assert not lattice_cone_trivial(Lattice(2, [(1, 1)]), C0)
    L4 = Lattice(4, [(2, 0, -1, 0), (1, 1, 0, -1)])
    assert lattice_cone_trivial(L4, corner_cone(4, 0))


def test_lattice_cone_meeting_witness_is_genuine():
    lat = Lattice(2, [(1, 1)])
    point = lattice_cone_meeting(lat, C0)
    assert point is not None and any(point)
    assert lat.member(point) and C0.contains(point)


def test_edge_lonely_condition_examples():
    # ray of e2 under <(2,-3)>: (2,-3) + 3*e2 = (2,0) escapes the ray
    violation = edge_lonely_violation(L23, C0, 1)
    assert violation is not None
    point, t = violation
    assert C0.contains(point)
    assert not on_ray(point, C0.generators[1])
    assert L23.member(tuple(a - t * b for a, b in zip(point, C0.generators[1])))
    assert not edge_lonely_condition(L23, C0, 1)

    assert edge_lonely_condition(Lattice(2), C0, 0)

    L4 = Lattice(4, [(2, 0, -1, 0), (1, 1, 0, -1)])
    assert edge_lonely_condition(L4, corner_cone(4, 0), 1)


def test_is_lonely_in_cone_examples():
    assert is_lonely_in_cone(L23, C0, (1, 1))
    assert not is_lonely_in_cone(L23, C0, (2, 0))
    assert not is_lonely_in_cone(Lattice(2, [(1, 1)]), C0, (0, 0))
    with pytest.raises(ValueError):
        is_lonely_in_cone(L23, C0, (-1, 2))


def test_is_lonely_trivial_lattice():
    assert is_lonely_in_cone(Lattice(2), C0, (3, 4))


def test_is_visible():
    assert is_visible((2, -3), 2)
    assert is_visible((-1, 0), 1)
    assert not is_visible((1, 1), 1)
    with pytest.raises(ValueError):
        is_visible((1, 1), 3)


def test_balance():
    assert balance((2, -3)) == -1
    # slanted corner-cone generators balance to 0, straight ones to -1
    for corner in range(1, 4):
        cone = corner_cone(3, corner)
        for gen in cone.generators:
            expected = -1 if gen.count(0) == 2 else 0
            assert balance(gen) == expected
    assert balance(corner_cone(3, 0).generators[0]) == 1


def test_visibility_matches_corner_cone_membership():
    rng = random.Random(7)
    for m in (2, 3, 4):
        cones = {i: corner_cone(m, i) for i in range(1, m + 1)}
        for _ in range(120):
            v = tuple(rng.randint(-6, 6) for _ in range(m))
            for i in range(1, m + 1):
                assert is_visible(v, i) == cones[i].contains(v)
                assert is_visible(v, i) == corner_member(v, i)


def test_switch_cone_witness_reference_instance():
    beta, moved = switch_cone_witness((-1, 1), (1, -2), 3, 1, 2)
    assert beta == 1
    assert moved == (2, -3)
    assert is_visible(moved, 2)


def test_switch_cone_witness_rejects_point_outside_cone():
    # l + alpha*c = (2,-1) is not 2-visible (1 < 2), so the hypothesis fails
    with pytest.raises(ValueError):
        switch_cone_witness((1, -1), (-1, 2), 3, 2, 1)


def test_switch_cone_witness_rejects_non_edge_vectors():
    with pytest.raises(ValueError):
        switch_cone_witness((-1, 2), (1, -2), 1, 1, 2)
    with pytest.raises(ValueError):
        switch_cone_witness((-1, 1), (1, -2), 1, 1, 1)


def test_switch_cone_witness_postcondition_randomized():
    rng = random.Random(8112)
    checked = 0
    for _ in range(400):
        m = rng.randint(2, 4)
        i = rng.randint(1, m)
        j = rng.choice([x for x in range(1, m + 1) if x != i])
        c = tuple(
            (1 if r == j - 1 else 0) - (1 if r == i - 1 else 0) for r in range(m)
        )
        l = tuple(rng.randint(-4, 4) for _ in range(m))
        alpha = rng.randint(0, 4)
        v = tuple(a + alpha * b for a, b in zip(l, c))
        if not is_visible(v, i):
            continue
        beta, moved = switch_cone_witness(c, l, alpha, i, j)
        assert beta > 0
        assert any(moved)
        assert is_visible(moved, j)
        assert moved == tuple(a - beta * b for a, b in zip(l, c))
        checked += 1
    assert checked > 30


def test_translation_preserves_loneliness():
    # lonely points of a translated point set are the translated lonely points
    rng = random.Random(3141)
    for _ in range(25):
        lat = Lattice(2, [(rng.randint(-4, 4), rng.randint(-4, 4))])
        d = rng.randint(0, 6)
        t = (rng.randint(-5, 5), rng.randint(-5, 5))
        pts = list(DilatedSimplex(2, d).integer_points())
        shifted = [tuple(a + b for a, b in zip(p, t)) for p in pts]
        base = lonely_subset(lat, pts)
        assert lonely_subset(lat, shifted) == sorted(
            tuple(a + b for a, b in zip(p, t)) for p in base
        )


def test_nonlonely_absorbs_cone_shifts():
    # if u is not lonely, neither is u + v for any v in the cone
    rng = random.Random(4999)
    checked = 0
    for _ in range(60):
        lat = Lattice(2, [(rng.randint(-4, 4), rng.randint(-4, 4))])
        if not lattice_cone_trivial(lat, C0):
            continue
        u = (rng.randint(0, 4), rng.randint(0, 4))
        if is_lonely_in_cone(lat, C0, u):
            continue
        v = (rng.randint(0, 3), rng.randint(0, 3))
        shifted = tuple(a + b for a, b in zip(u, v))
        assert not is_lonely_in_cone(lat, C0, shifted)
        checked += 1
    assert checked > 5


def test_zero_lonely_iff_trivial_intersection():
    rng = random.Random(606)
    for _ in range(40):
        m = rng.randint(2, 3)
        lat = Lattice(m, [tuple(rng.randint(-4, 4) for _ in range(m))])
        corner = rng.randint(0, m)
        cone = corner_cone(m, corner)
        origin = (0,) * m
        assert is_lonely_in_cone(lat, cone, origin) == lattice_cone_trivial(
            lat, cone
        )


def test_any_lonely_point_implies_origin_lonely():
    rng = random.Random(2718)
    for _ in range(40):
        m = rng.randint(2, 3)
        lat = Lattice(m, [tuple(rng.randint(-4, 4) for _ in range(m))])
        corner = rng.randint(0, m)
        cone = corner_cone(m, corner)
        coeffs = tuple(rng.randint(0, 3) for _ in cone.generators)
        point = cone.combination(coeffs)
        if is_lonely_in_cone(lat, cone, point):
            assert is_lonely_in_cone(lat, cone, (0,) * m)


def test_lp_answers_match_integer_brute_force():
    rng = random.Random(11417)
    for _ in range(60):
        m = rng.randint(2, 4)
        k = rng.randint(1, 2)
        gens = [tuple(rng.randint(-4, 4) for _ in range(m)) for _ in range(k)]
        lat = Lattice(m, gens)
        corner = rng.randint(0, m)
        cone = corner_cone(m, corner)
        brute_trivial = not any(
            any(v) and corner_member(v, corner)
            for v in lattice_combinations(gens, 10)
        )
        assert lattice_cone_trivial(lat, cone) == brute_trivial
        edge = rng.randrange(m)
        assert edge_lonely_condition(lat, cone, edge) == (
            not edge_violation_bruteforce(gens, corner, edge, 10)
        )
