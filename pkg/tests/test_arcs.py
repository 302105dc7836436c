"""Simplexes, arcs, and frames avoiding a hyperplane."""

import random
from itertools import combinations

import pytest

from desarc.arcs import (
    Arc,
    face,
    frame_off_hyperplane,
    is_arc,
    is_simplex,
    random_arc_off_hyperplane,
)
from desarc.errors import (
    FieldTooSmall,
    NotAnArc,
    TooFew,
    WrongCount,
)
from desarc.field import GF
from desarc.projlin import (
    ProjPoint,
    all_points,
    hyperplane_from_dual,
    join,
    normalize,
)

F5 = GF(5)


def pt(field, *coords):
    return normalize(field, coords)


def unit_points(field, n):
    pts = []
    for i in range(n + 1):
        coords = [0] * (n + 1)
        coords[i] = 1
        pts.append(ProjPoint(field, coords))
    return pts


# -- independent oracle: integer determinant mod p ------------------------------

def det3_mod(rows, p):
    (a, b, c), (d, e, f), (g, h, i) = rows
    return (a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) % p


# -- simplexes -----------------------------------------------------------------

def test_unit_points_form_simplex():
    for n in (2, 3, 4):
        assert is_simplex(unit_points(F5, n))


def test_collinear_points_not_simplex():
    pts = [pt(F5, 1, 0, 0), pt(F5, 0, 1, 0), pt(F5, 1, 1, 0)]
    assert det3_mod([p.coords for p in pts], 5) == 0
    assert not is_simplex(pts)


def test_repeated_point_not_simplex():
    assert not is_simplex([pt(F5, 1, 0, 0), pt(F5, 1, 0, 0), pt(F5, 0, 1, 0)])


def test_simplex_wrong_count():
    with pytest.raises(WrongCount):
        is_simplex([pt(F5, 1, 0, 0), pt(F5, 0, 1, 0)])


# -- arcs ----------------------------------------------------------------------

def test_frame_is_arc():
    pts = unit_points(F5, 3) + [pt(F5, 1, 1, 1, 1)]
    assert is_arc(pts)


def test_conic_arc_in_pg2_5():
    # oracle first: every triple of the conic has nonzero determinant mod 5
    pts = [(1, t, (t * t) % 5) for t in range(5)] + [(0, 0, 1)]
    for triple in combinations(pts, 3):
        assert det3_mod(triple, 5) != 0
    arc_pts = [normalize(F5, c) for c in pts]
    assert is_arc(arc_pts)
    assert len(arc_pts) == 6  # q + 1


def test_collinear_triple_breaks_arc():
    pts = unit_points(F5, 2) + [pt(F5, 1, 1, 0)]
    assert not is_arc(pts)
    with pytest.raises(NotAnArc):
        Arc(pts)


def test_arc_too_few():
    with pytest.raises(TooFew):
        is_arc([pt(F5, 1, 0, 0), pt(F5, 0, 1, 0)])


def test_subsequences_of_arc_are_arcs():
    base = frame_off_hyperplane(hyperplane_from_dual(F5, (1, 1, 1, 1)))
    pts = list(base)
    for sub in combinations(pts, 4):
        assert is_arc(list(sub))


def test_arc_subset_span_dimensions():
    # any t points of an arc span a (t-1)-space, t <= n+1
    f = GF(7)
    arc = frame_off_hyperplane(hyperplane_from_dual(f, (1, 1, 1, 1, 1)))
    for t in range(1, 5):
        for sub in combinations(arc.points, t):
            assert join(*sub).dim == t - 1


# -- frames off a hyperplane -------------------------------------------------------

def test_frame_off_k_itself():
    k = hyperplane_from_dual(F5, (1, 1, 1))
    arc = frame_off_hyperplane(k)
    assert list(arc) == unit_points(F5, 2) + [pt(F5, 1, 1, 1)]


def test_frame_off_hyperplane_gf2_fails():
    h = hyperplane_from_dual(GF(2), (1, 0, 0))
    with pytest.raises(FieldTooSmall):
        frame_off_hyperplane(h)


def test_frame_off_x1_zero():
    h = hyperplane_from_dual(F5, (1, 0, 0))
    arc = frame_off_hyperplane(h)
    assert len(arc) == 4
    for p in arc:
        assert p.coords[0] != 0


@pytest.mark.parametrize("q,n", [(3, 2), (3, 3), (4, 2), (5, 2), (5, 4), (9, 2), (7, 3)])
def test_frame_avoids_arbitrary_hyperplanes(q, n):
    field = {3: GF(3), 4: GF(2, 2), 5: GF(5), 7: GF(7), 9: GF(3, 2)}[q]
    rng = random.Random(10 * q + n)
    pts = list(all_points(field, n))
    for _ in range(8):
        h = hyperplane_from_dual(field, rng.choice(pts).coords)
        arc = frame_off_hyperplane(h)
        assert is_arc(list(arc))
        assert len(arc) == n + 2
        for p in arc:
            assert not h.contains_point(p)


def test_frame_z_choice_keeps_point_off_k():
    # cases where the naive choice z = 1 would land the last point on K
    for q, n in [(3, 2), (3, 5), (5, 4), (7, 6)]:
        field = GF(q)
        k = hyperplane_from_dual(field, (1,) * (n + 1))
        arc = frame_off_hyperplane(k)
        assert all(not k.contains_point(p) for p in arc)


def test_face_of_simplex():
    pts = unit_points(F5, 3)
    f0 = face(pts, 0)
    assert f0.dim == 2
    assert not f0.contains_point(pts[0])
    for p in pts[1:]:
        assert f0.contains_point(p)


# -- seeded random arcs ---------------------------------------------------------------

def test_random_arc_off_hyperplane_valid_and_deterministic():
    h = hyperplane_from_dual(F5, (0, 0, 0, 1))
    a1 = random_arc_off_hyperplane(h, 5, random.Random(42))
    a2 = random_arc_off_hyperplane(h, 5, random.Random(42))
    assert a1 == a2
    assert is_arc(list(a1))
    for p in a1:
        assert not h.contains_point(p)


def test_random_arc_gf2_fails():
    h = hyperplane_from_dual(GF(2), (0, 0, 0, 1))
    with pytest.raises(FieldTooSmall):
        random_arc_off_hyperplane(h, 5, random.Random(1))
