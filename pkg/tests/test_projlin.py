"""Points, subspaces, join/meet, and collineations of PG(n, q)."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from desarc.errors import AmbientMismatch, NotAHyperplane, ZeroVector
from desarc.field import GF
from desarc.projlin import (
    Collineation,
    Subspace,
    all_points,
    apply_collineation,
    collineation_to_hyperplane,
    coordinate_hyperplane,
    coords_in,
    hyperplane_from_dual,
    join,
    meet,
    normalize,
    num_points,
    point_from,
)

F5 = GF(5)


def pt(field, *coords):
    return normalize(field, coords)


# -- normalize ------------------------------------------------------------------

def test_normalize_examples():
    assert pt(F5, 0, 2, 4).coords == (0, 1, 2)   # scale by inv(2) = 3
    assert pt(F5, 3, 1).coords == (1, 2)         # scale by inv(3) = 2
    with pytest.raises(ZeroVector):
        normalize(F5, (0, 0, 0))


def test_normalize_idempotent_on_canonical():
    for p in all_points(GF(3), 2):
        assert normalize(p.field, p.coords) == p


def test_point_count():
    assert sum(1 for _ in all_points(GF(2), 2)) == 7
    assert sum(1 for _ in all_points(GF(3), 2)) == 13
    assert num_points(GF(5), 3) == 156


# -- join/meet -------------------------------------------------------------------

def test_join_two_points_is_line():
    l = join(pt(F5, 1, 0, 0), pt(F5, 0, 1, 0))
    assert l.dim == 1


def test_skew_lines_in_pg3():
    f = GF(5)
    l1 = join(pt(f, 1, 0, 0, 0), pt(f, 0, 1, 0, 0))
    l2 = join(pt(f, 0, 0, 1, 0), pt(f, 0, 0, 0, 1))
    assert join(l1, l2).dim == 3
    assert meet(l1, l2).dim == -1


def test_join_absorbs_contained_point():
    l = join(pt(F5, 1, 0, 0), pt(F5, 0, 1, 0))
    p = pt(F5, 1, 3, 0)
    assert l.contains_point(p)
    assert join(p, l) == l


def test_meet_two_planes_in_pg3():
    f = GF(3)
    p1 = join(pt(f, 1, 0, 0, 0), pt(f, 0, 1, 0, 0), pt(f, 0, 0, 1, 0))
    p2 = join(pt(f, 1, 0, 0, 0), pt(f, 0, 1, 0, 0), pt(f, 0, 0, 0, 1))
    assert meet(p1, p2).dim == 1


def test_meet_idempotent_bit_identical():
    f = GF(5)
    s = join(pt(f, 1, 2, 3, 4), pt(f, 0, 1, 1, 1))
    assert meet(s, s) == s
    assert meet(s, s).basis == s.basis


def _random_subspace(field, n, rng):
    rows = [[rng.randrange(field.q) for _ in range(n + 1)]
            for _ in range(rng.randrange(0, n + 2))]
    return Subspace(field, n, rows)


@pytest.mark.parametrize("q,n", [(3, 2), (3, 5), (4, 3), (5, 4), (9, 2), (9, 5)])
def test_dimension_formula_randomized(q, n):
    field = GF(q) if q in (3, 5) else (GF(2, 2) if q == 4 else GF(3, 2))
    rng = random.Random(97 * q + n)
    for _ in range(40):
        e = _random_subspace(field, n, rng)
        f = _random_subspace(field, n, rng)
        assert join(e, f).dim + meet(e, f).dim == e.dim + f.dim
        assert join(e, f) == join(f, e)
        assert meet(e, f) == meet(f, e)


def test_join_canonical_under_presentation():
    f = GF(5)
    a = pt(f, 1, 2, 3)
    b = pt(f, 0, 1, 4)
    s1 = join(a, b)
    s2 = join(b, a)
    assert s1 == s2 and s1.basis == s2.basis
    # same span from different spanning sets
    c = normalize(f, [f.add(x, y) for x, y in zip(a.coords, b.coords)])
    s3 = join(a, c)
    assert s3 == s1


def test_join_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        join(pt(F5, 1, 0, 0), pt(F5, 1, 0, 0, 0))
    with pytest.raises(AmbientMismatch):
        join(pt(GF(3), 1, 0, 0), pt(F5, 1, 0, 0))


# -- hyperplanes --------------------------------------------------------------------

def test_hyperplane_from_dual_examples():
    h = hyperplane_from_dual(F5, (1, 1, 1))
    assert h.dim == 1
    on_h = [p for p in all_points(F5, 2) if h.contains_point(p)]
    assert len(on_h) == 6
    for p in on_h:
        assert sum(p.coords) % 5 == 0

    h0 = hyperplane_from_dual(F5, (1, 0, 0))
    assert all(p.coords[0] == 0 for p in h0.points())

    with pytest.raises(ZeroVector):
        hyperplane_from_dual(F5, (0, 0, 0))


def test_meet_hyperplane_with_line():
    f = GF(5)
    h = hyperplane_from_dual(f, (1, 0, 0, 0))
    inside = join(pt(f, 0, 1, 0, 0), pt(f, 0, 0, 1, 0))
    crossing = join(pt(f, 1, 0, 0, 0), pt(f, 0, 1, 0, 0))
    assert meet(h, inside) == inside
    assert meet(h, crossing).dim == 0


def test_dual_vector_round_trip():
    for coeffs in [(1, 1, 1), (1, 0, 0), (0, 1, 3), (2, 4, 1)]:
        h = hyperplane_from_dual(F5, coeffs)
        assert hyperplane_from_dual(F5, h.dual_vector()) == h
    # a line of PG(3) is not a hyperplane, a line of the plane is
    with pytest.raises(NotAHyperplane):
        join(pt(F5, 1, 0, 0, 0), pt(F5, 0, 1, 0, 0)).dual_vector()
    assert join(pt(F5, 1, 0, 0), pt(F5, 0, 1, 0)).dual_vector() == (0, 0, 1)


# -- collineations ------------------------------------------------------------------

def test_collineation_identity_case():
    h = hyperplane_from_dual(F5, (1, 1, 1))
    c = collineation_to_hyperplane(h, h)
    assert c == Collineation.identity(F5, 2)


def test_collineation_coordinate_swap():
    src = hyperplane_from_dual(F5, (1, 0, 0))
    dst = hyperplane_from_dual(F5, (0, 1, 0))
    c = collineation_to_hyperplane(src, dst)
    assert c.matrix == ((0, 1, 0), (1, 0, 0), (0, 0, 1))


def test_collineation_maps_source_onto_target():
    # independent oracle: exhaustively check all q+1 points of the source
    src = hyperplane_from_dual(F5, (1, 1, 1))
    dst = hyperplane_from_dual(F5, (1, 0, 0))
    c = collineation_to_hyperplane(src, dst)
    images = {c.apply_point(p) for p in src.points()}
    assert images == set(dst.points())


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_collineation_between_random_hyperplanes(q):
    field = GF(2, 2) if q == 4 else GF(q)
    rng = random.Random(q)
    pts = list(all_points(field, 3))
    for _ in range(10):
        u = rng.choice(pts).coords
        v = rng.choice(pts).coords
        src = hyperplane_from_dual(field, u)
        dst = hyperplane_from_dual(field, v)
        c = collineation_to_hyperplane(src, dst)
        assert {c.apply_point(p) for p in src.points()} == set(dst.points())


def test_apply_collineation_round_trip():
    f = GF(7)
    c = Collineation(f, [[1, 2, 0], [0, 1, 3], [0, 0, 1]])
    inv = c.inverse()
    for p in all_points(f, 2):
        assert inv.apply_point(c.apply_point(p)) == p
    s = join(pt(f, 1, 2, 3), pt(f, 0, 1, 5))
    assert apply_collineation(c, s).dim == s.dim
    assert apply_collineation(inv, apply_collineation(c, s)) == s


def test_identity_collineation_fixes_everything():
    c = Collineation.identity(F5, 2)
    for p in all_points(F5, 2):
        assert apply_collineation(c, p) == p


# -- internal coordinates --------------------------------------------------------------

def test_coords_in_point_from_round_trip():
    f = GF(5)
    h = hyperplane_from_dual(f, (1, 2, 3, 4))
    for p in h.points():
        inner = coords_in(h, p)
        assert inner.n == 2
        assert point_from(h, inner) == p


def test_coordinate_hyperplane():
    h = coordinate_hyperplane(F5, 3, 3)
    assert h.dual_vector() == (0, 0, 0, 1)
    assert all(p.coords[3] == 0 for p in h.points())


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_subspace_equality_is_span_equality(seed):
    rng = random.Random(seed)
    f = GF(3)
    s = _random_subspace(f, 3, rng)
    if s.dim < 0:
        return
    # re-span from a shuffled, rescaled point sample
    pts = list(s.points())
    rng.shuffle(pts)
    again = join(*pts[:max(1, len(pts) - 1)], *pts)
    assert again == s
