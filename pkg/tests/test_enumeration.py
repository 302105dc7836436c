"""Exhaustive counting of arcs and frames, cross-checked against
independent oracles."""

from itertools import combinations
from math import factorial

import pytest

from desarc.enumeration import (
    EnumJob,
    count_arcs,
    count_frames,
    count_sectioned_configs,
    pgl_order,
    run_job,
)
from desarc.errors import BudgetExceeded
from desarc.field import GF
from desarc.projlin import coordinate_hyperplane, hyperplane_from_dual


# -- independent oracle machinery (no shared code with the search kernel) ----------

def _oracle_points(q: int, width: int, mul, add):
    """All normalized projective points, plain tuples."""
    pts = []

    def norm(vec):
        lead = next((x for x in vec if x), None)
        if lead is None:
            return None
        # scale so the first nonzero entry is 1
        inv = next(s for s in range(1, q) if mul(s, lead) == 1)
        return tuple(mul(inv, x) for x in vec)

    seen = set()
    from itertools import product
    for vec in product(range(q), repeat=width):
        n = norm(vec)
        if n is not None and n not in seen:
            seen.add(n)
            pts.append(n)
    return pts


def _prime_ops(p):
    return (lambda a, b: (a * b) % p), (lambda a, b: (a + b) % p)


def _oracle_rank(rows, p):
    """Row reduction with plain modular ints; independent of the library."""
    m = [list(r) for r in rows]
    cols = len(m[0]) if m else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        r += 1
    return r


def _oracle_pgl(n, q):
    num = 1
    for i in range(n + 1):
        num *= q ** (n + 1) - q ** i
    return num // (q - 1)


# -- frames --------------------------------------------------------------------------

def test_ordered_triples_on_a_line():
    # PG(1,3) has 4 points; every distinct ordered triple is an arc
    assert count_arcs(1, GF(3), 3) == 4 * 3 * 2 == 24
    assert count_frames(1, GF(3)) == 24


def test_frames_pg23_against_group_order():
    assert _oracle_pgl(2, 3) == 5616
    assert pgl_order(2, 3) == 5616
    assert count_frames(2, GF(3)) == 5616


def test_frames_pg24_against_group_order():
    assert count_frames(2, GF(2, 2)) == _oracle_pgl(2, 4) == 60480


def test_frames_pg33_against_group_order():
    assert count_frames(3, GF(3)) == _oracle_pgl(3, 3) == pgl_order(3, 3)


def test_frames_brute_force_oracle_pg22():
    # full independent enumeration over all ordered 4-tuples of PG(2, 2)
    mul, add = _prime_ops(2)
    pts = _oracle_points(2, 3, mul, add)
    assert len(pts) == 7
    count = 0
    from itertools import permutations
    for quad in permutations(pts, 4):
        if all(_oracle_rank(list(t), 2) == 3 for t in combinations(quad, 3)):
            count += 1
    assert count == _oracle_pgl(2, 2)
    assert count_frames(2, GF(2)) == count


# -- arcs off a hyperplane ---------------------------------------------------------------

def test_no_5_arc_off_plane_in_pg32():
    h = coordinate_hyperplane(GF(2), 3, 3)
    assert count_arcs(3, GF(2), 5, avoid=h) == 0


def test_5_arcs_exist_in_pg32_without_avoidance():
    assert count_arcs(3, GF(2), 5) > 0


def test_avoidance_monotonicity():
    f = GF(3)
    h = coordinate_hyperplane(f, 2, 2)
    for m in (3, 4):
        assert count_arcs(2, f, m, avoid=h) <= count_arcs(2, f, m)


def test_avoided_counts_with_subset_oracle():
    # ordered 4-arcs of PG(2,3) off x3 = 0, re-counted independently
    mul, add = _prime_ops(3)
    pts = [p for p in _oracle_points(3, 3, mul, add) if p[2] % 3 != 0]
    from itertools import permutations
    count = 0
    for quad in permutations(pts, 4):
        if all(_oracle_rank(list(t), 3) == 3 for t in combinations(quad, 3)):
            count += 1
    h = coordinate_hyperplane(GF(3), 2, 2)
    assert count_arcs(2, GF(3), 4, avoid=h) == count


# -- sectioned configurations ----------------------------------------------------------

def test_sectioned_count_gf2_is_zero():
    f = GF(2)
    h = coordinate_hyperplane(f, 3, 3)
    assert count_sectioned_configs(2, f, h).raw == 0


@pytest.mark.slow
def test_sectioned_count_pg33_subset_oracle():
    """Dual-route check of the full n=2, q=3 count: unordered 5-subsets of
    the 27 off-plane points of PG(3,3), arc-checked with the independent
    rank oracle, times 5! for the ordered count."""
    mul, add = _prime_ops(3)
    pts = [p for p in _oracle_points(3, 4, mul, add) if p[3] % 3 != 0]
    assert len(pts) == 27
    quad_ok = {}
    for quad in combinations(range(len(pts)), 4):
        rows = [pts[i] for i in quad]
        quad_ok[quad] = _oracle_rank(rows, 3) == 4
    unordered = 0
    for five in combinations(range(len(pts)), 5):
        if all(quad_ok[q] for q in combinations(five, 4)):
            unordered += 1
    f = GF(3)
    h = coordinate_hyperplane(f, 3, 3)
    result = count_sectioned_configs(2, f, h)
    assert result.unordered == unordered
    assert result.raw == unordered * factorial(5)
    assert result.samples_checked > 0


# -- job running ---------------------------------------------------------------------------

def test_run_job_deterministic():
    job = EnumJob("frames", 2, GF(3))
    r1 = run_job(job)
    r2 = run_job(job)
    assert r1.raw_count == r2.raw_count == 5616
    assert r1.nodes == r2.nodes
    assert r1.unordered_count == 5616 // factorial(4)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        count_frames(2, GF(3), budget=10)


def test_partition_by_first_point_sums_to_total():
    # the stated worker model: partition on the first slot, sum the counts
    f = GF(3)
    total = count_arcs(2, f, 4)
    n_points = 13
    parts = [count_arcs(2, f, 4, first_points=[i]) for i in range(n_points)]
    assert sum(parts) == total
    halves = [count_arcs(2, f, 4, first_points=range(0, 7)),
              count_arcs(2, f, 4, first_points=range(7, 13))]
    assert sum(halves) == total


def test_run_job_arcs_with_avoid():
    f = GF(3)
    h = hyperplane_from_dual(f, (0, 0, 1))
    job = EnumJob("arcs", 2, f, m=4, avoid=h)
    result = run_job(job)
    assert result.raw_count == count_arcs(2, f, 4, avoid=h)
    assert result.nodes > 0
