import random
from fractions import Fraction
from itertools import combinations

import pytest

from conftest import rand_support
from troppencil.core import ProjPoint, SupportSet, TropError, min_profile, support_values
from troppencil.subdivision import (
    cell_dual_point,
    curve_contains,
    dual_curve,
    is_maximal,
    regular_subdivision,
    secondary_cone_contains,
)


def test_square_subdivisions(SQ):
    assert regular_subdivision(SQ, ProjPoint((3, 1, 2, 1))).cells == ((1, 2, 3), (2, 3, 4))
    assert regular_subdivision(SQ, ProjPoint((0, 0, 0, 0))).cells == ((1, 2, 3, 4),)
    assert regular_subdivision(SQ, ProjPoint((1, 0, 0, 0))).cells == ((1, 2, 3), (2, 3, 4))


def test_dual_curve_square(SQ):
    cv = dual_curve(SQ, ProjPoint((1, 0, 0, 0)))
    by_cell = {v.cell: v.point for v in cv.vertices}
    assert by_cell[(1, 2, 3)] == ProjPoint((1, 1, 0))
    assert by_cell[(2, 3, 4)] == ProjPoint((0, 0, 0))
    assert len(cv.edges) == 1 and cv.edges[0].dual == (2, 3)
    assert len(cv.rays) == 4


def test_dual_curve_triangle_star(TRI):
    cv = dual_curve(TRI, ProjPoint((0, 0, 0)))
    assert len(cv.vertices) == 1
    assert cv.vertices[0].point == ProjPoint((0, 0, 0))
    assert not cv.edges
    assert sorted(r.direction for r in cv.rays) == [(-1, -1), (0, 1), (1, 0)]


def test_dual_curve_flat_square(SQ):
    cv = dual_curve(SQ, ProjPoint((0, 0, 0, 0)))
    assert len(cv.vertices) == 1 and len(cv.rays) == 4 and not cv.edges
    assert cv.vertices[0].point == ProjPoint((0, 0, 0))


def test_curve_contains_examples(SQ, TRI):
    c = ProjPoint((3, 1, 2, 1))
    assert curve_contains(SQ, c, ProjPoint((0, 0, 0)))
    assert curve_contains(SQ, c, ProjPoint((2, 1, 0)))
    assert not curve_contains(TRI, ProjPoint((0, 0, 0)), ProjPoint((1, 2, 0)))


def test_cell_dual_point_examples(SQ, TRI):
    assert cell_dual_point(SQ, ProjPoint((3, 1, 2, 1)), (1, 2, 3)) == ProjPoint((2, 1, 0))
    assert cell_dual_point(SQ, ProjPoint((1, 0, 0, 0)), (2, 3, 4)) == ProjPoint((0, 0, 0))
    assert cell_dual_point(TRI, ProjPoint((0, 0, 0)), (1, 2, 3)) == ProjPoint((0, 0, 0))


def test_cell_dual_point_errors(SQ):
    with pytest.raises(TropError, match="not a face"):
        cell_dual_point(SQ, ProjPoint((3, 1, 2, 1)), (1, 2, 4))
    with pytest.raises(TropError, match="not a face"):
        cell_dual_point(SQ, ProjPoint((0, 0, 0, 0)), (1, 2, 3))
    degenerate = SupportSet.from_rs(2, [(0, 0), (1, 0), (2, 0), (0, 1)])
    with pytest.raises(TropError, match="degenerate cell"):
        cell_dual_point(degenerate, ProjPoint((0, 0, 0, 0)), (1, 2, 3))


def test_is_maximal_modes(SQ, TRI5):
    S = regular_subdivision(SQ, ProjPoint((1, 0, 0, 0)))
    assert is_maximal(S, "strict") and is_maximal(S, "lenient")
    flat = regular_subdivision(SQ, ProjPoint((0, 0, 0, 0)))
    assert not is_maximal(flat, "strict") and not is_maximal(flat, "lenient")
    # lift the two mid-edge points above the hull: a one-triangle
    # subdivision, lenient-maximal but omitting points 2 and 4
    S2 = regular_subdivision(TRI5, ProjPoint((0, 5, 0, 1, 0)))
    assert S2.cells == ((1, 3, 5),)
    assert S2.used == frozenset({1, 3, 5})
    assert is_maximal(S2, "lenient") and not is_maximal(S2, "strict")


def test_squared_distance_heights_on_cocircular_points(HEX6):
    # the four points (0,0),(1,0),(0,1),(1,1) are cocircular, so the
    # squared-distance lift leaves a square cell: not maximal
    c = ProjPoint([Fraction(r * r + s * s) for r, s, _ in HEX6.points])
    S = regular_subdivision(HEX6, c)
    assert (1, 2, 4, 5) in S.cells
    assert not is_maximal(S, "lenient")
    # dipping the middle point triangulates with every point used
    S2 = regular_subdivision(HEX6, ProjPoint((0, 1, 4, 1, 1, 4)))
    assert is_maximal(S2, "strict")


def test_secondary_cone_membership(SQ):
    S = regular_subdivision(SQ, ProjPoint((1, 0, 0, 0)))
    assert secondary_cone_contains(SQ, S, ProjPoint((2, 0, 0, 0)))
    assert not secondary_cone_contains(SQ, S, ProjPoint((0, 0, 0, 0)))
    # raising a4 keeps the diagonal 2-3; lowering it flips the diagonal
    assert secondary_cone_contains(SQ, S, ProjPoint((0, 0, 0, 1)))
    assert not secondary_cone_contains(SQ, S, ProjPoint((0, 0, 0, -1)))
    assert regular_subdivision(SQ, ProjPoint((0, 0, 0, -1))).cells == ((1, 2, 4), (1, 3, 4))


def _brute_lower_hull_cells(A, c):
    """Independent lower-hull oracle: a subset is a cell iff it is the
    full equality set of some supporting plane with everything above."""
    cells = set()
    idx = list(A.indices())
    for tri in combinations(idx, 3):
        (r1, s1), (r2, s2), (r3, s3) = (A.rs(i) for i in tri)
        det = (r2 - r1) * (s3 - s1) - (s2 - s1) * (r3 - r1)
        if det == 0:
            continue
        h1, h2, h3 = (c[i - 1] for i in tri)
        alpha = Fraction((h2 - h1) * (s3 - s1) - (h3 - h1) * (s2 - s1), det)
        beta = Fraction((h3 - h1) * (r2 - r1) - (h2 - h1) * (r3 - r1), det)
        gamma = h1 - alpha * r1 - beta * s1
        diffs = [c[m - 1] - (alpha * A.rs(m)[0] + beta * A.rs(m)[1] + gamma) for m in idx]
        if all(d >= 0 for d in diffs):
            cells.add(tuple(m for m, d in zip(idx, diffs) if d == 0))
    return tuple(sorted(cells))


def test_lower_hull_against_brute_force():
    rng = random.Random(11)
    for _ in range(40):
        A = rand_support(rng, rng.randint(4, 7))
        c = ProjPoint([Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in A.indices()])
        assert regular_subdivision(A, c).cells == _brute_lower_hull_cells(A, c)
        assert secondary_cone_contains(A, regular_subdivision(A, c), c)


def test_duality_on_random_instances():
    rng = random.Random(12)
    for _ in range(25):
        A = rand_support(rng, rng.randint(4, 6))
        c = ProjPoint([Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in A.indices()])
        cv = dual_curve(A, c)
        pts = [v.point for v in cv.vertices]
        for v in cv.vertices:
            prof = min_profile(support_values(A, c, v.point))
            assert prof.argmin == frozenset(v.cell)
        for e in cv.edges:
            p, q = pts[e.a], pts[e.b]
            for lam in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
                mid = ProjPoint([a + lam * (b - a) for a, b in zip(p.coords, q.coords)])
                prof = min_profile(support_values(A, c, mid))
                assert prof.argmin == frozenset(e.dual)
        for r in cv.rays:
            base = pts[r.vertex]
            for t in (1, 2):
                far = ProjPoint(
                    (base[0] + t * r.direction[0], base[1] + t * r.direction[1], 0)
                )
                prof = min_profile(support_values(A, c, far))
                assert prof.argmin == frozenset(r.dual)


def test_edge_criterion_by_breakpoints():
    # a_i and a_j span a 1-face alone iff some curve point has argmin {i,j}
    rng = random.Random(13)
    for _ in range(15):
        A = rand_support(rng, rng.randint(4, 6))
        c = ProjPoint([Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in A.indices()])
        cv = dual_curve(A, c)
        pts = [v.point for v in cv.vertices]
        witnessed = set()
        for e in cv.edges:
            p, q = pts[e.a], pts[e.b]
            mid = ProjPoint([(a + b) / 2 for a, b in zip(p.coords, q.coords)])
            witnessed.add(min_profile(support_values(A, c, mid)).argmin)
        for r in cv.rays:
            base = pts[r.vertex]
            far = ProjPoint((base[0] + r.direction[0], base[1] + r.direction[1], 0))
            witnessed.add(min_profile(support_values(A, c, far)).argmin)
        joined = {frozenset(f.dual) for f in list(cv.edges) + list(cv.rays)}
        pair_witnesses = {w for w in witnessed if len(w) == 2}
        assert pair_witnesses == {j for j in joined if len(j) == 2}
