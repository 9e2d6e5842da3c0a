import random
from fractions import Fraction

import pytest

from mhom.complexes import PLMap
from mhom.currents import (PolyhedralCurrent, equicontinuity_gap,
                           integral_of_product)
from mhom.errors import GeometryError, InputError
from mhom.rational import RadicalSum, dist2

F = Fraction


def line_current(*segs):
    return PolyhedralCurrent.from_tuples(
        1, [(w, ((F(a),), (F(b),))) for w, a, b in segs])


def square_current():
    a, b, c, d = (F(0), F(0)), (F(1), F(0)), (F(1), F(1)), (F(0), F(1))
    return PolyhedralCurrent.from_tuples(2, [(1, (a, b, c)), (1, (a, c, d))])


def x_map():
    return PLMap.coordinate(2, 0)


def y_map():
    return PLMap.coordinate(2, 1)


def test_reduce_merges_overlap():
    T = line_current((1, 0, 2), (1, 1, 3))
    red = T.reduce()
    assert len(red.pieces) == 3
    weights = sorted(abs(w) for w in red.pieces.values())
    assert weights == [1, 1, 2]
    assert T.mass() == RadicalSum.from_rational(4)
    assert T.equals(red)


def test_reduce_cancels_opposite_orientations():
    T = line_current((1, 0, 2), (1, 2, 0))
    assert T.is_zero()
    half = line_current((1, 0, 2), (-1, 0, 1))
    assert half.equals(line_current((1, 1, 2)))


def test_support_pieces_inside_originals():
    T = line_current((1, 0, 2), (1, 1, 3))
    originals = [(F(0), F(2)), (F(1), F(3))]
    for tup in T.support_pieces():
        xs = sorted(p[0] for p in tup)
        assert any(lo <= xs[0] and xs[-1] <= hi for lo, hi in originals)


def test_square_boundary_cancels_diagonal():
    edges = square_current().boundary().reduce()
    assert len(edges.pieces) == 4
    assert edges.mass() == RadicalSum.from_rational(4)
    assert edges.boundary().is_zero()


def test_boundary_squares_to_zero_seeded():
    rng = random.Random(21)
    for _ in range(20):
        items = []
        for _ in range(rng.randrange(1, 5)):
            tri = tuple((F(rng.randrange(0, 7)), F(rng.randrange(0, 7)))
                        for _ in range(3))
            items.append((rng.randrange(-3, 4) or 1, tri))
        T = PolyhedralCurrent.from_tuples(2, items, degree=2)
        assert T.boundary().boundary().is_zero()


def test_circulation_of_height_along_square():
    edges = square_current().boundary()
    assert edges.evaluate(y_map(), [x_map()]) == -1
    const = PLMap.constant((F(5),))
    assert edges.evaluate(y_map(), [const]) == 0


def test_point_evaluation():
    T = PolyhedralCurrent.from_tuples(2, [(3, ((F(1, 2), F(1, 3)),))],
                                      degree=0)
    assert T.evaluate(y_map(), []) == 1
    assert T.mass() == RadicalSum.from_rational(3)


def test_mass_frozen_values():
    tri = PolyhedralCurrent.from_tuples(
        2, [(1, ((F(0), F(0)), (F(1), F(0)), (F(0), F(1))))])
    assert tri.mass() == RadicalSum.from_rational(F(1, 2))
    seg = line_current((2, 0, 1))
    assert seg.mass() == RadicalSum.from_rational(2)
    assert PolyhedralCurrent.zero(2, 1).mass().is_zero()


def test_pushforward_identity_constant_and_mass_bound():
    T = square_current()
    assert T.pushforward(PLMap.identity(2)).equals(T)
    squash = T.pushforward(PLMap.constant((F(0), F(0))))
    assert squash.is_zero()
    stretch = PLMap.affine([[2, 0], [0, 1]])
    img = T.pushforward(stretch)
    assert img.mass() == RadicalSum.from_rational(2)
    # factor Lip(map)^degree with Lip = 2, degree = 2
    assert img.mass() <= T.mass().scale(4)


def test_restrict_scalar_splits_segment():
    T = line_current((1, 0, 1))
    g = PLMap.coordinate(1, 0)
    below, above = T.restrict_scalar(g, F(1, 3))
    assert below.mass() == RadicalSum.from_rational(F(1, 3))
    assert above.mass() == RadicalSum.from_rational(F(2, 3))
    assert (below + above).equals(T)
    lo, hi = T.restrict_scalar(g, 2)
    assert lo.equals(T) and hi.is_zero()
    lo, hi = T.restrict_scalar(g, -1)
    assert lo.is_zero() and hi.equals(T)
    with pytest.raises(GeometryError):
        T.restrict_scalar(g, 0)


def test_product_interval_boundary_identity():
    rng = random.Random(22)
    for _ in range(10):
        seg = line_current((rng.randrange(-2, 3) or 1, rng.randrange(0, 3),
                            rng.randrange(3, 6)))
        pr = seg.product_interval()
        want = (seg.embed_at_height(1) - seg.embed_at_height(0)
                - seg.boundary().product_interval())
        assert pr.boundary().equals(want)


def test_product_interval_point_and_zero():
    pt = PolyhedralCurrent.from_tuples(1, [(1, ((F(0),),))], degree=0)
    seg = pt.product_interval()
    assert seg.mass() == RadicalSum.from_rational(1)
    assert seg.boundary().equals(
        pt.embed_at_height(1) - pt.embed_at_height(0))
    assert PolyhedralCurrent.zero(1, 0).product_interval().is_zero()


def test_cone_fills_square_boundary():
    cyc = square_current().boundary()
    center = (F(1, 2), F(1, 2))
    filled = cyc.cone(center)
    assert filled.boundary().equals(cyc)
    assert filled.mass() == RadicalSum.from_rational(1)


def test_cone_boundary_identity_on_non_cycle():
    seg = line_current((1, 0, 1)).embed_at_height(0)
    cone = seg.cone((F(0), F(3)))
    want = seg - seg.boundary().cone((F(0), F(3)))
    assert cone.boundary().equals(want)


def test_cone_support_diameter():
    cyc = square_current().boundary()
    apex = (F(1, 2), F(1, 2))
    pts_before = set()
    for tup in cyc.support_pieces():
        pts_before.update(tup)
    pts_before.add(apex)
    pts_after = set()
    for tup in cyc.cone(apex).support_pieces():
        pts_after.update(tup)
    diam = lambda pts: max(dist2(p, q) for p in pts for q in pts)
    assert diam(pts_after) <= diam(pts_before)


def test_integral_of_product_frozen():
    seg = line_current((1, 0, 1))
    g = PLMap.coordinate(1, 0)
    # int_0^1 x * x dx = 1/3
    assert integral_of_product(seg, g, g) == RadicalSum.from_rational(F(1, 3))
    assert integral_of_product(seg, None, g) == \
        RadicalSum.from_rational(F(1, 2))


def test_equicontinuity_estimate():
    edges = square_current().boundary()
    f = y_map()
    pis = [x_map()]
    halfx = PLMap.affine([[F(1, 2), 0]])
    lhs, rhs = equicontinuity_gap(edges, f, pis, [halfx])
    assert lhs <= rhs
    lhs, rhs = equicontinuity_gap(edges, f, pis, pis)
    assert lhs.is_zero()
    assert lhs <= rhs


def test_equicontinuity_rejects_steep_entries():
    edges = square_current().boundary()
    steep = PLMap.affine([[2, 0]])
    with pytest.raises(InputError):
        equicontinuity_gap(edges, y_map(), [steep], [x_map()])


def test_degree_mismatch_rejected():
    edges = square_current().boundary()
    with pytest.raises(InputError):
        edges.evaluate(y_map(), [])
    with pytest.raises(InputError):
        PolyhedralCurrent.from_tuples(2, [(1, ((F(0), F(0)),))], degree=1)
