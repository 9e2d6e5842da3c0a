import random
from fractions import Fraction

import pytest

from mhom.complexes import (BallCover, MetricComplex, PLMap,
                            mcshane_extension, refine_cover,
                            star_contraction)
from mhom.errors import GeometryError, InputError
from mhom.rational import dist2
from mhom import spaces


def segment(length=2):
    return MetricComplex(2, [(0, 0), (length, 0)], [(0,), (1,), (0, 1)])


def unit_square():
    verts = [(0, 0), (1, 0), (0, 1), (1, 1)]
    tops = [(0, 1, 3), (0, 2, 3)]
    sims = sorted({tuple(sorted(f)) for t in tops
                   for r in range(1, 4)
                   for f in __import__("itertools").combinations(t, r)})
    return MetricComplex(2, verts, sims)


def test_distances_exact(s1):
    a, b, c = s1.vertices
    assert s1.distance2(a, b) == 2
    assert s1.distance2(b, c) == 2
    assert s1.distance2(a, c) == 2


def test_containment_and_lookup(torus):
    for s in torus.top_simplices():
        pts = torus.points_of(s)
        mid = tuple(sum(col) / len(col) for col in zip(*pts))
        assert torus.contains_point(mid)
        assert torus.find_containing_simplex([mid]) is not None
    outside = tuple(Fraction(5) for _ in range(torus.ambient_dim))
    assert not torus.contains_point(outside)


def test_sample_vertices_grow(s1):
    d1 = set(s1.sample_vertices(1))
    d2 = set(s1.sample_vertices(2))
    assert d1 < d2
    assert set(s1.vertices) <= d1


def test_plmap_affine_identity_constant():
    ident = PLMap.identity(2)
    const = PLMap.constant((1, 2))
    p = (Fraction(1, 3), Fraction(2, 7))
    assert ident(p) == p
    assert const(p) == (1, 2)
    assert PLMap.coordinate(2, 1).scalar(p) == Fraction(2, 7)


def test_plmap_lipschitz_exact():
    stretch = PLMap.affine([[2, 0], [0, 1]])
    assert stretch.lipschitz_at_most(2)
    assert not stretch.lipschitz_at_most(Fraction(199, 100))
    assert abs(stretch.lipschitz_constant() - 2.0) < 1e-9


def test_plmap_hat_function():
    sq = unit_square()
    cells = [sq.points_of(s) for s in sq.top_simplices()]
    hat = PLMap.scalar_from_vertex_values(
        cells, lambda p: 1 if p == (0, 0) else 0)
    assert hat.scalar((Fraction(0), Fraction(0))) == 1
    assert hat.scalar((Fraction(1), Fraction(0))) == 0
    assert hat.scalar((Fraction(1, 2), Fraction(0))) == Fraction(1, 2)


def test_mcshane_two_point_interpolation():
    c = segment(2)
    data = [((Fraction(0), Fraction(0)), Fraction(0)),
            ((Fraction(2), Fraction(0)), Fraction(2))]
    ext = mcshane_extension(c, data, L=1, depth=2)
    assert ext.scalar((Fraction(0), Fraction(0))) == 0
    assert ext.scalar((Fraction(2), Fraction(0))) == 2
    assert ext.scalar((Fraction(1), Fraction(0))) == 1
    assert ext.scalar((Fraction(1, 2), Fraction(0))) == Fraction(1, 2)


def test_mcshane_rejects_bad_data():
    c = segment(2)
    data = [((Fraction(0), Fraction(0)), Fraction(0)),
            ((Fraction(2), Fraction(0)), Fraction(5))]
    with pytest.raises(GeometryError):
        mcshane_extension(c, data, L=1)


def test_mcshane_seeded_lipschitz(s1):
    rng = random.Random(3)
    pts = s1.sample_vertices(1)
    for _ in range(12):
        L = Fraction(rng.randrange(2, 7))
        slope = Fraction(rng.randrange(-L.numerator, L.numerator + 1))
        data = [(p, slope * p[0]) for p in rng.sample(pts, 3)]
        ext = mcshane_extension(s1, data, L, depth=1)
        for p, v in data:
            assert ext.scalar(p) == v
        # at the snap depth the values obey the modulus pairwise
        sample = rng.sample(pts, min(8, len(pts)))
        for a in sample:
            for b in sample:
                gap = ext.scalar(a) - ext.scalar(b)
                assert gap * gap <= L * L * dist2(a, b)


def test_star_contraction_unit_square():
    sq = unit_square()
    cells = [sq.points_of(s) for s in sq.top_simplices()]
    center = (Fraction(1, 2), Fraction(1, 2))
    h = star_contraction(sq, cells, center)
    for t in (0, Fraction(1, 3), 1):
        ht = h.at_time(t)
        for p in sq.sample_vertices(1):
            q = ht(p)
            assert sq.contains_point(q)
    assert h.at_time(1)((Fraction(1), Fraction(0))) == center
    assert h.at_time(0)((Fraction(1), Fraction(0))) == (1, 0)


def test_star_contraction_rejects_nonstar(s1):
    cells = [s1.points_of(s) for s in s1.top_simplices()]
    with pytest.raises(GeometryError):
        star_contraction(s1, cells, s1.vertices[0])


def test_covers_verify(s1, arcs2, arcs3, torus, torus_balls):
    assert arcs2.verify_covers(3) == []
    assert arcs3.verify_covers(3) == []
    assert torus_balls.verify_covers(2) == []


def test_non_covering_family_reports_witness(s1):
    bad = BallCover(s1, [
        {"center_simplex": 0, "barycentric": [Fraction(1)],
         "radius": Fraction(1, 2)},
    ])
    missed = bad.verify_covers(2)
    assert missed
    # every reported piece genuinely escapes the ball
    for tup in missed:
        assert not bad.simplex_inside(0, tup)


def test_empty_intersection_certificate(arcs3):
    assert arcs3.intersection_empty_certificate((0, 1, 2))
    assert not arcs3.intersection_empty_certificate((0, 1))


def test_refinement_map_identity(arcs3):
    assert arcs3.refinement_map(arcs3) == [0, 1, 2]


def test_refine_cover_certificates(s1, arcs3):
    fine, lam = refine_cover(arcs3)
    assert fine.verify_covers(3) == []
    assert len(lam) == len(fine)
    for c, r, j in zip(fine.centers, fine.radii, lam):
        gap = arcs3.radii[j] - r
        assert gap >= 0
        assert dist2(c, arcs3.centers[j]) <= gap * gap


def test_refine_cover_rejects_bad_factor(arcs3):
    with pytest.raises(InputError):
        refine_cover(arcs3, factor=2)


def test_relative_pair_unknown_name():
    c = spaces.load_space("disc_pair")
    with pytest.raises(InputError):
        c.relative_pair("nope")
