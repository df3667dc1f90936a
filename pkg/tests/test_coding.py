import numpy as np
import pytest

from latticescheme.core.coding import (
    ConstellationKind, build_inert_constellation, build_split_constellation, gfp_to_point,
    mannheim_distance, mannheim_weight, point_to_gfp, weight_table,
)
from latticescheme.core.gaussian import GaussInt, two_square
from latticescheme.core.quotient_ring import Residue, build_ring
from latticescheme.core.scheme import build_scheme
from latticescheme.exceptions import PreconditionError

from conftest import canonical_alphas
from test_quotient_ring import GF13_POINTS

PI = GaussInt(3, 2)


def test_gfp_to_point_matches_gf13_layout(ring_3_2i):
    for label, point in GF13_POINTS.items():
        assert gfp_to_point(label, PI) == point
        assert ring_3_2i.reduce(GaussInt(label)).rep == point


def test_gfp_to_point_examples():
    assert gfp_to_point(4, PI) == GaussInt(-1, 1)
    assert gfp_to_point(0, PI) == GaussInt(0)
    assert gfp_to_point(3, PI) == GaussInt(0, -2)


def test_point_to_gfp():
    assert point_to_gfp(GaussInt(-1, 1), PI) == 4
    assert point_to_gfp(GaussInt(0), PI) == 0
    assert [point_to_gfp(gfp_to_point(g, PI), PI) for g in range(13)] == list(range(13))
    # any lift of the class carries the same label
    assert point_to_gfp(GaussInt(-1, 1) + GaussInt(2, -1) * PI, PI) == 4


@pytest.mark.parametrize("p", [5, 13, 17])
def test_gfp_map_is_additive_bijection(p):
    pi = two_square(p)
    ring = build_ring(pi)
    points = [gfp_to_point(g, pi) for g in range(p)]
    assert len({ring.index_of(z) for z in points}) == p
    for g in range(p):
        for h in range(p):
            assert ring.index_of(points[(g + h) % p]) == ring.index_of(points[g] + points[h])


def test_gfp_rejects_bad_input():
    with pytest.raises(PreconditionError):
        gfp_to_point(1, GaussInt(2, 2))
    with pytest.raises(PreconditionError):
        gfp_to_point(13, PI)
    with pytest.raises(PreconditionError):
        point_to_gfp(GaussInt(1), GaussInt(7))


def test_split_constellation():
    constellation = build_split_constellation(PI)
    assert constellation.kind is ConstellationKind.SPLIT
    assert constellation.p == 13
    assert [label for label, _ in constellation.carrier] == list(range(13))
    assert dict(constellation.carrier) == GF13_POINTS


def test_inert_constellation_of_7():
    constellation = build_inert_constellation(7)
    assert constellation.kind is ConstellationKind.INERT
    assert len(constellation.points) == 49
    assert {(z.re, z.im) for z in constellation.points} == {(k, l) for k in range(-3, 4) for l in range(-3, 4)}


def test_inert_constellation_of_3():
    assert len(build_inert_constellation(3).points) == 9


@pytest.mark.parametrize("p", [5, 2, 9, 13])
def test_inert_constellation_rejects(p):
    with pytest.raises(PreconditionError):
        build_inert_constellation(p)


def test_mannheim_weight_examples(ring_3_2i):
    assert mannheim_weight(ring_3_2i, ring_3_2i.residues[0]) == 0
    assert mannheim_weight(ring_3_2i, ring_3_2i.reduce(GaussInt(4))) == 2
    assert mannheim_weight(ring_3_2i, ring_3_2i.reduce(GaussInt(1))) == 1


def test_mannheim_weight_beats_minimal_norm_rep():
    ring = build_ring(GaussInt(2, 2))
    # the class of 2 holds 2, -2, 2i, -2i; all of weight 2
    assert mannheim_weight(ring, ring.reduce(GaussInt(2))) == 2
    for res in ring.residues:
        assert mannheim_weight(ring, res) <= abs(res.rep.re) + abs(res.rep.im)


def test_mannheim_distance_examples(ring_3_2i):
    one, five = ring_3_2i.reduce(GaussInt(1)), ring_3_2i.reduce(GaussInt(5))
    assert mannheim_distance(ring_3_2i, one, one) == 0
    assert mannheim_distance(ring_3_2i, one, five) == 2
    assert mannheim_distance(ring_3_2i, one, five) == mannheim_weight(ring_3_2i, ring_3_2i.reduce(GaussInt(-4)))


def test_mannheim_rejects_foreign_residue(ring_3_2i):
    with pytest.raises(PreconditionError):
        mannheim_weight(ring_3_2i, Residue(GaussInt(9, 9), 1))
    with pytest.raises(PreconditionError):
        mannheim_distance(ring_3_2i, ring_3_2i.residues[0], Residue(GaussInt(9, 9), 1))


def test_mannheim_weight_constant_on_scheme_classes():
    for alpha in canonical_alphas(100):
        ring = build_ring(alpha)
        weights = weight_table(ring)
        for orbit in build_scheme(ring).orbits:
            assert len({weights[x] for x in orbit}) == 1, alpha


def test_mannheim_distance_is_a_metric():
    for alpha in canonical_alphas(50):
        ring = build_ring(alpha)
        n = ring.order
        d = np.array([[mannheim_distance(ring, x, y) for y in ring.residues] for x in ring.residues])
        assert np.array_equal(d, d.T)
        assert (np.diag(d) == 0).all()
        assert (d[~np.eye(n, dtype=bool)] > 0).all()
        assert (d[:, None, :] <= d[:, :, None] + d[None, :, :]).all()
