import random

import numpy as np
import pytest

from latticescheme.core.gaussian import GaussInt, I, norm
from latticescheme.core.quotient_ring import (
    Ordering, Residue, build_ring, invariant_factors, section,
)
from latticescheme.exceptions import OrderingError, PreconditionError

from conftest import canonical_alphas, in_lattice

# GF(13) labels and the points carrying them for α = 3+2i
GF13_POINTS = {
    0: GaussInt(0), 1: GaussInt(1), 2: GaussInt(2), 3: GaussInt(0, -2),
    4: GaussInt(-1, 1), 5: GaussInt(0, 1), 6: GaussInt(1, 1), 7: GaussInt(-1, -1),
    8: GaussInt(0, -1), 9: GaussInt(1, -1), 10: GaussInt(0, 2), 11: GaussInt(-2), 12: GaussInt(-1),
}


@pytest.mark.parametrize("alpha,order,factors", [
    (GaussInt(3, 2), 13, (1, 13)),
    (GaussInt(7), 49, (7, 7)),
    (GaussInt(2, 2), 8, (2, 4)),
    (GaussInt(1, 1), 2, (1, 2)),
])
def test_build(alpha, order, factors):
    ring = build_ring(alpha)
    assert ring.order == order
    assert ring.invariant_factors == factors
    assert invariant_factors(alpha) == factors
    assert len(ring.residues) == order
    assert ring.residues[0].rep == GaussInt(0)


@pytest.mark.parametrize("alpha", [GaussInt(0), GaussInt(1), I, GaussInt(0, -1)])
def test_build_rejects_zero_and_units(alpha):
    with pytest.raises(PreconditionError):
        build_ring(alpha)


def test_reduce_matches_gf13_layout(ring_3_2i):
    for label, point in GF13_POINTS.items():
        assert ring_3_2i.reduce(GaussInt(label)).rep == point


def test_reduce_examples(ring_3_2i):
    assert ring_3_2i.reduce(GaussInt(4)).rep == GaussInt(-1, 1)
    assert ring_3_2i.reduce(GaussInt(0)).rep == GaussInt(0)
    assert ring_3_2i.reduce(GaussInt(5)).rep == I


def test_representatives_have_minimal_norm():
    for alpha in [GaussInt(3, 2), GaussInt(2, 2), GaussInt(4, 1), GaussInt(3)]:
        ring = build_ring(alpha)
        for res in ring.residues:
            lifts = [res.rep + GaussInt(a, b) * alpha for a in range(-2, 3) for b in range(-2, 3)]
            assert norm(res.rep) == min(norm(z) for z in lifts)
            assert ring.reduce(res.rep) == res


def test_reduce_constant_on_classes():
    rng = random.Random(0)
    for alpha in canonical_alphas(200):
        ring = build_ring(alpha)
        for res in ring.residues[:20]:
            q = GaussInt(rng.randint(-50, 50), rng.randint(-50, 50))
            assert ring.reduce(res.rep + q * alpha) == res


def test_residue_count_equals_norm():
    for alpha in canonical_alphas(500):
        ring = build_ring(alpha)
        assert ring.order == norm(alpha)
        assert len({ring.index_of(r.rep) for r in ring.residues}) == norm(alpha)
        d1, d2 = ring.invariant_factors
        assert d2 % d1 == 0 and d1 * d2 == ring.order


def test_coords_examples(ring_2_2i, ring_3_2i):
    assert ring_2_2i.coords(ring_2_2i.reduce(GaussInt(0))) == (0, 0)
    g1, g2 = ring_2_2i.coordinate_basis
    assert ring_2_2i.coords(ring_2_2i.reduce(g2)) == (0, 1)
    assert ring_2_2i.coords(ring_2_2i.reduce(g1)) == (1, 0)
    assert ring_3_2i.coords(ring_3_2i.reduce(GaussInt(1))) == (0, 1)


def test_coords_rejects_foreign_residue(ring_3_2i):
    with pytest.raises(PreconditionError):
        ring_3_2i.coords(Residue(GaussInt(7, 7), 0))
    with pytest.raises(PreconditionError):
        ring_3_2i.coords(Residue(GaussInt(0), 99))


@pytest.mark.parametrize("alpha", [GaussInt(2, 2), GaussInt(3, 2), GaussInt(7), GaussInt(6, 8), GaussInt(10, 10)])
def test_coords_inverts_the_basis_expansion(alpha):
    ring = build_ring(alpha)
    g1, g2 = ring.coordinate_basis
    for res in ring.residues:
        c1, c2 = ring.coords(res)
        assert ring.reduce(c1 * g1 + c2 * g2) == res
        assert ring.from_coords(c1, c2) == res
    x, y = ring.residues[1], ring.residues[-1]
    cx, cy = ring.coords(x), ring.coords(y)
    assert ring.coords(ring.add(x, y)) == ((cx[0] + cy[0]) % ring.d1, (cx[1] + cy[1]) % ring.d2)


def test_coords_is_an_additive_bijection_up_to_norm_200():
    for alpha in canonical_alphas(200):
        ring = build_ring(alpha)
        d1, d2 = ring.invariant_factors
        coords = np.array([ring.coords(r) for r in ring.residues])
        assert {tuple(c) for c in coords.tolist()} == {(c1, c2) for c1 in range(d1) for c2 in range(d2)}
        assert ring.order == norm(alpha)

        re = np.array([r.rep.re for r in ring.residues])
        im = np.array([r.rep.im for r in ring.residues])
        # representatives are pairwise incongruent mod α
        same = in_lattice(alpha, re[:, None] - re[None, :], im[:, None] - im[None, :])
        assert np.array_equal(same, np.eye(ring.order, dtype=bool)), alpha
        # for every pair, the residue at the summed coordinates is x + y mod α
        s = ((coords[:, None, 0] + coords[None, :, 0]) % d1) * d2 + (coords[:, None, 1] + coords[None, :, 1]) % d2
        assert in_lattice(alpha, re[:, None] + re[None, :] - re[s], im[:, None] + im[None, :] - im[s]).all(), alpha


def test_section_is_a_right_inverse(ring_3_2i):
    assert section(ring_3_2i.residues[0]) == GaussInt(0)
    assert section(ring_3_2i.reduce(GaussInt(4))) == GaussInt(-1, 1)
    for res in ring_3_2i.residues:
        assert ring_3_2i.reduce(section(res)) == res
        assert ring_3_2i.section(res) == section(res)


def test_multiplication_by_i_permutes_residues():
    for alpha in canonical_alphas(60):
        ring = build_ring(alpha)
        image = [ring.rotate(r).index for r in ring.residues]
        assert sorted(image) == list(range(ring.order))
        assert image[0] == 0


def test_ordering_permutation(ring_2_2i, ring_3_2i):
    assert ring_2_2i.ordering_permutation(Ordering.COORDS) == list(range(8))
    assert ring_3_2i.ordering_permutation(Ordering.GFP) == list(range(13))
    with pytest.raises(OrderingError):
        ring_2_2i.ordering_permutation(Ordering.GFP)
    with pytest.raises(ValueError):
        ring_3_2i.ordering_permutation("natural")


def test_coords_order_for_2_2i(ring_2_2i):
    reps = [ring_2_2i.from_coords(c1, c2).rep for c1 in range(2) for c2 in range(4)]
    expected = [GaussInt(0), GaussInt(1), GaussInt(2), GaussInt(3),
                GaussInt(1, 1), GaussInt(2, 1), GaussInt(3, 1), GaussInt(4, 1)]
    assert [ring_2_2i.reduce(z) for z in expected] == [ring_2_2i.reduce(z) for z in reps]


def test_inert_prime_power_point_counts():
    for p in (3, 7):
        assert build_ring(GaussInt(p)).order == p ** 2
        assert build_ring(GaussInt(p * p)).order == p ** 4
