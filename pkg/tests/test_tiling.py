import pytest

from latticescheme.core.gaussian import GaussInt, I, is_gaussian_prime, norm
from latticescheme.core.quotient_ring import build_ring
from latticescheme.core.svg import STYLE, render_svg
from latticescheme.core.tiling import (
    TileType, classify_tile, clean_quotient_check, fundamental_representatives, is_clean_boundary,
    is_clean_odd, nearest_sublattice_points, parallelogram_coords, tile_report,
)
from latticescheme.exceptions import OrderingError, PreconditionError

from conftest import canonical_alphas


@pytest.mark.parametrize("alpha,tile_type", [
    (GaussInt(1, 1), TileType.ONE_PLUS_I),
    (GaussInt(-1, 1), TileType.ONE_PLUS_I),
    (GaussInt(3, 2), TileType.SPLIT_PRIME),
    (GaussInt(7), TileType.INERT_PRIME),
    (GaussInt(0, 3), TileType.INERT_PRIME),
    (GaussInt(2, 2), TileType.COMPOSITE),
    (GaussInt(5), TileType.COMPOSITE),
])
def test_classify_tile(alpha, tile_type):
    assert classify_tile(alpha) is tile_type


@pytest.mark.parametrize("alpha", [GaussInt(0), GaussInt(1), I])
def test_classify_rejects_zero_and_units(alpha):
    with pytest.raises(PreconditionError):
        classify_tile(alpha)


def test_non_composite_exactly_for_primes():
    for alpha in canonical_alphas(500):
        assert (classify_tile(alpha) is not TileType.COMPOSITE) == is_gaussian_prime(alpha)


def test_clean_odd():
    assert is_clean_odd(GaussInt(3, 2))
    assert not is_clean_odd(GaussInt(2, 2))
    assert is_clean_odd(GaussInt(7))


def test_clean_boundary_examples():
    assert is_clean_boundary(GaussInt(3, 2)) == (True, None)
    assert is_clean_boundary(GaussInt(2, 2)) == (False, GaussInt(1, 1))
    assert is_clean_boundary(GaussInt(1, 1)) == (False, GaussInt(1))


def test_boundary_witnesses_are_equidistant():
    assert nearest_sublattice_points(GaussInt(2, 2), GaussInt(1, 1)) == [GaussInt(0), GaussInt(2, 2)]
    nearest = nearest_sublattice_points(GaussInt(1, 1), GaussInt(1))
    assert set(nearest) == {GaussInt(0), GaussInt(2), GaussInt(1, 1), GaussInt(1, -1)}
    assert {norm(GaussInt(1) - c) for c in nearest} == {1}


def test_clean_criteria_agree():
    for alpha in canonical_alphas(150):
        clean, witness = is_clean_boundary(alpha)
        assert clean == is_clean_odd(alpha), alpha
        if not clean:
            assert len(nearest_sublattice_points(alpha, witness)) >= 2


def test_fundamental_representatives_of_2_2i():
    reps = fundamental_representatives(GaussInt(2, 2))
    assert set(reps) == {GaussInt(0), GaussInt(1), GaussInt(2), GaussInt(3),
                         GaussInt(1, 1), GaussInt(2, 1), GaussInt(1, -1), GaussInt(2, -1)}
    assert reps[0] == GaussInt(0)


def test_fundamental_representatives_of_one_plus_i():
    assert fundamental_representatives(GaussInt(1, 1)) == [GaussInt(0), GaussInt(1)]


def test_fundamental_representatives_biject_with_residues():
    for alpha in canonical_alphas(200):
        ring = build_ring(alpha)
        reps = fundamental_representatives(alpha)
        assert len(reps) == ring.order
        assert sorted(ring.index_of(z) for z in reps) == list(range(ring.order))
        for z in reps:
            u, v = parallelogram_coords(alpha, z)
            assert 0 <= u < 1 and 0 <= v < 1


def test_clean_quotient_check():
    report = clean_quotient_check(GaussInt(3, 2))
    assert report.passed and len(report.steps) == 1

    report = clean_quotient_check(GaussInt(5, 12))
    assert [s.order for s in report.steps] == [169, 13]
    assert report.passed

    report = clean_quotient_check(GaussInt(9))
    assert [s.order for s in report.steps] == [81, 9]
    assert report.passed

    with pytest.raises(PreconditionError):
        clean_quotient_check(GaussInt(2, 2))


def test_tile_report():
    report = tile_report(GaussInt(2, 2))
    assert report.tile_type is TileType.COMPOSITE
    assert not report.clean_boundary and not report.clean_odd
    assert report.boundary_witness == GaussInt(1, 1)
    assert len(report.representatives) == 8


def test_render_svg_filled_and_hollow_points():
    document = render_svg(GaussInt(2, 2))
    assert document.startswith('<svg ')
    assert 'xmlns="http://www.w3.org/2000/svg"' in document
    # default window is 5: an 11 x 11 grid with 8 filled representatives
    assert document.count(f'r="{STYLE["point_radius"]}"') == 121
    assert document.count('fill="white"') == 121 - 8
    assert document.count('<polygon') == 1


def test_render_svg_gf_labels():
    document = render_svg(GaussInt(3, 2), gfp_labels=True)
    assert document.count('<text') == 13
    with pytest.raises(OrderingError):
        render_svg(GaussInt(2, 2), gfp_labels=True)


def test_render_svg_quotient_grouping():
    document = render_svg(GaussInt(2, 2), zero_tilde=[0, 2])
    for color in STYLE['palette'][:4]:
        assert color in document
    assert STYLE['palette'][4] not in document


def test_render_svg_cap():
    with pytest.raises(PreconditionError):
        render_svg(GaussInt(3, 2), cap=10)
