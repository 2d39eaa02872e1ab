import math

import pytest

from graph_shift.enumeration import EnumerationFilter, enumerate_translations
from graph_shift.euclid import (
    contaminate_torus,
    dirac,
    dirac_shift_loss,
    euclidean_on_grid,
    euclidean_on_torus,
    grid_slice,
    satisfies_large_grid_assumption,
)
from graph_shift.graph import coord_to_index, make_grid, make_torus
from graph_shift.mapping import compose, is_translation, property_report


def dirac_shifts(dims):
    return {
        euclidean_on_torus(dims, dirac(len(dims), i, s))
        for i in range(1, len(dims) + 1)
        for s in (1, -1)
    }


def test_dirac_vectors():
    assert dirac(2, 1, 1) == (1, 0)
    assert dirac(2, 2, -1) == (0, -1)
    assert dirac(3, 3, 1) == (0, 0, 1)
    with pytest.raises(IndexError):
        dirac(2, 3, 1)


def test_torus_shift_is_translation():
    g = make_torus([5, 5])
    m = euclidean_on_torus([5, 5], (1, 0))
    assert m.is_lossless()
    assert is_translation(g, m)


def test_torus_identity_and_diagonal_are_not_translations():
    g = make_torus([5, 5])
    ident = euclidean_on_torus([5, 5], (0, 0))
    assert ident.is_lossless() and not is_translation(g, ident)
    diag = euclidean_on_torus([5, 5], (1, 1))
    rep = property_report(g, diag)
    assert diag.is_lossless() and not rep.is_ec and rep.is_snp


def test_grid_shift_losses():
    assert euclidean_on_grid([6, 5], dirac(2, 1)).loss() == 5
    assert euclidean_on_grid([6, 5], dirac(2, 2)).loss() == 6
    assert euclidean_on_grid([6, 5], (0, 0)).loss() == 0


@pytest.mark.parametrize(
    "dims", [[4], [9], [2, 5], [3, 3], [4, 4, 4], [2, 3, 4], [10, 10]]
)
def test_grid_loss_formula_every_axis_and_sign(dims):
    for i in range(1, len(dims) + 1):
        for s in (1, -1):
            m = euclidean_on_grid(dims, dirac(len(dims), i, s))
            assert m.loss() == dirac_shift_loss(dims, i)
            assert is_translation(make_grid(dims), m)


def test_contamination_seeds_give_the_four_shifts():
    dims = [5, 5]
    g = make_torus(dims)
    v1 = coord_to_index((2, 2), dims)
    results = set()
    for w in sorted(g.neighbors(v1)):
        m, unique = contaminate_torus(g, dims, v1, w)
        assert unique
        assert m(v1) == w
        results.add(m)
    assert results == dirac_shifts(dims)


def test_contamination_flags_small_dims():
    dims = [4, 4]
    g = make_torus(dims)
    v1 = 1
    w = sorted(g.neighbors(v1))[0]
    m, unique = contaminate_torus(g, dims, v1, w)
    assert not unique
    assert m.is_lossless()


def test_contamination_rejects_non_adjacent_seed():
    dims = [5, 5]
    g = make_torus(dims)
    with pytest.raises(ValueError):
        contaminate_torus(g, dims, 1, coord_to_index((3, 3), dims))


def test_torus55_lossless_are_exactly_dirac():
    g = make_torus([5, 5])
    found = set(enumerate_translations(g, EnumerationFilter(lossless_only=True)))
    assert found == dirac_shifts([5, 5])


def test_torus44_has_non_dirac_lossless():
    g = make_torus([4, 4])
    found = set(enumerate_translations(g, EnumerationFilter(lossless_only=True)))
    extra = found - dirac_shifts([4, 4])
    assert extra
    w = next(iter(extra))
    assert w.is_lossless() and is_translation(g, w)


def test_shift_composition_is_additive():
    dims = [5, 5]
    e1 = euclidean_on_torus(dims, dirac(2, 1))
    e2 = euclidean_on_torus(dims, dirac(2, 2))
    assert compose(e2, e1) == euclidean_on_torus(dims, (1, 1))
    back = euclidean_on_torus(dims, dirac(2, 1, -1))
    assert compose(back, e1) == euclidean_on_torus(dims, (0, 0))


def test_large_grid_assumption():
    assert satisfies_large_grid_assumption([8, 3])
    assert not satisfies_large_grid_assumption([6, 5])
    assert satisfies_large_grid_assumption([3])
    assert not satisfies_large_grid_assumption([8, 2])


def test_grid_slices_partition():
    dims = [6, 5]
    assert len(grid_slice(dims, 1, 2)) == 5
    assert len(grid_slice(dims, 2, 5)) == 6
    seen = sorted(v for j in range(1, 7) for v in grid_slice(dims, 1, j))
    assert seen == list(range(1, 31))
    with pytest.raises(IndexError):
        grid_slice(dims, 1, 7)
