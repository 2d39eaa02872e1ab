"""Coordinate-shift mappings on grid and torus graphs.

On a torus every coordinate shift is lossless; on a grid, vertices pushed
out of range map to bottom. The contamination construction shows that on
large-enough tori (every dimension at least 5) single-step axis shifts are
the only lossless translations.
"""

from __future__ import annotations

import math

from .graph import Graph, coord_to_index, index_to_coord, make_grid, make_torus
from .mapping import BOTTOM, Mapping, full_mapping


def dirac(d, i, sign=1):
    """Signed unit vector ±e_i of length d."""
    if not 1 <= i <= d:
        raise IndexError(f"axis {i} out of range for {d} dimensions")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    vec = [0] * d
    vec[i - 1] = sign
    return tuple(vec)


def euclidean_on_torus(dims, delta):
    if len(delta) != len(dims):
        raise ValueError("delta length must match dims")
    g = make_torus(dims)
    image = {}
    for v in g.vertices:
        c = index_to_coord(v, dims)
        shifted = tuple((c[i] - 1 + delta[i]) % dims[i] + 1 for i in range(len(dims)))
        image[v] = coord_to_index(shifted, dims)
    return full_mapping(g, image)


def euclidean_on_grid(dims, delta):
    if len(delta) != len(dims):
        raise ValueError("delta length must match dims")
    g = make_grid(dims)
    image = {}
    for v in g.vertices:
        c = index_to_coord(v, dims)
        shifted = tuple(c[i] + delta[i] for i in range(len(dims)))
        if all(1 <= shifted[i] <= dims[i] for i in range(len(dims))):
            image[v] = coord_to_index(shifted, dims)
        else:
            image[v] = BOTTOM
    return full_mapping(g, image)


def contaminate_torus(g: Graph, dims, v1, image_of_v1):
    """Extend a single adjacent seed pair to the full axis shift.

    Returns (mapping, unique) where unique is True exactly when every
    dimension is at least 5, the regime in which the seed determines the
    lossless translation. The mapping itself is built directly as the
    shift by delta = image - v1; the step-by-step propagation only matters
    for the uniqueness argument.
    """
    if not g.has_edge(v1, image_of_v1):
        raise ValueError("seed pair must be adjacent")
    c1 = index_to_coord(v1, dims)
    c2 = index_to_coord(image_of_v1, dims)
    delta = tuple((c2[i] - c1[i]) % dims[i] for i in range(len(dims)))
    # Adjacency on the torus means delta is ±e_j mod dims.
    m = euclidean_on_torus(dims, delta)
    unique = all(d >= 5 for d in dims)
    return m, unique


def satisfies_large_grid_assumption(dims):
    """Every leading dimension dominates the tail product; last is >= 3."""
    d = len(dims)
    if dims[d - 1] < 3:
        return False
    for i in range(d - 1):
        tail = math.prod(dims[i + 1 :])
        if dims[i] < 2 + 2 * tail:
            return False
    return True


def grid_slice(dims, i, j):
    """Vertices whose i-th coordinate equals j, as a sorted list."""
    if not 1 <= i <= len(dims):
        raise IndexError(f"axis {i} out of range")
    if not 1 <= j <= dims[i - 1]:
        raise IndexError(f"slice index {j} out of range for axis {i}")
    n = math.prod(dims)
    out = [v for v in range(1, n + 1) if index_to_coord(v, dims)[i - 1] == j]
    return out


def dirac_shift_loss(dims, i):
    """Loss of a grid shift by ±e_i: the number of vertices in one slice."""
    if not 1 <= i <= len(dims):
        raise IndexError(f"axis {i} out of range")
    return math.prod(d for k, d in enumerate(dims, start=1) if k != i)
