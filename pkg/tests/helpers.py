"""Shared instance builders for the test suite."""

import math
import random

from boundedchain import Simplex, build_slice
from boundedchain.generators import random_boundary, random_slice


def octahedron_tops():
    return [
        Simplex(t)
        for t in (
            (0, 1, 2),
            (0, 1, 4),
            (0, 2, 3),
            (0, 3, 4),
            (1, 2, 5),
            (1, 4, 5),
            (2, 3, 5),
            (3, 4, 5),
        )
    ]


def octahedron_slice(weights=None):
    return build_slice(octahedron_tops(), weights)


def punctured_octahedron():
    """Octahedron with (0,1,2) removed; its rim is kept as extra faces."""
    tops = [t for t in octahedron_tops() if t.vertices != (0, 1, 2)]
    rim = [Simplex(v) for v in ((0, 1), (0, 2), (1, 2))]
    cslice = build_slice(tops, extra_faces=rim)
    return cslice, cslice.chain_from_faces(rim)


def random_problem(seed, max_top=10, dim=2, weights=None, max_vertices=9):
    """Seeded random slice plus a boundary that is always realizable."""
    rng = random.Random(seed)
    lo = dim + 1
    n_v = rng.randint(lo + 1, max_vertices)
    cap = math.comb(n_v, dim + 1)
    n_top = rng.randint(1, min(max_top, cap))
    if weights is None:
        weights = rng.choice(["unit", "random"])
    cslice = random_slice(n_top, n_v, dim=dim, seed=seed, weights=weights)
    boundary = random_boundary(cslice, seed=seed)
    return cslice, boundary
