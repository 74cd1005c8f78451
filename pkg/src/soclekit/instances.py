"""Seeded random instances for the verification suites and tests."""

from __future__ import annotations

import itertools
import random

from .lattice import Antichain, Point, minimal_elements
from .augment import outer_bounds


def random_point(rng: random.Random, dim: int, lo: int, hi: int) -> Point:
    return tuple(rng.randint(lo, hi) for _ in range(dim))


def random_antichain(
    rng: random.Random, dim: int, max_points: int, lo: int = 1, hi: int = 7
) -> Antichain:
    """Minimal elements of a random sample; nonempty, at most max_points points."""
    pts = [random_point(rng, dim, lo, hi) for _ in range(max_points)]
    return minimal_elements(pts)


def random_bounds(
    rng: random.Random, ac: Antichain, slack: int = 3
) -> tuple[Point, Point]:
    """A random admissible corner pair: at/below min-1 and at/above max+1."""
    b = outer_bounds(ac)
    lo = tuple(c - rng.randint(0, slack) for c in b.lo)
    hi = tuple(c + rng.randint(0, slack) for c in b.hi)
    return lo, hi


def random_incomparable_pair(
    rng: random.Random, dim: int, hi: int = 9
) -> tuple[Point, Point]:
    """Two incomparable points in [0, hi]^dim (needs dim >= 2)."""
    if dim < 2:
        raise ValueError("incomparable pairs need dimension >= 2")
    while True:
        p = random_point(rng, dim, 0, hi)
        q = random_point(rng, dim, 0, hi)
        if any(a < b for a, b in zip(p, q)) and any(a > b for a, b in zip(p, q)):
            return p, q


def random_order_generic_triple(
    rng: random.Random, dim: int, hi: int = 9
) -> Antichain:
    """An order-generic 3-point antichain in [0, hi]^dim (needs dim >= 6).

    The first six axes realize the six strict orderings of the points (in a
    random arrangement), the rest are arbitrary; realizing every strict order
    already forces pairwise incomparability.
    """
    if dim < 6:
        raise ValueError("order-generic triples need dimension >= 6")
    if hi < 2:
        raise ValueError("need hi >= 2 to fit three distinct values")
    perms = list(itertools.permutations(range(3)))
    rng.shuffle(perms)
    columns = []
    for axis in range(dim):
        if axis < 6:
            values = sorted(rng.sample(range(hi + 1), 3))
            perm = perms[axis]
            col = [0, 0, 0]
            for rank, point_idx in enumerate(perm):
                col[point_idx] = values[rank]
            columns.append(col)
        else:
            columns.append([rng.randint(0, hi) for _ in range(3)])
    pts = [tuple(col[u] for col in columns) for u in range(3)]
    if len(set(pts)) < 3:
        # distinct strict orders on the first axes make equality impossible
        raise AssertionError("constructed points collapsed")
    return Antichain(pts)
