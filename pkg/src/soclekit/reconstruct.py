"""Round trips between generating antichains and socle antichains.

A generating antichain, once corner-augmented, can be recovered exactly from
the socle of its upset; dually, any antichain is the socle of the ideal
generated by the minimal points above its corner-augmented downset.  For
socles in the nonnegative orthant there is a unique zero-dimensional ideal,
with closed forms for the one- and two-point cases.
"""

from __future__ import annotations

from dataclasses import dataclass

from .augment import with_lower_corners
from .lattice import Antichain, Point, as_point
from .updown import DownSet, UpSet, socle_down, socle_up


def retrieve_generators(socle: Antichain) -> Antichain:
    """Recover a generating antichain from the socle of its augmented upset.

    When ``socle`` equals socle_down of an upset spanned by a corner-augmented
    antichain, this returns exactly the un-augmented antichain.
    """
    if not len(socle):
        raise ValueError("cannot retrieve generators from an empty socle")
    return socle_up(DownSet(socle))


def socle_to_generators(socle: Antichain, lo=None, hi=None) -> Antichain:
    """Generators of a monomial ideal whose socle antichain is ``socle``.

    Computes the minimal points above the corner-augmented downset of
    ``socle``; socle_down of the upset they span returns ``socle`` again.
    Different admissible (lo, hi) give different ideals with the same socle.
    """
    if not len(socle):
        raise ValueError("the socle antichain must be nonempty")
    return socle_up(DownSet(with_lower_corners(socle, lo, hi)))


def zero_dim_ideal_from_socle(socle: Antichain, hi=None) -> Antichain:
    """Generators of the unique zero-dimensional ideal with the given socle.

    Requires all socle coordinates nonnegative.  Uses the lower corner point
    (-1, ..., -1); the result is independent of the admissible upper corner
    ``hi`` and contains a pure power of every variable.
    """
    if not len(socle):
        raise ValueError("the socle antichain must be nonempty")
    d = socle.dim
    for p in socle:
        if any(c < 0 for c in p):
            raise ValueError(f"socle point {p!r} has a negative coordinate")
    lo = (-1,) * d
    return socle_up(DownSet(with_lower_corners(socle, lo, hi)))


@dataclass(frozen=True)
class PseudoPartition:
    """Coordinate classes of an incomparable pair: p below, equal, p above q."""

    below: frozenset[int]
    equal: frozenset[int]
    above: frozenset[int]


def pseudo_partition(p: Point, q: Point) -> PseudoPartition:
    """Split the axes by how p compares with q coordinatewise (0-based).

    Rejects comparable pairs: incomparability is exactly what makes both the
    below and above classes nonempty.
    """
    p = as_point(p)
    q = as_point(q, len(p))
    below = frozenset(i for i in range(len(p)) if p[i] < q[i])
    equal = frozenset(i for i in range(len(p)) if p[i] == q[i])
    above = frozenset(i for i in range(len(p)) if p[i] > q[i])
    if not below or not above:
        raise ValueError(f"{p!r} and {q!r} are comparable")
    return PseudoPartition(below, equal, above)


def type2_generators(p: Point, q: Point) -> Antichain:
    """Closed-form generators of the zero-dimensional ideal with socle {p, q}.

    Mixed generators pair an axis where p wins low with one where q wins low;
    pure powers cover the rest.  The count is |below|*|above| + d.
    """
    p = as_point(p)
    q = as_point(q, len(p))
    if any(c < 0 for c in p) or any(c < 0 for c in q):
        raise ValueError("socle points must have nonnegative coordinates")
    parts = pseudo_partition(p, q)
    d = len(p)
    pts: set[Point] = set()
    for i in parts.below:
        for j in parts.above:
            pts.add(
                tuple(
                    p[i] + 1 if t == i else (q[j] + 1 if t == j else 0)
                    for t in range(d)
                )
            )
    for i in parts.equal | parts.above:
        pts.add(tuple(p[i] + 1 if t == i else 0 for t in range(d)))
    for i in parts.below:
        pts.add(tuple(q[i] + 1 if t == i else 0 for t in range(d)))
    return Antichain(pts)


def is_pure_power(p: Point) -> bool:
    """True for a point with exactly one positive coordinate and zeros elsewhere."""
    nonzero = [c for c in p if c != 0]
    return len(nonzero) == 1 and nonzero[0] > 0


@dataclass(frozen=True)
class IdealClassification:
    zero_dimensional: bool
    socle_type: int | None
    gorenstein: bool


def classify_ideal(gens: Antichain) -> IdealClassification:
    """Classify the monomial ideal spanned by ``gens``.

    Zero-dimensional iff every axis carries a pure-power generator; then the
    socle type is the size of the socle antichain, and type 1 means the ideal
    is exactly d pure powers (the Gorenstein case).
    """
    if not len(gens):
        return IdealClassification(False, None, False)
    d = gens.dim
    covered = set()
    for g in gens:
        if is_pure_power(g):
            covered.add(max(range(d), key=lambda i: g[i]))
    if covered != set(range(d)):
        return IdealClassification(False, None, False)
    socle = socle_down(UpSet(gens))
    k = len(socle)
    return IdealClassification(True, k, k == 1)
