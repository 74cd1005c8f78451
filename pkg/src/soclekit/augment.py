"""Corner augmentation: extra generators that force bounded complements.

Augmenting an antichain with one extreme point per axis makes the generated
upset cofinite (or the downset corner-bounded), which is what lets the socle
operators and the reconstruction round trips work.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import Antichain, Point, as_point, maximal_elements, minimal_elements


@dataclass(frozen=True)
class Bounds:
    """A pair lo < hi with lo strictly below and hi strictly above a point set."""

    lo: Point
    hi: Point


def outer_bounds(points) -> Bounds:
    """Componentwise (min - 1, max + 1) over a nonempty point set."""
    pts = [as_point(p) for p in points]
    if not pts:
        raise ValueError("outer_bounds of an empty set is undefined")
    d = len(pts[0])
    lo = tuple(min(p[j] for p in pts) - 1 for j in range(d))
    hi = tuple(max(p[j] for p in pts) + 1 for j in range(d))
    return Bounds(lo, hi)


def upper_corners(lo: Point, hi: Point) -> Antichain:
    """The d points taking hi in exactly one coordinate and lo elsewhere."""
    lo, hi = as_point(lo), as_point(hi, len(lo))
    if not all(a < b for a, b in zip(lo, hi)):
        raise ValueError(f"need lo < hi in every coordinate, got {lo!r}, {hi!r}")
    d = len(lo)
    return Antichain(
        tuple(hi[j] if i == j else lo[i] for i in range(d)) for j in range(d)
    )


def lower_corners(lo: Point, hi: Point) -> Antichain:
    """The d points taking lo in exactly one coordinate and hi elsewhere."""
    lo, hi = as_point(lo), as_point(hi, len(lo))
    if not all(a < b for a, b in zip(lo, hi)):
        raise ValueError(f"need lo < hi in every coordinate, got {lo!r}, {hi!r}")
    d = len(lo)
    return Antichain(
        tuple(lo[j] if i == j else hi[i] for i in range(d)) for j in range(d)
    )


def _resolve_bounds(ac: Antichain, lo, hi) -> tuple[Point, Point]:
    bounds = outer_bounds(ac)
    if lo is None:
        lo = bounds.lo
    else:
        lo = as_point(lo, ac.dim)
        if not all(a <= m for a, m in zip(lo, bounds.lo)):
            raise ValueError(
                f"lower corner point {lo!r} must lie at or below {bounds.lo!r}"
            )
    if hi is None:
        hi = bounds.hi
    else:
        hi = as_point(hi, ac.dim)
        if not all(b >= m for b, m in zip(hi, bounds.hi)):
            raise ValueError(
                f"upper corner point {hi!r} must lie at or above {bounds.hi!r}"
            )
    return lo, hi


def with_upper_corners(ac: Antichain, lo=None, hi=None) -> Antichain:
    """Generators augmented so the spanned upset is cofinite.

    Adds upper_corners(lo, hi), defaulting to the antichain's own outer
    bounds.  For dimension >= 2 the union is itself an antichain of size
    len(ac) + d; in dimension 1 the corner collapses into the chain.
    """
    if not len(ac):
        raise ValueError("cannot augment an empty antichain")
    lo, hi = _resolve_bounds(ac, lo, hi)
    return minimal_elements(list(ac) + list(upper_corners(lo, hi)))


def with_lower_corners(ac: Antichain, lo=None, hi=None) -> Antichain:
    """Generators augmented so the spanned downset is corner-bounded.

    Dual of with_upper_corners: adds lower_corners(lo, hi).
    """
    if not len(ac):
        raise ValueError("cannot augment an empty antichain")
    lo, hi = _resolve_bounds(ac, lo, hi)
    return maximal_elements(list(ac) + list(lower_corners(lo, hi)))
