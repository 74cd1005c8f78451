"""Exact integer lattice points under the componentwise (dominance) order.

Points are plain tuples of Python ints, so every coordinate is exact and
addition can never overflow.  Under the exponent-vector correspondence a
point stands for a monomial and the dominance order mirrors divisibility.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Point = tuple[int, ...]


class DimensionMismatchError(ValueError):
    """Points of different lengths were mixed in one operation."""


class NotAntichainError(ValueError):
    """A point set contains two comparable points."""


def as_point(coords: Iterable[int], dim: int | None = None) -> Point:
    """Normalize ``coords`` to a point tuple, rejecting non-integer entries."""
    pt = tuple(coords)
    if not pt:
        raise ValueError("a point needs at least one coordinate")
    for c in pt:
        # bool is an int subclass; treat it as the type error it almost surely is
        if not isinstance(c, int) or isinstance(c, bool):
            raise TypeError(f"coordinates must be exact integers, got {c!r}")
    if dim is not None and len(pt) != dim:
        raise DimensionMismatchError(f"expected a point of dimension {dim}, got {pt!r}")
    return pt


def _same_dim(a: Point, b: Point) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError(f"dimension mismatch: {a!r} vs {b!r}")


def leq(a: Point, b: Point) -> bool:
    """True iff a is componentwise at most b."""
    _same_dim(a, b)
    return all(x <= y for x, y in zip(a, b))


def comparable(a: Point, b: Point) -> bool:
    return leq(a, b) or leq(b, a)


def translate_point(p: Point, by: Point) -> Point:
    _same_dim(p, by)
    return tuple(x + c for x, c in zip(p, by))


def rotate_point(p: Point, center: Point) -> Point:
    """The order-reversing involution x -> center - x."""
    _same_dim(p, center)
    return tuple(c - x for c, x in zip(center, p))


def _normalized(points: Iterable) -> list[Point]:
    pts = sorted({as_point(p) for p in points})
    for p in pts:
        if len(p) != len(pts[0]):
            raise DimensionMismatchError(f"mixed dimensions: {pts[0]!r} vs {p!r}")
    return pts


def is_antichain(points: Iterable) -> bool:
    """True iff no two distinct points of the set are comparable."""
    pts = _normalized(points)
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            # pts is sorted lexicographically, so q <= p is impossible here
            if all(x <= y for x, y in zip(p, q)):
                return False
    return True


class Antichain:
    """A finite set of pairwise incomparable points.

    Points are stored deduplicated and lexicographically sorted, so two
    antichains are equal exactly when they are equal as sets.  Instances are
    immutable and hashable.
    """

    __slots__ = ("points",)

    points: tuple[Point, ...]

    def __init__(self, points: Iterable = ()):
        pts = _normalized(points)
        for i, p in enumerate(pts):
            for q in pts[i + 1 :]:
                if all(x <= y for x, y in zip(p, q)):
                    raise NotAntichainError(f"comparable points: {p!r} <= {q!r}")
        object.__setattr__(self, "points", tuple(pts))

    def __setattr__(self, name, value):
        raise AttributeError("Antichain is immutable")

    @property
    def dim(self) -> int | None:
        """Common dimension of the points, or None for the empty antichain."""
        return len(self.points[0]) if self.points else None

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.points

    def __eq__(self, other) -> bool:
        if isinstance(other, Antichain):
            return self.points == other.points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        inner = ", ".join(repr(p) for p in self.points)
        return f"Antichain([{inner}])"

    def translate(self, by: Point) -> "Antichain":
        by = as_point(by, self.dim) if self.points else as_point(by)
        return Antichain(translate_point(p, by) for p in self.points)

    def rotate(self, center: Point) -> "Antichain":
        center = as_point(center, self.dim) if self.points else as_point(center)
        return Antichain(rotate_point(p, center) for p in self.points)


def minimal_elements(points: Iterable) -> Antichain:
    """Points of the set not strictly above any other point of the set."""
    pts = _normalized(points)
    kept: list[Point] = []
    for p in pts:
        # only earlier (lex-smaller) points can lie below p
        if not any(all(x <= y for x, y in zip(q, p)) for q in kept):
            kept.append(p)
    return Antichain(kept)


def maximal_elements(points: Iterable) -> Antichain:
    """Points of the set not strictly below any other point of the set."""
    pts = _normalized(points)
    kept: list[Point] = []
    for p in reversed(pts):
        if not any(all(x <= y for x, y in zip(p, q)) for q in kept):
            kept.append(p)
    return Antichain(kept)


def translate(points: Iterable, by: Point) -> set[Point]:
    """Shift every point of the set by ``by``; an order isomorphism."""
    by = as_point(by)
    return {translate_point(as_point(p, len(by)), by) for p in points}


def rotate(points: Iterable, center: Point) -> set[Point]:
    """Map every point x to center - x; an order anti-isomorphism and involution."""
    center = as_point(center)
    return {rotate_point(as_point(p, len(center)), center) for p in points}
