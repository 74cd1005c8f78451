"""Coordinatewise weak orderings of an antichain and the order-generic case.

Each coordinate of a k-point antichain weakly orders the points; the induced
pseudo-partition of the axes drives closed-form generator constructions for
zero-dimensional ideals.  An antichain is order-generic when every strict
ordering of the points is realized by some axis, which requires d >= k! and
makes the subset-indexed generator sets below exact.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from typing import Collection, Iterable, Mapping, Sequence

from .lattice import Antichain, Point

# A weak ordering of point indices: blocks of tied indices, smallest values
# first, each block sorted.
WeakOrder = tuple[tuple[int, ...], ...]


class OrderGenericityWarning(UserWarning):
    """A subset generator set was computed for a non-order-generic antichain."""


class NotOrderGenericError(ValueError):
    """The operation is only valid for order-generic antichains."""


def weak_ordering(values: Sequence[int]) -> WeakOrder:
    """Canonical weak ordering of indices by their values, ties grouped."""
    by_value: dict[int, list[int]] = {}
    for idx, v in enumerate(values):
        by_value.setdefault(v, []).append(idx)
    return tuple(tuple(by_value[v]) for v in sorted(by_value))


@dataclass(frozen=True)
class CoordinateClassification:
    """Weak ordering of the antichain's points along every axis."""

    by_axis: tuple[WeakOrder, ...]

    def classes(self) -> dict[WeakOrder, frozenset[int]]:
        """Inverse view: each occurring weak ordering to its set of axes."""
        out: dict[WeakOrder, set[int]] = {}
        for axis, order in enumerate(self.by_axis):
            out.setdefault(order, set()).add(axis)
        return {w: frozenset(axes) for w, axes in out.items()}


def classify_coordinates(ac: Antichain) -> CoordinateClassification:
    if not len(ac):
        raise ValueError("cannot classify an empty antichain")
    pts = ac.points
    d = ac.dim
    return CoordinateClassification(
        tuple(weak_ordering([p[i] for p in pts]) for i in range(d))
    )


def is_order_generic(ac: Antichain) -> bool:
    """True iff every strict ordering of the points occurs on some axis."""
    k = len(ac)
    if k == 0:
        raise ValueError("order-genericity is undefined for an empty antichain")
    needed = math.factorial(k)
    if needed > ac.dim:
        return False
    strict_seen = set()
    for order in classify_coordinates(ac).by_axis:
        if all(len(block) == 1 for block in order):
            strict_seen.add(order)
    return len(strict_seen) == needed


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if n < 0 or k < 0:
        raise ValueError("stirling2 needs nonnegative arguments")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    row = [1] + [0] * k
    for i in range(1, n + 1):
        new = [0] * (k + 1)
        for j in range(1, min(i, k) + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[k]


def ordered_bell(k: int) -> int:
    """Number of weak orderings of k elements: sum of S(k, i) * i!."""
    if k < 0:
        raise ValueError("ordered_bell needs a nonnegative argument")
    if k == 0:
        return 1
    return sum(stirling2(k, i) * math.factorial(i) for i in range(1, k + 1))


def strict_min_coords(a: int, subset: Collection[int], ac: Antichain) -> frozenset[int]:
    """Axes where point ``a`` lies strictly below every other point of ``subset``.

    Shrinks as the subset grows.  Requires a to be a member of the subset.
    """
    pts = ac.points
    k = len(pts)
    members = set(subset)
    if not members <= set(range(k)):
        raise ValueError(f"subset {sorted(members)} is not within 0..{k - 1}")
    if a not in members:
        raise ValueError(f"index {a} is not in the subset {sorted(members)}")
    rivals = members - {a}
    return frozenset(
        i
        for i in range(ac.dim)
        if all(pts[a][i] < pts[b][i] for b in rivals)
    )


def subset_generators(subset: Collection[int], ac: Antichain) -> frozenset[Point]:
    """Candidate generator points contributed by a subset of socle points.

    Each point places one socle coordinate bump (value + 1) on a distinct
    axis where that socle point is the strict minimum of the subset, skipping
    axis tuples already claimed by a strictly larger subset.  For an
    order-generic antichain the union over all nonempty subsets is exactly
    the zero-dimensional generator antichain; a non-order-generic input is
    flagged with a warning as outside the construction's proven scope (in
    practice the exclusion still strips exactly the dominated candidates
    whenever the coordinates are nonnegative).
    """
    pts = ac.points
    k = len(pts)
    d = ac.dim
    chosen = sorted(set(subset))
    if not chosen:
        raise ValueError("the subset of socle points must be nonempty")
    if not is_order_generic(ac):
        warnings.warn(
            "subset generators of a non-order-generic antichain need not form "
            "an antichain",
            OrderGenericityWarning,
            stacklevel=2,
        )
    rest = [t for t in range(k) if t not in chosen]
    supersets = []
    for r in range(1, len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            supersets.append(chosen + list(extra))
    base = {t: sorted(strict_min_coords(t, chosen, ac)) for t in chosen}
    larger = {
        (t, idx): strict_min_coords(t, sup, ac)
        for idx, sup in enumerate(supersets)
        for t in chosen
    }
    out: set[Point] = set()
    for tup in itertools.product(*(base[t] for t in chosen)):
        if any(
            all(i in larger[(t, idx)] for t, i in zip(chosen, tup))
            for idx in range(len(supersets))
        ):
            continue
        coords = [0] * d
        for t, i in zip(chosen, tup):
            coords[i] = pts[t][i] + 1
        out.add(tuple(coords))
    return frozenset(out)


def union_subset_generators(ac: Antichain) -> frozenset[Point]:
    """Union of subset_generators over every nonempty subset of points."""
    k = len(ac)
    out: set[Point] = set()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OrderGenericityWarning)
        for r in range(1, k + 1):
            for subset in itertools.combinations(range(k), r):
                out |= subset_generators(subset, ac)
    return frozenset(out)


def _strict_key(u: int, v: int, w: int) -> WeakOrder:
    return ((u,), (v,), (w,))


def _tied_low_key(u: int, v: int, w: int) -> WeakOrder:
    return (tuple(sorted((u, v))), (w,))


def _tied_high_key(u: int) -> WeakOrder:
    v, w = sorted({0, 1, 2} - {u})
    return ((u,), (v, w))


_ALL_TIED_KEY: WeakOrder = ((0, 1, 2),)

TRIPLE_CLASS_KEYS: tuple[WeakOrder, ...] = tuple(
    [_strict_key(*p) for p in itertools.permutations(range(3))]
    + [_tied_low_key(u, v, w) for (u, v), w in
       [((0, 1), 2), ((0, 2), 1), ((1, 2), 0)]]
    + [_tied_high_key(u) for u in range(3)]
    + [_ALL_TIED_KEY]
)


@dataclass(frozen=True)
class TripleClasses:
    """The thirteen axis classes of a three-point antichain, plus derived views.

    Point indices refer to the antichain's sorted order.  The thirteen weak
    orderings of three points pseudo-partition the axes; the derived sets are
    the unions the type-3 generator formulas are phrased in.
    """

    dimension: int
    by_class: Mapping[WeakOrder, frozenset[int]]

    def axes(self, key: WeakOrder) -> frozenset[int]:
        return self.by_class.get(key, frozenset())

    def strict(self, u: int, v: int, w: int) -> frozenset[int]:
        """Axes with point u strictly below v strictly below w."""
        return self.axes(_strict_key(u, v, w))

    def tied_low(self, u: int, v: int, w: int) -> frozenset[int]:
        """Axes where u and v tie strictly below w."""
        return self.axes(_tied_low_key(u, v, w))

    def tied_high(self, u: int) -> frozenset[int]:
        """Axes where u lies strictly below the other two, which tie."""
        return self.axes(_tied_high_key(u))

    def all_tied(self) -> frozenset[int]:
        return self.axes(_ALL_TIED_KEY)

    def sole_min(self, u: int) -> frozenset[int]:
        """Axes where u is the unique minimum."""
        v, w = sorted({0, 1, 2} - {u})
        return self.strict(u, v, w) | self.strict(u, w, v) | self.tied_high(u)

    def sole_max(self, u: int) -> frozenset[int]:
        """Axes where u is the unique maximum."""
        v, w = sorted({0, 1, 2} - {u})
        return self.strict(v, w, u) | self.strict(w, v, u) | self.tied_low(v, w, u)

    def tied_max(self, u: int) -> frozenset[int]:
        """Axes where u ties for the maximum with exactly one other point."""
        v, w = sorted({0, 1, 2} - {u})
        return self.tied_high(v) | self.tied_high(w)

    def below_not_least(self, u: int, v: int) -> frozenset[int]:
        """Axes where u is strictly below v but not the unique minimum."""
        (w,) = {0, 1, 2} - {u, v}
        return self.tied_low(u, w, v) | self.strict(w, u, v)

    @property
    def sizes(self) -> dict[WeakOrder, int]:
        return {key: len(axes) for key, axes in self.by_class.items()}


def triple_classes(ac: Antichain) -> TripleClasses:
    """Classify the axes of a three-point antichain into the 13 weak orders."""
    if len(ac) != 3:
        raise ValueError(f"need exactly 3 points, got {len(ac)}")
    classes = classify_coordinates(ac).classes()
    return TripleClasses(ac.dim, classes)


def type3_generators(ac: Antichain) -> Antichain:
    """Generators of the zero-dimensional ideal with an order-generic 3-point socle.

    Assembled from the subset-indexed pieces: the full triple product, one
    mixed set per pair of socle points, and pure powers where a point is
    maximal.  Equals zero_dim_ideal_from_socle on its domain.
    """
    if len(ac) != 3:
        raise ValueError(f"need exactly 3 points, got {len(ac)}")
    if not is_order_generic(ac):
        raise NotOrderGenericError(
            "the closed-form type-3 construction requires an order-generic socle"
        )
    for p in ac:
        if any(c < 0 for c in p):
            raise ValueError(f"socle point {p!r} has a negative coordinate")
    cls = triple_classes(ac)
    pts = ac.points
    d = ac.dim
    out: set[Point] = set()

    def bump(assignments: Iterable[tuple[int, int]]) -> Point:
        coords = [0] * d
        for t, i in assignments:
            coords[i] = pts[t][i] + 1
        return tuple(coords)

    for i0 in cls.sole_min(0):
        for i1 in cls.sole_min(1):
            for i2 in cls.sole_min(2):
                out.add(bump([(0, i0), (1, i1), (2, i2)]))
    for u, v in [(0, 1), (0, 2), (1, 2)]:
        bl_uv = cls.below_not_least(u, v)
        bl_vu = cls.below_not_least(v, u)
        pairs = set(itertools.product(bl_uv, bl_vu))
        pairs |= set(itertools.product(bl_uv, cls.sole_min(v)))
        pairs |= set(itertools.product(cls.sole_min(u), bl_vu))
        for i, j in pairs:
            out.add(bump([(u, i), (v, j)]))
    for u in range(3):
        for i in cls.sole_max(u) | cls.tied_max(u) | cls.all_tied():
            out.add(bump([(u, i)]))
    return Antichain(out)


def type3_count(sizes: Mapping[WeakOrder, int], dimension: int) -> int:
    """Closed-form size of the type-3 generator antichain from class sizes.

    ``sizes`` maps the 13 weak-order keys of a 3-point classification to the
    number of axes in each class (zero classes may be omitted); they must sum
    to the dimension.
    """
    for key in sizes:
        if key not in TRIPLE_CLASS_KEYS:
            raise ValueError(f"unknown class key {key!r}")
    if sum(sizes.values()) != dimension:
        raise ValueError(
            f"class sizes sum to {sum(sizes.values())}, expected {dimension}"
        )

    def sz(key: WeakOrder) -> int:
        return sizes.get(key, 0)

    def sole_min(u: int) -> int:
        v, w = sorted({0, 1, 2} - {u})
        return sz(_strict_key(u, v, w)) + sz(_strict_key(u, w, v)) + sz(_tied_high_key(u))

    def sole_max(u: int) -> int:
        v, w = sorted({0, 1, 2} - {u})
        return (
            sz(_strict_key(v, w, u))
            + sz(_strict_key(w, v, u))
            + sz(_tied_low_key(v, w, u))
        )

    def below_not_least(u: int, v: int) -> int:
        (w,) = {0, 1, 2} - {u, v}
        return sz(_tied_low_key(u, w, v)) + sz(_strict_key(w, u, v))

    total = sole_min(0) * sole_min(1) * sole_min(2)
    for u, v in [(0, 1), (0, 2), (1, 2)]:
        total += below_not_least(u, v) * below_not_least(v, u)
        total += below_not_least(u, v) * sole_min(v)
        total += sole_min(u) * below_not_least(v, u)
    # the mixed sets for {u,v} and {u,w} overlap exactly on pairs drawn from
    # (sole minimum of u) x (axes where v and w tie strictly below u)
    for u in range(3):
        v, w = sorted({0, 1, 2} - {u})
        total -= sole_min(u) * sz(_tied_low_key(v, w, u))
    total += sum(sole_max(u) for u in range(3))
    total += sum(sz(_tied_high_key(u)) for u in range(3))
    total += sz(_ALL_TIED_KEY)
    return total
