"""Implicit upsets and downsets given by finite generating antichains.

The two socle operators live here: ``socle_down`` finds the maximal points
of the complement of a cofinite upset (the socle antichain of the matching
monomial ideal), ``socle_up`` the minimal points of the complement of a
corner-bounded downset (the minimal generators of the smallest ideal
avoiding it).
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import (
    Antichain,
    Point,
    as_point,
    maximal_elements,
    minimal_elements,
)


class NotCofiniteError(ValueError):
    """The upset's complement above its coordinate floor is infinite."""


class NotCorneredError(ValueError):
    """The downset's complement has no finite lower rim in some direction."""


@dataclass(frozen=True)
class UpSet:
    """All points above at least one generator: {x : g <= x for some g}."""

    gens: Antichain

    @classmethod
    def spanned_by(cls, points) -> "UpSet":
        return cls(minimal_elements(points))

    @property
    def dim(self) -> int | None:
        return self.gens.dim

    def __contains__(self, x) -> bool:
        x = as_point(x, self.dim)
        return any(all(gc <= xc for gc, xc in zip(g, x)) for g in self.gens)

    def contains(self, x) -> bool:
        return x in self


@dataclass(frozen=True)
class DownSet:
    """All points below at least one generator: {x : x <= g for some g}."""

    gens: Antichain

    @classmethod
    def spanned_by(cls, points) -> "DownSet":
        return cls(maximal_elements(points))

    @property
    def dim(self) -> int | None:
        return self.gens.dim

    def __contains__(self, x) -> bool:
        x = as_point(x, self.dim)
        return any(all(xc <= gc for gc, xc in zip(g, x)) for g in self.gens)

    def contains(self, x) -> bool:
        return x in self


def _require_axis_corners(gens: tuple[Point, ...], d: int, at_floor: bool) -> None:
    """Structural boundedness gate for the socle operators.

    An upset complement stays finite above its floor exactly when, for every
    axis j, some generator sits at the per-axis floor in all coordinates
    other than j (dually with ceilings for downsets).  Every augmented or
    zero-dimensional generating set has this shape.
    """
    if at_floor:
        edge = [min(g[i] for g in gens) for i in range(d)]
    else:
        edge = [max(g[i] for g in gens) for i in range(d)]
    for j in range(d):
        ok = any(
            all(g[i] == edge[i] for i in range(d) if i != j) for g in gens
        )
        if not ok:
            side = "floor" if at_floor else "ceiling"
            raise (NotCofiniteError if at_floor else NotCorneredError)(
                f"no generator pins axis {j}: need one at the {side} in every "
                f"other coordinate"
            )


def _socle_points(gens: tuple[Point, ...], d: int, sign: int) -> list[Point]:
    """Corner-candidate enumeration shared by both socle operators.

    ``sign=-1`` treats ``gens`` as upset generators and searches just below
    them, ``sign=+1`` treats them as downset generators and searches just
    above.  A point r is in the socle iff no generator covers r while for
    every axis j the step r - sign*e_j is covered; hence r[j] = g[j] + sign
    for some generator g, which bounds the candidates per axis by the
    distinct generator coordinates.

    The enumeration walks axes depth-first, keeping per branch only the
    generators that can still matter: the ones not yet violated ("clean")
    and, per decided axis, the potential witnesses (violated exactly there,
    by exactly one).  Branches die as soon as some decided axis has no
    witness left, fewer clean generators remain than undecided axes, or a
    clean generator can no longer be violated at all (the whole subtree then
    lies inside the generated set).
    """
    k = len(gens)
    vals = [sorted({g[j] + sign for g in gens}) for j in range(d)]
    if sign > 0:
        extreme = [max(v) for v in vals]
    else:
        extreme = [min(v) for v in vals]

    # safe_tail[i][t]: generator i cannot be violated on any axis >= t,
    # whatever candidate values are chosen there.
    safe_tail = []
    for g in gens:
        tail = [True] * (d + 1)
        for t in range(d - 1, -1, -1):
            if sign > 0:
                ok = extreme[t] <= g[t]
            else:
                ok = extreme[t] >= g[t]
            tail[t] = ok and tail[t + 1]
        safe_tail.append(tail)

    out: list[Point] = []
    prefix = [0] * d

    def descend(j: int, clean: list[int], wits: list[list[int]]) -> None:
        if j == d:
            if not clean:
                out.append(tuple(prefix))
            return
        need = d - j - 1
        for v in vals[j]:
            nclean: list[int] = []
            nwit: list[int] = []
            subtree_inside = False
            for i in clean:
                m = sign * (v - gens[i][j])
                if m <= 0:
                    if safe_tail[i][j + 1]:
                        subtree_inside = True
                        break
                    nclean.append(i)
                elif m == 1:
                    nwit.append(i)
            if subtree_inside or not nwit or len(nclean) < need:
                continue
            nwits = []
            for w in wits:
                nw = [i for i in w if sign * (v - gens[i][j]) <= 0]
                if not nw:
                    break
                nwits.append(nw)
            else:
                nwits.append(nwit)
                prefix[j] = v
                descend(j + 1, nclean, nwits)

    descend(0, list(range(k)), [])
    return out


def socle_down(upset: UpSet) -> Antichain:
    """Maximal points of the complement of a cofinite upset.

    Exactly the points r with r not in U and r + e_j in U for every axis j.
    Raises NotCofiniteError when the complement above the coordinate floor
    is infinite, which is detected structurally.
    """
    gens = upset.gens.points
    if not gens:
        raise NotCofiniteError("an upset with no generators has an unbounded complement")
    d = len(gens[0])
    _require_axis_corners(gens, d, at_floor=True)
    return Antichain(_socle_points(gens, d, -1))


def socle_up(downset: DownSet) -> Antichain:
    """Minimal points of the complement of a corner-bounded downset.

    Exactly the points r with r not in D and r - e_j in D for every axis j.
    Raises NotCorneredError when some direction has no finite lower rim.
    """
    gens = downset.gens.points
    if not gens:
        raise NotCorneredError("a downset with no generators has an unbounded complement")
    d = len(gens[0])
    _require_axis_corners(gens, d, at_floor=False)
    return Antichain(_socle_points(gens, d, +1))


@dataclass(frozen=True)
class CornerWitness:
    """A socle point together with the d generators that determine it.

    ``sources[j]`` indexes the generating antichain (in its sorted order);
    for socle_down output the witness satisfies
    ``gens[sources[j]][j] == point[j] + 1``.
    """

    point: Point
    sources: tuple[int, ...]


def socle_down_witnessed(upset: UpSet) -> tuple[CornerWitness, ...]:
    """socle_down plus, per point, one determining generator per axis.

    For each axis j the witness is the first generator lying below
    point + e_j; for antichain generators the d witnesses are distinct.
    """
    result = socle_down(upset)
    gens = upset.gens.points
    d = len(gens[0])
    witnessed = []
    for r in result:
        sources = []
        for j in range(d):
            shifted = tuple(c + 1 if i == j else c for i, c in enumerate(r))
            for idx, g in enumerate(gens):
                if all(gc <= sc for gc, sc in zip(g, shifted)):
                    sources.append(idx)
                    break
            else:
                raise AssertionError(f"no witness for {r!r} on axis {j}")
        witnessed.append(CornerWitness(r, tuple(sources)))
    return tuple(witnessed)
