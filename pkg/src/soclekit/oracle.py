"""Brute-force ground truth on bounded boxes.

Everything here scans finite windows point by point and applies the defining
predicates verbatim.  It is the correctness reference for the corner
enumeration in ``updown``, never a performance path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .augment import outer_bounds
from .lattice import Antichain, Point, as_point

DEFAULT_VOLUME_CAP = 10_000_000
_CHUNK = 1 << 14


@dataclass(frozen=True)
class Box:
    """An inclusive coordinate box lo..hi with a guard against huge scans."""

    lo: Point
    hi: Point

    def __post_init__(self):
        lo = as_point(self.lo)
        hi = as_point(self.hi, len(lo))
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if not all(a <= b for a, b in zip(lo, hi)):
            raise ValueError(f"box is empty: {lo!r}..{hi!r}")

    @property
    def volume(self) -> int:
        v = 1
        for a, b in zip(self.lo, self.hi):
            v *= b - a + 1
        return v

    def check_volume(self, cap: int = DEFAULT_VOLUME_CAP) -> None:
        if self.volume > cap:
            raise ValueError(f"box volume {self.volume} exceeds the cap {cap}")


def default_box(gens: Antichain, pad: int = 1) -> Box:
    """A box guaranteed to contain every socle candidate of ``gens``."""
    b = outer_bounds(gens)
    return Box(
        tuple(c - pad for c in b.lo),
        tuple(c + pad for c in b.hi),
    )


def _scan(gens: Antichain, box: Box, up: bool, cap: int) -> Antichain:
    box.check_volume(cap)
    d = gens.dim
    garr = np.asarray(gens.points, dtype=np.int64)
    shape = tuple(b - a + 1 for a, b in zip(box.lo, box.hi))
    lo = np.asarray(box.lo, dtype=np.int64)
    total = box.volume

    def member(chunk: np.ndarray) -> np.ndarray:
        # membership in the generated upset (g <= x) or downset (x <= g)
        if up:
            return (chunk[:, None, :] >= garr[None, :, :]).all(axis=2).any(axis=1)
        return (chunk[:, None, :] <= garr[None, :, :]).all(axis=2).any(axis=1)

    step = 1 if up else -1
    found: list[Point] = []
    for start in range(0, total, _CHUNK):
        flat = np.arange(start, min(start + _CHUNK, total))
        chunk = np.stack(np.unravel_index(flat, shape), axis=-1) + lo
        keep = ~member(chunk)
        for j in range(d):
            if not keep.any():
                break
            shifted = chunk.copy()
            shifted[:, j] += step
            keep &= member(shifted)
        for row in chunk[keep]:
            found.append(tuple(int(c) for c in row))
    return Antichain(found)


def brute_socle_down(gens: Antichain, box: Box, volume_cap: int = DEFAULT_VOLUME_CAP) -> Antichain:
    """Exhaustive socle of the upset of ``gens``: keep x with x outside and
    every x + e_j inside.

    The box must contain every candidate corner, i.e. the per-axis ranges of
    generator coordinates minus one.
    """
    if not len(gens):
        raise ValueError("need at least one generator")
    d = gens.dim
    for j in range(d):
        colmin = min(g[j] for g in gens) - 1
        colmax = max(g[j] for g in gens) - 1
        if colmin < box.lo[j] or colmax > box.hi[j]:
            raise ValueError(
                f"box too small on axis {j}: candidates span {colmin}..{colmax}"
            )
    return _scan(gens, box, up=True, cap=volume_cap)


def brute_socle_up(gens: Antichain, box: Box, volume_cap: int = DEFAULT_VOLUME_CAP) -> Antichain:
    """Exhaustive dual of brute_socle_down over the downset of ``gens``."""
    if not len(gens):
        raise ValueError("need at least one generator")
    d = gens.dim
    for j in range(d):
        colmin = min(g[j] for g in gens) + 1
        colmax = max(g[j] for g in gens) + 1
        if colmin < box.lo[j] or colmax > box.hi[j]:
            raise ValueError(
                f"box too small on axis {j}: candidates span {colmin}..{colmax}"
            )
    return _scan(gens, box, up=False, cap=volume_cap)


def enumerate_zero_dim_ideals(dimension: int, coord_cap: int) -> Iterator[Antichain]:
    """Every zero-dimensional generator antichain with socle inside [0, cap]^d.

    Generator coordinates range over [0, cap + 1]; each antichain contains a
    pure power on every axis.  Only meant for exhaustive uniqueness checks,
    hence the tiny-scale guard.
    """
    if dimension not in (1, 2):
        raise ValueError("exhaustive enumeration is limited to dimensions 1 and 2")
    if not 1 <= coord_cap <= 4:
        raise ValueError("exhaustive enumeration is limited to coord_cap in 1..4")
    top = coord_cap + 1
    if dimension == 1:
        for c in range(1, top + 1):
            yield Antichain([(c,)])
        return
    # dimension 2: staircases x_1 > ... > x_r = 0 with 0 = y_1 < ... < y_r,
    # anchored on both axes by pure powers
    for r in range(2, top + 2):
        for xs in itertools.combinations(range(1, top + 1), r - 1):
            for ys in itertools.combinations(range(1, top + 1), r - 1):
                xcol = list(reversed(xs)) + [0]
                ycol = [0] + list(ys)
                yield Antichain(zip(xcol, ycol))
