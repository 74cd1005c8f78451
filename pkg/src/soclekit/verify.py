"""Named verification suites: seeded property runs behind the CLI and tests.

Every suite draws reproducible instances from a seed and reports each failed
trial verbatim so a counterexample can be rerun by hand.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .augment import with_lower_corners, with_upper_corners
from .generic import triple_classes, type3_count, type3_generators, union_subset_generators
from .instances import (
    random_antichain,
    random_bounds,
    random_incomparable_pair,
    random_order_generic_triple,
    random_point,
)
from .lattice import Antichain
from .oracle import brute_socle_down, brute_socle_up, default_box
from .reconstruct import (
    pseudo_partition,
    retrieve_generators,
    socle_to_generators,
    type2_generators,
    zero_dim_ideal_from_socle,
)
from .updown import DownSet, UpSet, socle_down, socle_up


@dataclass
class SuiteReport:
    suite: str
    trials: int
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [
            f"suite: {self.suite}",
            f"trials: {self.trials}",
            f"failures: {len(self.failures)}",
        ]
        out.extend(f"counterexample: {f}" for f in self.failures)
        out.extend(self.notes)
        out.append(f"elapsed_seconds: {self.elapsed:.2f}")
        out.append(f"status: {'pass' if self.passed else 'FAIL'}")
        return out


def run_roundtrip(seed: int, trials: int, dmax: int = 4, kmax: int = 6) -> SuiteReport:
    """Both reconstruction round trips on random antichains with random corners."""
    rng = random.Random(seed)
    report = SuiteReport("roundtrip", trials)
    start = time.perf_counter()
    dims = list(range(2, max(dmax, 2) + 1))
    for t in range(trials):
        d = dims[t % len(dims)]
        k = rng.randint(1, kmax)
        ac = random_antichain(rng, d, k, 1, 7)
        lo, hi = random_bounds(rng, ac)
        case = f"trial={t} antichain={sorted(ac.points)} lo={lo} hi={hi}"
        socle = socle_down(UpSet(with_upper_corners(ac, lo, hi)))
        if retrieve_generators(socle) != ac:
            report.failures.append(f"generator round trip broke: {case}")
        gens = socle_to_generators(ac, lo, hi)
        if socle_down(UpSet(gens)) != ac:
            report.failures.append(f"socle round trip broke: {case}")
    report.elapsed = time.perf_counter() - start
    return report


def run_duality(seed: int, trials: int, dmax: int = 4, kmax: int = 6) -> SuiteReport:
    """Translation equivariance and rotation duality of the socle operators."""
    rng = random.Random(seed)
    report = SuiteReport("duality", trials)
    start = time.perf_counter()
    for t in range(trials):
        d = 2 + t % max(1, dmax - 1)
        ac = random_antichain(rng, d, rng.randint(1, kmax), 1, 7)
        lo, hi = random_bounds(rng, ac)
        gens = with_upper_corners(ac, lo, hi)
        socle = socle_down(UpSet(gens))
        c = random_point(rng, d, -5, 5)
        case = f"trial={t} gens={sorted(gens.points)} c={c}"
        if socle_down(UpSet(gens.translate(c))) != socle.translate(c):
            report.failures.append(f"translation equivariance broke: {case}")
        if socle_up(DownSet(gens.rotate(c))) != socle.rotate(c):
            report.failures.append(f"rotation duality broke: {case}")
    report.elapsed = time.perf_counter() - start
    return report


def run_type2(seed: int, trials: int, dmax: int = 6) -> SuiteReport:
    """Closed-form two-point generators against the generic reconstruction."""
    rng = random.Random(seed)
    report = SuiteReport("type2", trials)
    start = time.perf_counter()
    for t in range(trials):
        d = 2 + t % max(1, dmax - 1)
        p, q = random_incomparable_pair(rng, d)
        case = f"trial={t} p={p} q={q}"
        closed = type2_generators(p, q)
        generic_route = zero_dim_ideal_from_socle(Antichain([p, q]))
        if closed != generic_route:
            report.failures.append(f"closed form disagrees: {case}")
        parts = pseudo_partition(p, q)
        expected = len(parts.below) * len(parts.above) + d
        if len(closed) != expected:
            report.failures.append(
                f"cardinality {len(closed)} != {expected}: {case}"
            )
    report.elapsed = time.perf_counter() - start
    return report


def run_type3(
    seed: int, trials: int, dmin: int = 6, dmax: int = 10, table: bool = True
) -> SuiteReport:
    """Order-generic three-point construction, union form, and count formula."""
    rng = random.Random(seed)
    report = SuiteReport("type3", trials)
    start = time.perf_counter()
    if table:
        report.notes.append("table: trial,dimension,generators,formula")
    for t in range(trials):
        d = rng.randint(dmin, dmax)
        ac = random_order_generic_triple(rng, d, hi=9)
        case = f"trial={t} socle={sorted(ac.points)}"
        closed = type3_generators(ac)
        generic_route = zero_dim_ideal_from_socle(ac)
        union = union_subset_generators(ac)
        formula = type3_count(triple_classes(ac).sizes, d)
        if closed != generic_route:
            report.failures.append(f"closed form disagrees: {case}")
        if union != frozenset(closed.points):
            report.failures.append(f"subset union disagrees: {case}")
        if formula != len(closed):
            report.failures.append(
                f"count formula {formula} != {len(closed)}: {case}"
            )
        if table:
            report.notes.append(f"table: {t},{d},{len(closed)},{formula}")
    report.elapsed = time.perf_counter() - start
    return report


def run_oracle(seed: int, trials: int, dmax: int = 3, kmax: int = 6) -> SuiteReport:
    """Corner enumeration against exhaustive box scans, both directions."""
    rng = random.Random(seed)
    report = SuiteReport("oracle", trials)
    start = time.perf_counter()
    for t in range(trials):
        d = 1 + t % dmax
        ac = random_antichain(rng, d, rng.randint(1, kmax), 1, 6)
        lo, hi = random_bounds(rng, ac, slack=1)
        up_gens = with_upper_corners(ac, lo, hi)
        down_gens = with_lower_corners(ac, lo, hi)
        case = f"trial={t} antichain={sorted(ac.points)} lo={lo} hi={hi}"
        if socle_down(UpSet(up_gens)) != brute_socle_down(up_gens, default_box(up_gens)):
            report.failures.append(f"socle_down disagrees with box scan: {case}")
        if socle_up(DownSet(down_gens)) != brute_socle_up(down_gens, default_box(down_gens)):
            report.failures.append(f"socle_up disagrees with box scan: {case}")
    report.elapsed = time.perf_counter() - start
    return report


SUITES = {
    "roundtrip": run_roundtrip,
    "duality": run_duality,
    "type2": run_type2,
    "type3": run_type3,
    "oracle": run_oracle,
}
