import random

import pytest

from soclekit.augment import with_upper_corners
from soclekit.instances import random_antichain, random_bounds, random_incomparable_pair
from soclekit.lattice import Antichain
from soclekit.oracle import enumerate_zero_dim_ideals
from soclekit.reconstruct import (
    classify_ideal,
    is_pure_power,
    pseudo_partition,
    retrieve_generators,
    socle_to_generators,
    type2_generators,
    zero_dim_ideal_from_socle,
)
from soclekit.updown import UpSet, socle_down

WORKED = Antichain([(2, 2, 3), (3, 3, 2)])
WORKED_GENS = Antichain([(2, 2, 4), (2, 3, 3), (2, 4, 2), (3, 2, 3), (4, 2, 2)])


class TestRetrieveGenerators:
    def test_worked_round_trip(self):
        socle = socle_down(UpSet(with_upper_corners(WORKED)))
        assert retrieve_generators(socle) == WORKED

    def test_singleton_round_trip(self):
        ac = Antichain([(2, 5, 1)])
        socle = socle_down(UpSet(with_upper_corners(ac)))
        assert retrieve_generators(socle) == ac

    def test_random_round_trips(self):
        rng = random.Random(101)
        for _ in range(80):
            d = rng.randint(2, 4)
            ac = random_antichain(rng, d, 6)
            lo, hi = random_bounds(rng, ac)
            socle = socle_down(UpSet(with_upper_corners(ac, lo, hi)))
            assert retrieve_generators(socle) == ac

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            retrieve_generators(Antichain())


class TestSocleToGenerators:
    def test_worked_default(self):
        assert socle_to_generators(WORKED) == WORKED_GENS

    def test_worked_wide_corners(self):
        assert socle_to_generators(WORKED, (0, 0, 1), (5, 6, 7)) == Antichain(
            [(1, 1, 4), (1, 3, 3), (1, 4, 2), (3, 1, 3), (4, 1, 2)]
        )

    def test_singleton_low_corner_gives_pure_powers(self):
        assert socle_to_generators(Antichain([(2, 1, 3)]), (-1, -1, -1), None) == Antichain(
            [(3, 0, 0), (0, 2, 0), (0, 0, 4)]
        )

    def test_random_round_trips(self):
        rng = random.Random(202)
        for _ in range(80):
            d = rng.randint(2, 4)
            ac = random_antichain(rng, d, 6)
            lo, hi = random_bounds(rng, ac)
            gens = socle_to_generators(ac, lo, hi)
            assert socle_down(UpSet(gens)) == ac


class TestZeroDim:
    def test_singleton_gives_pure_powers(self):
        assert zero_dim_ideal_from_socle(Antichain([(4, 0, 2)])) == Antichain(
            [(5, 0, 0), (0, 1, 0), (0, 0, 3)]
        )

    def test_worked_pair(self):
        assert zero_dim_ideal_from_socle(WORKED) == Antichain(
            [(3, 0, 3), (0, 3, 3), (0, 0, 4), (4, 0, 0), (0, 4, 0)]
        )

    def test_independent_of_upper_corner(self):
        rng = random.Random(303)
        for _ in range(40):
            d = rng.randint(2, 4)
            ac = random_antichain(rng, d, 4, lo=0, hi=6)
            base = zero_dim_ideal_from_socle(ac)
            wide = tuple(max(p[j] for p in ac) + 1 + rng.randint(0, 4) for j in range(d))
            assert zero_dim_ideal_from_socle(ac, wide) == base

    def test_output_contains_pure_power_per_axis(self):
        rng = random.Random(404)
        for _ in range(40):
            d = rng.randint(1, 4)
            ac = random_antichain(rng, d, 4, lo=0, hi=6)
            gens = zero_dim_ideal_from_socle(ac)
            axes = set()
            for g in gens:
                assert all(c >= 0 for c in g)
                if is_pure_power(g):
                    axes.add(max(range(d), key=lambda i: g[i]))
            assert axes == set(range(d))

    def test_socle_round_trip(self):
        rng = random.Random(505)
        for _ in range(40):
            d = rng.randint(2, 4)
            ac = random_antichain(rng, d, 4, lo=0, hi=6)
            assert socle_down(UpSet(zero_dim_ideal_from_socle(ac))) == ac

    def test_negative_coordinates_rejected(self):
        with pytest.raises(ValueError):
            zero_dim_ideal_from_socle(Antichain([(-1, 2), (2, -2)]))

    def test_tiny_exhaustive_uniqueness(self):
        by_socle = {}
        for gens in enumerate_zero_dim_ideals(2, 2):
            socle = socle_down(UpSet(gens))
            assert socle not in by_socle
            by_socle[socle] = gens
            assert zero_dim_ideal_from_socle(socle) == gens


class TestPseudoPartition:
    def test_worked_pair(self):
        parts = pseudo_partition((2, 2, 3), (3, 3, 2))
        assert parts.below == {0, 1}
        assert parts.equal == frozenset()
        assert parts.above == {2}

    def test_plain_swap(self):
        parts = pseudo_partition((1, 5), (5, 1))
        assert (parts.below, parts.above) == ({0}, {1})

    def test_with_tie(self):
        parts = pseudo_partition((1, 2, 2), (2, 2, 1))
        assert parts.below == {0}
        assert parts.equal == {1}
        assert parts.above == {2}

    def test_comparable_rejected(self):
        with pytest.raises(ValueError):
            pseudo_partition((1, 2), (2, 3))
        with pytest.raises(ValueError):
            pseudo_partition((1, 1), (1, 1))


class TestType2:
    def test_worked_pair(self):
        assert type2_generators((2, 2, 3), (3, 3, 2)) == Antichain(
            [(3, 0, 3), (0, 3, 3), (0, 0, 4), (4, 0, 0), (0, 4, 0)]
        )

    def test_plane_pair(self):
        assert type2_generators((0, 1), (1, 0)) == Antichain([(1, 1), (0, 2), (2, 0)])

    def test_matches_generic_reconstruction(self):
        rng = random.Random(606)
        for _ in range(120):
            d = rng.randint(2, 6)
            p, q = random_incomparable_pair(rng, d)
            closed = type2_generators(p, q)
            assert closed == zero_dim_ideal_from_socle(Antichain([p, q]))
            parts = pseudo_partition(p, q)
            assert len(closed) == len(parts.below) * len(parts.above) + d

    def test_comparable_rejected(self):
        with pytest.raises(ValueError):
            type2_generators((1, 1), (2, 2))


class TestClassify:
    def test_gorenstein_shape(self):
        info = classify_ideal(Antichain([(3, 0), (0, 2)]))
        assert info.zero_dimensional
        assert info.socle_type == 1
        assert info.gorenstein

    def test_worked_generators_not_zero_dimensional(self):
        info = classify_ideal(WORKED_GENS)
        assert not info.zero_dimensional
        assert info.socle_type is None
        assert not info.gorenstein

    def test_type2_output_classifies_as_type_2(self):
        info = classify_ideal(type2_generators((2, 2, 3), (3, 3, 2)))
        assert info.zero_dimensional
        assert info.socle_type == 2
        assert not info.gorenstein

    def test_type_matches_socle_size(self):
        rng = random.Random(707)
        for _ in range(40):
            d = rng.randint(1, 4)
            ac = random_antichain(rng, d, 5, lo=0, hi=6)
            info = classify_ideal(zero_dim_ideal_from_socle(ac))
            assert info.zero_dimensional
            assert info.socle_type == len(ac)

    def test_gorenstein_iff_pure_powers(self):
        rng = random.Random(808)
        for _ in range(40):
            d = rng.randint(1, 4)
            ac = random_antichain(rng, d, 5, lo=0, hi=6)
            gens = zero_dim_ideal_from_socle(ac)
            info = classify_ideal(gens)
            pure_only = all(is_pure_power(g) for g in gens) and len(gens) == d
            assert info.gorenstein == pure_only == (len(ac) == 1)

    def test_maximal_ideal_is_type_1(self):
        info = classify_ideal(Antichain([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
        assert info.zero_dimensional
        assert info.socle_type == 1
        assert info.gorenstein
