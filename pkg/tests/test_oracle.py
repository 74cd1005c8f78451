import math
import random

import pytest

from soclekit.augment import with_lower_corners, with_upper_corners
from soclekit.instances import random_antichain, random_bounds
from soclekit.lattice import Antichain, is_antichain
from soclekit.oracle import (
    Box,
    brute_socle_down,
    brute_socle_up,
    default_box,
    enumerate_zero_dim_ideals,
)
from soclekit.updown import DownSet, UpSet, socle_down, socle_up

WORKED_GENS = Antichain([(2, 2, 4), (2, 3, 3), (2, 4, 2), (3, 2, 3), (4, 2, 2)])


class TestBox:
    def test_volume(self):
        assert Box((0, 0), (4, 9)).volume == 50

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            Box((0, 2), (4, 1))

    def test_volume_cap(self):
        big = Box((0, 0, 0), (999, 999, 999))
        with pytest.raises(ValueError):
            big.check_volume()
        with pytest.raises(ValueError):
            brute_socle_down(Antichain([(500, 500, 500)]), big)


class TestBruteSocleDown:
    def test_worked_example(self):
        box = Box((0, 0, 0), (5, 5, 5))
        assert brute_socle_down(WORKED_GENS, box) == Antichain(
            [(2, 2, 3), (3, 3, 2)]
        )

    def test_gorenstein(self):
        gens = Antichain([(3, 0, 0), (0, 2, 0), (0, 0, 4)])
        assert brute_socle_down(gens, default_box(gens)) == Antichain([(2, 1, 3)])

    def test_box_too_small_rejected(self):
        with pytest.raises(ValueError):
            brute_socle_down(WORKED_GENS, Box((2, 2, 2), (5, 5, 5)))

    def test_box_invariance(self):
        small = brute_socle_down(WORKED_GENS, Box((0, 0, 0), (5, 5, 5)))
        large = brute_socle_down(WORKED_GENS, Box((-3, -3, -3), (9, 9, 9)))
        assert small == large

    def test_agrees_with_corner_enumeration(self):
        rng = random.Random(13)
        for _ in range(120):
            d = rng.randint(1, 3)
            ac = random_antichain(rng, d, 5, 1, 6)
            gens = with_upper_corners(ac, *random_bounds(rng, ac, slack=1))
            assert brute_socle_down(gens, default_box(gens)) == socle_down(UpSet(gens))

    def test_agrees_in_dimension_four(self):
        rng = random.Random(43)
        for _ in range(15):
            ac = random_antichain(rng, 4, 6, 1, 5)
            gens = with_upper_corners(ac)
            assert brute_socle_down(gens, default_box(gens)) == socle_down(UpSet(gens))

    def test_no_structural_gate(self):
        # the scan tolerates inputs the corner enumeration rejects; here the
        # complement climbs along the axes forever, so no point is maximal
        gens = Antichain([(1, 1, 0), (1, 0, 1), (0, 1, 1)])
        result = brute_socle_down(gens, Box((-2, -2, -2), (4, 4, 4)))
        assert result == Antichain()


class TestBruteSocleUp:
    def test_worked_example(self):
        q_star = Antichain([(2, 2, 3), (3, 3, 2), (4, 4, 1), (4, 1, 4), (1, 4, 4)])
        assert brute_socle_up(q_star, Box((0, 0, 0), (6, 6, 6))) == WORKED_GENS

    def test_singleton_socle_from_cornered_downset(self):
        aug = with_lower_corners(Antichain([(2, 3)]), (-1, -1), (4, 5))
        box = Box((-1, -1), (6, 7))
        assert brute_socle_up(aug, box) == Antichain([(3, 0), (0, 4)])

    def test_two_point_staircase(self):
        gens = Antichain([(3, 1), (1, 3)])
        assert brute_socle_up(gens, Box((-1, -1), (5, 5))) == Antichain([(2, 2)])

    def test_agrees_with_corner_enumeration(self):
        rng = random.Random(23)
        for _ in range(120):
            d = rng.randint(1, 3)
            ac = random_antichain(rng, d, 5, 1, 6)
            gens = with_lower_corners(ac, *random_bounds(rng, ac, slack=1))
            assert brute_socle_up(gens, default_box(gens)) == socle_up(DownSet(gens))

    def test_agrees_in_dimension_four(self):
        rng = random.Random(53)
        for _ in range(15):
            ac = random_antichain(rng, 4, 6, 1, 5)
            gens = with_lower_corners(ac)
            assert brute_socle_up(gens, default_box(gens)) == socle_up(DownSet(gens))

    def test_outputs_are_antichains(self):
        rng = random.Random(33)
        for _ in range(40):
            ac = random_antichain(rng, 2, 4, 1, 5)
            gens = with_lower_corners(ac)
            assert is_antichain(brute_socle_up(gens, default_box(gens)))


class TestEnumerateZeroDim:
    def test_one_dimensional_chain(self):
        ideals = list(enumerate_zero_dim_ideals(1, 2))
        assert ideals == [Antichain([(1,)]), Antichain([(2,)]), Antichain([(3,)])]
        socles = [socle_down(UpSet(g)) for g in ideals]
        assert socles == [Antichain([(0,)]), Antichain([(1,)]), Antichain([(2,)])]

    def test_two_dimensional_inversion_table(self):
        seen = {}
        for gens in enumerate_zero_dim_ideals(2, 2):
            socle = socle_down(UpSet(gens))
            assert socle not in seen, f"socle {socle} hit twice"
            seen[socle] = gens
        for socle, gens in seen.items():
            assert all(all(c >= 0 for c in p) for p in socle)

    def test_count_matches_staircase_paths(self):
        # staircases with both axis anchors: choose the r-1 strictly
        # decreasing x values and the r-1 strictly increasing y values
        for cap in (1, 2, 3):
            top = cap + 1
            expected = sum(
                math.comb(top, r - 1) ** 2 for r in range(2, top + 2)
            )
            assert sum(1 for _ in enumerate_zero_dim_ideals(2, cap)) == expected

    def test_all_outputs_are_zero_dimensional_antichains(self):
        from soclekit.reconstruct import classify_ideal

        for gens in enumerate_zero_dim_ideals(2, 2):
            assert is_antichain(gens)
            assert classify_ideal(gens).zero_dimensional

    def test_scale_guards(self):
        with pytest.raises(ValueError):
            list(enumerate_zero_dim_ideals(3, 2))
        with pytest.raises(ValueError):
            list(enumerate_zero_dim_ideals(2, 5))
