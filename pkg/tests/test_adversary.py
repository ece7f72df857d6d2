import itertools
import math
import random

import pytest

from atsp import (
    Instance,
    InvalidArgumentError,
    Ordering,
    Point,
    PointsRegion,
    SegmentRegion,
    TooLargeError,
    adversarial_value,
    adversarial_value_bruteforce,
    pair_route_worst,
    segment_pair_minmax,
)
from conftest import chosen_points, mixed_instance, points_instance, tour_length


def two_segments():
    return Instance(
        (
            SegmentRegion(Point(0, 0), Point(0, 1)),
            SegmentRegion(Point(1, 0), Point(1, 1)),
        )
    )


def triangle():
    return Instance(
        tuple(PointsRegion((Point(*c),)) for c in [(0, 0), (3, 0), (0, 4)])
    )


class TestOrdering:
    def test_canonicalizes_rotation(self):
        assert Ordering((2, 0, 1)).perm == (0, 1, 2)

    def test_canonicalizes_direction(self):
        assert Ordering((0, 2, 1)).perm == (0, 1, 2)
        assert Ordering((0, 5, 3, 1, 2, 4)).perm == (0, 4, 2, 1, 3, 5)

    def test_idempotent(self):
        o = Ordering((3, 1, 0, 2))
        assert Ordering(o.perm).perm == o.perm

    def test_same_cycle_same_canonical_form(self):
        base = [0, 3, 1, 4, 2]
        rotated = base[2:] + base[:2]
        reversed_ = list(reversed(base))
        assert Ordering(tuple(base)) == Ordering(tuple(rotated)) == Ordering(tuple(reversed_))

    def test_rejects_non_permutations(self):
        for bad in [(), (1,), (0, 0), (0, 2), (0, 1, 1)]:
            with pytest.raises(InvalidArgumentError):
                Ordering(bad)

    def test_small(self):
        assert Ordering((0,)).perm == (0,)
        assert Ordering((1, 0)).perm == (0, 1)


class TestAdversarialValue:
    def test_two_unit_segments_closed(self):
        inst = two_segments()
        # oracle first: enumerate the four endpoint pairs by hand
        cands = [[(0, 0), (0, 1)], [(1, 0), (1, 1)]]
        best = max(
            tour_length([p, q], closed=True) for p in cands[0] for q in cands[1]
        )
        assert best == pytest.approx(2 * math.sqrt(2), abs=1e-12)
        tour = adversarial_value(inst, Ordering((0, 1)), closed=True)
        assert tour.length == pytest.approx(best, abs=1e-9)
        assert tour.choice == (0, 1)  # lexicographically smallest of the two optima

    def test_two_unit_segments_open(self):
        tour = adversarial_value(two_segments(), Ordering((0, 1)), closed=False)
        assert tour.length == pytest.approx(math.sqrt(2), abs=1e-9)

    def test_triangle_both_orderings(self):
        inst = triangle()
        for perm in [(0, 1, 2), (0, 2, 1)]:
            assert adversarial_value(inst, Ordering(perm)).length == pytest.approx(12.0)

    def test_singletons_have_no_choice(self, rng):
        for _ in range(10):
            n = rng.randint(3, 7)
            inst = points_instance(rng, n, k=1)
            perm = tuple(rng.sample(range(n), n))
            tour = adversarial_value(inst, Ordering(perm))
            pts = chosen_points(inst, tour)
            assert tour.length == pytest.approx(tour_length(pts, True), abs=1e-9)
            assert tour.choice == tuple([0] * n)

    def test_two_singletons_doubled_edge(self):
        inst = Instance((PointsRegion((Point(0, 0),)), PointsRegion((Point(3, 4),))))
        tour = adversarial_value(inst, Ordering((0, 1)))
        assert tour.length == pytest.approx(10.0)

    def test_single_region_open_path(self):
        inst = Instance((PointsRegion((Point(1, 1), Point(2, 2))),))
        tour = adversarial_value(inst, Ordering((0,)), closed=False)
        assert tour.length == 0.0
        assert tour.choice == (0,)

    def test_ordering_must_match_instance(self):
        with pytest.raises(InvalidArgumentError):
            adversarial_value(triangle(), Ordering((0, 1)))

    def test_closed_needs_two_regions(self):
        inst = Instance((PointsRegion((Point(0, 0),)),))
        with pytest.raises(InvalidArgumentError):
            adversarial_value(inst, Ordering((0,)), closed=True)

    def test_length_recomputable_from_choice(self, rng):
        for closed in (True, False):
            for _ in range(15):
                n = rng.randint(2, 6)
                inst = mixed_instance(rng, n)
                tour = adversarial_value(inst, Ordering(tuple(range(n))), closed=closed)
                pts = chosen_points(inst, tour)
                assert tour.length == pytest.approx(tour_length(pts, closed), abs=1e-9)

    def test_rotating_ordering_keeps_value(self, rng):
        n = 6
        inst = mixed_instance(rng, n)
        base = rng.sample(range(n), n)
        v0 = adversarial_value(inst, Ordering(tuple(base))).length
        for k in range(1, n):
            v = adversarial_value(inst, Ordering(tuple(base[k:] + base[:k]))).length
            assert v == v0
        v = adversarial_value(inst, Ordering(tuple(reversed(base)))).length
        assert v == v0

    def test_adding_a_candidate_never_decreases_value(self, rng):
        for _ in range(15):
            n = rng.randint(3, 5)
            inst = points_instance(rng, n, k=2)
            perm = tuple(rng.sample(range(n), n))
            before = adversarial_value(inst, Ordering(perm)).length
            i = rng.randrange(n)
            grown = list(inst.regions)
            grown[i] = PointsRegion(
                grown[i].candidates + (Point(rng.uniform(0, 10), rng.uniform(0, 10)),)
            )
            after = adversarial_value(Instance(tuple(grown)), Ordering(perm)).length
            assert after >= before - 1e-12

    def test_scale_and_translation_equivariance(self, rng):
        n = 5
        inst = points_instance(rng, n, k=3)
        perm = tuple(rng.sample(range(n), n))
        base = adversarial_value(inst, Ordering(perm)).length
        s, dx, dy = 3.7, 11.0, -4.5
        scaled = Instance(
            tuple(
                PointsRegion(tuple(Point(s * p.x, s * p.y) for p in r.candidates))
                for r in inst.regions
            )
        )
        moved = Instance(
            tuple(
                PointsRegion(tuple(Point(p.x + dx, p.y + dy) for p in r.candidates))
                for r in inst.regions
            )
        )
        assert adversarial_value(scaled, Ordering(perm)).length == pytest.approx(
            s * base, abs=1e-9
        )
        assert adversarial_value(moved, Ordering(perm)).length == pytest.approx(
            base, abs=1e-9
        )


class TestBruteforceOracle:
    def test_matches_hand_enumeration_2x2x2(self):
        rnd = random.Random(5)
        cands = [
            [(rnd.uniform(0, 5), rnd.uniform(0, 5)) for _ in range(2)] for _ in range(3)
        ]
        inst = Instance(
            tuple(PointsRegion(tuple(Point(*c) for c in cs)) for cs in cands)
        )
        # all 2**3 = 8 combinations, by hand
        best = max(
            tour_length([cands[0][i], cands[1][j], cands[2][k]], closed=True)
            for i, j, k in itertools.product(range(2), repeat=3)
        )
        tour = adversarial_value_bruteforce(inst, Ordering((0, 1, 2)))
        assert tour.length == pytest.approx(best, abs=1e-12)

    def test_guard_on_combination_count(self):
        rnd = random.Random(1)
        inst = points_instance(rnd, 4, k=100)  # 10^8 combinations
        with pytest.raises(TooLargeError):
            adversarial_value_bruteforce(inst, Ordering((0, 1, 2, 3)))

    @pytest.mark.parametrize("closed", [True, False])
    def test_dp_matches_bruteforce(self, rng, closed):
        for _ in range(40):
            n = rng.randint(2, 6)
            inst = mixed_instance(rng, n)
            perm = tuple(rng.sample(range(n), n))
            a = adversarial_value(inst, Ordering(perm), closed=closed)
            b = adversarial_value_bruteforce(inst, Ordering(perm), closed=closed)
            assert a.length == pytest.approx(b.length, abs=1e-9)
            assert a.choice == b.choice

    def test_tie_break_on_symmetric_instance(self):
        # four unit vertical segments on the corners of a unit square: many
        # adversarial optima, all tied; both routes must pick the same one
        regs = tuple(
            SegmentRegion(Point(x, y - 0.5), Point(x, y + 0.5))
            for x, y in [(0, 0), (1, 0), (1, 1), (0, 1)]
        )
        inst = Instance(regs)
        for perm in [(0, 1, 2, 3), (0, 2, 1, 3)]:
            a = adversarial_value(inst, Ordering(perm))
            b = adversarial_value_bruteforce(inst, Ordering(perm))
            assert a.length == b.length
            assert a.choice == b.choice


class TestSegmentPairConstant:
    def test_route_expressions(self):
        assert pair_route_worst(0.75, 0.75) == pytest.approx(1.5, abs=1e-12)
        assert pair_route_worst(0.0, 0.0) == pytest.approx(3.0, abs=1e-12)

    def test_minmax_value(self):
        assert segment_pair_minmax() == pytest.approx(1.5, abs=1e-6)
