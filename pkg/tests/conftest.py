"""Shared builders and scalar oracles used across the test modules."""

import math
import random

import pytest

from atsp import (
    DiskRegion,
    Instance,
    Point,
    PointsRegion,
    SegmentRegion,
    compile_candidates,
)


def mixed_instance(rnd: random.Random, n: int, kmax: int = 4, box: float = 10.0) -> Instance:
    """Random instance mixing all three region kinds, <= kmax candidates each."""
    regions = []
    for _ in range(n):
        kind = rnd.choice(["points", "segment", "disk"])
        if kind == "points":
            k = rnd.randint(1, kmax)
            regions.append(
                PointsRegion(
                    tuple(Point(rnd.uniform(0, box), rnd.uniform(0, box)) for _ in range(k))
                )
            )
        elif kind == "segment":
            x, y = rnd.uniform(0, box), rnd.uniform(0, box)
            regions.append(SegmentRegion(Point(x, y - 0.5), Point(x, y + 0.5)))
        else:
            c = Point(rnd.uniform(1, box - 1), rnd.uniform(1, box - 1))
            regions.append(DiskRegion(c, rnd.uniform(0.3, 0.8), rnd.choice([3, min(4, kmax)])))
    return Instance(tuple(regions))


def segment_instance(rnd: random.Random, n: int, box: float = 10.0) -> Instance:
    """Unit vertical segments with midpoints uniform in the box."""
    regions = []
    for _ in range(n):
        x, y = rnd.uniform(0, box), rnd.uniform(0, box)
        regions.append(SegmentRegion(Point(x, y - 0.5), Point(x, y + 0.5)))
    return Instance(tuple(regions))


def points_instance(rnd: random.Random, n: int, k: int, box: float = 10.0) -> Instance:
    regions = []
    for _ in range(n):
        regions.append(
            PointsRegion(
                tuple(Point(rnd.uniform(0, box), rnd.uniform(0, box)) for _ in range(k))
            )
        )
    return Instance(tuple(regions))


def tour_length(pts, closed: bool) -> float:
    """Scalar recomputation of a tour length from explicit points."""
    total = 0.0
    for i in range(len(pts) - 1):
        total += math.hypot(pts[i + 1][0] - pts[i][0], pts[i + 1][1] - pts[i][1])
    if closed and len(pts) > 1:
        total += math.hypot(pts[0][0] - pts[-1][0], pts[0][1] - pts[-1][1])
    return total


def chosen_points(instance: Instance, tour) -> list:
    """Chosen candidate coordinates in tour order, via compile_candidates."""
    out = []
    for rid in tour.ordering.perm:
        p = compile_candidates(instance.regions[rid])[tour.choice[rid]]
        out.append((p.x, p.y))
    return out


@pytest.fixture
def rng():
    return random.Random(20240817)
