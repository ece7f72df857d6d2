"""Points, planar uncertainty regions, and their finite candidate sets.

Regions come in three kinds: explicit point sets, line segments, and disks.
Everything downstream works on compiled candidate points only. For a convex
region the worst visitation point is always an extreme point, so a segment
compiles to its two endpoints exactly; a disk boundary is sampled with
``samples_m`` evenly spaced points (first sample at angle 0), which makes
refinements nest: the samples for ``m`` are a subset of those for ``2m``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import ClassVar, Union

import numpy as np

from .errors import InvalidInstanceError, InvalidRegionError

__all__ = [
    "Point",
    "PointsRegion",
    "SegmentRegion",
    "DiskRegion",
    "Region",
    "Instance",
    "dist",
    "pairwise_dist",
    "compile_candidates",
    "candidate_xy",
    "diameter",
    "center",
]


@dataclass(frozen=True)
class Point:
    """A 2D location; coordinates must be finite."""

    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinate: ({self.x}, {self.y})")


def dist(p: Point, q: Point) -> float:
    """Euclidean distance between two points."""
    return math.hypot(p.x - q.x, p.y - q.y)


def pairwise_dist(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """All Euclidean distances between rows of two (k, 2) arrays."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return np.hypot(a[:, None, 0] - b[None, :, 0], a[:, None, 1] - b[None, :, 1])


@dataclass(frozen=True)
class PointsRegion:
    """A finite set of admissible points."""

    candidates: tuple[Point, ...]
    kind: ClassVar[str] = "points"

    def __post_init__(self):
        object.__setattr__(self, "candidates", tuple(self.candidates))
        if not self.candidates:
            raise InvalidRegionError("points region needs at least one candidate")


@dataclass(frozen=True)
class SegmentRegion:
    """A closed line segment between two endpoints."""

    a: Point
    b: Point
    kind: ClassVar[str] = "segment"


@dataclass(frozen=True)
class DiskRegion:
    """A closed disk whose boundary is sampled with samples_m points."""

    center: Point
    radius: float
    samples_m: int
    kind: ClassVar[str] = "disk"

    def __post_init__(self):
        object.__setattr__(self, "radius", float(self.radius))
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise InvalidRegionError(f"disk radius must be positive, got {self.radius}")
        if not isinstance(self.samples_m, int) or isinstance(self.samples_m, bool):
            raise InvalidRegionError("samples_m must be an integer")
        if self.samples_m <= 0:
            raise InvalidRegionError(f"samples_m must be positive, got {self.samples_m}")


Region = Union[PointsRegion, SegmentRegion, DiskRegion]


@dataclass
class Instance:
    """An ordered list of regions plus metadata; the unit of I/O.

    ``epsilon_meta`` records a generator parameter when one applies; ``meta``
    holds any further JSON metadata (e.g. named orderings) verbatim.
    """

    regions: tuple[Region, ...]
    label: str = ""
    epsilon_meta: float | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.regions = tuple(self.regions)
        if not self.regions:
            raise InvalidInstanceError("instance needs at least one region")

    @property
    def n(self) -> int:
        return len(self.regions)


def compile_candidates(region: Region) -> list[Point]:
    """The finite set of points the adversary may pick in this region.

    Point sets are returned verbatim. A segment compiles to its endpoints
    (one point if degenerate). A disk compiles to samples_m boundary points
    at angles 2*pi*k/samples_m from its center, counterclockwise from the
    positive x axis.
    """
    if isinstance(region, PointsRegion):
        return list(region.candidates)
    if isinstance(region, SegmentRegion):
        if region.a == region.b:
            return [region.a]
        return [region.a, region.b]
    if isinstance(region, DiskRegion):
        c, r, m = region.center, region.radius, region.samples_m
        out = []
        for k in range(m):
            ang = math.tau * k / m
            out.append(Point(c.x + r * math.cos(ang), c.y + r * math.sin(ang)))
        return out
    raise InvalidRegionError(f"unknown region type: {type(region).__name__}")


def candidate_xy(region: Region) -> np.ndarray:
    """Compiled candidates as a (k, 2) float array."""
    return np.array([(p.x, p.y) for p in compile_candidates(region)], dtype=float)


def diameter(region: Region) -> float:
    """Continuous diameter for segments/disks, max pairwise for point sets."""
    if isinstance(region, PointsRegion):
        if len(region.candidates) == 1:
            return 0.0
        xy = candidate_xy(region)
        return float(pairwise_dist(xy, xy).max())
    if isinstance(region, SegmentRegion):
        return dist(region.a, region.b)
    if isinstance(region, DiskRegion):
        return 2.0 * region.radius
    raise InvalidRegionError(f"unknown region type: {type(region).__name__}")


def center(region: Region) -> Point:
    """Segment midpoint, disk center, or centroid of a point set."""
    if isinstance(region, PointsRegion):
        k = len(region.candidates)
        return Point(
            sum(p.x for p in region.candidates) / k,
            sum(p.y for p in region.candidates) / k,
        )
    if isinstance(region, SegmentRegion):
        return Point((region.a.x + region.b.x) / 2.0, (region.a.y + region.b.y) / 2.0)
    if isinstance(region, DiskRegion):
        return region.center
    raise InvalidRegionError(f"unknown region type: {type(region).__name__}")
