"""The complete max-distance graph over regions, and its metric check.

Edge (i, j) weighs the largest distance between any candidate of region i
and any candidate of region j. These weights always form a metric, which is
what lets standard TSP machinery run on top of them; verify_metric makes
that property executable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError
from .geometry import DiskRegion, Instance, Region, candidate_xy, dist, pairwise_dist
from .adversary import Ordering

__all__ = [
    "HatGraph",
    "MetricViolation",
    "build_hatgraph",
    "disk_w_exact",
    "verify_metric",
    "cycle_weight",
    "METRIC_TOL",
]

METRIC_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class HatGraph:
    """Symmetric nonnegative weight matrix with a zero diagonal."""

    n: int
    w: np.ndarray


@dataclass(frozen=True)
class MetricViolation:
    """One failed metric law; ``where`` holds the offending indices."""

    kind: str  # "nonfinite" | "negative" | "diagonal" | "asymmetric" | "triangle"
    where: tuple[int, ...]
    excess: float


def build_hatgraph(instance: Instance) -> HatGraph:
    """Max candidate-to-candidate distance for every pair of regions."""
    xs = [candidate_xy(r) for r in instance.regions]
    n = len(xs)
    w = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            m = float(pairwise_dist(xs[i], xs[j]).max())
            w[i, j] = m
            w[j, i] = m
    return HatGraph(n, w)


def disk_w_exact(d1: Region, d2: Region) -> float:
    """Continuous max distance between two disks: center gap plus radii.

    Reference value for quantifying boundary-sampling error; only defined
    for disk regions.
    """
    if not isinstance(d1, DiskRegion) or not isinstance(d2, DiskRegion):
        raise InvalidArgumentError("disk_w_exact requires two disk regions")
    return dist(d1.center, d2.center) + d1.radius + d2.radius


def verify_metric(g: HatGraph) -> list[MetricViolation]:
    """All violations of symmetry, nonnegativity, zero diagonal, and the
    triangle inequality (tolerance 1e-9). Empty list iff the graph is a
    metric. Each unordered triangle is reported at most once per witness b.
    """
    w = np.asarray(g.w, dtype=float)
    n = g.n
    out: list[MetricViolation] = []
    for i in range(n):
        for j in range(n):
            if not np.isfinite(w[i, j]):
                out.append(MetricViolation("nonfinite", (i, j), float("nan")))
            elif w[i, j] < -METRIC_TOL:
                out.append(MetricViolation("negative", (i, j), float(-w[i, j])))
    for i in range(n):
        if abs(w[i, i]) > METRIC_TOL:
            out.append(MetricViolation("diagonal", (i,), float(abs(w[i, i]))))
    for i in range(n):
        for j in range(i + 1, n):
            gap = abs(w[i, j] - w[j, i])
            if gap > METRIC_TOL:
                out.append(MetricViolation("asymmetric", (i, j), float(gap)))
    if out:
        return out  # triangle checks are meaningless on a broken matrix
    for a in range(n):
        for c in range(a + 1, n):
            lhs = w[a, c]
            for b in range(n):
                if b == a or b == c:
                    continue
                excess = lhs - (w[a, b] + w[b, c])
                if excess > METRIC_TOL:
                    out.append(MetricViolation("triangle", (a, b, c), float(excess)))
    return out


def cycle_weight(g, ordering: Ordering) -> float:
    """Weight of the closed tour through ``ordering`` in a weight matrix."""
    w = g.w if isinstance(g, HatGraph) else np.asarray(g, dtype=float)
    perm = ordering.perm
    total = 0.0
    for i in range(len(perm)):
        total += float(w[perm[i], perm[(i + 1) % len(perm)]])
    return total
