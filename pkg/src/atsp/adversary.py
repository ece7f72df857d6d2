"""Exact worst-case tour evaluation for a fixed region ordering.

Once an ordering is announced, the adversary picks one candidate per region
to maximize the induced tour length. Over finite candidate sets this is a
longest-path problem through a layered graph and is solved exactly by a
forward dynamic program: for closed tours, each candidate ``a`` of the first
region is fixed in turn, the DP maximizes the path through the remaining
regions in order, and the cycle is closed back to ``a``. Cost O(n*k^3) for
k the largest candidate set.

Ties between equally long adversarial tours are broken by the
lexicographically smallest choice vector (indexed by region id). The DP
first checks whether the optimum is unique; only when it is not does it
narrow regions one at a time, which keeps the common case fast.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, InvalidInstanceError, TooLargeError
from .geometry import Instance, candidate_xy, pairwise_dist

__all__ = [
    "Ordering",
    "AdversarialTour",
    "adversarial_value",
    "adversarial_value_bruteforce",
    "pair_route_worst",
    "segment_pair_minmax",
    "BRUTEFORCE_GUARD",
]

BRUTEFORCE_GUARD = 10**7


@dataclass(frozen=True)
class Ordering:
    """A cyclic permutation of region indices in canonical form.

    Canonical means: the smallest index comes first, and the direction is
    chosen so that the second element is the smaller of the two neighbors
    of the first. Two orderings describing the same undirected cycle are
    therefore equal.
    """

    perm: tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(i) for i in self.perm)
        n = len(perm)
        if n == 0 or sorted(perm) != list(range(n)):
            raise InvalidArgumentError(f"not a permutation of 0..{n - 1}: {perm}")
        i = perm.index(0)
        perm = perm[i:] + perm[:i]
        if n >= 3 and perm[1] > perm[-1]:
            perm = (perm[0],) + perm[:0:-1]
        object.__setattr__(self, "perm", perm)

    def __len__(self) -> int:
        return len(self.perm)


@dataclass(frozen=True)
class AdversarialTour:
    """An ordering plus the adversary's argmax choice and the tour length.

    ``choice[i]`` is the chosen candidate index of region ``i`` (by region
    id, not by tour position). ``length`` is recomputable from the chosen
    points to within 1e-9.
    """

    ordering: Ordering
    choice: tuple[int, ...]
    length: float
    closed: bool


def _edge_mats(pts: list[np.ndarray], closed: bool):
    ds = [pairwise_dist(pts[j], pts[j + 1]) for j in range(len(pts) - 1)]
    dc = pairwise_dist(pts[-1], pts[0]) if closed else None
    return ds, dc


def _cycle_start_values(ds, dc, allowed=None) -> np.ndarray:
    """Max cycle length per choice of the first position's candidate.

    ds[j] is the distance matrix between positions j and j+1; dc closes the
    cycle from the last position back to the first. ``allowed`` optionally
    masks candidates per position (disallowed ones become -inf).
    """
    n = len(ds) + 1
    dp = np.array(ds[0], dtype=float, copy=True)  # (k0, k1)
    if allowed is not None:
        dp[~allowed[0], :] = -np.inf
        dp[:, ~allowed[1]] = -np.inf
    for j in range(1, n - 1):
        dp = (dp[:, :, None] + ds[j][None, :, :]).max(axis=1)
        if allowed is not None:
            dp[:, ~allowed[j + 1]] = -np.inf
    return (dp + dc.T).max(axis=1)


def _path_forward(ds, k0: int, allowed=None) -> list[np.ndarray]:
    """Forward DP values for an open path; returns one array per position."""
    dp = np.zeros(k0)
    if allowed is not None:
        dp[~allowed[0]] = -np.inf
    front = [dp]
    for j, d in enumerate(ds):
        dp = (dp[:, None] + d).max(axis=0)
        if allowed is not None:
            dp[~allowed[j + 1]] = -np.inf
        front.append(dp)
    return front


def _opt_value(ds, dc, ks, closed: bool, allowed=None) -> float:
    if len(ks) == 1:
        return 0.0
    if closed:
        return float(_cycle_start_values(ds, dc, allowed).max())
    return float(_path_forward(ds, ks[0], allowed)[-1].max())


def _unique_positional_choice(ds, dc, ks, closed, target):
    """The argmax selection if it is provably unique, else None.

    Uniqueness is checked with a small tolerance: a candidate is a plausible
    part of an optimal tour when its forward plus backward value reaches the
    target. Exactly one plausible candidate per position pins the optimum.
    """
    n = len(ks)
    tol = 1e-9 * max(1.0, abs(target))
    if n == 1:
        return [0] if ks[0] == 1 else None
    if closed:
        starts = np.flatnonzero(_cycle_start_values(ds, dc) >= target - tol)
        if len(starts) != 1:
            return None
        a = int(starts[0])
        fwd = [None, ds[0][a, :]]
        for j in range(1, n - 1):
            fwd.append((fwd[j][:, None] + ds[j]).max(axis=0))
        back = [None] * n
        back[n - 1] = dc[:, a]
        for j in range(n - 2, 0, -1):
            back[j] = (ds[j] + back[j + 1][None, :]).max(axis=1)
        picks = [a]
        for j in range(1, n):
            onopt = np.flatnonzero(fwd[j] + back[j] >= target - tol)
            if len(onopt) != 1:
                return None
            picks.append(int(onopt[0]))
        return picks
    fwd = _path_forward(ds, ks[0])
    back = [None] * n
    back[n - 1] = np.zeros(ks[n - 1])
    for j in range(n - 2, -1, -1):
        back[j] = (ds[j] + back[j + 1][None, :]).max(axis=1)
    picks = []
    for j in range(n):
        onopt = np.flatnonzero(fwd[j] + back[j] >= target - tol)
        if len(onopt) != 1:
            return None
        picks.append(int(onopt[0]))
    return picks


def _lexmin_positional_choice(ds, dc, ks, perm, closed, target):
    """Lexicographically smallest optimal choice vector, by region id.

    Regions are pinned one at a time in id order: the smallest candidate
    index that still attains the target is kept. Restricting candidate sets
    never changes the float value of a surviving tour, so comparing against
    the target with == is exact.
    """
    n = len(ks)
    allowed = [np.ones(k, dtype=bool) for k in ks]
    pos_of = {rid: j for j, rid in enumerate(perm)}
    picks = [0] * n
    for rid in sorted(perm):
        j = pos_of[rid]
        for c in range(ks[j]):
            trial = np.zeros(ks[j], dtype=bool)
            trial[c] = True
            saved, allowed[j] = allowed[j], trial
            if _opt_value(ds, dc, ks, closed, allowed) == target:
                picks[j] = c
                break
            allowed[j] = saved
        else:  # pragma: no cover - the optimum always survives narrowing
            raise AssertionError("no candidate attains the optimal value")
    return picks


def _check_ordering(instance: Instance, ordering: Ordering, closed: bool):
    n = len(instance.regions)
    if len(ordering.perm) != n:
        raise InvalidArgumentError(
            f"ordering covers {len(ordering.perm)} regions, instance has {n}"
        )
    if closed and n < 2:
        raise InvalidArgumentError("closed tours need at least 2 regions")


def adversarial_value(instance: Instance, ordering: Ordering, closed: bool = True) -> AdversarialTour:
    """Exact maximum tour length over all candidate selections.

    Returns the argmax selection as well; ties go to the lexicographically
    smallest choice vector.
    """
    _check_ordering(instance, ordering, closed)
    pts = [candidate_xy(instance.regions[i]) for i in ordering.perm]
    ks = [len(p) for p in pts]
    if any(k == 0 for k in ks):
        raise InvalidInstanceError("region with empty candidate set")
    n = len(ks)
    if n == 1:
        return AdversarialTour(ordering, (0,), 0.0, closed)
    ds, dc = _edge_mats(pts, closed)
    value = _opt_value(ds, dc, ks, closed)
    picks = _unique_positional_choice(ds, dc, ks, closed, value)
    if picks is None:
        picks = _lexmin_positional_choice(ds, dc, ks, ordering.perm, closed, value)
    length = 0.0
    for j in range(n - 1):
        length += float(ds[j][picks[j], picks[j + 1]])
    if closed:
        length += float(dc[picks[-1], picks[0]])
    choice = [0] * n
    for j, rid in enumerate(ordering.perm):
        choice[rid] = picks[j]
    return AdversarialTour(ordering, tuple(choice), length, closed)


def adversarial_value_bruteforce(instance: Instance, ordering: Ordering, closed: bool = True) -> AdversarialTour:
    """Testing oracle: exhaustive enumeration of all candidate selections.

    Guarded to at most 10^7 combinations. Agrees with adversarial_value to
    1e-9 (and exactly on the tie-break, since ascending enumeration meets
    the same lexicographic rule).
    """
    _check_ordering(instance, ordering, closed)
    pts = [candidate_xy(instance.regions[i]) for i in ordering.perm]
    n = len(ordering.perm)
    ks_by_region = [0] * n
    for j, rid in enumerate(ordering.perm):
        ks_by_region[rid] = len(pts[j])
    combos = math.prod(ks_by_region)
    if combos > BRUTEFORCE_GUARD:
        raise TooLargeError(
            f"bruteforce guard: {combos} candidate combinations exceed {BRUTEFORCE_GUARD}"
        )
    if n == 1:
        return AdversarialTour(ordering, (0,), 0.0, closed)
    ds, dc = _edge_mats(pts, closed)
    best = -math.inf
    best_choice = None
    for choice in itertools.product(*(range(k) for k in ks_by_region)):
        length = 0.0
        for j in range(n - 1):
            length += float(ds[j][choice[ordering.perm[j]], choice[ordering.perm[j + 1]]])
        if closed:
            length += float(dc[choice[ordering.perm[-1]], choice[ordering.perm[0]]])
        if length > best:
            best = length
            best_choice = choice
    return AdversarialTour(ordering, best_choice, best, closed)


def pair_route_worst(x: float, y: float) -> float:
    """Longest of the adversary's three routes across a stacked segment pair.

    Entering a vertically collinear pair of unit segments at offset x from
    the top of the nearer one, with gap parameter y, the worst route costs
    max(3 - x - y, x + y, x + 1 - y).
    """
    return max(3.0 - x - y, x + y, x + 1.0 - y)


def segment_pair_minmax() -> float:
    """min over (x, y) in [0,1]^2 of the worst pair route; equals 1.5.

    The objective is piecewise linear, so a dense grid plus bisection-style
    local refinement reaches 1e-6 accuracy cheaply.
    """
    xs = np.linspace(0.0, 1.0, 2001)
    bx, by, best = _grid_min(xs, xs)
    half = 1.0 / 2000.0
    for _ in range(20):
        xs = np.linspace(max(0.0, bx - half), min(1.0, bx + half), 21)
        ys = np.linspace(max(0.0, by - half), min(1.0, by + half), 21)
        cx, cy, cand = _grid_min(xs, ys)
        if cand < best:
            bx, by, best = cx, cy, cand
        half /= 2.0
    return float(best)


def _grid_min(xs, ys):
    x = xs[:, None]
    y = ys[None, :]
    v = np.maximum(np.maximum(3.0 - x - y, x + y), x + 1.0 - y)
    i, j = np.unravel_index(int(np.argmin(v)), v.shape)
    return float(xs[i]), float(ys[j]), float(v[i, j])
