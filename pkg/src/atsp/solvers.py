"""TSP machinery and the worst-case-tour solution pipelines.

Exact TSP is Held-Karp bitmask DP (n <= 16). Christofides uses an exact
minimum-weight perfect matching on the MST's odd-degree vertices, done by
subset DP; that is exponential in the odd count, but the 3/2 (and hence 3-)
guarantee needs an exact matching, and at desk scale the odd count stays
small. Orderings found on the max-distance graph or on region centers are
then scored by the exact adversarial evaluator.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .adversary import AdversarialTour, Ordering, adversarial_value, _cycle_start_values
from .errors import InvalidArgumentError, TooLargeError
from .geometry import Instance, candidate_xy, center, pairwise_dist
from .hatgraph import HatGraph, build_hatgraph, verify_metric

__all__ = [
    "SolveResult",
    "held_karp_tsp",
    "mst_double_tsp",
    "christofides_tsp",
    "exact_atsp",
    "atsp_2approx",
    "atsp_3approx",
    "atsp_mst2",
    "center_tsp_ordering",
    "tspn_exact",
    "tspn_order",
    "EXACT_ATSP",
    "HATGRAPH_EXACT",
    "HATGRAPH_CHRISTOFIDES",
    "HATGRAPH_MST2",
    "CENTER_TSP",
    "TSPN_ORDER",
]

EXACT_ATSP = "EXACT_ATSP"
HATGRAPH_EXACT = "HATGRAPH_EXACT"
HATGRAPH_CHRISTOFIDES = "HATGRAPH_CHRISTOFIDES"
HATGRAPH_MST2 = "HATGRAPH_MST2"
CENTER_TSP = "CENTER_TSP"
TSPN_ORDER = "TSPN_ORDER"

HELD_KARP_MAX_N = 16
CHRISTOFIDES_MAX_ODD = 22
EXACT_ATSP_MAX_N = 9
TSPN_MAX_N = 8


@dataclass
class SolveResult:
    """An ordering, its adversarial evaluation, and how it was found.

    ``aux_weight`` carries the auxiliary objective behind the ordering
    (max-distance-graph cycle weight, center-tour length, or best
    cooperative tour length), when one applies.
    """

    ordering: Ordering
    tour: AdversarialTour
    method: str
    aux_weight: float | None = None


def _as_weight_matrix(weights) -> np.ndarray:
    w = np.asarray(weights, dtype=float)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise InvalidArgumentError("weight matrix must be square")
    if not np.array_equal(w, w.T):
        raise InvalidArgumentError("weight matrix must be symmetric")
    return w


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def held_karp_tsp(weights) -> tuple[Ordering, float]:
    """Exact minimum-weight Hamiltonian cycle by subset DP; n <= 16."""
    w = _as_weight_matrix(weights)
    n = w.shape[0]
    if n > HELD_KARP_MAX_N:
        raise TooLargeError(f"held_karp_tsp guard: n={n} exceeds {HELD_KARP_MAX_N}")
    if n == 1:
        return Ordering((0,)), 0.0
    if n == 2:
        return Ordering((0, 1)), float(w[0, 1] + w[1, 0])
    m = n - 1
    full = (1 << m) - 1
    dp = np.full((full + 1, m), np.inf)
    parent = np.full((full + 1, m), -1, dtype=np.int8)
    w1 = w[1:, 1:]
    for j in range(m):
        dp[1 << j, j] = w[0, j + 1]
    all_nodes = np.arange(m)
    for mask in range(1, full):
        inside = _bits(mask)
        outside = [j for j in range(m) if not (mask >> j) & 1]
        cand = dp[mask, inside][:, None] + w1[np.ix_(inside, outside)]
        pick = cand.argmin(axis=0)
        targets = mask | (1 << all_nodes[outside])
        dp[targets, outside] = cand[pick, np.arange(len(outside))]
        parent[targets, outside] = np.array(inside)[pick]
    totals = dp[full, :] + w[1:, 0]
    j = int(totals.argmin())
    weight = float(totals[j])
    seq = []
    mask = full
    while j != -1:
        seq.append(j + 1)
        nxt = int(parent[mask, j])
        mask ^= 1 << j
        j = nxt
    seq.reverse()
    return Ordering(tuple([0] + seq)), weight


def _prim_mst(w: np.ndarray) -> list[tuple[int, int]]:
    """MST edges by Prim from node 0; ties go to the smallest index."""
    n = w.shape[0]
    visited = np.zeros(n, dtype=bool)
    visited[0] = True
    best = w[0].copy()
    best_from = np.zeros(n, dtype=int)
    edges = []
    for _ in range(n - 1):
        v = int(np.argmin(np.where(visited, np.inf, best)))
        edges.append((int(best_from[v]), v))
        visited[v] = True
        closer = ~visited & (w[v] < best)
        best_from[closer] = v
        best = np.where(closer, w[v], best)
    return edges


def _preorder(n: int, edges: list[tuple[int, int]]) -> list[int]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for lst in adj:
        lst.sort()
    order = []
    seen = [False] * n
    stack = [0]
    while stack:
        v = stack.pop()
        if seen[v]:
            continue
        seen[v] = True
        order.append(v)
        for u in reversed(adj[v]):
            if not seen[u]:
                stack.append(u)
    return order


def mst_double_tsp(weights) -> tuple[Ordering, float]:
    """Classic 2-approximate tour: MST, then preorder shortcut.

    Requires a metric matrix; the shortcut argument fails without the
    triangle inequality.
    """
    w = _as_weight_matrix(weights)
    n = w.shape[0]
    violations = verify_metric(HatGraph(n, w))
    if violations:
        v = violations[0]
        raise InvalidArgumentError(f"weights are not a metric: {v.kind} at {v.where}")
    if n == 1:
        return Ordering((0,)), 0.0
    order = _preorder(n, _prim_mst(w))
    ordering = Ordering(tuple(order))
    return ordering, _cycle_matrix_weight(w, order)


def _cycle_matrix_weight(w: np.ndarray, order: list[int]) -> float:
    total = 0.0
    for i in range(len(order)):
        total += float(w[order[i], order[(i + 1) % len(order)]])
    return total


def _min_weight_matching(nodes: list[int], w: np.ndarray) -> list[tuple[int, int]]:
    """Exact minimum-weight perfect matching by subset DP, O(2^q * q^2)."""
    q = len(nodes)
    if q == 0:
        return []
    full = (1 << q) - 1
    dp = [math.inf] * (full + 1)
    dp[0] = 0.0
    take: list[tuple[int, int] | None] = [None] * (full + 1)
    for mask in range(full + 1):
        if dp[mask] == math.inf or mask.bit_count() % 2:
            continue
        i = 0
        while (mask >> i) & 1:
            i += 1
        for j in range(i + 1, q):
            if (mask >> j) & 1:
                continue
            new = mask | (1 << i) | (1 << j)
            cand = dp[mask] + float(w[nodes[i], nodes[j]])
            if cand < dp[new]:
                dp[new] = cand
                take[new] = (i, j)
    pairs = []
    mask = full
    while mask:
        i, j = take[mask]
        pairs.append((nodes[i], nodes[j]))
        mask ^= (1 << i) | (1 << j)
    return pairs


def _euler_circuit(n: int, edges: list[tuple[int, int]]) -> list[int]:
    """Hierholzer circuit from node 0 over a connected even-degree multigraph."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(edges):
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    for lst in adj:
        lst.sort()
    ptr = [0] * n
    used = [False] * len(edges)
    stack = [0]
    out = []
    while stack:
        v = stack[-1]
        while ptr[v] < len(adj[v]) and used[adj[v][ptr[v]][1]]:
            ptr[v] += 1
        if ptr[v] == len(adj[v]):
            out.append(stack.pop())
        else:
            u, eid = adj[v][ptr[v]]
            used[eid] = True
            stack.append(u)
    out.reverse()
    return out


def christofides_tsp(weights) -> tuple[Ordering, float]:
    """3/2-approximate metric TSP: MST + exact odd-vertex matching + shortcut.

    The matching DP is guarded at 22 odd-degree vertices.
    """
    w = _as_weight_matrix(weights)
    n = w.shape[0]
    if n == 1:
        return Ordering((0,)), 0.0
    if n == 2:
        return Ordering((0, 1)), float(w[0, 1] + w[1, 0])
    mst = _prim_mst(w)
    deg = [0] * n
    for u, v in mst:
        deg[u] += 1
        deg[v] += 1
    odd = [v for v in range(n) if deg[v] % 2]
    if len(odd) > CHRISTOFIDES_MAX_ODD:
        raise TooLargeError(
            f"christofides matching guard: {len(odd)} odd-degree vertices exceed {CHRISTOFIDES_MAX_ODD}"
        )
    circuit = _euler_circuit(n, mst + _min_weight_matching(odd, w))
    seen = [False] * n
    order = []
    for v in circuit:
        if not seen[v]:
            seen[v] = True
            order.append(v)
    return Ordering(tuple(order)), _cycle_matrix_weight(w, order)


def _pair_distance_table(instance: Instance):
    xs = [candidate_xy(r) for r in instance.regions]
    n = len(xs)
    d: list[list[np.ndarray | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m = pairwise_dist(xs[i], xs[j])
            d[i][j] = m
            d[j][i] = m.T
    return d


def _canonical_orderings(n: int):
    """All canonical cyclic orderings, ascending: region 0 first, and the
    direction fixed so the second entry beats the last."""
    for rest in itertools.permutations(range(1, n)):
        if n > 2 and rest[0] > rest[-1]:
            continue
        yield (0,) + rest


def _scan_orderings(instance: Instance, maximize_sign: float):
    """Best ordering by exhaustive scan; sign +1 minimizes the adversarial
    (max) value, -1 minimizes the cooperative (min) value."""
    d = _pair_distance_table(instance)
    if maximize_sign != 1.0:
        d = [[None if m is None else maximize_sign * m for m in row] for row in d]
    n = len(instance.regions)
    best = math.inf
    best_perm = None
    for perm in _canonical_orderings(n):
        ds = [d[perm[j]][perm[j + 1]] for j in range(n - 1)]
        dc = d[perm[-1]][perm[0]]
        value = maximize_sign * float(_cycle_start_values(ds, dc).max())
        if value < best:
            best = value
            best_perm = perm
    return Ordering(best_perm), best


def exact_atsp(instance: Instance) -> SolveResult:
    """Optimal ordering by enumerating all (n-1)!/2 canonical cycles; n <= 9.

    Ties go to the lexicographically smallest canonical ordering.
    """
    n = len(instance.regions)
    if n > EXACT_ATSP_MAX_N:
        raise TooLargeError(f"exact_atsp guard: n={n} exceeds {EXACT_ATSP_MAX_N}")
    if n < 2:
        raise InvalidArgumentError("exact_atsp needs at least 2 regions")
    ordering, _ = _scan_orderings(instance, 1.0)
    return SolveResult(ordering, adversarial_value(instance, ordering), EXACT_ATSP)


def tspn_exact(instance: Instance) -> tuple[Ordering, float]:
    """Best cooperative tour: minimize over orderings and selections; n <= 8.

    This is the min-min dual of the adversarial value, computed with the
    same layered DP run in minimizing mode.
    """
    n = len(instance.regions)
    if n > TSPN_MAX_N:
        raise TooLargeError(f"tspn_exact guard: n={n} exceeds {TSPN_MAX_N}")
    if n < 2:
        raise InvalidArgumentError("tspn_exact needs at least 2 regions")
    combos = math.prod(len(candidate_xy(r)) for r in instance.regions)
    if combos > 10**7:
        raise TooLargeError(
            f"tspn_exact guard: {combos} candidate combinations exceed {10**7}"
        )
    return _scan_orderings(instance, -1.0)


def atsp_2approx(instance: Instance) -> SolveResult:
    """Ordering of an exact TSP on the max-distance graph; 2-approximate."""
    g = build_hatgraph(instance)
    ordering, weight = held_karp_tsp(g.w)
    return SolveResult(
        ordering, adversarial_value(instance, ordering), HATGRAPH_EXACT, aux_weight=weight
    )


def atsp_3approx(instance: Instance) -> SolveResult:
    """Ordering of a Christofides tour on the max-distance graph; 3-approximate."""
    g = build_hatgraph(instance)
    ordering, weight = christofides_tsp(g.w)
    return SolveResult(
        ordering,
        adversarial_value(instance, ordering),
        HATGRAPH_CHRISTOFIDES,
        aux_weight=weight,
    )


def atsp_mst2(instance: Instance) -> SolveResult:
    """Ordering of an MST-double tour on the max-distance graph."""
    g = build_hatgraph(instance)
    ordering, weight = mst_double_tsp(g.w)
    return SolveResult(
        ordering, adversarial_value(instance, ordering), HATGRAPH_MST2, aux_weight=weight
    )


def center_tsp_ordering(instance: Instance, exact: bool = True) -> SolveResult:
    """Ordering of a TSP tour on region center points.

    ``exact`` uses Held-Karp (n <= 16); otherwise Christofides. aux_weight
    is the center-tour length.
    """
    pts = np.array([[c.x, c.y] for c in (center(r) for r in instance.regions)])
    w = pairwise_dist(pts, pts)
    ordering, weight = held_karp_tsp(w) if exact else christofides_tsp(w)
    return SolveResult(
        ordering, adversarial_value(instance, ordering), CENTER_TSP, aux_weight=weight
    )


def tspn_order(instance: Instance) -> SolveResult:
    """Adversarial evaluation of the best cooperative-tour ordering."""
    ordering, weight = tspn_exact(instance)
    return SolveResult(
        ordering, adversarial_value(instance, ordering), TSPN_ORDER, aux_weight=weight
    )
