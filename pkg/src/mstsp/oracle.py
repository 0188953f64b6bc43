"""Exact max-min tour values for small grids.

The optimum is always one of the distinct squared lengths occurring in the
grid, so :func:`solve_exact` binary-searches that list, asking at each step
whether the threshold graph (edges of squared length >= threshold) is
Hamiltonian.  The Hamiltonicity test is an exact subset DP; the brute-force
enumerator in :func:`brute_force_small` cross-checks it on tiny grids.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from numba import njit

from .grid import GridDims, MSTSPError, Tour, min_edge, sq_dist

DEFAULT_NODE_LIMIT = 24
HARD_NODE_LIMIT = 26  # endpoint table is 4 * 2**(N-1) bytes
BRUTE_FORCE_LIMIT = 9


class OracleSizeError(MSTSPError):
    pass


def distinct_thresholds(dims: GridDims) -> list[int]:
    return sorted(
        {dr * dr + dc * dc for dr in range(dims.m) for dc in range(dims.n)} - {0}
    )


@dataclass(frozen=True)
class ThresholdGraph:
    dims: GridDims
    threshold_sq: int
    adjacency: tuple[int, ...]  # bitmask of neighbours per node, row-major index

    def nodes(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.dims.m + 1) for j in range(1, self.dims.n + 1)]

    def degree(self, v: int) -> int:
        return bin(self.adjacency[v]).count("1")


def threshold_graph(dims: GridDims, threshold_sq: int) -> ThresholdGraph:
    pts = [(i, j) for i in range(1, dims.m + 1) for j in range(1, dims.n + 1)]
    adj = []
    for a in pts:
        mask = 0
        for v, b in enumerate(pts):
            if a != b and sq_dist(a, b) >= threshold_sq:
                mask |= 1 << v
        adj.append(mask)
    return ThresholdGraph(dims, threshold_sq, tuple(adj))


@njit(cache=True)
def _endpoint_table(nbr, start_nbr, width):  # pragma: no cover - compiled
    # ends[S] = set of v in S such that a path from node 0 through exactly S ends at v
    # (bits index nodes 1..N-1)
    full = 1 << width
    ends = np.zeros(full, dtype=np.int32)
    for u in range(width):
        if (start_nbr >> u) & 1:
            ends[1 << u] = 1 << u
    for mask in range(1, full):
        e = ends[mask]
        if e == 0:
            continue
        for u in range(width):
            bit = 1 << u
            if mask & bit:
                continue
            if e & nbr[u]:
                ends[mask | bit] |= bit
    return ends


def find_hamiltonian_cycle(
    g: ThresholdGraph, node_limit: int = DEFAULT_NODE_LIMIT
) -> Optional[Tour]:
    """A Hamiltonian cycle of ``g`` as a tour, or None if there is none."""
    size = g.dims.size
    if size > min(node_limit, HARD_NODE_LIMIT):
        raise OracleSizeError(
            f"{g.dims} grid has {size} nodes, over the oracle limit of {min(node_limit, HARD_NODE_LIMIT)}"
        )
    if size < 3 or any(g.degree(v) < 2 for v in range(size)):
        return None
    width = size - 1
    # node v >= 1 becomes bit v-1
    nbr = np.array([g.adjacency[v] >> 1 for v in range(1, size)], dtype=np.int64)
    start_nbr = g.adjacency[0] >> 1
    ends = _endpoint_table(nbr, start_nbr, width)

    mask = (1 << width) - 1
    closing = int(ends[mask]) & start_nbr
    if not closing:
        return None
    v = (closing & -closing).bit_length() - 1
    path = [v]
    while True:
        mask ^= 1 << v
        if mask == 0:
            break
        cand = int(ends[mask]) & int(nbr[v])
        v = (cand & -cand).bit_length() - 1
        path.append(v)
    pts = g.nodes()
    order = [pts[0]] + [pts[b + 1] for b in reversed(path)]
    return Tour(g.dims, order)


def has_hamiltonian_cycle(g: ThresholdGraph, node_limit: int = DEFAULT_NODE_LIMIT) -> bool:
    return find_hamiltonian_cycle(g, node_limit) is not None


@dataclass(frozen=True)
class OracleResult:
    dims: GridDims
    opt_sq: int
    witness: Tour
    infeasible_above: Optional[int] = None  # next larger threshold, certified infeasible


def solve_exact(
    dims: GridDims,
    node_limit: int = DEFAULT_NODE_LIMIT,
    jobs: int = 1,
) -> OracleResult:
    """Optimal shortest-edge value by binary search over distinct thresholds.

    ``jobs > 1`` evaluates the thresholds up front in a thread pool instead
    of bisecting; the answer is the same either way.
    """
    dims.require_tour_capable()
    limit = min(node_limit, HARD_NODE_LIMIT)
    if dims.size > limit:
        raise OracleSizeError(f"{dims} grid has {dims.size} nodes, over the oracle limit of {limit}")
    levels = distinct_thresholds(dims)

    def probe(idx: int) -> Optional[Tour]:
        return find_hamiltonian_cycle(threshold_graph(dims, levels[idx]), limit)

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(jobs) as pool:
            found = list(pool.map(probe, range(len(levels))))
        feasible = [w is not None for w in found]
        best = max(i for i, ok in enumerate(feasible) if ok)
        if any(feasible[best + 1 :]) or not all(feasible[: best + 1]):
            raise AssertionError(f"Hamiltonicity is not monotone in the threshold on {dims}")
        witness = found[best]
    else:
        # levels[0] == 1 keeps the complete graph, which is always Hamiltonian
        lo, hi = 0, len(levels) - 1
        witness = probe(0)
        if witness is None:
            raise AssertionError(f"complete graph on {dims} reported non-Hamiltonian")
        while lo < hi:
            mid = (lo + hi + 1) // 2
            w = probe(mid)
            if w is None:
                hi = mid - 1
            else:
                lo, witness = mid, w
        best = lo
    opt = levels[best]
    if min_edge(witness) < opt:
        raise AssertionError(f"oracle witness on {dims} has min edge {min_edge(witness)} < {opt}")
    above = levels[best + 1] if best + 1 < len(levels) else None
    return OracleResult(dims, min_edge(witness), witness, above)


def brute_force_small(dims: GridDims) -> OracleResult:
    """Enumerate all (N-1)!/2 undirected cyclic orders; N <= 9."""
    dims.require_tour_capable()
    if dims.size > BRUTE_FORCE_LIMIT:
        raise OracleSizeError(
            f"brute force handles at most {BRUTE_FORCE_LIMIT} nodes, {dims} has {dims.size}"
        )
    pts = [(i, j) for i in range(1, dims.m + 1) for j in range(1, dims.n + 1)]
    d = [[sq_dist(a, b) for b in pts] for a in pts]
    best, best_order = -1, None
    for perm in itertools.permutations(range(1, len(pts))):
        if perm[0] > perm[-1]:
            continue  # reversed duplicate
        cyc = (0,) + perm
        val = min(d[cyc[i - 1]][cyc[i]] for i in range(len(cyc)))
        if val > best:
            best, best_order = val, cyc
    return OracleResult(dims, best, Tour(dims, [pts[v] for v in best_order]))


def count_cyclic_orders(dims: GridDims) -> int:
    """Number of undirected Hamiltonian cycles on the complete graph, (N-1)!/2."""
    return math.factorial(dims.size - 1) // 2
