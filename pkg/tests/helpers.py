"""Independent reference computations used only by the tests."""

import itertools

from mstsp import GridDims


def grid_points(dims):
    return [(i, j) for i in range(1, dims.m + 1) for j in range(1, dims.n + 1)]


def d2(a, b):
    return (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2


def cyclic_min(order):
    return min(d2(order[i - 1], order[i]) for i in range(len(order)))


def backtrack_hamiltonian(dims, threshold):
    """Plain DFS for a Hamiltonian cycle in the threshold graph; no DP."""
    pts = grid_points(dims)
    n = len(pts)
    nbrs = [[v for v in range(n) if v != u and d2(pts[u], pts[v]) >= threshold] for u in range(n)]
    if any(len(x) < 2 for x in nbrs):
        return None
    path, used = [0], [False] * n
    used[0] = True

    def dfs():
        if len(path) == n:
            return 0 in nbrs[path[-1]]
        for v in nbrs[path[-1]]:
            if not used[v]:
                used[v] = True
                path.append(v)
                if dfs():
                    return True
                path.pop()
                used[v] = False
        return False

    return [pts[v] for v in path] if dfs() else None


def backtrack_opt(dims):
    levels = sorted({d2(a, b) for a, b in itertools.combinations(grid_points(dims), 2)})
    best = None
    for thr in levels:
        if backtrack_hamiltonian(dims, thr) is None:
            break
        best = thr
    return best


def sweep(limit=60):
    return [GridDims(m, n) for m in range(2, limit + 1) for n in range(max(m, 3), limit + 1)]
