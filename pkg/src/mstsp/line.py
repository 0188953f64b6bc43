"""Optimal max-min orders for n equidistant points on a line.

These orders solve the 1 x n case and also fix the column order that Weave
cycles through in every row pair.
"""

from __future__ import annotations

from .grid import MSTSPError


def line_odd(n: int) -> list[int]:
    """Order ``1, k+2, 2, k+3, ..., n, k+1`` for odd ``n = 2k+1 >= 3``."""
    if n < 3 or n % 2 == 0:
        raise MSTSPError(f"line_odd needs an odd n >= 3, got {n}")
    k = n // 2
    order = []
    for low, high in zip(range(1, k + 1), range(k + 2, n + 1)):
        order += [low, high]
    order.append(k + 1)
    return order


def line_even(n: int) -> list[int]:
    """Order for even ``n = 2k >= 4``.

    Gaps alternate ``k-1`` / ``k+1`` with a ``k`` step at the two ends of
    the line and around its centre.  The low half runs odd columns upward
    and then even columns downward; the high half does the same with the
    offsets ``j - k``.  Interleaving the halves gives
    ``1, k+2, 3, k+4, ..., k+1``.
    """
    if n < 4 or n % 2:
        raise MSTSPError(f"line_even needs an even n >= 4, got {n}")
    k = n // 2
    low = list(range(1, k + 1, 2)) + sorted(range(2, k + 1, 2), reverse=True)
    up = [j for j in range(k + 1, n + 1) if (j - k) % 2 == 0]
    down = sorted((j for j in range(k + 1, n + 1) if (j - k) % 2), reverse=True)
    high = up + down
    return [c for pair in zip(low, high) for c in pair]


def line_order(n: int) -> list[int]:
    return line_odd(n) if n % 2 else line_even(n)


def line_next(n: int, j: int) -> int:
    """Successor of column ``j`` in the cyclic line order of ``n`` points."""
    if n < 3:
        raise MSTSPError(f"line orders need n >= 3, got {n}")
    if not 1 <= j <= n:
        raise MSTSPError(f"column {j} out of range 1..{n}")
    k = n // 2
    if n % 2:
        return j + k + 1 if j <= k else j - k
    if k % 2 == 0:
        if j <= k:
            return j + k + 1 if j % 2 else j + k - 1
        if j == k + 1 or j == n:
            return j - k
        return j - (k + 1) if j % 2 else j - (k - 1)
    if j < k:
        return j + k + 1 if j % 2 else j + k - 1
    if j == k:
        return j + k
    if j == k + 1:
        return j - k
    return j - (k + 1) if j % 2 == 0 else j - (k - 1)


def line_cycle_from(n: int, start: int) -> list[int]:
    """All ``n`` columns in line order, beginning at ``start``."""
    order = [start]
    for _ in range(n - 1):
        order.append(line_next(n, order[-1]))
    if line_next(n, order[-1]) != start or len(set(order)) != n:
        raise AssertionError(f"line successor for n={n} is not a single cycle")
    return order
