"""Weave(m, n): linear-time max-min tours on the m x n grid.

Rows are grouped into pairs ``(r, r+t)``, plus the triple ``(1, t+1, m)``
when m is odd.  Inside a group the tour jumps back and forth between its
rows while the columns advance in line order, starting each pass in column
``k+2`` so that group switches come with the long ``k+1`` horizontal step.

Two equivalent routes are provided:

* :func:`next_row` / :func:`next_col` and :func:`successor_walk` follow the
  per-node successor tables, one node at a time.
* :func:`build_tour` assembles the same tour from whole passes with numpy,
  which is what the CLI and benchmarks use.

The test suite checks that the two routes agree on every grid in the sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .grid import (
    DegenerateGridError,
    GridDims,
    MSTSPError,
    Tour,
    validate_tour,
)
from .line import line_next, line_order

TERMINATE = None
"""Value returned by :func:`next_row` at the final node of the walk."""


class WeaveConsistencyError(RuntimeError):
    """The construction produced something other than a Hamiltonian cycle."""


@dataclass(frozen=True)
class WeaveCase:
    m: int
    n: int
    kind: str  # "tiny", "line", "even_odd", "even_even", "odd_odd", "odd_even"
    n_mod3_zero: bool
    m_is_3: bool
    transposed: bool

    def __str__(self) -> str:
        flags = []
        if self.n_mod3_zero:
            flags.append("n%3==0")
        if self.m_is_3:
            flags.append("m==3")
        if self.transposed:
            flags.append("transposed")
        extra = f" [{', '.join(flags)}]" if flags else ""
        return f"{self.kind} ({self.m}x{self.n}){extra}"


def classify(dims: GridDims) -> WeaveCase:
    dims.require_tour_capable()
    canon, flipped = dims.canonical()
    m, n = canon.m, canon.n
    if n <= 2:
        kind = "tiny"
    elif m == 1:
        kind = "line"
    else:
        kind = ("even" if m % 2 == 0 else "odd") + ("_even" if n % 2 == 0 else "_odd")
    return WeaveCase(m, n, kind, n % 3 == 0, m == 3, flipped)


def _check_node(dims: GridDims, i: int, j: int) -> None:
    if not (1 <= i <= dims.m and 1 <= j <= dims.n):
        raise MSTSPError(f"node ({i},{j}) outside the {dims} grid")


def next_col(dims: GridDims, i: int, j: int) -> int:
    _check_node(dims, i, j)
    return line_next(dims.n, j)


def next_row(dims: GridDims, i: int, j: int) -> Optional[int]:
    """Row of the successor of ``(i, j)``, or ``TERMINATE`` at the last node.

    Transcribes the case tables for ``2 <= m <= n``, ``n >= 3``.  For m = 3
    the walk stops as soon as the row triple is finished; the general odd-m
    tables assume rows beyond the triple exist.
    """
    _check_node(dims, i, j)
    m, n = dims.m, dims.n
    if m < 2 or n < 3 or m > n:
        raise MSTSPError(f"successor tables cover 2 <= m <= n, n >= 3; got {dims}")
    t = dims.t
    even_n = n % 2 == 0

    if m % 2 == 0:
        if even_n:
            if i == m - t and j == 1:
                return TERMINATE
            if j != 1:
                return i + t if i <= t else i - t
            if i < t:
                return i + (t + 1)
            return i - (t - 1)  # m > i > t, or i = m
        if i == m and j == 1:
            return TERMINATE
        if i <= t:
            return i + t
        if j != 1:
            return i - t
        return i - (t - 1)  # m > i > t

    if m == 3:
        # triple ends at (m,1) unless n % 3 == 0, where it ends at (t+1,1)
        last = t + 1 if n % 3 == 0 else m
        if i == last and j == 1:
            return TERMINATE
        if j != 1:
            return {1: t + 1, t + 1: m, m: 1}[i]
        return {1: t + 1 if n % 3 else m, t + 1: m, m: t + 1}[i]

    terminal_row = m - 1 - t if even_n else m - 1
    if i == terminal_row and j == 1:
        return TERMINATE

    if n % 3:
        if i <= t + 1 and (j != 1 or not even_n or i in (1, t + 1)):
            return i + t
        if t + 1 < i < m and j != 1:
            return i - t
        if i == m:
            return 1 if j != 1 else 2
        # remaining: j == 1
        if even_n and 1 < i < t:
            return i + (t + 1)
        if t + 1 < i < m - 1:
            return i - (t - 1)
        if even_n and i == m - 1:
            return i - (t - 2)
    else:
        if 1 < i <= t and (j != 1 or not even_n):
            return i + t
        if i in (1, t + 1) and j != 1:
            return i + t
        if t + 1 < i < m and j != 1:
            return i - t
        if i == m:
            return 1 if j != 1 else t + 1
        if i == 1:
            return m
        if even_n and 1 < i < t:
            return i + (t + 1)
        if t + 1 <= i < m - 1:
            return i - (t - 1)
        if even_n and i == m - 1:
            return i - (t - 2)
    raise WeaveConsistencyError(f"no successor rule for ({i},{j}) on {dims}")


def successor_walk(dims: GridDims) -> Tour:
    """Follow the successor tables from ``(1, k+2)`` until TERMINATE.

    Requires ``2 <= m <= n`` and ``n >= 3``.  Raises
    :class:`WeaveConsistencyError` if the walk revisits a node, runs past
    m*n steps, or stops early.
    """
    if dims.m < 2 or dims.n < 3 or dims.m > dims.n:
        raise MSTSPError(f"successor walk covers 2 <= m <= n, n >= 3; got {dims}")
    i, j = 1, dims.k + 2
    seen = {(i, j)}
    order = [(i, j)]
    while True:
        r = next_row(dims, i, j)
        if r is TERMINATE:
            break
        i, j = r, next_col(dims, i, j)
        if (i, j) in seen or not (1 <= i <= dims.m):
            raise WeaveConsistencyError(
                f"successor walk on {classify(dims)} revisits or leaves the grid at ({i},{j})"
            )
        seen.add((i, j))
        order.append((i, j))
    if len(order) != dims.size:
        raise WeaveConsistencyError(
            f"successor walk on {classify(dims)} stopped after {len(order)} of {dims.size} nodes"
        )
    return Tour(dims, order)


def triple_offsets(n: int) -> tuple[int, int, int]:
    """Where each of the three triple passes starts in the row cycle ``(1, t+1, m)``.

    For ``n % 3 != 0`` the row cycle simply keeps running across passes,
    so pass p starts at offset ``p*n mod 3``.  For ``n % 3 == 0`` that would
    close a subtour, and the passes start at 1, t+1, m in turn.
    """
    if n % 3 == 0:
        return (0, 1, 2)
    return (0, n % 3, (2 * n) % 3)


def pass_rows(dims: GridDims) -> list[tuple[int, ...]]:
    """Row cycle of every pass, in visiting order, for ``2 <= m <= n``.

    Each pass visits all n columns once; position q of a pass with cycle
    ``c`` lies in row ``c[q % len(c)]``.
    """
    m, t = dims.m, dims.t
    passes: list[tuple[int, ...]] = []
    if m % 2:
        cyc = (1, t + 1, m)
        passes += [cyc[o:] + cyc[:o] for o in triple_offsets(dims.n)]
        if m == 3:
            return passes
        first = 2
    else:
        first = 1
    pairs = [(r, r + t) for r in range(first, t + 1)]
    if dims.n % 2:
        for a, b in pairs:
            passes += [(a, b), (b, a)]
    else:
        passes += pairs + [(b, a) for a, b in pairs]
    return passes


def _line_columns(n: int) -> np.ndarray:
    """Line order as an array, rotated to start at column k+2."""
    k = n // 2
    order = np.empty(n, dtype=np.int64)
    if n % 2:
        order[0 : 2 * k : 2] = np.arange(1, k + 1)
        order[1 : 2 * k : 2] = np.arange(k + 2, n + 1)
        order[-1] = k + 1
    else:
        order[0::2] = np.concatenate([np.arange(1, k + 1, 2), np.arange(k - k % 2, 0, -2)])
        high = np.arange(k + 1, n + 1)
        order[1::2] = np.concatenate([high[1::2], high[0::2][::-1]])
    # every line order starts 1, k+2, ...
    return np.roll(order, -1)


def _weave_order(dims: GridDims) -> np.ndarray:
    m, n, t = dims.m, dims.n, dims.t
    cols = _line_columns(n)
    pos = np.arange(n)
    blocks = []
    if m % 2:
        cyc = np.array([1, t + 1, m])
        blocks += [np.roll(cyc, -o)[pos % 3] for o in triple_offsets(n)]
        low = np.arange(2, t + 1)
    else:
        low = np.arange(1, t + 1)
    if low.size:
        high = low + t
        if n % 2:
            first = np.column_stack([low, high]).ravel()
            second = np.column_stack([high, low]).ravel()
        else:
            first = np.concatenate([low, high])
            second = np.concatenate([high, low])
        blocks.append(np.where(pos % 2 == 0, first[:, None], second[:, None]))
    rows = np.vstack([np.atleast_2d(b) for b in blocks])
    order = np.empty((rows.size, 2), dtype=np.int64)
    order[:, 0] = rows.ravel()
    order[:, 1] = np.tile(cols, rows.shape[0])
    return order


TINY_2X2 = ((1, 1), (2, 2), (1, 2), (2, 1))


def build_tour(dims: GridDims, check: bool = True) -> Tour:
    """Weave tour for any grid with at least 3 nodes.

    ``m > n`` is built on the transposed grid and flipped back.  The 2x2
    grid gets a fixed optimal 4-cycle.  With ``check`` (the default) the
    result is validated and any failure raises WeaveConsistencyError.
    """
    case = classify(dims)
    canon = GridDims(case.m, case.n)
    if case.kind == "tiny":
        tour = Tour(canon, TINY_2X2)
    elif case.kind == "line":
        tour = Tour(canon, [(1, c) for c in line_order(canon.n)])
    else:
        tour = Tour(canon, _weave_order(canon))
    if case.transposed:
        tour = tour.transposed()
    if check:
        result = validate_tour(tour)
        if not result:
            raise WeaveConsistencyError(f"Weave on {case} is not a tour: {result.detail}")
    return tour


def weave_min_edge_sq(dims: GridDims) -> int:
    """Closed-form shortest squared edge of the Weave tour (``m <= n``)."""
    canon, _ = dims.canonical()
    m, n, k, t = canon.m, canon.n, canon.k, canon.t
    if canon.size < 3:
        raise DegenerateGridError(f"no closed tour on fewer than 3 nodes ({dims})")
    if m == 1:
        return k * k if n % 2 else (k - 1) ** 2
    if n % 2:
        return k * k + t * t
    return t * t + (k - 1) ** 2
