"""Closed-form bounds on the max-min tour value of the m x n grid.

Lower bound: the shortest edge Weave is guaranteed to achieve.
Upper bound: each central node needs two tour neighbours, and none lies
farther away than a corner.  This is sharpened for even m and even n
(the farthest corner is unique) and for m = 2, where reaching the bound
would close a subtour.

All bounds are squared integers.  Only ``gap`` and ``alpha`` are real.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .grid import GridDims
from .weave import weave_min_edge_sq

SQRT10_OVER_5 = math.sqrt(10) / 5


def _canon(dims: GridDims) -> GridDims:
    dims.require_tour_capable()
    return dims.canonical()[0]


def lower_bound(dims: GridDims) -> int:
    return weave_min_edge_sq(_canon(dims))


def upper_bound(dims: GridDims) -> int:
    d = _canon(dims)
    m, n, k, t = d.m, d.n, d.k, d.t
    if m == 1:
        # line tours are optimal
        return k * k if n % 2 else (k - 1) ** 2
    if n % 2 or m % 2:
        return k * k + t * t
    if m == 2:
        return 1 + (k - 1) ** 2
    return k * k + (t - 1) ** 2


def classify_optimal(dims: GridDims) -> bool:
    """Weave is provably optimal when n is odd, m = n or m = 2 (m <= n)."""
    d = _canon(dims)
    return d.n % 2 == 1 or d.m == d.n or d.m <= 2


def optimality_reason(dims: GridDims) -> str:
    d = _canon(dims)
    if d.m == 1:
        return "optimal (line)"
    if d.n % 2:
        return "optimal (n odd)"
    if d.m == d.n:
        return "optimal (m = n)"
    if d.m == 2:
        return "optimal (m = 2)"
    return "approximation"


def approx_alpha(dims: GridDims) -> float:
    """Guaranteed ratio Weave / OPT, i.e. sqrt(lower / upper)."""
    return math.sqrt(lower_bound(dims) / upper_bound(dims))


def alpha_closed_form(dims: GridDims) -> float:
    """The approximation factor written directly in terms of k and t.

    n even, m odd:   sqrt(1 - (2k-1) / (t^2 + k^2))
    m, n even, m>=4: sqrt(1 - 2(k-t) / ((k-t)^2 + 2t(k-1) + 1))
    optimal cases:   1
    """
    d = _canon(dims)
    k, t = d.k, d.t
    if classify_optimal(d):
        return 1.0
    if d.m % 2:
        return math.sqrt(1 - (2 * k - 1) / (t * t + k * k))
    return math.sqrt(1 - 2 * (k - t) / ((k - t) ** 2 + 2 * t * (k - 1) + 1))


def gap(dims: GridDims) -> float:
    return math.sqrt(upper_bound(dims)) - math.sqrt(lower_bound(dims))


def gap_below_one(dims: GridDims) -> bool:
    """Exact integer test of ``sqrt(upper) - sqrt(lower) < 1``.

    Equivalent to ``u - l - 1 < 2 sqrt(l)``; when the left side is positive
    both sides are squared.
    """
    u, l = upper_bound(dims), lower_bound(dims)
    lhs = u - l - 1
    if lhs < 0:
        return True
    return lhs * lhs < 4 * l


@dataclass(frozen=True)
class BoundsReport:
    m: int
    n: int
    k: int
    t: int
    lower_sq: int
    upper_sq: int
    lower: float
    upper: float
    optimal: bool
    gap: float
    alpha: float

    def to_record(self) -> dict:
        rec = asdict(self)
        for key in ("lower", "upper", "gap", "alpha"):
            rec[key] = float(f"{rec[key]:.12g}")
        return rec

    def to_text(self) -> str:
        status = "optimal" if self.optimal else "approximation"
        return "\n".join(
            [
                f"grid {self.m}x{self.n}  (k={self.k}, t={self.t})",
                f"  lower bound (Weave)  : √{self.lower_sq} ≈ {self.lower:.12g}",
                f"  upper bound on OPT   : √{self.upper_sq} ≈ {self.upper:.12g}",
                f"  status               : {status}",
                f"  gap                  : {self.gap:.12g}",
                f"  alpha                : {self.alpha:.12g}",
            ]
        )


def bounds_report(dims: GridDims) -> BoundsReport:
    d = _canon(dims)
    lo, up = lower_bound(d), upper_bound(d)
    return BoundsReport(
        m=d.m,
        n=d.n,
        k=d.k,
        t=d.t,
        lower_sq=lo,
        upper_sq=up,
        lower=math.sqrt(lo),
        upper=math.sqrt(up),
        optimal=classify_optimal(d),
        gap=math.sqrt(up) - math.sqrt(lo),
        alpha=math.sqrt(lo / up),
    )
