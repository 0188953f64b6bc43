"""Exact integer geometry on the regular m x n grid.

Rows and columns are 1-indexed, ``(row, col) = (i, j)`` with ``1 <= i <= m``
and ``1 <= j <= n``.  Every distance is kept as an integer squared length so
comparisons are exact; square roots only appear in printed reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NewType, Optional, Sequence, Union

import numpy as np

SquaredLength = NewType("SquaredLength", int)

TOUR_MAGIC = "mstsp-tour 1"


class MSTSPError(ValueError):
    """Invalid input: bad dimensions, malformed tour, size limits."""


class DegenerateGridError(MSTSPError):
    pass


class InvalidTourError(MSTSPError):
    pass


@dataclass(frozen=True)
class GridDims:
    m: int
    n: int

    def __post_init__(self) -> None:
        for name in ("m", "n"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise MSTSPError(f"{name} must be an integer, got {value!r}")
            if value < 1:
                raise MSTSPError(f"{name} must be >= 1, got {value}")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "n", int(self.n))

    @property
    def k(self) -> int:
        return self.n // 2

    @property
    def t(self) -> int:
        return self.m // 2

    @property
    def size(self) -> int:
        return self.m * self.n

    def canonical(self) -> tuple["GridDims", bool]:
        """Return dims with ``m <= n`` and whether a transposition was needed."""
        if self.m <= self.n:
            return self, False
        return GridDims(self.n, self.m), True

    def transposed(self) -> "GridDims":
        return GridDims(self.n, self.m)

    def contains(self, p: "GridPoint") -> bool:
        return 1 <= p.row <= self.m and 1 <= p.col <= self.n

    def points(self) -> Iterator["GridPoint"]:
        for i in range(1, self.m + 1):
            for j in range(1, self.n + 1):
                yield GridPoint(i, j)

    def require_tour_capable(self) -> None:
        if self.size < 3:
            raise DegenerateGridError(
                f"no closed tour on fewer than 3 nodes ({self.m}x{self.n} grid)"
            )

    def __str__(self) -> str:
        return f"{self.m}x{self.n}"


@dataclass(frozen=True, order=True)
class GridPoint:
    row: int
    col: int

    def __iter__(self):
        yield self.row
        yield self.col

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


PointLike = Union[GridPoint, Sequence[int]]


def sq_dist(a: PointLike, b: PointLike) -> SquaredLength:
    (ar, ac), (br, bc) = a, b
    return SquaredLength((ar - br) ** 2 + (ac - bc) ** 2)


class Tour:
    """A cyclic visiting order over grid nodes.

    The order is held as an ``(N, 2)`` integer array of 1-indexed
    ``(row, col)`` pairs so that million-node tours stay cheap; iterating
    yields :class:`GridPoint` objects.  Construction does not validate,
    use :func:`validate_tour` for that.
    """

    __slots__ = ("dims", "_order")

    def __init__(self, dims: GridDims, order: Union[np.ndarray, Iterable[PointLike]]):
        self.dims = dims
        if isinstance(order, np.ndarray):
            arr = np.asarray(order, dtype=np.int64)
        else:
            arr = np.array([tuple(p) for p in order], dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise MSTSPError(f"tour order must be a sequence of (row, col) pairs, got shape {arr.shape}")
        arr.setflags(write=False)
        self._order = arr

    @property
    def order(self) -> np.ndarray:
        return self._order

    @property
    def rows(self) -> np.ndarray:
        return self._order[:, 0]

    @property
    def cols(self) -> np.ndarray:
        return self._order[:, 1]

    def __len__(self) -> int:
        return len(self._order)

    def __iter__(self) -> Iterator[GridPoint]:
        for r, c in self._order.tolist():
            yield GridPoint(r, c)

    def __getitem__(self, idx: int) -> GridPoint:
        r, c = self._order[idx]
        return GridPoint(int(r), int(c))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tour):
            return NotImplemented
        return self.dims == other.dims and np.array_equal(self._order, other._order)

    def __repr__(self) -> str:
        head = ", ".join(str(p) for p in list(self)[:4])
        more = ", ..." if len(self) > 4 else ""
        return f"Tour({self.dims}, [{head}{more}])"

    def as_list(self) -> list[tuple[int, int]]:
        return [tuple(p) for p in self._order.tolist()]

    def rotated(self, shift: int) -> "Tour":
        return Tour(self.dims, np.roll(self._order, -shift, axis=0))

    def reversed(self) -> "Tour":
        return Tour(self.dims, self._order[::-1].copy())

    def transposed(self) -> "Tour":
        return Tour(self.dims.transposed(), self._order[:, ::-1].copy())

    def edge_lengths(self) -> np.ndarray:
        """Squared length of edge ``p[i] -> p[i+1]`` (cyclic), as int64."""
        nxt = np.roll(self._order, -1, axis=0)
        d = self._order - nxt
        return (d * d).sum(axis=1)

    def to_text(self, comment: Optional[str] = None) -> str:
        lines = [TOUR_MAGIC, f"{self.dims.m} {self.dims.n}"]
        if comment:
            lines.append(f"# {comment}")
        lines.extend(f"{r} {c}" for r, c in self._order.tolist())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Tour":
        lines = text.split("\n")
        if not lines or lines[0].rstrip("\r") != TOUR_MAGIC:
            raise MSTSPError(f"not a tour file: first line must be {TOUR_MAGIC!r}")
        body = [ln.strip() for ln in lines[1:]]
        body = [ln for ln in body if ln and not ln.startswith("#")]
        if not body:
            raise MSTSPError("tour file is missing the '<m> <n>' line")
        try:
            m, n = (int(x) for x in body[0].split())
            pairs = [tuple(int(x) for x in ln.split()) for ln in body[1:]]
        except ValueError as exc:
            raise MSTSPError(f"malformed tour file: {exc}") from None
        if any(len(p) != 2 for p in pairs):
            raise MSTSPError("malformed tour file: node lines must be '<row> <col>'")
        return cls(GridDims(m, n), pairs)


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    problem: Optional[str] = None
    detail: str = ""
    node: Optional[GridPoint] = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "valid" if self.ok else f"invalid: {self.detail}"


def validate_tour(tour: Tour) -> ValidationResult:
    """Check that ``tour`` visits every node of its grid exactly once.

    Checks run in order: length, out-of-range nodes, duplicates, missing
    nodes.  Only the first violation is reported.
    """
    dims = tour.dims
    order = tour.order
    if len(order) != dims.size:
        return ValidationResult(
            False, "wrong_length", f"wrong length ({len(order)} != {dims.size})"
        )
    rows, cols = order[:, 0], order[:, 1]
    bad = np.flatnonzero((rows < 1) | (rows > dims.m) | (cols < 1) | (cols > dims.n))
    if bad.size:
        p = tour[int(bad[0])]
        return ValidationResult(False, "out_of_range", f"out-of-range {p}", p)
    idx = (rows - 1) * dims.n + (cols - 1)
    perm = np.argsort(idx, kind="stable")
    sorted_idx = idx[perm]
    repeats = perm[1:][sorted_idx[1:] == sorted_idx[:-1]]
    if repeats.size:
        p = tour[int(repeats.min())]
        return ValidationResult(False, "duplicate", f"duplicate {p}", p)
    # length matches and no duplicates, so nothing can be missing; kept for
    # callers that construct tours with a wrong dims object
    seen = np.zeros(dims.size, dtype=bool)
    seen[idx] = True
    if not seen.all():
        miss = int(np.flatnonzero(~seen)[0])
        p = GridPoint(miss // dims.n + 1, miss % dims.n + 1)
        return ValidationResult(False, "missing", f"missing {p}", p)
    return ValidationResult(True)


def min_edge(tour: Tour) -> SquaredLength:
    """Objective value: the shortest squared edge of the closed tour."""
    check = validate_tour(tour)
    if not check:
        raise InvalidTourError(str(check))
    return SquaredLength(int(tour.edge_lengths().min()))


def format_length(sq: int) -> str:
    """Render a squared length as ``√v ≈ x.xxxxxx``."""
    return f"√{sq} ≈ {sq ** 0.5:.6f}"
