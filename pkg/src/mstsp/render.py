"""Static SVG and ASCII pictures of grid tours."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .grid import MSTSPError, Tour


@dataclass
class RenderSpec:
    cell: int = 40
    margin: int = 20
    node_radius: float = 3.5
    edge_color: str = "#7a8794"
    min_edge_color: str = "#d62728"
    out: Optional[Path] = None

    def __post_init__(self) -> None:
        if self.cell <= 0 or self.margin < 0 or self.node_radius <= 0:
            raise MSTSPError("render sizes must be positive")


def tour_svg(tour: Tour, spec: Optional[RenderSpec] = None) -> str:
    """SVG 1.1 document; edges of minimum length are drawn in ``min_edge_color``."""
    spec = spec or RenderSpec()
    m, n = tour.dims.m, tour.dims.n
    c, pad = spec.cell, spec.margin
    width = 2 * pad + (n - 1) * c
    height = 2 * pad + (m - 1) * c

    def xy(r: int, col: int) -> tuple[int, int]:
        return pad + (col - 1) * c, pad + (r - 1) * c

    lengths = tour.edge_lengths()
    shortest = int(lengths.min()) if len(lengths) else 0
    pts = tour.as_list()
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f"<title>Weave tour {m}x{n}, min edge squared {shortest}</title>",
        f'<rect width="{width}" height="{height}" fill="white"/>',
        '<g fill="none" stroke-linecap="round">',
    ]
    for idx, (a, sq) in enumerate(zip(pts, lengths.tolist())):
        b = pts[(idx + 1) % len(pts)]
        (x1, y1), (x2, y2) = xy(*a), xy(*b)
        hot = sq == shortest
        color = spec.min_edge_color if hot else spec.edge_color
        stroke = 2.0 if hot else 1.0
        out.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{color}" '
            f'stroke-width="{stroke}" class="{"min-edge" if hot else "edge"}"/>'
        )
    out.append("</g>")
    out.append('<g fill="black">')
    for r in range(1, m + 1):
        for col in range(1, n + 1):
            x, y = xy(r, col)
            out.append(f'<circle cx="{x}" cy="{y}" r="{spec.node_radius}"/>')
    sx, sy = xy(*pts[0])
    out.append(f'<circle cx="{sx}" cy="{sy}" r="{spec.node_radius * 1.8}" fill="none" stroke="black"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(tour: Tour, path: Union[str, Path], spec: Optional[RenderSpec] = None) -> Path:
    path = Path(path)
    path.write_text(tour_svg(tour, spec), encoding="utf-8")
    return path


def tour_ascii(tour: Tour) -> str:
    """Grid of visit positions (1-based), one text row per grid row."""
    m, n = tour.dims.m, tour.dims.n
    pos = [[0] * n for _ in range(m)]
    for idx, (r, c) in enumerate(tour.as_list(), start=1):
        pos[r - 1][c - 1] = idx
    w = len(str(m * n))
    return "\n".join(" ".join(f"{v:>{w}}" for v in row) for row in pos) + "\n"
