"""Command-line interface: ``mstsp <command> ...`` or ``python -m mstsp``.

Exit codes: 0 success, 1 invalid input, 2 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .bounds import approx_alpha, bounds_report, optimality_reason
from .grid import GridDims, MSTSPError, Tour, format_length, min_edge, validate_tour
from .oracle import DEFAULT_NODE_LIMIT, HARD_NODE_LIMIT, OracleResult, solve_exact
from .render import RenderSpec, tour_ascii, write_svg
from .weave import WeaveConsistencyError, build_tour

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


@dataclass
class SweepSpec:
    m_range: range
    n_range: range
    oracle_limit: int = DEFAULT_NODE_LIMIT
    out: Optional[Path] = None
    fmt: str = "text"
    jobs: int = 1

    def __post_init__(self) -> None:
        if len(self.m_range) == 0 or len(self.n_range) == 0:
            raise MSTSPError("sweep ranges must be non-empty")
        if not 0 <= self.oracle_limit <= HARD_NODE_LIMIT:
            raise MSTSPError(f"oracle limit must be in 0..{HARD_NODE_LIMIT}")

    def grids(self) -> list[GridDims]:
        return [
            GridDims(m, n)
            for m in self.m_range
            for n in self.n_range
            if m <= n and m * n >= 3
        ]


@dataclass
class Output:
    fmt: str = "text"
    stream: object = field(default_factory=lambda: sys.stdout)

    def emit(self, record: dict, text: str) -> None:
        if self.fmt == "structured":
            print(json.dumps(record, sort_keys=False), file=self.stream)
        else:
            print(text, file=self.stream)


def parse_range(spec: str) -> range:
    """``"5"`` -> 5..5, ``"2:10"`` -> 2..10 inclusive."""
    try:
        if ":" in spec:
            lo, hi = spec.split(":", 1)
            return range(int(lo), int(hi) + 1)
        return range(int(spec), int(spec) + 1)
    except ValueError:
        raise MSTSPError(f"bad range {spec!r}, expected N or LO:HI") from None


def parse_size(spec: str) -> GridDims:
    try:
        m, n = spec.lower().split("x")
        return GridDims(int(m), int(n))
    except ValueError:
        raise MSTSPError(f"bad size {spec!r}, expected MxN") from None


def tour_summary(dims: GridDims, tour: Tour) -> dict:
    val = min_edge(tour)
    rep = bounds_report(dims)
    return {
        "m": dims.m,
        "n": dims.n,
        "min_edge_sq": int(val),
        "min_edge": float(f"{val ** 0.5:.12g}"),
        "optimal": rep.optimal,
        "status": optimality_reason(dims),
        "alpha": float(f"{approx_alpha(dims):.12g}"),
    }


def cmd_tour(args, out: Output) -> int:
    dims = GridDims(args.m, args.n)
    tour = build_tour(dims)
    rec = tour_summary(dims, tour)
    if args.out:
        Path(args.out).write_text(tour.to_text(), encoding="ascii")
        rec["path"] = str(args.out)
        report_stream = out
    else:
        sys.stdout.write(tour.to_text())
        report_stream = Output(out.fmt, sys.stderr)
    status = rec["status"] if rec["optimal"] else f"approximation, α = {rec['alpha']:.6f}"
    report_stream.emit(rec, f"{dims} Weave tour: min_edge² = {rec['min_edge_sq']} ({format_length(rec['min_edge_sq'])}), {status}")
    return EXIT_OK


def cmd_bounds(args, out: Output) -> int:
    rep = bounds_report(GridDims(args.m, args.n))
    out.emit(rep.to_record(), rep.to_text())
    return EXIT_OK


def cmd_verify(args, out: Output) -> int:
    tour = Tour.from_text(Path(args.tour_file).read_text(encoding="ascii"))
    check = validate_tour(tour)
    rec = {"m": tour.dims.m, "n": tour.dims.n, "valid": check.ok}
    if check.ok:
        rec["min_edge_sq"] = int(min_edge(tour))
        text = f"valid; min_edge² = {rec['min_edge_sq']}"
    else:
        rec["problem"] = check.problem
        rec["detail"] = check.detail
        text = str(check)
    out.emit(rec, text)
    return EXIT_OK if check.ok else EXIT_INPUT


def compare_record(dims: GridDims, oracle_limit: int) -> tuple[dict, OracleResult]:
    tour = build_tour(dims)
    rep = bounds_report(dims)
    res = solve_exact(dims, node_limit=oracle_limit)
    rec = {
        "m": dims.m,
        "n": dims.n,
        "weave_sq": int(min_edge(tour)),
        "opt_sq": res.opt_sq,
        "lower_sq": rep.lower_sq,
        "upper_sq": rep.upper_sq,
        "optimal": rep.optimal,
        "weave_is_opt": int(min_edge(tour)) == res.opt_sq,
    }
    return rec, res


def cmd_compare(args, out: Output) -> int:
    dims = GridDims(args.m, args.n)
    rec, res = compare_record(dims, args.oracle_limit)
    if args.out:
        Path(args.out).write_text(
            res.witness.to_text(comment=f"oracle witness, opt_sq={res.opt_sq}"), encoding="ascii"
        )
    text = (
        f"{dims}: Weave² = {rec['weave_sq']}, OPT² = {rec['opt_sq']}, "
        f"upper² = {rec['upper_sq']}"
        + ("  (Weave optimal)" if rec["weave_is_opt"] else "")
    )
    out.emit(rec, text)
    return EXIT_OK


def sweep_row(dims: GridDims, oracle_limit: int) -> dict:
    rec = bounds_report(dims).to_record()
    try:
        tour = build_tour(dims)
        rec["hamiltonian"] = True
        rec["weave_sq"] = int(min_edge(tour))
    except WeaveConsistencyError:
        rec["hamiltonian"] = False
        rec["weave_sq"] = None
    rec["opt_sq"] = solve_exact(dims, oracle_limit).opt_sq if dims.size <= oracle_limit else None
    return rec


def _sweep_row_args(a) -> dict:
    return sweep_row(*a)


def run_sweep(spec: SweepSpec) -> list[dict]:
    work = [(d, spec.oracle_limit) for d in spec.grids()]
    if spec.jobs > 1:
        with ProcessPoolExecutor(spec.jobs) as pool:
            return list(pool.map(_sweep_row_args, work, chunksize=8))
    return [sweep_row(*a) for a in work]


SWEEP_COLUMNS = ("m", "n", "lower_sq", "upper_sq", "weave_sq", "opt_sq", "optimal", "hamiltonian", "gap", "alpha")


def cmd_sweep(args, out: Output) -> int:
    spec = SweepSpec(
        parse_range(args.m_range),
        parse_range(args.n_range),
        oracle_limit=args.oracle_limit,
        out=Path(args.out) if args.out else None,
        fmt=args.format,
        jobs=args.jobs,
    )
    rows = run_sweep(spec)
    if spec.fmt == "structured":
        body = "".join(json.dumps(r) + "\n" for r in rows)
    else:
        lines = ["\t".join(SWEEP_COLUMNS)]
        lines += ["\t".join("-" if r[c] is None else str(r[c]) for c in SWEEP_COLUMNS) for r in rows]
        body = "\n".join(lines) + "\n"
    if spec.out:
        spec.out.write_text(body, encoding="utf-8")
    else:
        out.stream.write(body)
    bad = [r for r in rows if not r["hamiltonian"] or r["weave_sq"] != r["lower_sq"]]
    return EXIT_INTERNAL if bad else EXIT_OK


def cmd_render(args, out: Output) -> int:
    dims = GridDims(args.m, args.n)
    tour = build_tour(dims)
    if args.ascii:
        out.stream.write(tour_ascii(tour))
    if args.out:
        spec = RenderSpec(cell=args.cell, margin=args.margin, out=Path(args.out))
        write_svg(tour, spec.out, spec)
        out.emit({"m": dims.m, "n": dims.n, "path": str(spec.out)}, f"wrote {spec.out}")
    elif not args.ascii:
        raise MSTSPError("render needs --out FILE.svg and/or --ascii")
    return EXIT_OK


def bench_build(sizes: Iterable[GridDims], repeats: int = 3) -> list[dict]:
    """Best-of-``repeats`` wall time of ``build_tour`` per grid size."""
    rows = []
    for dims in sizes:
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            build_tour(dims, check=False)
            best = min(best, time.perf_counter() - t0)
        rows.append(
            {
                "m": dims.m,
                "n": dims.n,
                "nodes": dims.size,
                "seconds": best,
                "ns_per_node": best / dims.size * 1e9,
            }
        )
    return rows


DEFAULT_BENCH = ("100x100", "300x300", "1000x1000")


def cmd_bench(args, out: Output) -> int:
    sizes = [parse_size(s) for s in (args.sizes or DEFAULT_BENCH)]
    for row in bench_build(sizes, repeats=args.repeats):
        out.emit(
            row,
            f"{row['m']}x{row['n']}: {row['seconds'] * 1e3:9.3f} ms  {row['ns_per_node']:8.2f} ns/node",
        )
    return EXIT_OK


def load_config(path: Optional[str]) -> dict:
    if not path:
        return {}
    try:
        cfg = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise MSTSPError(f"cannot read config {path}: {exc}") from None
    if not isinstance(cfg, dict):
        raise MSTSPError("config file must hold a JSON object")
    return cfg


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--oracle-limit", type=int, default=None, help=f"max nodes for the exact oracle (default {DEFAULT_NODE_LIMIT})")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--out", default=None)
    common.add_argument("--config", default=None, help="JSON file with defaults, e.g. {\"oracle_limit\": 20}")

    p = argparse.ArgumentParser(prog="mstsp", description="Maximum scatter TSP on regular grids")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("tour", parents=[common], help="write the Weave tour")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_tour)

    s = sub.add_parser("bounds", parents=[common], help="lower/upper bounds, gap and alpha")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("verify", parents=[common], help="validate a tour file and report its min edge")
    s.add_argument("tour_file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("compare", parents=[common], help="Weave vs exact optimum vs upper bound")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("sweep", parents=[common], help="bounds and checks over ranges of m and n")
    s.add_argument("--m-range", default="2:10")
    s.add_argument("--n-range", default="3:10")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("render", parents=[common], help="draw the Weave tour as SVG or ASCII")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--cell", type=int, default=40)
    s.add_argument("--margin", type=int, default=20)
    s.add_argument("--ascii", action="store_true")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("bench", parents=[common], help="time build_tour at several sizes")
    s.add_argument("sizes", nargs="*", metavar="MxN")
    s.add_argument("--repeats", type=int, default=3)
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.oracle_limit is None:
            args.oracle_limit = int(cfg.get("oracle_limit", DEFAULT_NODE_LIMIT))
        if args.jobs == 1 and "jobs" in cfg:
            args.jobs = int(cfg["jobs"])
        if not 0 <= args.oracle_limit <= HARD_NODE_LIMIT:
            raise MSTSPError(f"--oracle-limit must be in 0..{HARD_NODE_LIMIT}")
        return args.func(args, Output(args.format))
    except WeaveConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (MSTSPError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
