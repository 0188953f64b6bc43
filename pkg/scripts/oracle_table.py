"""Weave value vs exact optimum vs bounds for every grid within the oracle limit.

    python scripts/oracle_table.py [--limit 24]
"""

import argparse

from mstsp import GridDims, build_tour, classify_optimal, lower_bound, min_edge, solve_exact, upper_bound


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--limit", type=int, default=24)
    args = ap.parse_args()
    print(f"{'grid':>6} {'weave':>6} {'opt':>5} {'upper':>6}  note")
    for m in range(1, args.limit + 1):
        for n in range(m, args.limit + 1):
            d = GridDims(m, n)
            if not 3 <= d.size <= args.limit:
                continue
            weave = min_edge(build_tour(d))
            opt = solve_exact(d, node_limit=args.limit).opt_sq
            if classify_optimal(d):
                note = "optimal"
            elif opt == upper_bound(d):
                note = "OPT at upper bound"
            else:
                note = "OPT strictly inside bounds"
            assert lower_bound(d) == weave <= opt <= upper_bound(d)
            print(f"{str(d):>6} {weave:>6} {opt:>5} {upper_bound(d):>6}  {note}")


if __name__ == "__main__":
    main()
