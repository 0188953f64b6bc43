"""Time build_tour on square grids from 10^2 to ~4*10^6 nodes.

    python scripts/bench_linear.py
"""

from mstsp import GridDims
from mstsp.cli import bench_build

SIDES = (10, 30, 100, 300, 1000, 2000)

for row in bench_build([GridDims(s, s) for s in SIDES], repeats=5):
    print(f"{row['m']:>5}x{row['n']:<5} {row['nodes']:>9} nodes  {row['seconds'] * 1e3:9.3f} ms  {row['ns_per_node']:7.2f} ns/node")
