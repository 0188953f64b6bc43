"""Maximum scatter TSP on regular grids: Weave tours, bounds, exact oracle."""

from .bounds import (
    BoundsReport,
    alpha_closed_form,
    approx_alpha,
    bounds_report,
    classify_optimal,
    gap,
    gap_below_one,
    lower_bound,
    upper_bound,
)
from .grid import (
    DegenerateGridError,
    GridDims,
    GridPoint,
    InvalidTourError,
    MSTSPError,
    SquaredLength,
    Tour,
    ValidationResult,
    min_edge,
    sq_dist,
    validate_tour,
)
from .line import line_even, line_next, line_odd, line_order
from .oracle import (
    OracleResult,
    OracleSizeError,
    brute_force_small,
    distinct_thresholds,
    find_hamiltonian_cycle,
    has_hamiltonian_cycle,
    solve_exact,
    threshold_graph,
)
from .weave import (
    TERMINATE,
    WeaveConsistencyError,
    build_tour,
    classify,
    next_col,
    next_row,
    successor_walk,
)

__version__ = "0.1.0"
