"""Exact combinatorics of the clairvoyant maitre d' napkin problem."""

from .benches import (
    AlgorithmTrace,
    Bench,
    BenchCollection,
    TraceStep,
    algorithm_C,
    balance_number,
    bench_seating_order,
    clairvoyant_napkinless,
    is_balanced,
    nu_max_formula,
    ordered_bench,
    unbalanced_count_prediction,
)
from .distribution import (
    DistributionTable,
    convergence_gap,
    distribution_table,
    expected_napkinless,
    figure_data,
    monte_carlo_expectation,
    p_nk,
    pr_nk,
)
from .oracle import (
    BudgetExceeded,
    OracleBudget,
    brute_force_distribution,
    brute_force_numax_bench,
    brute_force_numax_seating,
    canonicalize_max_arrangement,
    minimal_napkinless_block,
)
from .paths import (
    LatticePath,
    PathDecoration,
    count_paths_by_drift,
    decompose,
    drift,
    enumerate_paths_by_drift,
    phi,
    phi_inverse,
    psi,
    symmetric_drift,
)
from .seating import (
    DiningOutcome,
    Napkin,
    PreferenceOrder,
    SeatingArrangement,
    SeatingOrder,
    Status,
    napkinless_count,
    rotate_to_diner_one,
    signed_display,
    simulate_dining,
    zero_napkinless_order,
)

__version__ = "0.1.0"
