"""
Checking the formula against brute force
========================================

For small tables we can try every seating order. The brute-force maximum,
the bench search, the trap-setting host and the drift formula should agree.
"""

import time

from napkins import PreferenceOrder
from napkins.oracle import (
    best_seating,
    brute_force_numax_bench,
    canonicalize_max_arrangement,
    seating_numax_table,
    formula_numax_table,
)
from napkins.seating import simulate_dining
from napkins.verify import run_battery

prefs = PreferenceOrder.parse("+--++-+-")
best, order = best_seating(prefs)
print("best seating", order.diners, "leaves", best, "napkinless")
print("bench search agrees:", brute_force_numax_bench(prefs))

# Any maximizing arrangement can be packed so the napkinless sit in seats 2, 5, ...
canon = canonicalize_max_arrangement(prefs)
print("packed:", canon.order.diners, "napkinless seats", simulate_dining(canon).napkinless_seats)

# All 256 preference orders of eight diners at once.
start = time.perf_counter()
oracle = seating_numax_table(8)
print("n=8 agrees with formula:", list(oracle) == formula_numax_table(8),
      f"({time.perf_counter() - start:.2f}s)")

report = run_battery(7)
print("battery:", report["agreements"], "mismatches:", len(report["mismatches"]))
