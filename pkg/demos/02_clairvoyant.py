"""
The clairvoyant host sets traps
===============================

A host who knows every preference in advance groups seats into benches of
three. Filling the two ends of a bench first leaves a trap in the middle for
a later diner.
"""

from napkins import PreferenceOrder, algorithm_C, nu_max_formula, simulate_dining
from napkins.cli import grouped_display
from napkins.seating import signed_display

prefs = PreferenceOrder.parse("++-+--+++++++-")
table, trace = algorithm_C(prefs)

# Each arrival is logged with the step that placed it and the lattice point
# (x, y) after that arrival.
for step in trace.steps:
    print(f"diner {step.diner:2d}: step {step.step} -> seat {step.seat:2d}   at ({step.x},{step.y})")

print()
print("arrangement:", grouped_display(signed_display(table), trace.bench_groups()))
outcome = simulate_dining(table)
print("napkinless:", outcome.napkinless, " frustrated:", outcome.frustrated)

# No host can do better than min(q, (n - h) // 2).
print("best possible:", nu_max_formula(prefs))
