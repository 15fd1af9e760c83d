"""
How many napkinless diners to expect
====================================

With preferences drawn uniformly at random, the maximum napkinless count has a
closed-form distribution. Everything here is exact until printed.
"""

from napkins import distribution_table, expected_napkinless, figure_data, monte_carlo_expectation
from napkins.distribution import convergence_gap

table = distribution_table(14)
for k, (c, p) in enumerate(zip(table.counts, table.probabilities)):
    print(f"k={k}: {c:6d} orders, probability {p}")
print("expected:", table.expectation, "=", float(table.expectation))

# The expected count per diner creeps up toward one third.
for n, e, prop in figure_data(3, 30)[::3]:
    print(f"n={n:3d}  E={float(e):8.4f}  E/n={float(prop):.4f}")

# The gap to n // 3 shrinks quickly.
for n in (30, 60, 120, 300):
    print(f"gap({n}) = {float(convergence_gap(n)):.3e}")

# A seeded simulation lands within a few standard errors of the exact answer.
mc = monte_carlo_expectation(30, 20_000, seed=1)
print(f"simulated {mc.mean:.4f} +- {mc.stderr:.4f}, exact {float(expected_napkinless(30)):.4f}")
