"""
Seating a table and watching the napkins go
===========================================

Diners arrive one at a time and reach for the napkin on their preferred side.
If that napkin is gone they take the other one, and if both are gone they
go napkinless.
"""

from napkins import PreferenceOrder, SeatingArrangement, SeatingOrder, simulate_dining, signed_display

# Eight diners. '+' reaches right, '-' reaches left.
prefs = PreferenceOrder.parse("+--++-+-")

# Seat k holds the k-th entry. Diner 1 always sits in Seat 1.
order = SeatingOrder((1, 5, 2, 8, 4, 6, 7, 3))
table = SeatingArrangement(order, prefs)
print("signed display:", signed_display(table))

outcome = simulate_dining(table)
for seat, s in enumerate(outcome.seats, 1):
    print(f"seat {seat}: diner {s.diner:2d} ({'+' if s.preference > 0 else '-'}) "
          f"took {s.napkin.value:5s} -> {s.status.value}")

print("napkinless:", outcome.napkinless, "in seats", outcome.napkinless_seats)
print("frustrated:", outcome.frustrated)

# Every napkinless diner leaves exactly one napkin on the table.
assert len(outcome.unclaimed_napkins) == len(outcome.napkinless)
