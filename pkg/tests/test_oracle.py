import itertools

import numpy as np
import pytest

from napkins.benches import BenchCollection, balance_number, nu_max_formula
from napkins.distribution import p_nk
from napkins.oracle import (
    BudgetExceeded,
    OracleBudget,
    all_sign_vectors,
    best_seating,
    brute_force_distribution,
    brute_force_numax_bench,
    brute_force_numax_seating,
    canonicalize_max_arrangement,
    formula_numax_table,
    iter_bench_partitions,
    minimal_napkinless_block,
    mirror_order,
    seating_numax_table,
)
from napkins.seating import (
    PreferenceOrder,
    SeatingArrangement,
    SeatingOrder,
    napkinless_count,
    simulate_dining,
)

SIGMA14 = PreferenceOrder((1, 1, -1, 1, -1, -1, 1, 1, 1, 1, 1, 1, 1, -1))


def naive_numax(prefs):
    """Scalar simulation of every seating order, no vectorization."""
    n = prefs.n
    return max(
        napkinless_count(SeatingArrangement(SeatingOrder((1,) + rest), prefs))
        for rest in itertools.permutations(range(2, n + 1))
    )


def test_all_sign_vectors_layout():
    rows = all_sign_vectors(3)
    assert rows.shape == (8, 3)
    assert tuple(rows[0]) == (1, 1, 1)
    assert tuple(rows[1]) == (-1, 1, 1)
    assert tuple(rows[7]) == (-1, -1, -1)


def test_seating_oracle_examples():
    best, order = best_seating(PreferenceOrder((1, -1, -1, 1, 1, -1, 1, -1)))
    assert best == 2
    assert napkinless_count(SeatingArrangement(order, PreferenceOrder((1, -1, -1, 1, 1, -1, 1, -1)))) == 2
    assert brute_force_numax_seating(PreferenceOrder((1,) * 6)) == 0
    assert brute_force_numax_seating(PreferenceOrder.parse("+-+")) == 1


@pytest.mark.parametrize("n", range(2, 8))
def test_seating_oracle_matches_scalar_simulation(n):
    table = seating_numax_table(n)
    for i, row in enumerate(all_sign_vectors(n)):
        assert table[i] == naive_numax(PreferenceOrder(tuple(int(v) for v in row)))


def test_bench_oracle_examples():
    assert brute_force_numax_bench(SIGMA14, OracleBudget(max_bench_n=14)) == 3
    assert brute_force_numax_bench(PreferenceOrder.parse("+-++-+")) == 2
    assert brute_force_numax_bench(PreferenceOrder((1,) * 9)) == 0


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        brute_force_numax_bench(SIGMA14)
    with pytest.raises(BudgetExceeded):
        best_seating(PreferenceOrder((1,) * 10))
    with pytest.raises(BudgetExceeded):
        brute_force_distribution(21)
    with pytest.raises(ValueError):
        OracleBudget(max_seating_n=1)
    assert issubclass(BudgetExceeded, ValueError)


def test_iter_bench_partitions_counts():
    # (3q)! / (q! 6^q) splits times C(n, r) spare choices
    assert sum(1 for _ in iter_bench_partitions(6)) == 10
    assert sum(1 for _ in iter_bench_partitions(7)) == 70
    assert sum(1 for _ in iter_bench_partitions(9)) == 280
    seen = {tuple(sorted(b)) + (s,) for b, s in iter_bench_partitions(8)}
    assert len(seen) == 28 * 10


@pytest.mark.parametrize("n", range(3, 9))
def test_bench_oracle_matches_partition_listing(n):
    parts = [BenchCollection.from_triples(b, n) for b, _ in iter_bench_partitions(n)]
    for row in all_sign_vectors(n):
        prefs = PreferenceOrder(tuple(int(v) for v in row))
        assert brute_force_numax_bench(prefs) == max(balance_number(c, prefs) for c in parts)


@pytest.mark.parametrize("n", range(2, 9))
def test_three_way_agreement(n):
    seating = seating_numax_table(n)
    formula = formula_numax_table(n)
    for i, row in enumerate(all_sign_vectors(n)):
        prefs = PreferenceOrder(tuple(int(v) for v in row))
        assert seating[i] == formula[i] == brute_force_numax_bench(prefs)


def test_minimal_block_examples():
    fig = SeatingArrangement.from_lists((1, 2, 3, 8, 9, 7, 5, 4, 6), (1, 1, -1, 1, -1, 1, 1, -1, 1))
    out = simulate_dining(fig)
    assert out.napkinless == (9,)
    assert minimal_napkinless_block(out, 9) == (2, 9, 5)
    ex = SeatingArrangement.from_lists((1, 5, 2, 8, 4, 6, 7, 3), (1, -1, -1, 1, 1, -1, 1, -1))
    out = simulate_dining(ex)
    assert minimal_napkinless_block(out, 5) == (1, 5, 2)
    assert minimal_napkinless_block(out, 7) == (4, 7, 3)
    with pytest.raises(ValueError):
        minimal_napkinless_block(out, 6)
    with pytest.raises(ValueError):
        minimal_napkinless_block(out, 42)


def test_mirror_order():
    assert mirror_order(SeatingOrder((1, 2, 3, 4))).diners == (1, 4, 3, 2)
    o = SeatingOrder((1, 5, 2, 8, 4, 6, 7, 3))
    assert mirror_order(mirror_order(o)) == o


def test_canonicalize_examples():
    c = canonicalize_max_arrangement(PreferenceOrder.parse("+-++-+"))
    assert c.order.diners == (1, 3, 2, 4, 6, 5)
    assert simulate_dining(c).napkinless_seats == (2, 5)
    c = canonicalize_max_arrangement(PreferenceOrder.parse("+-+-+-+-+"))
    assert simulate_dining(c).napkinless_seats == (2, 5, 8)
    c = canonicalize_max_arrangement(PreferenceOrder.parse("-+--+-"))
    assert simulate_dining(c).napkinless_seats == (3, 6)
    with pytest.raises(ValueError):
        canonicalize_max_arrangement(
            PreferenceOrder.parse("+-+"), SeatingArrangement.from_lists((1, 2, 3), (1, 1, 1))
        )


@pytest.mark.parametrize("n", range(2, 8))
def test_canonicalize_exhaustive(n):
    for row in all_sign_vectors(n):
        prefs = PreferenceOrder(tuple(int(v) for v in row))
        k = nu_max_formula(prefs)
        seats = simulate_dining(canonicalize_max_arrangement(prefs)).napkinless_seats
        if prefs.signs[0] > 0:
            assert seats == tuple(3 * j - 1 for j in range(1, k + 1))
        else:
            assert seats == tuple(sorted(n - 3 * j for j in range(k)))


def test_distribution_examples():
    assert brute_force_distribution(3) == [4, 4]
    assert brute_force_distribution(14) == [4, 56, 364, 1456, 14504]
    assert brute_force_distribution(8, "seatingOracle") == [p_nk(8, k) for k in range(3)]
    with pytest.raises(ValueError):
        brute_force_distribution(6, "bogus")
    with pytest.raises(ValueError):
        brute_force_distribution(1)


@pytest.mark.parametrize("n", range(2, 13))
def test_vectorized_formula_matches_scalar(n):
    hist = np.bincount(formula_numax_table(n), minlength=n // 3 + 1).tolist()
    assert brute_force_distribution(n) == hist
