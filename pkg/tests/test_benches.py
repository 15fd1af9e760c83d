import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from napkins.benches import (
    Bench,
    BenchCollection,
    algorithm_C,
    balance_number,
    bench_seating_list,
    bench_seating_order,
    clairvoyant_napkinless,
    is_balanced,
    nu_max_formula,
    ordered_bench,
    unbalanced_count_prediction,
)
from napkins.oracle import iter_bench_partitions
from napkins.paths import symmetric_drift
from napkins.seating import PreferenceOrder, napkinless_count, signed_display, simulate_dining

SIGMA14 = PreferenceOrder((1, 1, -1, 1, -1, -1, 1, 1, 1, 1, 1, 1, 1, -1))
BETA14 = BenchCollection.from_triples([(1, 10, 11), (5, 8, 14), (4, 7, 9), (2, 6, 12)], 14)


def all_prefs(n):
    return (PreferenceOrder(s) for s in itertools.product((1, -1), repeat=n))


def test_bench_validation():
    assert tuple(Bench.of((9, 4, 7))) == (4, 7, 9)
    with pytest.raises(ValueError):
        Bench(3, 2, 1)
    with pytest.raises(ValueError):
        BenchCollection.from_triples([(1, 2, 3), (3, 4, 5)], 6)
    with pytest.raises(ValueError):
        BenchCollection.from_triples([(1, 2, 3)], 6)
    with pytest.raises(ValueError):
        is_balanced(Bench(1, 2, 9), PreferenceOrder.parse("+-+"))


def test_parse_collection():
    c = BenchCollection.parse("1,10,11;5,8,14;4,7,9;2,6,12", 14)
    assert c == BETA14
    assert c.spares == (3, 13)
    assert c.covers


def test_is_balanced_examples():
    assert is_balanced(Bench(5, 8, 14), SIGMA14)
    assert is_balanced(Bench(2, 6, 12), SIGMA14)
    assert not is_balanced(Bench(1, 10, 11), SIGMA14)
    assert not is_balanced(Bench(4, 7, 9), SIGMA14)
    assert not is_balanced(Bench(1, 2, 3), PreferenceOrder((1,) * 3))


def test_balance_number():
    assert balance_number(BETA14, SIGMA14) == 2
    assert balance_number(BenchCollection(2, ()), PreferenceOrder.parse("+-")) == 0
    six = BenchCollection.from_triples([(1, 2, 3), (4, 5, 6)], 6)
    assert balance_number(six, PreferenceOrder.parse("+-++-+")) == 2


def test_ordered_bench():
    assert ordered_bench(Bench(2, 6, 12), SIGMA14) == (2, 12, 6)
    assert ordered_bench(Bench(5, 8, 14), SIGMA14) == (8, 14, 5)
    assert ordered_bench(Bench(1, 2, 3), PreferenceOrder.parse("+-+")) == (1, 3, 2)


def test_bench_seating_running_example():
    assert bench_seating_list(BETA14, SIGMA14) == (2, 12, 6, 8, 14, 5, 1, 11, 10, 4, 9, 7, 3, 13)
    a = bench_seating_order(BETA14, SIGMA14)
    assert a.order.diners == (1, 11, 10, 4, 9, 7, 3, 13, 2, 12, 6, 8, 14, 5)
    assert signed_display(a) == (1, 11, 10, 4, 9, 7, -3, 13, 2, 12, -6, 8, -14, -5)
    out = simulate_dining(a)
    assert out.napkinless == (9, 12, 14)
    assert out.frustrated == (7,)


def test_bench_seating_small():
    one = BenchCollection.from_triples([(1, 2, 3)], 3)
    a = bench_seating_order(one, PreferenceOrder.parse("+-+"))
    assert a.order.diners == (1, 3, 2)
    assert napkinless_count(a) == 1
    assert napkinless_count(bench_seating_order(one, PreferenceOrder.parse("+++"))) == 0


def test_bench_seating_needs_full_cover():
    partial = BenchCollection(6, (Bench(1, 2, 3), Bench(4, 5, 6)), ())
    assert partial.covers
    short = BenchCollection(7, (Bench(1, 2, 3), Bench(4, 5, 6)), ())
    with pytest.raises(ValueError):
        bench_seating_order(short, PreferenceOrder((1,) * 7))


@pytest.mark.parametrize("n", range(3, 8))
def test_bench_order_realizes_balance_exhaustive(n):
    for prefs in all_prefs(n):
        for benches, _ in iter_bench_partitions(n):
            c = BenchCollection.from_triples(benches, n)
            assert napkinless_count(bench_seating_order(c, prefs)) >= balance_number(c, prefs)


@st.composite
def prefs_and_collection(draw):
    n = draw(st.integers(3, 24))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    perm = draw(st.permutations(list(range(1, n + 1))))
    q = n // 3
    triples = [perm[3 * i:3 * i + 3] for i in range(q)]
    return PreferenceOrder(tuple(signs)), BenchCollection.from_triples(triples, n)


@given(prefs_and_collection())
def test_bench_order_realizes_balance_random(pc):
    prefs, c = pc
    assert napkinless_count(bench_seating_order(c, prefs)) >= balance_number(c, prefs)


@pytest.mark.parametrize("n", range(3, 10))
def test_forced_unbalanced_benches_exhaustive(n):
    q, r = n // 3, n % 3
    parts = [b for b, _ in iter_bench_partitions(n)]
    for prefs in all_prefs(n):
        h = symmetric_drift(prefs)
        i = max(0, (h - q - r + 1) // 2)  # largest i with h >= q + r + 2i - 1
        for benches in parts:
            c = BenchCollection.from_triples(benches, n)
            assert q - balance_number(c, prefs) >= i


def test_clairvoyant_running_example():
    a, trace = algorithm_C(SIGMA14)
    assert signed_display(a) == (1, 8, -3, 2, 9, -5, 4, 10, -6, 7, -14, 13, 11, 12)
    out = simulate_dining(a)
    assert out.napkinless == (8, 9, 10)
    assert out.frustrated == (14,)
    fired = trace.uses("1c")
    assert [(s.diner, s.x, s.y) for s in fired] == [(13, 3, 10)]
    assert not trace.uses("2c")
    assert [s.step for s in trace.steps] == [
        "1a", "1a", "2a", "1a", "2a", "2a", "1a", "1b", "1b", "1b", "1b", "1b", "1c", "2b"
    ]
    assert trace.bench_groups() == [(1, 8, 3), (2, 9, 5), (4, 10, 6), (7, 14, 13), (11, 12)]


def test_trace_json():
    _, trace = algorithm_C(PreferenceOrder.parse("+-+"))
    data = json.loads(trace.to_json())
    assert data[0] == {"diner": 1, "step": "1a", "seat": 1, "x": 0, "y": 1}
    assert [d["step"] for d in data] == ["1a", "2a", "1b"]


def test_clairvoyant_small_cases():
    a, _ = algorithm_C(PreferenceOrder((1,) * 6))
    assert napkinless_count(a) == 0
    a, trace = algorithm_C(PreferenceOrder.parse("+-++-+"))
    assert napkinless_count(a) == 2
    assert not trace.uses("1c") and not trace.uses("2c")
    a, trace = algorithm_C(PreferenceOrder.parse("-+"))
    assert napkinless_count(a) == 0
    assert [s.step for s in trace.steps] == ["2b", "1b"]


def test_all_positive_nine_forces_three_unbalanced():
    prefs = PreferenceOrder((1,) * 9)
    _, trace = algorithm_C(prefs)
    assert len(trace.uses("1c")) == 3
    assert unbalanced_count_prediction(prefs) == 3


def test_nu_max_formula_examples():
    assert nu_max_formula(SIGMA14) == 3
    assert nu_max_formula(PreferenceOrder((1,) * 9)) == 0
    assert nu_max_formula(PreferenceOrder((1, -1, -1, 1, 1, -1, 1, -1))) == 2


def test_unbalanced_prediction_examples():
    assert unbalanced_count_prediction(SIGMA14) == 1
    assert unbalanced_count_prediction(PreferenceOrder.parse("+-++-+")) == 0
    with pytest.raises(ValueError):
        unbalanced_count_prediction(PreferenceOrder.parse("+-"))


@pytest.mark.parametrize("n", range(2, 13))
def test_clairvoyant_matches_formula_exhaustive(n):
    for prefs in all_prefs(n):
        a, trace = algorithm_C(prefs)
        assert napkinless_count(a) == nu_max_formula(prefs)
        assert clairvoyant_napkinless(prefs.signs) == nu_max_formula(prefs)
        forced = len(trace.uses("1c")) + len(trace.uses("2c"))
        if n >= 3:
            assert forced == unbalanced_count_prediction(prefs)


@pytest.mark.parametrize("n", range(2, 13))
def test_trace_step_families(n):
    for prefs in all_prefs(n):
        _, trace = algorithm_C(prefs)
        for s in trace.steps:
            assert s.step[0] == ("1" if prefs[s.diner] > 0 else "2")
        assert not (trace.uses("1c") and trace.uses("2c"))


@given(st.lists(st.sampled_from((1, -1)), min_size=2, max_size=60))
def test_negation_symmetry(signs):
    prefs = PreferenceOrder(tuple(signs))
    assert nu_max_formula(prefs) == nu_max_formula(-prefs)


@given(st.lists(st.sampled_from((1, -1)), min_size=2, max_size=80))
def test_clairvoyant_matches_formula_random(signs):
    assert clairvoyant_napkinless(signs) == nu_max_formula(PreferenceOrder(tuple(signs)))
