"""Brute-force oracles for the maximum napkinless count and its distribution.

The seating oracle tries every seating order with Diner 1 in Seat 1, all at
once as numpy arrays.  The bench oracle maximizes the balance number over
every way of splitting the diners into benches and spares.  Neither uses the
drift formula, so both can check it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .benches import nu_max_formula
from .seating import (
    DiningOutcome,
    PreferenceOrder,
    SeatingArrangement,
    SeatingOrder,
    Status,
    simulate_dining,
)

__all__ = [
    "OracleBudget",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "all_sign_vectors",
    "brute_force_numax_seating",
    "best_seating",
    "seating_numax_table",
    "brute_force_numax_bench",
    "iter_bench_partitions",
    "minimal_napkinless_block",
    "canonicalize_max_arrangement",
    "mirror_order",
    "brute_force_distribution",
    "formula_numax_table",
]


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_seating_n: int = 9
    max_bench_n: int = 12
    max_sigma_n: int = 20

    def __post_init__(self):
        for name in ("max_seating_n", "max_bench_n", "max_sigma_n"):
            if getattr(self, name) < 2:
                raise ValueError(f"{name} must be at least 2")


DEFAULT_BUDGET = OracleBudget()


def _require(n, cap, what):
    if n > cap:
        raise BudgetExceeded(f"n={n} exceeds the {what} budget of {cap}")


def all_sign_vectors(n: int) -> np.ndarray:
    """Every +-1 vector of length n as rows; row ``i`` has sign +1 at column ``j`` iff bit ``j`` of ``i`` is 0."""
    idx = np.arange(2**n, dtype=np.int64)
    bits = (idx[:, None] >> np.arange(n)) & 1
    return (1 - 2 * bits).astype(np.int8)


@lru_cache(maxsize=4)
def _positions(n: int) -> np.ndarray:
    """Diner-to-seat table (0-based) for every seating order with Diner 1 in Seat 1."""
    seatings = np.array(
        [(0,) + p for p in itertools.permutations(range(1, n))], dtype=np.int16
    ).reshape(-1, n)
    pos = np.empty_like(seatings)
    rows = np.arange(len(seatings))[:, None]
    pos[rows, seatings] = np.arange(n, dtype=np.int16)
    return pos


def _napkinless_per_seating(signs, pos: np.ndarray) -> np.ndarray:
    m, n = pos.shape
    rows = np.arange(m)
    claimed = np.zeros((m, n), dtype=bool)
    count = np.zeros(m, dtype=np.int16)
    for d, s in enumerate(signs):
        seat = pos[:, d]
        right, left = seat, (seat - 1) % n
        first, second = (right, left) if s > 0 else (left, right)
        got_first = ~claimed[rows, first]
        claimed[rows, first] = True
        got_second = ~got_first & ~claimed[rows, second]
        claimed[rows, second] |= got_second
        count += ~(got_first | got_second)
    return count


def best_seating(prefs: PreferenceOrder, budget: OracleBudget = DEFAULT_BUDGET):
    """A seating order achieving the maximum, together with that maximum."""
    _require(prefs.n, budget.max_seating_n, "seating")
    pos = _positions(prefs.n)
    counts = _napkinless_per_seating(prefs.signs, pos)
    best = int(np.argmax(counts))
    order = [0] * prefs.n
    for diner, seat in enumerate(pos[best]):
        order[seat] = diner + 1
    return int(counts[best]), SeatingOrder(tuple(order))


def brute_force_numax_seating(prefs: PreferenceOrder, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    return best_seating(prefs, budget)[0]


def seating_numax_table(n: int, budget: OracleBudget = DEFAULT_BUDGET) -> np.ndarray:
    """Seating-oracle maximum for every row of :func:`all_sign_vectors`."""
    _require(n, budget.max_seating_n, "seating")
    pos = _positions(n)
    return np.array([_napkinless_per_seating(s, pos).max() for s in all_sign_vectors(n)], dtype=np.int64)


def iter_bench_partitions(n: int):
    """Yield ``(benches, spares)`` for every split of 1..n into ``n // 3`` unordered triples."""
    q = n // 3
    r = n - 3 * q
    everyone = range(1, n + 1)

    def triples(rest):
        if not rest:
            yield ()
            return
        first, others = rest[0], rest[1:]
        for i, j in itertools.combinations(range(len(others)), 2):
            left = others[:i] + others[i + 1:j] + others[j + 1:]
            for tail in triples(left):
                yield ((first, others[i], others[j]),) + tail

    for spares in itertools.combinations(everyone, r):
        rest = tuple(d for d in everyone if d not in spares)
        for benches in triples(rest):
            yield benches, spares


def brute_force_numax_bench(prefs: PreferenceOrder, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Largest balance number over all bench collections, by exhaustive memoized search.

    The smallest unplaced diner either becomes a spare or joins a bench with
    two later diners; every split is reached this way exactly once.
    """
    n = prefs.n
    _require(n, budget.max_bench_n, "bench")
    signs = prefs.signs
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def best(mask, spares_left):
        if mask == full:
            return 0
        a = (~mask & (mask + 1)).bit_length() - 1
        result = -1
        if spares_left:
            result = best(mask | 1 << a, spares_left - 1)
        free = [i for i in range(a + 1, n) if not mask >> i & 1]
        for bi, b in enumerate(free):
            gain = 1 if signs[a] + signs[b] == 0 else 0
            for c in free[bi + 1:]:
                sub = best(mask | 1 << a | 1 << b | 1 << c, spares_left)
                if sub >= 0 and sub + gain > result:
                    result = sub + gain
        return result

    return best(0, n % 3)


def minimal_napkinless_block(outcome: DiningOutcome, diner: int) -> tuple[int, int, int]:
    """``(left, diner, right)``: the nearest happy diners around a napkinless one.

    Walking outward from the napkinless diner, every diner passed is
    frustrated; the walk stops at a happy +1 diner on the left and a happy -1
    diner on the right.
    """
    seats = outcome.seats
    n = len(seats)
    try:
        seat = next(i for i, s in enumerate(seats) if s.diner == diner)
    except StopIteration:
        raise ValueError(f"no diner {diner}") from None
    if seats[seat].status is not Status.NAPKINLESS:
        raise ValueError(f"diner {diner} is not napkinless")

    def walk(step, want_sign):
        i = (seat + step) % n
        while seats[i].status is Status.FRUSTRATED:
            i = (i + step) % n
        found = seats[i]
        if found.status is not Status.HAPPY or found.preference != want_sign:
            raise ValueError(f"inconsistent outcome around diner {diner}")
        return found.diner

    return walk(-1, 1), diner, walk(1, -1)


def mirror_order(order: SeatingOrder) -> SeatingOrder:
    """Reflect the table through Seat 1 (left and right swap)."""
    d = order.diners
    return SeatingOrder((d[0],) + d[:0:-1])


def canonicalize_max_arrangement(
    prefs: PreferenceOrder,
    arrangement: SeatingArrangement | None = None,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> SeatingArrangement:
    """Pack the napkinless diners of a maximizing arrangement into adjacent blocks.

    When Diner 1 prefers the right napkin the napkinless diners land in Seats
    2, 5, ..., 3k-1.  When Diner 1 prefers the left napkin Seat 2 can never be
    napkinless, so the mirror image is returned instead: napkinless diners in
    Seats n, n-3, ..., n-3k+3.

    Without an ``arrangement`` the seating oracle supplies a maximizing one;
    a caller-supplied arrangement is assumed to be maximizing.
    """
    if arrangement is not None and arrangement.prefs != prefs:
        raise ValueError("arrangement is for a different preference order")
    if prefs.signs[0] < 0:
        flipped = None
        if arrangement is not None:
            flipped = SeatingArrangement(mirror_order(arrangement.order), -prefs)
        canon = canonicalize_max_arrangement(-prefs, flipped, budget)
        return SeatingArrangement(mirror_order(canon.order), prefs)

    if arrangement is None:
        _, order = best_seating(prefs, budget)
        arrangement = SeatingArrangement(order, prefs)
    outcome = simulate_dining(arrangement)
    blocks = [list(minimal_napkinless_block(outcome, j)) for j in outcome.napkinless]

    # Diner 1 (+1, always happy) must head the first block so Seat 1 holds it.
    home = next((b for b in blocks if b[0] == 1), None)
    if home is None and blocks:
        home = blocks[0]
        home[0] = 1
    if home is not None:
        blocks.remove(home)
        blocks.insert(0, home)

    seated = [d for b in blocks for d in b]
    taken = set(seated)
    seated += [d for d in range(1, prefs.n + 1) if d not in taken]
    return SeatingArrangement(SeatingOrder(tuple(seated)), prefs)


def brute_force_distribution(
    n: int, mode: str = "formulaNu", budget: OracleBudget = DEFAULT_BUDGET
) -> list[int]:
    """Histogram of the maximum napkinless count over all 2**n preference orders.

    ``mode`` picks the backend: ``"formulaNu"`` evaluates the drift formula on
    every sign vector, ``"seatingOracle"`` runs the seating search on each.
    """
    if n < 2:
        raise ValueError("need at least 2 diners")
    if mode == "formulaNu":
        _require(n, budget.max_sigma_n, "sigma")
        walks = np.cumsum(all_sign_vectors(n), axis=1, dtype=np.int16)
        h = np.maximum(walks.max(axis=1), -walks.min(axis=1)).clip(min=0)
        nu = np.minimum(n // 3, (n - h) // 2)
    elif mode == "seatingOracle":
        nu = seating_numax_table(n, budget)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return [int(c) for c in np.bincount(nu, minlength=n // 3 + 1)]


def formula_numax_table(n: int) -> list[int]:
    """Scalar drift formula for every row of :func:`all_sign_vectors` (slow path, for cross-checks)."""
    return [nu_max_formula(PreferenceOrder(tuple(int(v) for v in s))) for s in all_sign_vectors(n)]
