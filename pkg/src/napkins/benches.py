"""Bench collections, the bench seating order, and clairvoyant trap setting.

A bench is a triple of diners who end up in three consecutive seats.  It is
balanced when its two earliest arrivals have opposite preferences; seated
with those two at the ends and the latest arrival in the middle, the middle
diner finds no napkin.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .paths import symmetric_drift
from .seating import (
    PreferenceOrder,
    SeatingArrangement,
    SeatingOrder,
    _count_napkinless,
    rotate_to_diner_one,
)

__all__ = [
    "Bench",
    "BenchCollection",
    "TraceStep",
    "AlgorithmTrace",
    "is_balanced",
    "balance_number",
    "ordered_bench",
    "bench_seating_order",
    "bench_seating_list",
    "algorithm_C",
    "clairvoyant_napkinless",
    "nu_max_formula",
    "unbalanced_count_prediction",
]


@dataclass(frozen=True, order=True)
class Bench:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if not 1 <= self.a < self.b < self.c:
            raise ValueError(f"bench needs 1 <= a < b < c, got {(self.a, self.b, self.c)}")

    @classmethod
    def of(cls, labels: Iterable[int]) -> Bench:
        labels = sorted(labels)
        if len(labels) != 3:
            raise ValueError(f"a bench holds exactly 3 diners, got {labels}")
        return cls(*labels)

    def __iter__(self):
        return iter((self.a, self.b, self.c))


@dataclass(frozen=True)
class BenchCollection:
    """``q = n // 3`` disjoint benches plus the sorted leftover diners."""

    n: int
    benches: tuple[Bench, ...]
    spares: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need at least 2 diners, got {self.n}")
        benches = tuple(b if isinstance(b, Bench) else Bench.of(b) for b in self.benches)
        if len(benches) != self.n // 3:
            raise ValueError(f"need {self.n // 3} benches for n={self.n}, got {len(benches)}")
        seen = set()
        for bench in benches:
            for d in bench:
                if d > self.n:
                    raise ValueError(f"diner {d} out of range 1..{self.n}")
                if d in seen:
                    raise ValueError(f"diner {d} appears on more than one bench")
                seen.add(d)
        spares = tuple(sorted(self.spares))
        if set(spares) & seen or len(set(spares)) != len(spares):
            raise ValueError("spares overlap the benches or repeat")
        object.__setattr__(self, "benches", benches)
        object.__setattr__(self, "spares", spares)

    @classmethod
    def from_triples(cls, triples: Iterable[Iterable[int]], n: int) -> BenchCollection:
        """Build a collection covering 1..n; the diners left over become spares."""
        benches = tuple(Bench.of(t) for t in triples)
        used = {d for b in benches for d in b}
        spares = tuple(d for d in range(1, n + 1) if d not in used)
        return cls(n, benches, spares)

    @classmethod
    def parse(cls, text: str, n: int) -> BenchCollection:
        """Read ``"1,10,11;5,8,14;..."``."""
        triples = []
        for chunk in text.split(";"):
            if not chunk.strip():
                continue
            try:
                triples.append([int(tok) for tok in chunk.split(",")])
            except ValueError:
                raise ValueError(f"invalid bench {chunk.strip()!r}") from None
        return cls.from_triples(triples, n)

    @property
    def covers(self) -> bool:
        return 3 * len(self.benches) + len(self.spares) == self.n


def _check_bench(bench: Bench, prefs: PreferenceOrder) -> None:
    if bench.c > prefs.n:
        raise ValueError(f"bench {tuple(bench)} out of range for n={prefs.n}")


def is_balanced(bench: Bench, prefs: PreferenceOrder) -> bool:
    _check_bench(bench, prefs)
    return prefs[bench.a] + prefs[bench.b] == 0


def balance_number(collection: BenchCollection, prefs: PreferenceOrder) -> int:
    return sum(is_balanced(b, prefs) for b in collection.benches)


def ordered_bench(bench: Bench, prefs: PreferenceOrder) -> tuple[int, int, int]:
    """Seat the earliest arrival at the end it reaches toward, the latest in the middle."""
    _check_bench(bench, prefs)
    a, b, c = bench
    return (a, c, b) if prefs[a] > 0 else (b, c, a)


def bench_seating_list(collection: BenchCollection, prefs: PreferenceOrder) -> tuple[int, ...]:
    """The unrotated list: balanced benches, then unbalanced ones, then spares."""
    if collection.n != prefs.n:
        raise ValueError(f"collection is for n={collection.n}, preferences for n={prefs.n}")
    if not collection.covers:
        raise ValueError("bench collection does not cover every diner")
    balanced, unbalanced = [], []
    for bench in collection.benches:
        (balanced if is_balanced(bench, prefs) else unbalanced).append(ordered_bench(bench, prefs))
    out = []
    for group in (sorted(balanced), sorted(unbalanced)):
        for triple in group:
            out.extend(triple)
    out.extend(collection.spares)
    return tuple(out)


def bench_seating_order(collection: BenchCollection, prefs: PreferenceOrder) -> SeatingArrangement:
    return SeatingArrangement(rotate_to_diner_one(bench_seating_list(collection, prefs)), prefs)


def nu_max_formula(prefs: PreferenceOrder) -> int:
    """``min(q, floor((n - h) / 2))`` with ``h`` the symmetric drift."""
    n = prefs.n
    return min(n // 3, (n - symmetric_drift(prefs)) // 2)


def unbalanced_count_prediction(prefs: PreferenceOrder) -> int:
    """Number of benches clairvoyant trap setting is forced to leave unbalanced."""
    if prefs.n < 3:
        raise ValueError("needs at least 3 diners")
    slack = prefs.q + prefs.r
    h = symmetric_drift(prefs)
    return 0 if h <= slack else (h - slack + 1) // 2


@dataclass(frozen=True)
class TraceStep:
    diner: int
    step: str
    seat: int  # seat before rotating Diner 1 into Seat 1
    x: int
    y: int

    def as_dict(self) -> dict:
        return {"diner": self.diner, "step": self.step, "seat": self.seat, "x": self.x, "y": self.y}


@dataclass(frozen=True)
class AlgorithmTrace:
    steps: tuple[TraceStep, ...]
    raw_seating: tuple[int, ...]  # seat-to-diner list before rotation
    q: int
    r: int

    def uses(self, step: str) -> list[TraceStep]:
        return [s for s in self.steps if s.step == step]

    def to_json(self, **kwargs) -> str:
        return json.dumps([s.as_dict() for s in self.steps], **kwargs)

    def bench_groups(self) -> list[tuple[int, ...]]:
        """The raw seating cut into benches (and the remainder group, if any)."""
        raw = self.raw_seating
        groups = [raw[3 * j:3 * j + 3] for j in range(self.q)]
        if self.r:
            groups.append(raw[3 * self.q:])
        return groups


_LEFT, _CENTER, _RIGHT = 0, 1, 2


class _TrapSetter:
    """Seat bookkeeping for one run of clairvoyant trap setting.

    Bench ``j`` (0-based) owns seats ``3j, 3j+1, 3j+2``; remainder seats form
    pseudo-bench ``q``, which ranks after every real bench.  The heaps hold
    candidate bench numbers and are cleaned lazily.
    """

    def __init__(self, n: int):
        self.n = n
        self.q, self.r = n // 3, n - 3 * (n // 3)
        self.seating = [0] * n
        self.filled = [[False] * 3 for _ in range(self.q)]
        self.rem_next = 3 * self.q
        self.open_left = list(range(self.q))
        self.open_right = list(range(self.q))
        self.primed = [self.q] if self.r else []

    def _top(self, heap, ok):
        while heap and not ok(heap[0]):
            heapq.heappop(heap)
        return heap[0] if heap else None

    def _free(self, slot):
        return lambda j: not self.filled[j][slot]

    def _is_primed(self, j):
        if j == self.q:
            return self.rem_next < self.n
        f = self.filled[j]
        return f[_LEFT] and f[_RIGHT] and not f[_CENTER]

    def _place(self, j, slot, diner):
        self.filled[j][slot] = True
        seat = 3 * j + slot
        self.seating[seat] = diner
        f = self.filled[j]
        if slot != _CENTER and f[_LEFT] and f[_RIGHT]:
            heapq.heappush(self.primed, j)
        return seat

    def seat(self, diner: int, sign: int):
        """Place ``diner``; returns (step label, 0-based seat)."""
        near, far = (_LEFT, _RIGHT) if sign > 0 else (_RIGHT, _LEFT)
        near_heap = self.open_left if sign > 0 else self.open_right
        far_heap = self.open_right if sign > 0 else self.open_left
        tag = "1" if sign > 0 else "2"

        j = self._top(near_heap, self._free(near))
        if j is not None:
            return tag + "a", self._place(j, near, diner)

        j = self._top(self.primed, self._is_primed)
        if j is not None:
            if j == self.q:
                seat = self.rem_next
                self.rem_next += 1
                self.seating[seat] = diner
                if self.rem_next == self.n:
                    heapq.heappop(self.primed)
                return tag + "b", seat
            heapq.heappop(self.primed)
            return tag + "b", self._place(j, _CENTER, diner)

        j = self._top(far_heap, self._free(far))
        if j is None:  # pragma: no cover - every seat would already be taken
            raise RuntimeError("no seat available")
        return tag + "c", self._place(j, far, diner)


def algorithm_C(prefs: PreferenceOrder) -> tuple[SeatingArrangement, AlgorithmTrace]:
    """Clairvoyant trap setting.

    Diners are placed one at a time as their preference is revealed:

    * (1a)/(2a) a +1 diner takes the leftmost seat of the lowest-numbered
      bench whose leftmost seat is free (a -1 diner: rightmost seat);
    * (1b)/(2b) otherwise the diner fills the lowest-numbered primed bench,
      i.e. a center seat between two seated diners, or the leftmost free
      remainder seat once every primed real bench is taken;
    * (1c)/(2c) otherwise the diner takes the far end of the lowest-numbered
      bench still missing it, which leaves that bench unbalanced.

    The returned arrangement is rotated so Diner 1 is in Seat 1; the trace
    keeps the unrotated seats.
    """
    setter = _TrapSetter(prefs.n)
    steps = []
    x = y = 0
    for diner, sign in enumerate(prefs.signs, 1):
        label, seat = setter.seat(diner, sign)
        if sign > 0:
            y += 1
        else:
            x += 1
        steps.append(TraceStep(diner, label, seat + 1, x, y))
    raw = tuple(setter.seating)
    trace = AlgorithmTrace(tuple(steps), raw, setter.q, setter.r)
    return SeatingArrangement(rotate_to_diner_one(raw), prefs), trace


def clairvoyant_napkinless(signs: Sequence[int]) -> int:
    """Napkinless count produced by trap setting, skipping trace and validation."""
    setter = _TrapSetter(len(signs))
    for diner, sign in enumerate(signs, 1):
        setter.seat(diner, sign)
    return _count_napkinless(setter.seating, signs)
