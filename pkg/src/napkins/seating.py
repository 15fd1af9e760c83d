"""Circular table, preference and seating orders, and the napkin-claim simulation.

Seats and napkins are numbered 1..n.  Napkin ``i`` lies between Seat ``i`` and
Seat ``i+1`` (napkin ``n`` sits between Seat ``n`` and Seat 1), so the right
napkin of Seat ``i`` is napkin ``i`` and its left napkin is napkin ``i-1``.
A ``+1`` diner prefers the right napkin, a ``-1`` diner the left one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Napkin",
    "Status",
    "PreferenceOrder",
    "SeatingOrder",
    "SeatingArrangement",
    "SeatOutcome",
    "DiningOutcome",
    "simulate_dining",
    "napkinless_count",
    "zero_napkinless_order",
    "rotate_to_diner_one",
    "signed_display",
    "parse_signed_display",
    "parse_order",
]

_SIGN_CHARS = {"+": 1, "r": 1, "-": -1, "l": -1}


class Napkin(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    NONE = "none"


class Status(enum.Enum):
    HAPPY = "happy"
    FRUSTRATED = "frustrated"
    NAPKINLESS = "napkinless"


@dataclass(frozen=True)
class PreferenceOrder:
    """The queue of napkin preferences, one sign per diner in arrival order."""

    signs: tuple[int, ...]

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        if len(signs) < 2:
            raise ValueError(f"need at least 2 diners, got {len(signs)}")
        for i, s in enumerate(signs, 1):
            if s not in (1, -1):
                raise ValueError(f"preference of diner {i} must be +1 or -1, got {s}")
        object.__setattr__(self, "signs", signs)

    @classmethod
    def parse(cls, text: str) -> PreferenceOrder:
        """Read ``'+'``/``'R'`` as +1 and ``'-'``/``'L'`` as -1 (letters case-insensitive)."""
        signs = []
        for pos, ch in enumerate(text.strip(), 1):
            try:
                signs.append(_SIGN_CHARS[ch.lower()])
            except KeyError:
                raise ValueError(
                    f"invalid preference token {ch!r} at position {pos}"
                ) from None
        return cls(tuple(signs))

    @property
    def n(self) -> int:
        return len(self.signs)

    @property
    def q(self) -> int:
        return self.n // 3

    @property
    def r(self) -> int:
        return self.n - 3 * self.q

    def __len__(self):
        return len(self.signs)

    def __getitem__(self, diner: int) -> int:
        """Sign of ``diner`` (1-based)."""
        if not 1 <= diner <= self.n:
            raise IndexError(f"diner {diner} out of range 1..{self.n}")
        return self.signs[diner - 1]

    def __neg__(self) -> PreferenceOrder:
        return PreferenceOrder(tuple(-s for s in self.signs))

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)


def _check_permutation(labels: Sequence[int]) -> None:
    n = len(labels)
    if sorted(labels) != list(range(1, n + 1)):
        raise ValueError(f"{tuple(labels)} is not a permutation of 1..{n}")


@dataclass(frozen=True)
class SeatingOrder:
    """Seat-to-diner map: ``diners[i-1]`` is the diner in Seat ``i``; Diner 1 is in Seat 1."""

    diners: tuple[int, ...]

    def __post_init__(self):
        diners = tuple(int(d) for d in self.diners)
        if len(diners) < 2:
            raise ValueError(f"need at least 2 seats, got {len(diners)}")
        _check_permutation(diners)
        if diners[0] != 1:
            raise ValueError(f"Diner 1 must sit in Seat 1, got {diners[0]}")
        object.__setattr__(self, "diners", diners)

    @property
    def n(self) -> int:
        return len(self.diners)

    def seat_of(self, diner: int) -> int:
        return self.diners.index(diner) + 1

    def __len__(self):
        return len(self.diners)

    def __str__(self):
        return ",".join(map(str, self.diners))


@dataclass(frozen=True)
class SeatingArrangement:
    order: SeatingOrder
    prefs: PreferenceOrder

    def __post_init__(self):
        if self.order.n != self.prefs.n:
            raise ValueError(
                f"seating order has {self.order.n} seats but {self.prefs.n} preferences"
            )

    @classmethod
    def from_lists(cls, order: Iterable[int], signs: Iterable[int]) -> SeatingArrangement:
        return cls(SeatingOrder(tuple(order)), PreferenceOrder(tuple(signs)))

    @property
    def n(self) -> int:
        return self.order.n


@dataclass(frozen=True)
class SeatOutcome:
    diner: int
    preference: int
    napkin: Napkin
    status: Status


@dataclass(frozen=True)
class DiningOutcome:
    """Per-seat results (index ``i-1`` is Seat ``i``) and the napkin claim map."""

    seats: tuple[SeatOutcome, ...]
    napkin_claimed: tuple[bool, ...]

    def _diners_with(self, status: Status) -> tuple[int, ...]:
        return tuple(sorted(s.diner for s in self.seats if s.status is status))

    @property
    def happy(self) -> tuple[int, ...]:
        return self._diners_with(Status.HAPPY)

    @property
    def frustrated(self) -> tuple[int, ...]:
        return self._diners_with(Status.FRUSTRATED)

    @property
    def napkinless(self) -> tuple[int, ...]:
        return self._diners_with(Status.NAPKINLESS)

    @property
    def napkinless_seats(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.seats, 1) if s.status is Status.NAPKINLESS)

    @property
    def unclaimed_napkins(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.napkin_claimed, 1) if not c)

    def status_of(self, diner: int) -> Status:
        for s in self.seats:
            if s.diner == diner:
                return s.status
        raise ValueError(f"no diner {diner}")


def _dine(seat_to_diner: Sequence[int], signs: Sequence[int]):
    """Run the claim process on 0-based seats; returns (taken per seat, claimed per napkin).

    ``taken[s]`` is 1 for the right napkin, -1 for the left one, 0 for none.
    ``seat_to_diner`` holds 1-based diner labels; no validation here.
    """
    n = len(seat_to_diner)
    seat_of = [0] * n
    for seat, diner in enumerate(seat_to_diner):
        seat_of[diner - 1] = seat
    claimed = [False] * n
    taken = [0] * n
    for d in range(n):
        s = seat_of[d]
        right, left = s, s - 1  # napkin -1 wraps to n-1
        if signs[d] > 0:
            first, second = right, left
        else:
            first, second = left, right
        if not claimed[first]:
            claimed[first] = True
            taken[s] = signs[d]
        elif not claimed[second]:
            claimed[second] = True
            taken[s] = -signs[d]
    return taken, claimed


def _count_napkinless(seat_to_diner: Sequence[int], signs: Sequence[int]) -> int:
    taken, _ = _dine(seat_to_diner, signs)
    return taken.count(0)


def simulate_dining(arrangement: SeatingArrangement) -> DiningOutcome:
    """Seat the diners in arrival order and let each claim a napkin."""
    order, signs = arrangement.order.diners, arrangement.prefs.signs
    taken, claimed = _dine(order, signs)
    seats = []
    for seat, diner in enumerate(order):
        pref = signs[diner - 1]
        t = taken[seat]
        if t == 0:
            napkin, status = Napkin.NONE, Status.NAPKINLESS
        else:
            napkin = Napkin.RIGHT if t > 0 else Napkin.LEFT
            status = Status.HAPPY if t == pref else Status.FRUSTRATED
        seats.append(SeatOutcome(diner, pref, napkin, status))
    return DiningOutcome(tuple(seats), tuple(claimed))


def napkinless_count(arrangement: SeatingArrangement) -> int:
    return _count_napkinless(arrangement.order.diners, arrangement.prefs.signs)


def zero_napkinless_order(prefs: PreferenceOrder) -> SeatingOrder:
    """Seat everyone sequentially in the direction Diner 1 reaches; nobody ends up napkinless."""
    n = prefs.n
    if prefs.signs[0] > 0:
        return SeatingOrder(tuple(range(1, n + 1)))
    return SeatingOrder((1,) + tuple(range(n, 1, -1)))


def rotate_to_diner_one(labels: Sequence[int]) -> SeatingOrder:
    """Cycle a seat list until Diner 1 occupies Seat 1."""
    labels = list(labels)
    _check_permutation(labels)
    k = labels.index(1)
    return SeatingOrder(tuple(labels[k:] + labels[:k]))


def signed_display(arrangement: SeatingArrangement) -> tuple[int, ...]:
    """Each seat's diner label carrying that diner's preference sign."""
    signs = arrangement.prefs.signs
    return tuple(signs[d - 1] * d for d in arrangement.order.diners)


def parse_signed_display(values: Iterable[int] | str) -> SeatingArrangement:
    """Inverse of :func:`signed_display`; accepts a sequence or a comma-separated string."""
    if isinstance(values, str):
        values = [int(tok) for tok in values.replace("|", ",").split(",") if tok.strip()]
    values = list(values)
    if any(v == 0 for v in values):
        raise ValueError("signed labels must be nonzero")
    order = tuple(abs(v) for v in values)
    signs = [0] * len(values)
    for v in values:
        signs[abs(v) - 1] = 1 if v > 0 else -1
    return SeatingArrangement(SeatingOrder(order), PreferenceOrder(tuple(signs)))


def parse_order(text: str) -> tuple[int, ...]:
    """Read a comma-separated list of 1-based diner labels."""
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            out.append(int(tok))
        except ValueError:
            raise ValueError(f"invalid diner label {tok!r}") from None
    return tuple(out)
