"""{N,E} lattice paths: drift, zenith/dip decoration, and the two drift bijections.

A preference order maps to a path by sending +1 to an N step and -1 to an E
step.  Heights are ``y_i - x_i``; the drift is the largest height reached
(never below 0 since the path starts at height 0).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .seating import PreferenceOrder

__all__ = [
    "LatticePath",
    "Color",
    "PathDecoration",
    "drift",
    "symmetric_drift",
    "decompose",
    "phi",
    "phi_inverse",
    "psi",
    "psi_conversions",
    "count_paths_by_drift",
    "enumerate_paths_by_drift",
    "paths_with_east_steps",
    "MAX_ENUMERATE_N",
]

MAX_ENUMERATE_N = 20


@dataclass(frozen=True)
class LatticePath:
    steps: str

    def __post_init__(self):
        steps = self.steps.strip().upper()
        bad = set(steps) - {"N", "E"}
        if bad:
            raise ValueError(f"invalid path step(s) {sorted(bad)}; use N and E")
        object.__setattr__(self, "steps", steps)

    @classmethod
    def from_prefs(cls, prefs: PreferenceOrder | tuple[int, ...]) -> LatticePath:
        signs = prefs.signs if isinstance(prefs, PreferenceOrder) else prefs
        return cls("".join("N" if s > 0 else "E" for s in signs))

    def to_signs(self) -> tuple[int, ...]:
        return tuple(1 if c == "N" else -1 for c in self.steps)

    @classmethod
    def from_parens(cls, text: str) -> LatticePath:
        table = {")": "N", "(": "E"}
        try:
            return cls("".join(table[c] for c in text if not c.isspace()))
        except KeyError as exc:
            raise ValueError(f"invalid parenthesis {exc.args[0]!r}") from None

    def to_parens(self) -> str:
        return self.steps.replace("N", ")").replace("E", "(")

    @property
    def n(self) -> int:
        return len(self.steps)

    @property
    def east_steps(self) -> int:
        return self.steps.count("E")

    def points(self) -> list[tuple[int, int]]:
        x = y = 0
        pts = [(0, 0)]
        for c in self.steps:
            if c == "N":
                y += 1
            else:
                x += 1
            pts.append((x, y))
        return pts

    def heights(self) -> list[int]:
        return _heights(self.steps)

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return self.steps


def _heights(steps: str) -> list[int]:
    h = 0
    out = [0]
    for c in steps:
        h += 1 if c == "N" else -1
        out.append(h)
    return out


def _as_steps(path: LatticePath | str) -> str:
    return path.steps if isinstance(path, LatticePath) else LatticePath(path).steps


def drift(path: LatticePath | str) -> int:
    return max(_heights(_as_steps(path)))


def symmetric_drift(prefs: PreferenceOrder | tuple[int, ...]) -> int:
    """max of the drifts of the path of ``prefs`` and of its negation."""
    signs = prefs.signs if isinstance(prefs, PreferenceOrder) else prefs
    s = hi = lo = 0
    for v in signs:
        s += v
        if s > hi:
            hi = s
        elif s < lo:
            lo = s
    return max(hi, -lo)


class Color(enum.Enum):
    BLACK = "black"
    WHITE = "white"
    GRAY = "gray"


@dataclass(frozen=True)
class PathDecoration:
    """Zenith, dips and the vertex/edge coloring of a path.

    ``zenith`` is a point index (0..n); ``dips`` hold 1-based step indices;
    ``edge_colors[i-1]`` colors step ``i``.
    """

    steps: str
    drift: int
    zenith: int
    dips: tuple[int, ...]
    vertex_colors: tuple[Color, ...]
    edge_colors: tuple[Color, ...]

    def counts(self) -> dict[str, int]:
        """The step-type counters b(N), b(E), w(N), w(E), g(N), g(E).

        g(N) counts dips with their black vertex on the left (they become N
        under phi); g(E) counts dips with their white vertex on the left.
        """
        c = dict.fromkeys(("bN", "bE", "wN", "wE", "gN", "gE"), 0)
        for i, (step, col) in enumerate(zip(self.steps, self.edge_colors)):
            if col is Color.GRAY:
                key = "gN" if self.vertex_colors[i] is Color.BLACK else "gE"
            else:
                key = ("b" if col is Color.BLACK else "w") + step
            c[key] += 1
        return c

    def as_dict(self) -> dict:
        return {
            "path": self.steps,
            "drift": self.drift,
            "zenith": self.zenith,
            "dips": list(self.dips),
            "vertex_colors": [c.value for c in self.vertex_colors],
            "edge_colors": [c.value for c in self.edge_colors],
            "counts": self.counts(),
        }


def _dips(heights: list[int]) -> list[int]:
    # E step i is a dip when no later point is higher than its endpoint.
    n = len(heights) - 1
    dips = []
    later_max = None
    for i in range(n, 0, -1):
        h = heights[i]
        if h < heights[i - 1] and (later_max is None or later_max <= h):
            dips.append(i)
        later_max = h if later_max is None else max(later_max, h)
    dips.reverse()
    return dips


def decompose(path: LatticePath | str) -> PathDecoration:
    steps = _as_steps(path)
    heights = _heights(steps)
    h = max(heights)
    zenith = max(i for i, v in enumerate(heights) if v == h)
    dips = _dips(heights)
    dip_set = set(dips)

    black, white = Color.BLACK, Color.WHITE
    vertex = [black] * (zenith + 1)
    edges = [black] * zenith
    current = black
    for i in range(zenith + 1, len(steps) + 1):
        if i in dip_set:
            current = white if current is black else black
            edges.append(Color.GRAY)
        else:
            edges.append(current)
        vertex.append(current)
    return PathDecoration(steps, h, zenith, tuple(dips), tuple(vertex), tuple(edges))


def phi(path: LatticePath | str) -> LatticePath:
    """Keep each step ending at a black vertex; flip N<->E for steps ending at a white one."""
    deco = decompose(path)
    out = []
    for i, c in enumerate(deco.steps, 1):
        if deco.vertex_colors[i] is Color.WHITE:
            c = "E" if c == "N" else "N"
        out.append(c)
    return LatticePath("".join(out))


def phi_inverse(image: LatticePath | str, h: int) -> LatticePath:
    """Undo :func:`phi` for a source path of drift ``h``.

    In the image a vertex is white exactly when it lies strictly above the
    line ``y = x + h``, so the flips can be read off the image itself.
    """
    steps = _as_steps(image)
    if h < 0:
        raise ValueError("drift must be nonnegative")
    out = []
    height = 0
    for c in steps:
        height += 1 if c == "N" else -1
        if height > h:
            c = "E" if c == "N" else "N"
        out.append(c)
    return LatticePath("".join(out))


def _unpaired_left_parens(steps: str) -> list[int]:
    """0-based positions of E steps ('(') with no matching N (')') after them."""
    stack = []
    for i, c in enumerate(steps):
        if c == "E":
            stack.append(i)
        elif stack:
            stack.pop()
    return stack


def psi(path: LatticePath | str) -> LatticePath:
    """Parenthesization bijection: N is ')' and E is '('.

    Converts the leftmost ``x_n - floor((n-h)/2)`` unpaired left parentheses
    into right parentheses, leaving exactly ``floor((n-h)/2)`` E steps.
    """
    steps = _as_steps(path)
    n, h = len(steps), drift(steps)
    conversions = steps.count("E") - (n - h) // 2
    out = list(steps)
    for i in _unpaired_left_parens(steps)[:conversions]:
        out[i] = "N"
    return LatticePath("".join(out))


def psi_conversions(path: LatticePath | str) -> int:
    steps = _as_steps(path)
    return steps.count("E") - (len(steps) - drift(steps)) // 2


def count_paths_by_drift(n: int, h: int) -> int:
    if n < 0 or not 0 <= h <= n:
        raise ValueError(f"need 0 <= h <= n, got n={n}, h={h}")
    return comb(n, (n - h) // 2)


def enumerate_paths_by_drift(n: int, h: int) -> Iterator[LatticePath]:
    """All length-``n`` paths with drift exactly ``h``, lexicographic with E < N."""
    if n > MAX_ENUMERATE_N:
        raise ValueError(f"n={n} exceeds enumeration budget {MAX_ENUMERATE_N}")
    if n < 0 or h < 0:
        raise ValueError("n and h must be nonnegative")
    if h > n:
        return
    buf = []

    def walk(height, top, left):
        if top > h or top < h and height + left < h:
            return
        if left == 0:
            yield "".join(buf)
            return
        for c, dh in (("E", -1), ("N", 1)):
            buf.append(c)
            nh = height + dh
            yield from walk(nh, max(top, nh), left - 1)
            buf.pop()

    for s in walk(0, 0, n):
        yield LatticePath(s)


def paths_with_east_steps(n: int, ell: int) -> Iterator[str]:
    """Every length-``n`` step string with exactly ``ell`` E steps."""
    from itertools import combinations

    for pos in combinations(range(n), ell):
        s = ["N"] * n
        for i in pos:
            s[i] = "E"
        yield "".join(s)
