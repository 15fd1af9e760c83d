"""Exact distribution and expectation of the maximum napkinless count.

Preference orders are uniform over all 2**n sign vectors.  Everything here
is exact (``int`` and ``Fraction``); floats appear only in display helpers
and Monte Carlo estimates.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .benches import clairvoyant_napkinless

__all__ = [
    "DistributionTable",
    "p_nk",
    "pr_nk",
    "distribution_table",
    "expected_napkinless",
    "convergence_gap",
    "MonteCarloResult",
    "monte_carlo_expectation",
    "figure_data",
    "MC_CHUNK",
]

MC_CHUNK = 4096


def _check_n(n):
    if n < 3:
        raise ValueError(f"distribution needs n >= 3, got {n}")


def p_nk(n: int, k: int) -> int:
    """Number of preference orders of n diners whose maximum napkinless count is k."""
    _check_n(n)
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    q = n // 3
    if k > q:
        return 0
    if k < q:
        return 4 * math.comb(n, k)
    return 2**n - 4 * sum(math.comb(n, i) for i in range(q))


def pr_nk(n: int, k: int) -> Fraction:
    return Fraction(p_nk(n, k), 2**n)


def expected_napkinless(n: int) -> Fraction:
    _check_n(n)
    q = n // 3
    return q - Fraction(sum((q - k) * math.comb(n, k) for k in range(q)), 2 ** (n - 2))


def convergence_gap(n: int) -> Fraction:
    """``n // 3`` minus the expected napkinless count."""
    _check_n(n)
    q = n // 3
    return Fraction(4 * sum((q - k) * math.comb(n, k) for k in range(q)), 2**n)


@dataclass(frozen=True)
class DistributionTable:
    n: int
    q: int
    counts: tuple[int, ...]
    probabilities: tuple[Fraction, ...]
    expectation: Fraction

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "counts": list(self.counts),
            "probabilities": [str(p) for p in self.probabilities],
            "probabilities_float": [float(p) for p in self.probabilities],
            "expectation": str(self.expectation),
            "expectation_float": float(self.expectation),
        }

    def csv_rows(self):
        yield "k,count,probability"
        for k, (c, p) in enumerate(zip(self.counts, self.probabilities)):
            yield f"{k},{c},{float(p):.17g}"


def distribution_table(n: int) -> DistributionTable:
    _check_n(n)
    q = n // 3
    counts = tuple(p_nk(n, k) for k in range(q + 1))
    probs = tuple(Fraction(c, 2**n) for c in counts)
    return DistributionTable(n, q, counts, probs, expected_napkinless(n))


@dataclass(frozen=True)
class MonteCarloResult:
    n: int
    samples: int
    seed: int
    total: int
    total_sq: int

    @property
    def mean(self) -> float:
        return self.total / self.samples

    @property
    def stderr(self) -> float:
        m = self.samples
        if m < 2:
            return 0.0
        var = Fraction(m * self.total_sq - self.total**2, m * (m - 1))
        return math.sqrt(var / m)

    def as_dict(self) -> dict:
        return {"n": self.n, "mean": self.mean, "stderr": self.stderr, "samples": self.samples, "seed": self.seed}


def _mc_chunk(args):
    n, size, seed_seq = args
    rng = np.random.default_rng(seed_seq)
    signs = rng.integers(0, 2, size=(size, n), dtype=np.int8) * 2 - 1
    total = total_sq = 0
    for row in signs.tolist():
        v = clairvoyant_napkinless(row)
        total += v
        total_sq += v * v
    return total, total_sq


def monte_carlo_expectation(n: int, samples: int, seed: int, workers: int | None = None) -> MonteCarloResult:
    """Average napkinless count of trap setting over uniformly random preference orders.

    Samples are drawn in chunks of ``MC_CHUNK``; chunk ``i`` uses the ``i``-th
    child of ``numpy.random.SeedSequence(seed)``, so the result depends only
    on ``(n, samples, seed)`` and not on how many workers run the chunks.
    """
    _check_n(n)
    if samples < 1:
        raise ValueError("samples must be at least 1")
    sizes = [MC_CHUNK] * (samples // MC_CHUNK)
    if samples % MC_CHUNK:
        sizes.append(samples % MC_CHUNK)
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    jobs = [(n, size, child) for size, child in zip(sizes, children)]
    workers = workers or 1
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs), os.cpu_count() or 1)) as pool:
            parts = list(pool.map(_mc_chunk, jobs))
    else:
        parts = [_mc_chunk(job) for job in jobs]
    total = sum(p[0] for p in parts)
    total_sq = sum(p[1] for p in parts)
    return MonteCarloResult(n, samples, seed, total, total_sq)


def figure_data(n_min: int, n_max: int) -> list[tuple[int, Fraction, Fraction]]:
    """Rows ``(n, E_n, E_n / n)`` with exact values."""
    if not 3 <= n_min <= n_max:
        raise ValueError(f"need 3 <= n_min <= n_max, got {n_min}, {n_max}")
    rows = []
    for n in range(n_min, n_max + 1):
        e = expected_napkinless(n)
        rows.append((n, e, e / n))
    return rows
