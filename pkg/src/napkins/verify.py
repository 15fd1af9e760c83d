"""Cross-validation battery behind ``napkins verify``."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from .benches import algorithm_C, nu_max_formula
from .distribution import p_nk
from .oracle import (
    DEFAULT_BUDGET,
    OracleBudget,
    all_sign_vectors,
    brute_force_distribution,
    brute_force_numax_bench,
    seating_numax_table,
)
from .paths import (
    count_paths_by_drift,
    enumerate_paths_by_drift,
    paths_with_east_steps,
    phi,
    phi_inverse,
    psi,
)
from .seating import PreferenceOrder, napkinless_count

__all__ = ["run_battery", "check_numax", "check_paths", "check_distribution"]

MAX_PATH_N = 16


def _prefs_of(row) -> PreferenceOrder:
    return PreferenceOrder(tuple(int(v) for v in row))


def check_numax(n: int, budget: OracleBudget = DEFAULT_BUDGET):
    """Trap setting vs the drift formula vs both oracles, over every preference order."""
    checked = {"numax_formula": 0, "numax_seating": 0, "numax_bench": 0}
    mismatches = []
    rows = all_sign_vectors(n)
    seating = seating_numax_table(n, budget) if n <= budget.max_seating_n else None
    for i, row in enumerate(rows):
        prefs = _prefs_of(row)
        formula = nu_max_formula(prefs)
        got = napkinless_count(algorithm_C(prefs)[0])
        checked["numax_formula"] += 1
        if got != formula:
            mismatches.append({"check": "numax_formula", "sigma": str(prefs), "algorithm": got, "formula": formula})
        if seating is not None:
            checked["numax_seating"] += 1
            if seating[i] != formula:
                mismatches.append(
                    {"check": "numax_seating", "sigma": str(prefs), "oracle": int(seating[i]), "formula": formula}
                )
        if n <= budget.max_bench_n:
            bench = brute_force_numax_bench(prefs, budget)
            checked["numax_bench"] += 1
            if bench != formula:
                mismatches.append({"check": "numax_bench", "sigma": str(prefs), "oracle": bench, "formula": formula})
    return checked, mismatches


def check_paths(n: int):
    """Path counts by drift and the two bijections, for every path of length n."""
    checked = {"path_count": 0, "phi": 0, "psi": 0}
    mismatches = []
    for h in range(n + 1):
        paths = [p.steps for p in enumerate_paths_by_drift(n, h)]
        checked["path_count"] += 1
        if len(paths) != count_paths_by_drift(n, h):
            mismatches.append({"check": "path_count", "n": n, "h": h, "enumerated": len(paths)})
        ell = (n - h) // 2
        images = [phi(p).steps for p in paths]
        checked["phi"] += len(paths)
        if set(images) != set(paths_with_east_steps(n, ell)) or len(set(images)) != len(images):
            mismatches.append({"check": "phi_image", "n": n, "h": h})
        for p, img in zip(paths, images):
            if phi_inverse(img, h).steps != p:
                mismatches.append({"check": "phi_inverse", "path": p})
        psis = [psi(p).steps for p in paths]
        checked["psi"] += len(paths)
        if len(set(psis)) != len(psis) or any(s.count("E") != ell for s in psis):
            mismatches.append({"check": "psi", "n": n, "h": h})
    return checked, mismatches


def check_distribution(n: int, budget: OracleBudget = DEFAULT_BUDGET):
    checked = {"distribution_formula": 0, "distribution_seating": 0}
    mismatches = []
    closed = [p_nk(n, k) for k in range(n // 3 + 1)]
    backends = [("distribution_formula", "formulaNu")]
    if n <= budget.max_seating_n:
        backends.append(("distribution_seating", "seatingOracle"))
    for name, mode in backends:
        hist = brute_force_distribution(n, mode, budget)
        checked[name] += 1
        if hist != closed:
            mismatches.append({"check": name, "n": n, "enumerated": hist, "closed_form": closed})
    return checked, mismatches


def _task(args):
    kind, n, budget = args
    if kind == "numax":
        return check_numax(n, budget)
    if kind == "paths":
        return check_paths(n)
    return check_distribution(n, budget)


def run_battery(max_n: int, budget: OracleBudget = DEFAULT_BUDGET, workers: int = 1) -> dict:
    """Run every check for sizes up to ``max_n``; returns ``{n, agreements, mismatches}``."""
    if max_n < 2:
        raise ValueError(f"max-n must be at least 2, got {max_n}")
    if max_n > budget.max_sigma_n:
        raise ValueError(f"max-n={max_n} exceeds the sigma budget of {budget.max_sigma_n}")
    tasks = [("numax", n, budget) for n in range(2, max_n + 1)]
    tasks += [("paths", n, budget) for n in range(1, min(max_n, MAX_PATH_N) + 1)]
    tasks += [("dist", n, budget) for n in range(3, max_n + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_task, tasks))
    else:
        results = [_task(t) for t in tasks]
    agreements: dict[str, int] = {}
    mismatches = []
    for checked, bad in results:
        for key, count in checked.items():
            agreements[key] = agreements.get(key, 0) + count
        mismatches.extend(bad)
    return {"n": max_n, "agreements": dict(sorted(agreements.items())), "mismatches": mismatches}

