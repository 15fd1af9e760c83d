"""Command-line entry point: ``napkins <subcommand> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .benches import (
    BenchCollection,
    algorithm_C,
    bench_seating_list,
    bench_seating_order,
    nu_max_formula,
    unbalanced_count_prediction,
)
from .distribution import distribution_table, figure_data, monte_carlo_expectation
from .oracle import (
    BudgetExceeded,
    OracleBudget,
    brute_force_numax_bench,
    canonicalize_max_arrangement,
    best_seating,
)
from .paths import (
    LatticePath,
    count_paths_by_drift,
    decompose,
    drift,
    enumerate_paths_by_drift,
    phi,
    phi_inverse,
    psi,
    psi_conversions,
)
from .seating import (
    PreferenceOrder,
    SeatingArrangement,
    SeatingOrder,
    parse_order,
    signed_display,
    simulate_dining,
    zero_napkinless_order,
)
from .verify import run_battery


def default_threads() -> int:
    env = os.environ.get("NAPKIN_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def grouped_display(signed: tuple[int, ...], groups: list[tuple[int, ...]]) -> str:
    """Signed labels with ``|`` between benches, rotated so Diner 1 comes first."""
    sign_of = {abs(v): v for v in signed}
    cells = []
    for g in groups:
        cells.append([sign_of[d] for d in g])
    flat = [(gi, v) for gi, g in enumerate(cells) for v in g]
    k = next(i for i, (_, v) in enumerate(flat) if abs(v) == 1)
    rotated = flat[k:] + flat[:k]
    parts, prev = [], None
    for gi, v in rotated:
        if prev is not None and gi != prev:
            parts.append(" | ")
        elif prev is not None:
            parts.append(",")
        parts.append(str(v))
        prev = gi
    return "".join(parts)


def _budget(args) -> OracleBudget:
    return OracleBudget(args.max_seating_n, args.max_bench_n, args.max_sigma_n)


def _outcome_report(arrangement: SeatingArrangement, display: str) -> dict:
    outcome = simulate_dining(arrangement)
    return {
        "sigma": str(arrangement.prefs),
        "order": list(arrangement.order.diners),
        "signed_display": list(signed_display(arrangement)),
        "display": display,
        "seats": [
            {
                "seat": i,
                "diner": s.diner,
                "preference": s.preference,
                "napkin": s.napkin.value,
                "status": s.status.value,
            }
            for i, s in enumerate(outcome.seats, 1)
        ],
        "napkinless": list(outcome.napkinless),
        "frustrated": list(outcome.frustrated),
        "unclaimed_napkins": list(outcome.unclaimed_napkins),
        "nu": len(outcome.napkinless),
    }


def cmd_seat(args) -> int:
    prefs = PreferenceOrder.parse(args.sigma)
    trace = None
    if args.order is not None:
        arrangement = SeatingArrangement(SeatingOrder(parse_order(args.order)), prefs)
        display = ",".join(map(str, signed_display(arrangement)))
    elif args.benches is not None:
        collection = BenchCollection.parse(args.benches, prefs.n)
        arrangement = bench_seating_order(collection, prefs)
        raw = bench_seating_list(collection, prefs)
        groups = [raw[i:i + 3] for i in range(0, 3 * prefs.q, 3)]
        if prefs.r:
            groups.append(raw[3 * prefs.q:])
        display = grouped_display(signed_display(arrangement), groups)
    elif args.strategy == "clairvoyant":
        arrangement, trace = algorithm_C(prefs)
        display = grouped_display(signed_display(arrangement), trace.bench_groups())
    else:
        arrangement = SeatingArrangement(zero_napkinless_order(prefs), prefs)
        display = ",".join(map(str, signed_display(arrangement)))

    report = _outcome_report(arrangement, display)
    if trace is not None:
        report["trace"] = [s.as_dict() for s in trace.steps]
    if args.format == "plain":
        print(f"arrangement: {display}")
        print(f"napkinless: {','.join(map(str, report['napkinless']))}")
        print(f"frustrated: {','.join(map(str, report['frustrated']))}")
        print(f"nu: {report['nu']}")
    else:
        print(_dump(report))
    return 0


def cmd_nu(args) -> int:
    prefs = PreferenceOrder.parse(args.sigma)
    arrangement, trace = algorithm_C(prefs)
    path = LatticePath.from_prefs(prefs)
    report = {
        "sigma": str(prefs),
        "n": prefs.n,
        "q": prefs.q,
        "r": prefs.r,
        "drift": drift(path),
        "drift_negated": drift(LatticePath.from_prefs(-prefs)),
        "h": max(drift(path), drift(LatticePath.from_prefs(-prefs))),
        "nu_max": nu_max_formula(prefs),
        "clairvoyant_nu": len(simulate_dining(arrangement).napkinless),
        "forced_unbalanced": len([s for s in trace.steps if s.step in ("1c", "2c")]),
    }
    if prefs.n >= 3:
        report["predicted_unbalanced"] = unbalanced_count_prediction(prefs)
    print(_dump(report))
    return 0


def cmd_oracle(args) -> int:
    prefs = PreferenceOrder.parse(args.sigma)
    budget = _budget(args)
    report = {"sigma": str(prefs), "n": prefs.n, "formula": nu_max_formula(prefs)}
    if prefs.n <= budget.max_seating_n:
        best, order = best_seating(prefs, budget)
        report["seating_oracle"] = best
        report["best_order"] = list(order.diners)
        canon = canonicalize_max_arrangement(prefs, SeatingArrangement(order, prefs), budget)
        report["canonical_order"] = list(canon.order.diners)
        report["canonical_napkinless_seats"] = list(simulate_dining(canon).napkinless_seats)
    if prefs.n <= budget.max_bench_n:
        report["bench_oracle"] = brute_force_numax_bench(prefs, budget)
    if len(report) == 3:
        raise BudgetExceeded(f"n={prefs.n} exceeds every oracle budget")
    print(_dump(report))
    values = {report["formula"], report.get("seating_oracle", report["formula"]),
              report.get("bench_oracle", report["formula"])}
    return 0 if len(values) == 1 else 1


def cmd_dist(args) -> int:
    table = distribution_table(args.n)
    if args.csv:
        sys.stdout.write("\n".join(table.csv_rows()) + "\n")
    else:
        print(_dump(table.as_dict()))
    return 0


def cmd_expect(args) -> int:
    lines = ["n,expected,proportion"]
    for n, e, prop in figure_data(args.n_min, args.n_max):
        lines.append(f"{n},{float(e)!r},{float(prop)!r}")
    text = "\n".join(lines) + "\n"
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_mc(args) -> int:
    result = monte_carlo_expectation(args.n, args.samples, args.seed, workers=args.threads)
    print(_dump(result.as_dict()))
    return 0


def cmd_paths(args) -> int:
    if args.count or args.enumerate:
        if args.n is None or args.h is None:
            raise ValueError("--count and --enumerate need --n and --h")
        out = {"n": args.n, "h": args.h, "count": count_paths_by_drift(args.n, args.h)}
        if args.enumerate:
            out["paths"] = [p.steps for p in enumerate_paths_by_drift(args.n, args.h)]
        print(_dump(out))
    elif args.phi:
        print(phi(args.phi).steps)
    elif args.phi_inverse:
        if args.h is None:
            raise ValueError("--phi-inverse needs --h")
        print(phi_inverse(args.phi_inverse, args.h).steps)
    elif args.psi:
        image = psi(args.psi)
        print(_dump({"path": image.steps, "parens": image.to_parens(),
                     "conversions": psi_conversions(args.psi)}))
    elif args.decorate:
        print(_dump(decompose(args.decorate).as_dict()))
    return 0


def cmd_verify(args) -> int:
    report = run_battery(args.max_n, _budget(args), workers=args.threads)
    print(_dump(report))
    return 1 if report["mismatches"] else 0


def _add_budget(p):
    p.add_argument("--max-seating-n", type=int, default=9, help="cap for the (n-1)! seating search")
    p.add_argument("--max-bench-n", type=int, default=12, help="cap for the bench-partition search")
    p.add_argument("--max-sigma-n", type=int, default=20, help="cap for 2^n preference sweeps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="napkins", description="Clairvoyant maitre d' napkin toolkit")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: $NAPKIN_THREADS or CPU count)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seat", help="simulate one seating")
    p.add_argument("--sigma", required=True, help="preferences, e.g. '+--++-+-' or 'RLLRRLRL'")
    how = p.add_mutually_exclusive_group(required=True)
    how.add_argument("--order", help="comma-separated seat-to-diner list, Diner 1 first")
    how.add_argument("--strategy", choices=("clairvoyant", "sequential"))
    how.add_argument("--benches", help="bench collection, e.g. '1,10,11;5,8,14;4,7,9;2,6,12'")
    p.add_argument("--format", choices=("json", "plain"), default="json")
    p.set_defaults(func=cmd_seat)

    p = sub.add_parser("nu", help="drift and maximum napkinless count of a preference order")
    p.add_argument("--sigma", required=True)
    p.set_defaults(func=cmd_nu)

    p = sub.add_parser("oracle", help="brute-force maximum for one preference order")
    p.add_argument("--sigma", required=True)
    _add_budget(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("dist", help="exact distribution table")
    p.add_argument("--n", type=int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("expect", help="expected napkinless counts as CSV")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--csv", metavar="PATH", help="write here instead of stdout")
    p.set_defaults(func=cmd_expect)

    p = sub.add_parser("mc", help="Monte Carlo estimate of the expectation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("paths", help="lattice-path tools")
    p.add_argument("--n", type=int)
    p.add_argument("--h", type=int)
    act = p.add_mutually_exclusive_group(required=True)
    act.add_argument("--count", action="store_true")
    act.add_argument("--enumerate", action="store_true")
    act.add_argument("--phi", metavar="PATH")
    act.add_argument("--phi-inverse", metavar="PATH")
    act.add_argument("--psi", metavar="PATH")
    act.add_argument("--decorate", metavar="PATH")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("verify", help="run the cross-validation battery")
    p.add_argument("--max-n", type=int, required=True)
    _add_budget(p)
    p.set_defaults(func=cmd_verify)
    return parser


def _bind_sigma(argv):
    # Preference strings may start with '-', which argparse would read as a flag.
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--sigma":
            out.append("--sigma=" + next(it, ""))
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_bind_sigma(sys.argv[1:] if argv is None else list(argv)))
    if args.threads is None:
        args.threads = default_threads()
    try:
        return args.func(args)
    except (ValueError, IndexError) as exc:
        print(f"napkins: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
