"""Time the compiled scan core against the pure-Python fallback.

Runs the full-weight scan in both count-only and match mode on a few weights
and prints per-core wall times with the speedup.  Match results are compared
across cores on every run; a disagreement aborts the benchmark.

Usage:
    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --weights 40 50 60 --repeat 3
"""

import argparse
import time

from hookcert import kernels
from hookcert.factored import targets
from hookcert.primes import get_tables


def _unit_for(n, tables):
    if n % 2 == 1 and n >= 3:
        return targets((n - 1) // 2, "odd", tables).unit_exponents(n)
    if n % 2 == 0 and n >= 6:
        return targets((n - 2) // 2, "even", tables).unit_exponents(n)
    raise ValueError(f"no scan target at weight {n}")


def _time(fn, repeat):
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def run(weights, repeat):
    tables = get_tables()
    impls = kernels.available_impls()
    if "c" not in impls:
        print("compiled core not available; timing the fallback only")
    header = f"{'n':>4} {'mode':>6} " + " ".join(f"{name:>12}" for name in impls)
    if len(impls) > 1:
        header += f" {'speedup':>9}"
    print(header)
    for n in weights:
        unit = _unit_for(n, tables)
        for mode, exps in (("count", None), ("match", unit)):
            times = {}
            results = {}
            for name, impl in impls.items():
                times[name], results[name] = _time(
                    lambda impl=impl: kernels.scan_full(n, tables.spf, exps, impl=impl),
                    repeat,
                )
            matches = {name: sorted(r[0]) for name, r in results.items()}
            first = next(iter(matches.values()))
            if any(m != first for m in matches.values()):
                raise SystemExit(f"cores disagree at n={n} mode={mode}")
            row = f"{n:>4} {mode:>6} " + " ".join(
                f"{times[name] * 1e3:>10.1f}ms" for name in impls
            )
            if len(impls) > 1:
                row += f" {times['python'] / times['c']:>8.1f}x"
            print(row)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument(
        "--weights",
        type=int,
        nargs="+",
        default=[40, 45, 50],
        help="weights to scan (pure fallback cost grows fast past ~55)",
    )
    ap.add_argument("--repeat", type=int, default=2, help="best-of repetitions")
    args = ap.parse_args()
    run(args.weights, args.repeat)


if __name__ == "__main__":
    main()
