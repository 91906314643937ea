"""Command line front end for the scans, reports, and witness lookups.

Reports are JSON lines by default: a meta object first, then one record per
(k, parity) sorted by (parity, k), so output does not depend on how work was
scheduled.  The meta line deliberately omits the worker count and, under
--canonical, zeroes every timing field; a canonical report is therefore
byte-identical across runs of the same configuration.  CSV output is a lossy
summary (no counterexamples, no prime pair).  Interrupting a run still writes
the finished records, with a trailing truncation marker.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import multiprocessing
import os
import sys
import time
from dataclasses import dataclass

from . import __version__, kernels, lemmas
from .claims import (
    NAIVE_K_MAX,
    PRUNED_K_MAX,
    dimension_sets,
    naive_verify,
    verify_fact,
)
from .factored import dimension
from .partitions import format_partition, witness_partition
from .primes import DEFAULT_BOUND, get_tables

CERTIFIED_WEIGHT_MAX = 2 * PRUNED_K_MAX + 2  # largest n any dispatch covers


@dataclass(frozen=True)
class RunConfig:
    """One verify-fact invocation, normalized and validated."""

    k_min: int = 2
    k_max: int = PRUNED_K_MAX
    parity: str = "both"
    workers: int = 1
    report_path: str | None = None
    format: str = "json-lines"
    cross_check: bool = False
    sieve_bound: int | None = None
    resume: bool = False
    canonical: bool = False

    def validate(self) -> "RunConfig":
        if not 2 <= self.k_min <= self.k_max <= PRUNED_K_MAX:
            raise ValueError(
                f"need 2 <= k_min <= k_max <= {PRUNED_K_MAX}, "
                f"got [{self.k_min}, {self.k_max}]"
            )
        if self.parity not in ("odd", "even", "both"):
            raise ValueError(f"parity must be odd, even, or both, got {self.parity!r}")
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")
        if self.format not in ("json-lines", "csv"):
            raise ValueError(f"format must be json-lines or csv, got {self.format!r}")
        if self.sieve_bound is not None and self.sieve_bound < 4 * (2 * self.k_max + 2):
            raise ValueError(
                f"sieve_bound {self.sieve_bound} is below the doubled-hook reach "
                f"{4 * (2 * self.k_max + 2)} for k_max={self.k_max}"
            )
        return self

    @property
    def bound(self) -> int:
        if self.sieve_bound is not None:
            return self.sieve_bound
        return max(DEFAULT_BOUND, 4 * (2 * self.k_max + 2))

    def tasks(self) -> list[tuple[str, int]]:
        parities = ("even", "odd") if self.parity == "both" else (self.parity,)
        return [(p, k) for p in parities for k in range(self.k_min, self.k_max + 1)]


def _record(outcome, millis: int) -> dict:
    pair = outcome.prime_pair_used
    return {
        "claim": outcome.claim,
        "k": outcome.k,
        "parity": outcome.parity,
        "status": outcome.status,
        "counterexamples": [list(p) for p in outcome.counterexamples],
        "tuples": outcome.tuples_examined,
        "partitions": outcome.partitions_examined,
        "prime_sub": list(pair) if pair is not None else None,
        "method": outcome.method,
        "millis": millis,
    }


def _init_worker(bound: int) -> None:
    get_tables(bound)


def _run_task(task: tuple[str, int, bool]) -> dict:
    parity, k, cross_check = task
    start = time.perf_counter()
    outcome = verify_fact(k, parity, cross_check=cross_check)
    return _record(outcome, int((time.perf_counter() - start) * 1000))


def _read_report(path: str, fmt: str) -> dict[tuple[str, int], dict]:
    """Completed records from an earlier report, keyed by (parity, k)."""
    done: dict[tuple[str, int], dict] = {}
    with open(path, encoding="utf-8") as fh:
        if fmt == "csv":
            for row in csv.DictReader(fh):
                if not row.get("k") or row["k"].startswith("#"):
                    continue
                rec = {
                    "k": int(row["k"]),
                    "parity": row["parity"],
                    "status": row["status"],
                    "tuples": int(row.get("tuples") or 0),
                    "partitions": int(row.get("partitions") or 0),
                    "millis": int(row.get("millis") or 0),
                }
                done[(rec["parity"], rec["k"])] = rec
        else:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                if "k" in rec and "parity" in rec and "status" in rec:
                    done[(rec["parity"], rec["k"])] = rec
    return done


def _render_json_lines(meta: dict, records: list[dict], truncated: bool) -> str:
    lines = [json.dumps({"meta": meta}, sort_keys=True, separators=(",", ":"))]
    lines.extend(
        json.dumps(rec, sort_keys=True, separators=(",", ":")) for rec in records
    )
    if truncated:
        lines.append('{"truncated":true}')
    return "\n".join(lines) + "\n"


def _render_csv(meta: dict, records: list[dict], truncated: bool) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "parity", "status", "tuples", "partitions", "millis"])
    for rec in records:
        writer.writerow(
            [
                rec["k"],
                rec["parity"],
                rec["status"],
                rec.get("tuples", 0),
                rec.get("partitions", 0),
                rec.get("millis", 0),
            ]
        )
    if truncated:
        buf.write("# truncated\n")
    return buf.getvalue()


def _write_atomic(path: str, text: str) -> None:
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def run(config: RunConfig) -> int:
    """Execute a verify-fact run and emit the report.

    Returns 0 when every record is verified and the run completed, 1 when a
    counterexample surfaced or the run was interrupted.
    """
    config.validate()
    get_tables(config.bound)
    done: dict[tuple[str, int], dict] = {}
    if config.resume and config.report_path and os.path.exists(config.report_path):
        done = _read_report(config.report_path, config.format)
    tasks = [
        (parity, k, config.cross_check)
        for parity, k in config.tasks()
        if (parity, k) not in done
    ]
    wanted = {(parity, k) for parity, k in config.tasks()}
    records = [rec for key, rec in done.items() if key in wanted]

    start = time.perf_counter()
    truncated = False
    try:
        if config.workers > 1 and len(tasks) > 1:
            with multiprocessing.Pool(
                config.workers, initializer=_init_worker, initargs=(config.bound,)
            ) as pool:
                for rec in pool.imap_unordered(_run_task, tasks):
                    records.append(rec)
        else:
            for task in tasks:
                records.append(_run_task(task))
    except KeyboardInterrupt:
        truncated = True

    records.sort(key=lambda rec: (rec["parity"], rec["k"]))
    wall = 0 if config.canonical else int((time.perf_counter() - start) * 1000)
    if config.canonical:
        for rec in records:
            rec["millis"] = 0
    meta = {
        "version": __version__,
        "command": "verify-fact",
        "k_min": config.k_min,
        "k_max": config.k_max,
        "parity": config.parity,
        "cross_check": config.cross_check,
        "format": config.format,
        "sieve_bound": config.bound,
        "canonical": config.canonical,
        "kernel": kernels.IMPL_NAME,
        "wall_millis": wall,
    }
    render = _render_csv if config.format == "csv" else _render_json_lines
    text = render(meta, records, truncated)
    if config.report_path:
        _write_atomic(config.report_path, text)
    else:
        sys.stdout.write(text)

    if truncated:
        print("interrupted: report truncated", file=sys.stderr)
        return 1
    return 0 if all(rec["status"] == "verified" for rec in records) else 1


def _cmd_verify_fact(args: argparse.Namespace) -> int:
    config = RunConfig(
        k_min=args.k_min,
        k_max=args.k_max,
        parity=args.parity,
        workers=args.workers,
        report_path=args.report,
        format=args.format,
        cross_check=args.cross_check,
        sieve_bound=args.sieve_bound,
        resume=args.resume,
        canonical=args.canonical,
    )
    return run(config)


def _cmd_naive(args: argparse.Namespace) -> int:
    parities = ("even", "odd") if args.parity == "both" else (args.parity,)
    code = 0
    for parity in parities:
        outcome = naive_verify(args.k, parity, force=args.force)
        print(
            f"k={args.k} {parity}: {outcome.status} "
            f"(partitions={outcome.partitions_examined}, "
            f"witness={format_partition(witness_partition(args.k, parity))})"
        )
        for parts in outcome.counterexamples:
            print(f"  counterexample: {format_partition(parts)}")
            code = 1
    return code


def _cmd_verify_lemmas(args: argparse.Namespace) -> int:
    tables = get_tables()
    code = 0
    if args.which in ("two-primes", "all"):
        failures = lemmas.scan_two_primes(
            lemmas.TWO_PRIMES_MIN, lemmas.TWO_PRIMES_MAX, tables
        )
        line = (
            f"two-primes [{lemmas.TWO_PRIMES_MIN}, {lemmas.TWO_PRIMES_MAX}]: "
            f"{len(failures)} failures"
        )
        print(line if not failures else f"{line}: {failures[:10]}")
        code |= bool(failures)
    if args.which in ("prime-gaps", "all"):
        exceptions = lemmas.scan_prime_gaps(
            lemmas.TWO_PRIMES_MIN, lemmas.TWO_PRIMES_MAX, tables
        )
        undischarged = [
            k for k in exceptions if lemmas.discharge_gap_exception(k, tables)
        ]
        print(
            f"prime-gaps [{lemmas.TWO_PRIMES_MIN}, {lemmas.TWO_PRIMES_MAX}]: "
            f"{len(exceptions)} exceptions, {len(undischarged)} undischarged"
        )
        code |= bool(undischarged)
    return code


def _cmd_scan_gaps(args: argparse.Namespace) -> int:
    tables = get_tables()
    exceptions = lemmas.scan_prime_gaps(args.k_from, args.k_to, tables)
    code = 0
    for k, nxt, gap, window in lemmas.gap_exception_rows(exceptions, tables):
        failing = lemmas.discharge_gap_exception(k, tables)
        verdict = "discharged" if not failing else f"FAILS at h={failing[:5]}"
        print(f"k={k}: next prime {nxt} (gap {gap} > window {window}), {verdict}")
        code |= bool(failing)
    print(f"{len(exceptions)} exceptions in [{args.k_from}, {args.k_to}]")
    return code


def _cmd_dims(args: argparse.Namespace) -> int:
    full, halved = dimension_sets(args.n)
    payload = {
        "n": args.n,
        "full": [str(d) for d in sorted(full)],
        "halved": [str(d) for d in sorted(halved)],
        "differ": full != halved,
    }
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0 if full != halved else 1


def _cmd_witness(args: argparse.Namespace) -> int:
    n = args.n
    if n < 3:
        raise ValueError(f"witnesses start at weight 3, got {n}")
    if n > CERTIFIED_WEIGHT_MAX:
        raise ValueError(
            f"weight {n} is outside the certified range [3, {CERTIFIED_WEIGHT_MAX}]"
        )
    if n % 2:
        k, parity = (n - 1) // 2, "odd"
    else:
        k, parity = (n - 2) // 2, "even"
    tables = get_tables()
    parts = witness_partition(k, parity)
    dim_full = dimension(parts, "S", tables).value.value()
    dim_half = dimension(parts, "A", tables).value.value()
    if k < 2:
        # too small for the scans; the degree sets themselves decide
        full, halved = dimension_sets(n)
        ok = dim_full in full and dim_full not in halved
        method = "degree-sets"
    else:
        outcome = verify_fact(k, parity)
        ok = outcome.status == "verified"
        method = outcome.method
        if ok and n <= 45:
            full, halved = dimension_sets(n)
            ok = dim_full in full and dim_full not in halved
    payload = {
        "n": n,
        "witness": list(parts),
        "dim_full": str(dim_full),
        "dim_half": str(dim_half),
        "separates": ok,
        "method": method,
    }
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookcert",
        description="verify uniqueness of the witness hook products and the "
        "prime interval lemmas behind them",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-fact", help="run the per-k uniqueness verdicts")
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, default=PRUNED_K_MAX)
    p.add_argument("--parity", choices=["odd", "even", "both"], default="both")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument(
        "--cross-check",
        action="store_true",
        help=f"replay the exhaustive oracle for k <= {NAIVE_K_MAX}",
    )
    p.add_argument("--report", help="write the report here instead of stdout")
    p.add_argument("--format", choices=["json-lines", "csv"], default="json-lines")
    p.add_argument("--sieve-bound", type=int, default=None)
    p.add_argument(
        "--resume", action="store_true", help="skip (k, parity) pairs already in --report"
    )
    p.add_argument(
        "--canonical", action="store_true", help="zero timings for byte-stable reports"
    )
    p.set_defaults(func=_cmd_verify_fact)

    p = sub.add_parser("naive", help="exhaustive scan of one witness weight")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--parity", choices=["odd", "even", "both"], default="both")
    p.add_argument("--force", action="store_true", help=f"allow k > {NAIVE_K_MAX}")
    p.set_defaults(func=_cmd_naive)

    p = sub.add_parser("verify-lemmas", help="prime interval lemma scans")
    p.add_argument(
        "--which", choices=["two-primes", "prime-gaps", "all"], default="all"
    )
    p.set_defaults(func=_cmd_verify_lemmas)

    p = sub.add_parser("scan-gaps", help="list and discharge prime gap exceptions")
    p.add_argument("--from", dest="k_from", type=int, default=lemmas.TWO_PRIMES_MIN)
    p.add_argument("--to", dest="k_to", type=int, default=lemmas.TWO_PRIMES_MAX)
    p.set_defaults(func=_cmd_scan_gaps)

    p = sub.add_parser("dims", help="exact degree sets at one weight")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("witness", help="witness shape and degrees at one weight")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_witness)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"soundness failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
