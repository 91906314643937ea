"""Pruned uniqueness searches for the witness hook products.

A partition matching one of the three targets must carry two boxes of hook
length p and two of hook length q (a single box of doubled hook length is
excluded first), and the preliminary inequalities force those boxes onto the
first two rows, onto the first two columns, or onto the first row and column.
Within each configuration the box positions pin the relevant row lengths and
column heights exactly, so the candidates live in small enumeration windows
and everything outside them is excluded by arithmetic alone.

Shared conventions, with n the scanned weight:

* windows come from _bounds_from_constraints, which turns exact row lengths
  and column heights into a [lower, upper] containment pair; infeasible
  tuples yield None and are skipped, never silently mis-shaped;
* conjugation invariance halves the work: the corner search assumes the
  first-row side box is no shorter than the first-column one (c >= d) and
  the row+column search keeps the column copy no farther out than the row
  copy (z >= x), so the column-side mirror images are covered for free;
* when r is usable, the target carries r^4 and the four boxes with hook
  length a multiple of r are pinned like the prime boxes, letting 2r stand
  in for the nearest prime; the row+column corner can then still hide a
  hook of 3r or 4r, which gets its own restricted pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from . import kernels
from .enumeration import iter_partitions, iter_partitions_with_corner_hook
from .factored import hook_product_factored, targets
from .partitions import (
    Parity,
    Parts,
    hook_product,
    is_self_conjugate,
    witness_partition,
    witness_weight,
)
from .primes import AuxiliaryPrimes, PrimeTables, auxiliary_primes, get_tables

PRUNED_K_MIN = 35
PRUNED_K_MAX = 337
NAIVE_K_MAX = 40  # n <= 82; beyond this the exhaustive scan needs force=True
SMALL_K_MAX = 34  # at or below this the naive path is the dispatch of record


@dataclass
class ClaimOutcome:
    """Verdict of one search, with workload counters for regression tracking.

    counterexamples holds every target-matching partition that is not the
    witness, one representative per conjugate pair (see the module docstring
    for the orientation conventions).  tuples_examined counts visited
    position tuples (0 for exhaustive scans); partitions_examined is the
    scan-core work counter.  prime_pair_used records the (p-like, q-like)
    hook lengths actually scanned, None when no pair was involved.
    """

    claim: str
    k: int
    parity: Parity
    status: Literal["verified", "counterexamples"]
    counterexamples: list[Parts]
    tuples_examined: int
    partitions_examined: int
    prime_pair_used: tuple[int, int] | None = None
    method: str = "pruned"


def _outcome(claim, scan, counterexamples, pair, method="pruned"):
    return ClaimOutcome(
        claim=claim,
        k=scan.k,
        parity=scan.parity,
        status="verified" if not counterexamples else "counterexamples",
        counterexamples=counterexamples,
        tuples_examined=scan.tuples,
        partitions_examined=scan.partitions,
        prime_pair_used=pair,
        method=method,
    )


def _bounds_from_constraints(
    n: int, rows: dict[int, int], cols: dict[int, int]
) -> tuple[Parts, Parts] | None:
    """Window of the partitions of n with given exact rows and columns.

    rows maps a row index to its exact length, cols maps a column index to
    its exact height (both 1-based).  Row i = v forces every earlier row to
    at least v and caps rows i.. at v; column j = m forces rows 1..m to at
    least j and rows m+1.. to at most j-1.  The window is exact: a partition
    of n lies in [lower, upper] iff it satisfies every constraint.  Returns
    None when no partition of n can.
    """
    floors = []  # (last_row, value): rows 1..last_row are >= value
    caps = []  # (first_row, value): rows first_row.. are <= value
    for i, v in rows.items():
        if i < 1 or v < 1 or i > n or v > n:
            return None
        floors.append((i, v))
        caps.append((i, v))
    for j, m in cols.items():
        if j < 1 or m < 1 or j > n or m > n:
            return None
        floors.append((m, j))
        caps.append((m + 1, j - 1))

    marks = sorted({1, n + 1} | {f + 1 for f, _ in floors} | {s for s, _ in caps})
    lower: list[int] = []
    upper: list[int] = []
    w_lo = 0
    w_hi = 0
    for s, e in zip(marks, marks[1:]):
        lb = max((v for f, v in floors if f >= s), default=0)
        ub = min((v for f, v in caps if f <= s), default=n)
        if lb > ub:
            return None
        count = e - s
        if lb > 0:
            w_lo += lb * count
            if w_lo > n:
                return None
            lower.extend([lb] * count)
        if ub > 0:
            w_hi += ub * count
            upper.extend([ub] * count)
    if w_hi < n:
        return None
    return tuple(lower), tuple(upper)


class _PrunedScan:
    """Per-(k, parity) context: targets, tables, and workload counters."""

    def __init__(self, k: int, parity: Parity, tables: PrimeTables):
        self.k = k
        self.parity = parity
        self.tables = tables
        self.aux = auxiliary_primes(k, parity, tables)
        self.n = self.aux.n
        self.tset = targets(k, parity, tables)
        self.unit = self.tset.unit_exponents(self.n)
        self.witness = witness_partition(k, parity)
        if hook_product_factored(self.witness, tables) != self.tset.unit:
            raise RuntimeError(f"witness hook product mismatch at k={k} {parity}")
        self.tuples = 0
        self.partitions = 0
        self.matches: dict[Parts, None] = {}

    def scan(self, rows: dict[int, int], cols: dict[int, int]) -> None:
        window = _bounds_from_constraints(self.n, rows, cols)
        if window is None:
            return
        found, examined = kernels.scan_window(
            self.n, window[0], window[1], self.tables.spf, self.unit
        )
        self.partitions += examined
        for parts in found:
            self.matches.setdefault(parts)


def _require_main_inequalities(aux: AuxiliaryPrimes) -> None:
    if not (3 * aux.q > aux.n and 2 * aux.q + (aux.p - 1) // 2 + 2 > aux.n):
        raise RuntimeError(
            f"pruning inequalities fail at k={aux.k} ({aux.parity}); "
            "this k needs the naive or corner-hook dispatch"
        )


def _substituted_pair(aux: AuxiliaryPrimes) -> tuple[int, int]:
    """The (p-like, q-like) hook pair the row scans run with.

    2r replaces whichever prime it exceeds; when 2r is below both primes the
    substitution buys nothing and the plain pair is kept.
    """
    if aux.r_usable:
        if 2 * aux.r > aux.p:
            return (2 * aux.r, aux.q)
        if 2 * aux.r > aux.q:
            return (aux.p, 2 * aux.r)
    return (aux.p, aux.q)


def check_preliminary(
    k: int, parity: Parity, tables: PrimeTables | None = None
) -> dict[str, bool]:
    """Report the six pruning inequalities at weight n.

    The first two must hold everywhere the pruned dispatch is used; the four
    r-interval checks decide whether 2r may stand in for a prime.
    """
    if not PRUNED_K_MIN <= k <= PRUNED_K_MAX:
        raise ValueError(f"pruned range is [{PRUNED_K_MIN}, {PRUNED_K_MAX}], got k={k}")
    tables = tables if tables is not None else get_tables()
    aux = auxiliary_primes(k, parity, tables)
    report = {
        "3q>n": 3 * aux.q > aux.n,
        "2q+(p-1)/2+2>n": 2 * aux.q + (aux.p - 1) // 2 + 2 > aux.n,
    }
    report.update(aux.r_checks)
    return report


def _off_corner_prime(scan: _PrunedScan) -> int:
    """A prime in (k, 4q-n] that the targets lack.

    A doubled hook box off the corner forces (4q-n)! into the hook product;
    the returned prime then divides the product but no target, killing the
    candidate.  Checked against the actual target factorization so the run
    certifies itself (the even targets do contain k+1 when that is prime).
    """
    hi = 4 * scan.aux.q - scan.n
    for w in scan.tables.primes_in(scan.k + 1, hi):
        if scan.unit[w] == 0:
            return int(w)
    raise RuntimeError(
        f"no certificate prime in ({scan.k}, {hi}] at k={scan.k} {scan.parity}"
    )


def _corner_tuples(scan: _PrunedScan, corner: int, side: int) -> None:
    """Corner box of hook `corner`, side boxes of hook `side` on row and column.

    The side box on the first row sits at (1, c+1) with leg a, the one on the
    first column at (d+1, 1) with arm b; c >= d by conjugation, and the corner
    hook fixes d.  Both side values (prime or 2r) use the same geometry.
    """
    n = scan.n
    a_hi = n - corner
    for a in range(0, a_hi + 1):
        for b in range(0, a_hi - a + 1):
            for c in range(1, n - 2 * side + 2):
                scan.tuples += 1
                d = corner - 2 * side + 1 - c + a + b
                if not 1 <= d <= c:
                    continue
                if (b >= c) != (a >= d):  # rows and columns interleave consistently
                    continue
                if a > side - 1 or b > side - 1:
                    continue
                if corner + b * d + max(a * (c - b), 0) + max(c * (a - d), 0) > n:
                    continue
                scan.scan(
                    rows={1: c + side - a, d + 1: b + 1},
                    cols={1: d + side - b, c + 1: a + 1},
                )


def verify_no_double_hook(
    k: int, parity: Parity, tables: PrimeTables | None = None
) -> ClaimOutcome:
    """No matching partition has a box of hook length 2p or 2q.

    Off the corner such a box is killed by the certificate prime from
    _off_corner_prime; at the corner every completion of the pinned first
    row and column is scanned, for both doubled primes.
    """
    tables = tables if tables is not None else get_tables()
    scan = _PrunedScan(k, parity, tables)
    _require_main_inequalities(scan.aux)
    _off_corner_prime(scan)
    aux = scan.aux
    sides = []
    for corner, base in ((2 * aux.p, aux.q), (2 * aux.q, aux.p)):
        side = 2 * aux.r if aux.r_usable and 2 * aux.r > base else base
        sides.append(side)
        _corner_tuples(scan, corner, side)
    ce = sorted(scan.matches)
    return _outcome("no-double-hook", scan, ce, (sides[1], sides[0]))


def _rows_tuples(scan: _PrunedScan, p: int, q: int) -> None:
    """Hook pair (p, q) on the first two rows; column variant by conjugation.

    Positions: p at (2,x) and (1,y) with legs a and c, q at (2,z) and (1,u)
    with legs b and d; row lengths R1 >= R2.  Hooks strictly decrease along a
    row, so x < z or z = y or z > y split the search into three cases whose
    ranges encode the leg orderings; the remaining membership guards are
    cheap rejections before the window is built.
    """
    n = scan.n
    gap = p - q
    x_hi = (n + 2 - 2 * p) // 2  # two disjoint p-hooks must fit
    r1_drop = q + 2 * p - n - 2  # d-1 extra boxes under column u cap R1 below
    r2_floor = 2 * p + q + 1 - n  # an off-first-row q box needs a long row 2

    def emit(x, z, y, u, r1, r2):
        scan.tuples += 1
        if r2 > r1 or r2 < z or r1 < u:
            return
        a = x + p - 1 - r2
        b = z + q - 1 - r2
        c = y + p - 1 - r1
        d = u + q - 1 - r1
        if b < 0 or c < 0 or d < 0 or a < b:
            return
        cols = {x: a + 2, y: c + 1, u: d + 1}
        if z != y:
            cols[z] = b + 2
        scan.scan(rows={1: r1, 2: r2}, cols=cols)

    # q on row 2 between the p boxes: x < z < y < u, a >= b >= c-1 >= d-1
    for x in range(1, x_hi + 1):
        for z in range(x + 1, x + gap + 1):
            for y in range(z + 1, n - 2 * p + 4 - x):
                for u in range(y + 1, y + gap + 1):
                    for r1 in range(max(u + r1_drop, u, 1), u + q):
                        r2_hi = min(r1 - y + z - gap + 1, z + q - 1)
                        for r2 in range(max(r2_floor, z), r2_hi + 1):
                            emit(x, z, y, u, r1, r2)

    # shared column: x < y = z < u, b = c-1 and R2 is determined
    for x in range(1, x_hi + 1):
        for y in range(x + 1, x + gap + 1):
            for u in range(y + 1, y + gap + 1):
                for r1 in range(max(u + r1_drop, u, 1), u + q):
                    emit(x, y, y, u, r1, r1 + 1 - gap)

    # q boxes outside: x < y < z < u, a >= c-1 >= b >= d-1
    for x in range(1, x_hi + 1):
        for y in range(x + 1, x + gap):
            for z in range(y + 1, x + gap + 1):
                for u in range(z + 1, y + gap + 1):
                    for r1 in range(max(u + r1_drop, u, 1), u + q):
                        r2_hi = min(r1 - y + x + 1, r1 - u + z + 1, z + q - 1)
                        for r2 in range(max(r2_floor, r1 - y + z - gap + 1, z), r2_hi + 1):
                            emit(x, z, y, u, r1, r2)


def verify_rows_case(
    k: int, parity: Parity, tables: PrimeTables | None = None
) -> ClaimOutcome:
    """No matching partition carries the hook pair on the first two rows."""
    tables = tables if tables is not None else get_tables()
    scan = _PrunedScan(k, parity, tables)
    _require_main_inequalities(scan.aux)
    pair = _substituted_pair(scan.aux)
    _rows_tuples(scan, *pair)
    ce = sorted(scan.matches)
    return _outcome("two-rows", scan, ce, pair)


def _rowcol_tuples(
    scan: _PrunedScan, p: int, q: int, corner_hooks: tuple[int, ...] | None = None
) -> None:
    """Hook pair (p, q) on the first row and first column.

    Positions: p at (1, x+1) with leg a and at (z+1, 1) with arm c; q at
    (1, y+1) with leg b and at (u+1, 1) with arm d; R1 and C1 are the first
    row and column, z >= x by conjugation.  The four cases count how many of
    the column arms reach under the row legs (the two-crossing pattern is
    arithmetically impossible); each case's ranges encode its orderings.
    corner_hooks restricts R1 to corner hooks in the given set (the 3r/4r
    follow-up pass); None leaves the corner free.
    """
    n = scan.n
    gap = p - q
    x_hi = (n + 2 - 2 * p) // 2
    d_hi = (n - 2 * p) // 2
    c1_num = n + 1 - 2 * p  # z rows of width min(c+1, x) sit under the corner

    def emit(x, y, c, d, c1, r1):
        scan.tuples += 1
        if r1 < y + 1 or c > p - 1 or d > q - 1:
            return
        a = x + p - r1
        b = y + q - r1
        if b < 0 or a < b:
            return
        z = c1 - p + c
        u = c1 - q + d
        if z < x or u <= z or u > c1 - 1:
            return
        scan.scan(
            rows={1: r1, z + 1: c + 1, u + 1: d + 1},
            cols={1: c1, x + 1: a + 1, y + 1: b + 1},
        )

    def r1_range(lo, hi, c1):
        if corner_hooks is None:
            return range(lo, hi + 1)
        return [h + 1 - c1 for h in corner_hooks if lo <= h + 1 - c1 <= hi]

    # no crossings: y > x > c >= d, so b <= a < z < u
    for d in range(0, d_hi + 1):
        for c in range(d, d + gap):
            for x in range(c + 1, x_hi + 1):
                for y in range(x + 1, x + gap + 1):
                    for c1 in range(x + p - c, p - c + c1_num // (c + 1) + 1):
                        for r1 in r1_range(2 * p - c + x - c1 + 1, y + q, c1):
                            emit(x, y, c, d, c1, r1)

    # one crossing: y > c >= x > d, so b < z <= a < u
    for d in range(0, d_hi + 1):
        for x in range(d + 1, x_hi + 1):
            for c in range(x, d + gap):
                for y in range(c + 1, x + gap + 1):
                    for c1 in range(x + p - c, p - c + c1_num // x + 1):
                        lo = max(p + q + y - c, p + q + x - d) - c1 + 1
                        hi = min(2 * p - c + x - c1, y + q)
                        for r1 in r1_range(lo, hi, c1):
                            emit(x, y, c, d, c1, r1)

    # (two crossings would force p - q < p - q; nothing to enumerate)

    # three crossings: c >= y > d >= x, so z <= b < u <= a
    for x in range(1, x_hi + 1):
        for d in range(x, x + gap):
            for y in range(d + 1, x + gap + 1):
                for c in range(y, d + gap):
                    for c1 in range(x + p - c, p - c + c1_num // x + 1):
                        lo = 2 * q - d + y - c1 + 1
                        hi = min(p + q + y - c, p + q + x - d) - c1
                        for r1 in r1_range(lo, hi, c1):
                            emit(x, y, c, d, c1, r1)

    # four crossings: c >= d >= y > x, so z < u <= b <= a
    for x in range(1, x_hi + 1):
        for y in range(x + 1, x + gap + 1):
            for d in range(y, n - 2 * p + 2):
                for c in range(d, d + gap):
                    for c1 in range(x + p - c, p - c + c1_num // x + 1):
                        lo = x + p - (n - 2 * q) // x  # x columns of width a fit
                        hi = 2 * q - d + y - c1
                        for r1 in r1_range(lo, hi, c1):
                            emit(x, y, c, d, c1, r1)


def verify_rowcol_case(
    k: int, parity: Parity, tables: PrimeTables | None = None
) -> ClaimOutcome:
    """The witness is the only match with the hook pair on row 1 and column 1.

    The substituted pass covers every corner whose hook is not a multiple of
    r; corners of hook 3r or 4r get the restricted pass with the plain prime
    pair.  Missing the witness would mean the enumeration itself is broken,
    so that raises instead of reporting.
    """
    tables = tables if tables is not None else get_tables()
    scan = _PrunedScan(k, parity, tables)
    _require_main_inequalities(scan.aux)
    pair = _substituted_pair(scan.aux)
    _rowcol_tuples(scan, *pair)
    if pair != (scan.aux.p, scan.aux.q):
        r = scan.aux.r
        _rowcol_tuples(scan, scan.aux.p, scan.aux.q, corner_hooks=(3 * r, 4 * r))
    if scan.witness not in scan.matches:
        raise RuntimeError(
            f"witness {scan.witness} missed by the row+column scan at k={k} {parity}"
        )
    ce = sorted(m for m in scan.matches if m != scan.witness)
    return _outcome("row-column", scan, ce, pair)


def naive_verify(
    k: int,
    parity: Parity,
    tables: PrimeTables | None = None,
    *,
    force: bool = False,
) -> ClaimOutcome:
    """Exhaustive oracle: scan every partition of the witness weight."""
    if k < 2:
        raise ValueError(f"naive scan needs k >= 2, got {k}")
    n = witness_weight(k, parity)
    if k > NAIVE_K_MAX and not force:
        raise ValueError(
            f"naive scan at k={k} walks all partitions of {n}; pass force=True"
        )
    tables = tables if tables is not None else get_tables()
    tset = targets(k, parity, tables)
    matches, examined = kernels.scan_full(n, tables.spf, tset.unit_exponents(n))
    w = witness_partition(k, parity)
    if w not in matches:
        raise RuntimeError(f"witness {w} missing from the exhaustive scan at n={n}")
    ce = sorted(m for m in matches if m != w)
    return ClaimOutcome(
        claim="naive",
        k=k,
        parity=parity,
        status="verified" if not ce else "counterexamples",
        counterexamples=ce,
        tuples_examined=0,
        partitions_examined=examined,
        prime_pair_used=None,
        method="naive",
    )


def _corner_hook_special(k: int, parity: Parity, tables: PrimeTables) -> ClaimOutcome:
    """Dispatch for weights where the prime n-1 divides the target exactly once.

    Every match then has a box of hook length n-1, which fits in only three
    ways: at the corner with a single box left over for position (2,2), or
    next to an n-hook corner, i.e. the one-row and one-column shapes.
    """
    n = witness_weight(k, parity)
    tset = targets(k, parity, tables)
    if not tables.is_prime_int(n - 1) or tset.unit.exponent(n - 1) != 1:
        raise RuntimeError(
            f"corner-hook shortcut needs {n - 1} prime and in the target once"
        )
    candidates = list(iter_partitions_with_corner_hook(n, n - 1))
    candidates += [(n,), (1,) * n]
    matches = [
        parts
        for parts in candidates
        if tset.matches(hook_product_factored(parts, tables))
    ]
    w = witness_partition(k, parity)
    if w not in matches:
        raise RuntimeError(f"witness {w} missing from the corner-hook scan at n={n}")
    ce = sorted(m for m in matches if m != w)
    return ClaimOutcome(
        claim="fact",
        k=k,
        parity=parity,
        status="verified" if not ce else "counterexamples",
        counterexamples=ce,
        tuples_examined=0,
        partitions_examined=len(candidates),
        prime_pair_used=None,
        method="corner-hook",
    )


def verify_fact(
    k: int,
    parity: Parity,
    tables: PrimeTables | None = None,
    *,
    cross_check: bool = False,
) -> ClaimOutcome:
    """Full uniqueness verdict for one (k, parity): dispatch and conjunction.

    Small k and the two even stragglers go to the exhaustive or corner-hook
    paths; everything else runs the three pruned searches, whose match sets
    combine into the verdict.  cross_check additionally replays the naive
    oracle (k <= NAIVE_K_MAX only) and demands identical match sets.
    """
    if not 2 <= k <= PRUNED_K_MAX:
        raise ValueError(f"supported range is [2, {PRUNED_K_MAX}], got k={k}")
    tables = tables if tables is not None else get_tables()
    if k <= SMALL_K_MAX or (parity == "even" and k == 37):
        base = naive_verify(k, parity, tables)
        return ClaimOutcome(
            claim="fact",
            k=k,
            parity=parity,
            status=base.status,
            counterexamples=base.counterexamples,
            tuples_examined=0,
            partitions_examined=base.partitions_examined,
            prime_pair_used=None,
            method="naive",
        )
    if parity == "even" and k == 41:
        return _corner_hook_special(k, parity, tables)

    stages = (
        verify_no_double_hook(k, parity, tables),
        verify_rows_case(k, parity, tables),
        verify_rowcol_case(k, parity, tables),
    )
    ce = list(dict.fromkeys(x for s in stages for x in s.counterexamples))
    tuples = sum(s.tuples_examined for s in stages)
    partitions = sum(s.partitions_examined for s in stages)
    pair = stages[2].prime_pair_used
    method = "pruned"
    if cross_check and k <= NAIVE_K_MAX:
        oracle = naive_verify(k, parity, tables)
        w = witness_partition(k, parity)
        mine = set(ce) | {w}
        theirs = set(oracle.counterexamples) | {w}
        if mine != theirs:
            raise RuntimeError(
                f"pruned and naive scans disagree at k={k} {parity}: "
                f"{sorted(mine ^ theirs)}"
            )
        partitions += oracle.partitions_examined
        method = "pruned+naive"
    return ClaimOutcome(
        claim="fact",
        k=k,
        parity=parity,
        status="verified" if not ce else "counterexamples",
        counterexamples=sorted(ce),
        tuples_examined=tuples,
        partitions_examined=partitions,
        prime_pair_used=pair,
        method=method,
    )


def dimension_sets(n: int) -> tuple[set[int], set[int]]:
    """Exact irreducible-degree sets at weight n for the full and halved group.

    Conjugate pairs restrict to a shared degree; self-conjugate shapes split
    into two halves.  Plain-integer hook products keep this route independent
    of the factored arithmetic used by the scans.
    """
    if not 3 <= n <= 45:
        raise ValueError(f"degree sets are enumerated for 3 <= n <= 45, got {n}")
    nf = math.factorial(n)
    full: set[int] = set()
    halved: set[int] = set()
    for parts in iter_partitions(n):
        d = nf // hook_product(parts)
        full.add(d)
        if is_self_conjugate(parts):
            halved.add(d // 2)
        else:
            halved.add(d)
    return full, halved
