"""Partition generators: full, window-constrained, and fixed-corner-hook.

All three emit in descending lexicographic order, largest part first.  The
window generator is the reference implementation for the scan kernels; it
prunes on suffix weight bounds so infeasible branches die immediately.
"""

from __future__ import annotations

from typing import Iterator

from .partitions import Parts, as_partition, contains, weight

# Full enumeration beyond this is a mistake, not a request (p(90) ~ 5.7e7).
NAIVE_GUARD = 90


def iter_partitions(n: int, *, force: bool = False) -> Iterator[Parts]:
    """All partitions of n, descending lexicographic."""
    if n < 0:
        raise ValueError(f"negative weight {n}")
    if n > NAIVE_GUARD and not force:
        raise ValueError(
            f"refusing full enumeration at n={n} > {NAIVE_GUARD}; pass force=True"
        )
    return _gen_all(n, n)


def _gen_all(n: int, bound: int) -> Iterator[Parts]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, bound), 0, -1):
        for rest in _gen_all(n - first, first):
            yield (first,) + rest


def iter_partitions_between(n: int, lower: Parts, upper: Parts) -> Iterator[Parts]:
    """Partitions lam of n with lower ⊆ lam ⊆ upper (diagram containment).

    Raises ValueError unless lower ⊆ upper and weight(lower) <= n <= weight(upper).
    An empty stream is still possible (the window can be weight-feasible but
    shape-infeasible).
    """
    lower = as_partition(lower)
    upper = as_partition(upper)
    if not contains(upper, lower):
        raise ValueError(f"lower {list(lower)} not contained in upper {list(upper)}")
    if not (weight(lower) <= n <= weight(upper)):
        raise ValueError(
            f"weight {n} outside [{weight(lower)}, {weight(upper)}]"
        )
    rows = min(len(upper), n) if n else 0
    hi = [upper[i] for i in range(rows)]
    lo = [lower[i] if i < len(lower) else 0 for i in range(rows)]
    # suffix sums of the bounds; index i covers rows i..rows-1
    suf_hi = [0] * (rows + 1)
    suf_lo = [0] * (rows + 1)
    for i in range(rows - 1, -1, -1):
        suf_hi[i] = suf_hi[i + 1] + hi[i]
        suf_lo[i] = suf_lo[i + 1] + lo[i]
    return _gen_between(n, 0, n, len(lower), rows, lo, hi, suf_lo, suf_hi)


def _gen_between(w, i, prev, need_rows, rows, lo, hi, suf_lo, suf_hi) -> Iterator[Parts]:
    if w == 0:
        if i >= need_rows:
            yield ()
        return
    if i >= rows:
        return
    top = min(prev, hi[i], w)
    bot = max(lo[i], 1)
    for x in range(top, bot - 1, -1):
        rest = w - x
        # both bounds move against us as x shrinks, so these are break-offs
        if rest > suf_hi[i + 1] or rest > x * (rows - i - 1):
            break
        if rest < suf_lo[i + 1]:
            continue
        for tail in _gen_between(rest, i + 1, x, need_rows, rows, lo, hi, suf_lo, suf_hi):
            yield (x,) + tail


def iter_partitions_with_corner_hook(n: int, h: int) -> Iterator[Parts]:
    """Partitions of n whose (1,1) hook length is exactly h.

    The corner hook pins lam[0] + len(lam) = h + 1; what remains is a free
    inner shape of n - h boxes inside the (lam[0]-1) x (len(lam)-1) box.
    """
    if not (1 <= h <= n):
        raise ValueError(f"corner hook {h} impossible at weight {n}")
    inner = n - h
    for lam1 in range(h, 0, -1):
        nrows = h + 1 - lam1
        if inner > (lam1 - 1) * (nrows - 1):
            continue
        if inner == 0:
            # hook shape, no inner boxes; also covers lam1 = 1 (pure column)
            yield (lam1,) + (1,) * (nrows - 1)
            continue
        for mu in iter_partitions_between(inner, (), (lam1 - 1,) * (nrows - 1)):
            lam = [lam1] + [1 + m for m in mu] + [1] * (nrows - 1 - len(mu))
            yield tuple(lam)


def partition_counts_up_to(n: int) -> list[int]:
    """[p(0), ..., p(n)] by Euler's pentagonal-number recurrence."""
    if n < 0:
        raise ValueError(f"negative weight {n}")
    p = [0] * (n + 1)
    p[0] = 1
    for m in range(1, n + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            j += 1
        p[m] = total
    return p


def partition_count(n: int) -> int:
    return partition_counts_up_to(n)[n]
