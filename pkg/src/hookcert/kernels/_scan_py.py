"""Pure-Python scan core.  Same contract as the compiled twin, ~100x slower.

Kept for environments without a C toolchain and as the oracle the compiled
kernel is tested against.
"""

from __future__ import annotations

from ..enumeration import iter_partitions_between

IMPL_NAME = "python"


def scan_bounded(n, lower, upper, spf, unit_exps):
    """Enumerate the window and keep hook products matching the target.

    Returns (matches, examined): partitions of n with lower ⊆ lam ⊆ upper
    whose hook-length prime exponents equal unit_exps at odd primes and sit
    within 1 of it at 2.  The matches list is the cross-implementation
    contract; examined is a work counter (here: every partition in the
    window, since this core checks candidates one by one, while the compiled
    core prunes subtrees and visits fewer).  With unit_exps None both cores
    count the window exactly and matches stays empty.
    """
    matches: list[tuple[int, ...]] = []
    examined = 0
    if unit_exps is None:
        for _ in iter_partitions_between(n, lower, upper):
            examined += 1
        return matches, examined
    unit = [int(x) for x in unit_exps]
    unit += [0] * max(0, 3 - len(unit))
    caps = list(unit)
    caps[2] += 1
    for parts in iter_partitions_between(n, lower, upper):
        examined += 1
        if _hook_exponents_match(parts, spf, unit, caps):
            matches.append(parts)
    return matches, examined


def _hook_exponents_match(parts, spf, unit, caps):
    nrows = len(parts)
    lam1 = parts[0] if nrows else 0
    conj = [0] * lam1
    i = nrows
    for j in range(lam1):
        while parts[i - 1] <= j:
            i -= 1
        conj[j] = i
    exps = [0] * len(caps)
    # column 1, then row 1, then the interior: big hooks first so a prime
    # exceeding its cap aborts as early as possible
    for i in range(nrows):
        h = parts[i] + conj[0] - i - 1
        if not _accumulate(h, spf, caps, exps):
            return False
    for j in range(1, lam1):
        h = lam1 - j + conj[j] - 1
        if not _accumulate(h, spf, caps, exps):
            return False
    for i in range(1, nrows):
        for j in range(1, parts[i]):
            h = parts[i] - j + conj[j] - i - 1
            if not _accumulate(h, spf, caps, exps):
                return False
    if abs(exps[2] - unit[2]) > 1:
        return False
    for p in range(3, len(caps)):
        if exps[p] != unit[p]:
            return False
    return True


def _accumulate(h, spf, caps, exps):
    m = h
    while m > 1:
        p = int(spf[m])
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        t = exps[p] + e
        if t > caps[p]:
            return False
        exps[p] = t
    return True
