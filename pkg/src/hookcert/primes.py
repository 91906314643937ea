"""Sieve-backed prime tables and the auxiliary prime triples used by the scans.

One table set serves a whole run.  Everything downstream (factoring hooks,
Legendre factorials, the two range scans) indexes into these arrays, so the
table bound is the hard ceiling on every integer we ever factor.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Literal

import numpy as np

DEFAULT_BOUND = 2_400_000
ENV_BOUND = "HOOKCERT_SIEVE_BOUND"


class PrimeTables:
    """Immutable sieve tables up to `bound` (inclusive).

    is_prime : bool array, index by integer
    pi       : int64 array, pi[m] = number of primes <= m
    spf      : int32 array, smallest prime factor (0 for m < 2)
    primes   : int64 array of all primes <= bound, ascending
    """

    __slots__ = ("bound", "is_prime", "pi", "spf", "primes")

    def __init__(self, bound: int):
        if bound < 10:
            raise ValueError(f"table bound too small: {bound}")
        try:
            is_prime = np.ones(bound + 1, dtype=bool)
            is_prime[:2] = False
            for p in range(2, int(bound**0.5) + 1):
                if is_prime[p]:
                    is_prime[p * p :: p] = False
            spf = np.zeros(bound + 1, dtype=np.int32)
            for p in range(2, int(bound**0.5) + 1):
                if is_prime[p]:
                    sl = spf[p::p]
                    sl[sl == 0] = p
            # whatever is still unmarked has no factor <= sqrt(bound)
            rest = np.flatnonzero(spf == 0)
            spf[rest] = rest
            spf[:2] = 0
            pi = np.cumsum(is_prime, dtype=np.int64)
        except MemoryError as exc: # ~14 bytes per integer of bound
            need_mb = bound * 14 // 2**20
            raise RuntimeError(
                f"prime tables up to {bound} need roughly {need_mb} MiB"
            ) from exc
        self.bound = bound
        self.is_prime = is_prime
        self.pi = pi
        self.spf = spf
        self.primes = np.flatnonzero(is_prime).astype(np.int64)

    def _check(self, m: int) -> None:
        if not (0 <= m <= self.bound):
            raise ValueError(f"{m} outside table range [0, {self.bound}]")

    def is_prime_int(self, m: int) -> bool:
        self._check(m)
        return bool(self.is_prime[m])

    def pi_of(self, m: int) -> int:
        """Number of primes <= m."""
        self._check(m)
        return int(self.pi[m])

    def primes_in(self, lo: int, hi: int) -> list[int]:
        """All primes in [lo, hi], ascending.  Empty when lo > hi."""
        if lo > hi:
            return []
        self._check(max(lo, 0))
        self._check(hi)
        lo = max(lo, 0)
        return [int(p) for p in np.flatnonzero(self.is_prime[lo : hi + 1]) + lo]

    def prev_prime(self, m: int) -> int:
        """Largest prime <= m."""
        self._check(m)
        if self.pi[m] == 0:
            raise ValueError(f"no prime <= {m}")
        return int(self.primes[self.pi[m] - 1])

    def next_prime(self, m: int) -> int:
        """Smallest prime > m."""
        self._check(m)
        k = int(self.pi[m])
        if k >= len(self.primes):
            raise ValueError(f"no prime in ({m}, {self.bound}]")
        return int(self.primes[k])

    def factor(self, m: int) -> dict[int, int]:
        """Prime factorization of m >= 1 via repeated smallest-factor division."""
        if m < 1:
            raise ValueError(f"cannot factor {m}")
        self._check(m)
        out: dict[int, int] = {}
        spf = self.spf
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out[p] = e
        return out

    def largest_prime_factor(self, m: int) -> int:
        if m < 2:
            raise ValueError(f"{m} has no prime factor")
        self._check(m)
        spf = self.spf
        big = 1
        while m > 1:
            p = int(spf[m])
            if p > big:
                big = p
            while m % p == 0:
                m //= p
        return big


_TABLES: PrimeTables | None = None


def get_tables(min_bound: int | None = None) -> PrimeTables:
    """Process-wide tables, built once and only ever grown.

    The default bound covers the full scan ranges; HOOKCERT_SIEVE_BOUND
    overrides it (e.g. to shrink startup cost for small interactive runs).
    """
    global _TABLES
    need = int(os.environ.get(ENV_BOUND, DEFAULT_BOUND))
    if min_bound is not None:
        need = max(need, min_bound)
    if _TABLES is None or _TABLES.bound < need:
        _TABLES = PrimeTables(need)
    return _TABLES


@dataclass(frozen=True)
class AuxiliaryPrimes:
    """The (p, q, r) with p^2 q^2 r^4 dividing the scan target for weight n."""

    k: int
    parity: Literal["odd", "even"]
    n: int
    p: int
    q: int
    r: int
    r_checks: dict[str, bool]
    r_usable: bool


def auxiliary_primes(k: int, parity: Literal["odd", "even"], tables: PrimeTables) -> AuxiliaryPrimes:
    """Pick the largest usable primes around k for the pruned scans.

    odd kind  (n = 2k+1): p > q are the two largest primes <= k,
                          r is the largest prime <= k//2.
    even kind (n = 2k+2): p > q are the two largest primes in [2, k-1] + {k+1},
                          r = (k+1)/2 when that is prime, else the largest
                          prime <= (k-1)//2.

    r_usable collects the four interval inequalities the r-accelerated scans
    rely on; when any fails the caller must run with (p, q) alone.
    """
    if k < 35:
        raise ValueError(f"auxiliary primes need k >= 35, got {k}")
    if parity == "odd":
        n = 2 * k + 1
        p = tables.prev_prime(k)
        q = tables.prev_prime(p - 1)
        r = tables.prev_prime(k // 2)
    elif parity == "even":
        n = 2 * k + 2
        if tables.is_prime_int(k + 1):
            p = k + 1
            q = tables.prev_prime(k - 1)
        else:
            p = tables.prev_prime(k - 1)
            q = tables.prev_prime(p - 1)
        if k % 2 == 1 and tables.is_prime_int((k + 1) // 2):
            r = (k + 1) // 2
        else:
            r = tables.prev_prime((k - 1) // 2)
    else:
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    checks = {
        "2q+r>n": 2 * q + r > n,
        "q+3r>n": q + 3 * r > n,
        "3r<2q": 3 * r < 2 * q,
        "5r>n": 5 * r > n,
    }
    return AuxiliaryPrimes(
        k=k, parity=parity, n=n, p=p, q=q, r=r,
        r_checks=checks, r_usable=all(checks.values()),
    )
