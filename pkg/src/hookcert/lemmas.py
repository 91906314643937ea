"""Standalone checks feeding the main scans: prime-interval facts verified
over their full computational ranges, plus exact-arithmetic oracles for the
hook-product inequalities used by the tests.

Everything here is either exact integer arithmetic or (in one documented
place) high-precision floating evaluation with an explicit guard band.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .factored import factorial_factored, hook_product_factored
from .partitions import Parts, as_partition, hook_length, hook_product, weight
from .primes import PrimeTables

TWO_PRIMES_MIN = 337
TWO_PRIMES_MAX = 2_010_760


def verify_two_primes(k: int, tables: PrimeTables) -> bool:
    """At least two primes in [k - k//20, k]."""
    if k < TWO_PRIMES_MIN:
        raise ValueError(f"two-primes check starts at k={TWO_PRIMES_MIN}")
    if k > tables.bound:
        raise ValueError(f"k={k} beyond table bound {tables.bound}")
    lo = k - k // 20
    return int(tables.pi[k] - tables.pi[lo - 1]) >= 2


def scan_two_primes(k_min: int, k_max: int, tables: PrimeTables) -> list[int]:
    """All k in [k_min, k_max] failing verify_two_primes (expected: none)."""
    if not (TWO_PRIMES_MIN <= k_min <= k_max <= tables.bound):
        raise ValueError(f"range [{k_min},{k_max}] unsupported")
    ks = np.arange(k_min, k_max + 1, dtype=np.int64)
    lows = ks - ks // 20 - 1
    bad = ks[(tables.pi[ks] - tables.pi[lows]) < 2]
    return [int(k) for k in bad]


@dataclass(frozen=True)
class IntervalFactorCertificate:
    """Witness for the short-interval large-prime-factor criterion."""

    k: int
    h: int
    y: int
    i: int
    prime: int


def is_prime_trial(m: int) -> bool:
    """Trial division; independent of the sieve on purpose."""
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def interval_factor_certify(k: int, h: int, y: int, tables: PrimeTables) -> IntervalFactorCertificate | None:
    """If (k/h)^h >= (k+h)^pi(y), some k+i (1 <= i <= h) has a prime factor > y.

    Returns a trial-division-verified certificate when the hypothesis holds,
    None (refusal) when it does not.  The hypothesis is decided exactly:
    k^h >= h^h (k+h)^pi(y) in integer arithmetic, with a log comparison as a
    fast pre-filter only.
    """
    if not (1 <= h <= y < k):
        raise ValueError(f"need 1 <= h <= y < k, got h={h} y={y} k={k}")
    piy = tables.pi_of(y)
    lhs_log = h * (math.log(k) - math.log(h))
    rhs_log = piy * math.log(k + h)
    margin = 1e-9 * (abs(lhs_log) + abs(rhs_log) + 1.0)
    if lhs_log < rhs_log - margin:
        return None
    if abs(lhs_log - rhs_log) <= margin:
        # too close for floats; settle it exactly
        if k**h < h**h * (k + h) ** piy:
            return None
    for i in range(1, h + 1):
        p = tables.largest_prime_factor(k + i)
        if p > y:
            if (k + i) % p != 0 or not is_prime_trial(p):
                raise RuntimeError(f"sieve produced a bad factor {p} of {k + i}")
            return IntervalFactorCertificate(k=k, h=h, y=y, i=i, prime=p)
    raise RuntimeError(
        f"hypothesis held at k={k} h={h} y={y} but no large factor exists"
    )


def verify_large_prime_factor(k: int, h: int, tables: PrimeTables) -> bool:
    """Some prime >= 3h divides one of k+1, ..., k+h."""
    if k < TWO_PRIMES_MIN:
        raise ValueError(f"supported from k={TWO_PRIMES_MIN}")
    if not (_half_sqrt_ceil(k) <= h <= 3 * k // 20):
        raise ValueError(f"h={h} outside the stated window for k={k}")
    if k + h > tables.bound:
        raise ValueError(f"k+h={k + h} beyond table bound {tables.bound}")
    for i in range(1, h + 1):
        if tables.largest_prime_factor(k + i) >= 3 * h:
            return True
    return False


def _half_sqrt_ceil(k: int) -> int:
    s = math.isqrt(k)
    return (s + 1) // 2 if s * s == k else s // 2 + 1


def scan_prime_gaps(k_min: int, k_max: int, tables: PrimeTables) -> list[int]:
    """All k in range with no prime in [k+1, k + isqrt(k)//2], ascending.

    Over the full [337, 2010760] range the expected exception count is 51;
    each exception must then be discharged by the large-prime-factor check
    over its whole h-window (see discharge_gap_exception).
    """
    if not (TWO_PRIMES_MIN <= k_min <= k_max <= TWO_PRIMES_MAX):
        raise ValueError(f"range [{k_min},{k_max}] outside supported scan band")
    ks = np.arange(k_min, k_max + 1, dtype=np.int64)
    s = np.floor(np.sqrt(ks.astype(np.float64))).astype(np.int64)
    s = np.where((s + 1) * (s + 1) <= ks, s + 1, s)
    s = np.where(s * s > ks, s - 1, s)
    win = ks + s // 2
    if int(win[-1]) > tables.bound:
        raise ValueError(f"scan needs tables up to {int(win[-1])}")
    bad = ks[tables.pi[win] == tables.pi[ks]]
    return [int(k) for k in bad]


def discharge_gap_exception(k: int, tables: PrimeTables) -> list[int]:
    """Failing h values of verify_large_prime_factor over the full window.

    Empty list = the exception is fully discharged.  Uses a running maximum
    of largest prime factors so the whole window costs one pass.
    """
    h_lo = _half_sqrt_ceil(k)
    h_hi = 3 * k // 20
    if k + h_hi > tables.bound:
        raise ValueError(f"window for k={k} exceeds table bound")
    failing = []
    best = 0
    for i in range(1, h_lo):
        p = tables.largest_prime_factor(k + i)
        if p > best:
            best = p
    for h in range(h_lo, h_hi + 1):
        # extend the running max of lpf(k+i), i <= h, one step per h
        p = tables.largest_prime_factor(k + h)
        if p > best:
            best = p
        if best < 3 * h:
            failing.append(h)
    return failing


def gap_exception_rows(ks: list[int], tables: PrimeTables) -> list[tuple[int, int, int, int]]:
    """CSV-friendly (k, next_prime, gap, window) rows for exception reports."""
    rows = []
    for k in ks:
        np_ = tables.next_prime(k)
        rows.append((k, np_, np_ - k, math.isqrt(k) // 2))
    return rows


# ---------------------------------------------------------------------------
# exact combinatorial oracles


def check_factorial_bound(x: int, y: int) -> bool:
    """(x+y)!(x-y)! <= x!^2 (e^2/2pi) min(e^((x+y)/(x-y) y^2/x), e^(2y^2/x)).

    Left side exact; right side in 60-digit precision with a one-sided 1e-9
    relative guard band (the single floating comparison in the package).
    """
    if not (0 <= y <= x):
        raise ValueError(f"need 0 <= y <= x, got x={x} y={y}")
    if x > 300:
        raise ValueError("oracle is calibrated for x <= 300")
    if x == 0:
        return True  # 1 <= e^2/2pi
    import mpmath

    with mpmath.workdps(60):
        expo2 = mpmath.mpf(2 * y * y) / x
        if y == x:
            expo = expo2
        else:
            expo1 = mpmath.mpf(x + y) / (x - y) * y * y / x
            expo = min(expo1, expo2)
        coef = mpmath.e**2 / (2 * mpmath.pi) * mpmath.exp(expo)
        lhs = mpmath.mpf(math.factorial(x + y) * math.factorial(x - y))
        rhs = mpmath.mpf(math.factorial(x)) ** 2 * coef
        return bool(lhs <= rhs * (1 + mpmath.mpf("1e-9")))


def check_factorial_divides(parts: Parts, box: tuple[int, int], tables: PrimeTables) -> bool:
    """(2h - n)! divides the hook product, h the hook of an off-corner box
    with 2h >= n."""
    parts = as_partition(parts)
    if box == (1, 1):
        raise ValueError("box must not be the corner")
    h = hook_length(parts, box[0], box[1])
    n = weight(parts)
    if 2 * h < n:
        raise ValueError(f"box hook {h} too small for weight {n}")
    return factorial_factored(2 * h - n, tables).divides(
        hook_product_factored(parts, tables)
    )


def check_product_bound(n_val: int, cs: tuple[int, ...]) -> bool:
    """prod(N-j+c_j) * (N - sum c) <= N * prod(N-j), exact."""
    s = len(cs)
    if s < 1 or any(c < 1 for c in cs):
        raise ValueError("need a nonempty tuple of positive c_j")
    if sum(cs) >= n_val:
        raise ValueError("need sum(c) < N")
    if any(n_val - j + c < 1 for j, c in enumerate(cs, start=1)):
        raise ValueError("factors must stay positive")
    lhs = math.prod(n_val - j + c for j, c in enumerate(cs, start=1))
    rhs = math.prod(n_val - j for j in range(1, s + 1))
    return lhs * (n_val - sum(cs)) <= n_val * rhs


def check_insertion_bound(a_arm: int, b_leg: int, tau: Parts) -> bool:
    """Insert tau below the first row of the hook (A+1, 1^B); exact check
    Pi(mu) (A+1-t)(B+1-t) <= Pi(hook) Pi(tau) (A+1)(B+1)."""
    tau = as_partition(tau)
    t = weight(tau)
    if tau and tau[0] > a_arm:
        raise ValueError("tau too wide")
    if len(tau) > b_leg:
        raise ValueError("tau too tall")
    if t >= min(a_arm + 1, b_leg + 1):
        raise ValueError("tau too heavy for the bound to make sense")
    lam = (a_arm + 1,) + (1,) * b_leg
    mu = (a_arm + 1,) + tuple(1 + x for x in tau) + (1,) * (b_leg - len(tau))
    lhs = hook_product(mu) * (a_arm + 1 - t) * (b_leg + 1 - t)
    rhs = hook_product(lam) * hook_product(tau) * (a_arm + 1) * (b_leg + 1)
    return lhs <= rhs


def check_two_row_bound(a_arm: int, b_second: int, tau: Parts) -> bool:
    """Stack tau under (A+1, B); exact check
    Pi(mu) (A+3-t)(B+1-t) <= Pi((A+1,B)) Pi(tau) (A+3)(B+1)."""
    tau = as_partition(tau)
    t = weight(tau)
    if not (1 <= b_second <= a_arm + 1):
        raise ValueError("need 1 <= B <= A+1")
    if tau and tau[0] > b_second:
        raise ValueError("tau too wide")
    if t >= min(a_arm + 3, b_second + 1):
        raise ValueError("tau too heavy for the bound to make sense")
    lam = (a_arm + 1, b_second)
    mu = as_partition(lam + tau)  # raises if not weakly decreasing
    lhs = hook_product(mu) * (a_arm + 3 - t) * (b_second + 1 - t)
    rhs = hook_product(lam) * hook_product(tau) * (a_arm + 3) * (b_second + 1)
    return lhs <= rhs
