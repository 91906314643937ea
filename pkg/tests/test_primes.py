import random

import pytest

from hookcert.primes import DEFAULT_BOUND, PrimeTables, auxiliary_primes, get_tables

# pi(10^k) from standard tables
PI_KNOWN = {10: 4, 100: 25, 1_000: 168, 10_000: 1_229, 1_000_000: 78_498, 2_000_000: 148_933}


def test_pi_known_values(tables):
    for m, count in PI_KNOWN.items():
        assert tables.pi_of(m) == count


def test_primality_matches_trial_division(tables):
    rng = random.Random(7)
    for _ in range(500):
        m = rng.randint(2, 100_000)
        naive = m >= 2 and all(m % d for d in range(2, int(m**0.5) + 1))
        assert tables.is_prime_int(m) == naive


def test_spf_is_the_smallest_prime_factor(tables):
    rng = random.Random(8)
    for _ in range(300):
        m = rng.randint(2, 2_000_000)
        f = tables.factor(m)
        assert all(tables.is_prime_int(p) for p in f)
        prod = 1
        for p, e in f.items():
            assert e >= 1
            prod *= p**e
        assert prod == m
        smallest = min(f)
        assert all(m % d for d in range(2, smallest))
        assert tables.largest_prime_factor(m) == max(f)


def test_prev_next_prime(tables):
    assert tables.prev_prime(2) == 2
    assert tables.prev_prime(10) == 7
    assert tables.prev_prime(31) == 31
    assert tables.next_prime(30) == 31
    assert tables.next_prime(31) == 37  # strictly greater
    with pytest.raises(ValueError):
        tables.prev_prime(1)


def test_primes_in_inclusive(tables):
    assert tables.primes_in(10, 20) == [11, 13, 17, 19]
    assert tables.primes_in(23, 23) == [23]
    assert tables.primes_in(24, 28) == []


def test_get_tables_grows_only():
    t = get_tables()
    assert t.bound >= DEFAULT_BOUND
    assert get_tables(100) is t  # smaller request reuses the cache


def test_small_dedicated_tables():
    t = PrimeTables(1000)
    assert t.pi_of(1000) == 168
    with pytest.raises(ValueError):
        t.is_prime_int(1001)


@pytest.mark.parametrize(
    "k,parity,p,q,r",
    [
        (35, "odd", 31, 29, 17),  # 2r=34 beats p
        (36, "even", 37, 31, 17),  # k+1 prime takes the p slot
        (40, "odd", 37, 31, 19),
        (58, "even", 59, 53, 23),
        (41, "even", 37, 31, 19),  # k+1=42 composite, so p drops to prev_prime(40)
        (117, "odd", 113, 109, 53),  # 2r=106 below q: no substitution possible
    ],
)
def test_auxiliary_prime_choices(tables, k, parity, p, q, r):
    aux = auxiliary_primes(k, parity, tables)
    assert (aux.p, aux.q, aux.r) == (p, q, r)
    assert aux.n == (2 * k + 1 if parity == "odd" else 2 * k + 2)


def test_auxiliary_r_usability(tables):
    # the in-band stragglers whose r fails an interval check
    assert not auxiliary_primes(40, "odd", tables).r_usable
    assert not auxiliary_primes(57, "odd", tables).r_usable
    assert not auxiliary_primes(58, "even", tables).r_usable
    assert auxiliary_primes(35, "odd", tables).r_usable
    assert auxiliary_primes(117, "odd", tables).r_usable


def test_auxiliary_primes_rejects_small_k(tables):
    with pytest.raises(ValueError):
        auxiliary_primes(34, "odd", tables)


def test_auxiliary_divisibility_contract(tables):
    # p^2 q^2 r^4 must divide the scan target whenever r is usable
    import math

    for k in (35, 44, 61, 90, 117):
        for parity in ("odd", "even"):
            aux = auxiliary_primes(k, parity, tables)
            if parity == "odd":
                target = (2 * k + 1) * math.factorial(k) ** 2
            else:
                target = (2 * k + 1) * (k + 1) ** 2 * math.factorial(k - 1) ** 2
            assert target % (aux.p**2 * aux.q**2) == 0
            if aux.r_usable:
                assert target % aux.r**4 == 0
