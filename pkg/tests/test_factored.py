import math
import random

import pytest

from hookcert.factored import (
    FactoredInteger,
    conjugate_orbit,
    dimension,
    factor_small,
    factorial_factored,
    hook_product_factored,
    targets,
)
from hookcert.partitions import conjugate, hook_product, witness_partition


def test_factored_integer_roundtrip_and_ops(tables):
    rng = random.Random(11)
    for _ in range(300):
        a = rng.randint(1, 10**6)
        b = rng.randint(1, 10**6)
        fa = factor_small(a, tables)
        fb = factor_small(b, tables)
        assert fa.value() == a
        assert (fa * fb).value() == a * b
        assert fa.pow(3).value() == a**3
        assert fa.divides(fa * fb)
        assert fb.divides(fa * fb)
        assert (fa * fb).exact_div(fb) == fa
        if a % b:
            assert not fb.divides(fa) or fb.exact_div(fa)  # divides is exact


def test_factored_integer_rejects_bad_input():
    with pytest.raises(ValueError):
        FactoredInteger({1: 1})
    with pytest.raises(ValueError):
        FactoredInteger({3: -1})
    with pytest.raises(ValueError):
        FactoredInteger({2: 1}).exact_div(FactoredInteger({3: 1}))


def test_factored_integer_format():
    assert FactoredInteger().format() == "1"
    assert FactoredInteger({2: 2, 5: 1}).format() == "2^2·5"


def test_factorial_factored_matches_math(tables):
    for m in (0, 1, 2, 7, 25, 100, 300):
        assert factorial_factored(m, tables).value() == math.factorial(m)


def test_hook_product_factored_matches_plain(tables):
    rng = random.Random(12)
    shapes = [(4, 2, 1), (1,), (6, 6, 6), (10, 1, 1, 1)]
    for _ in range(60):
        n = rng.randint(1, 20)
        parts = []
        while sum(parts) < n:
            parts.append(rng.randint(1, n - sum(parts)))
        shapes.append(tuple(sorted(parts, reverse=True)))
    for shape in shapes:
        assert hook_product_factored(shape, tables).value() == hook_product(shape)


def test_targets_unit_is_the_witness_hook_product(tables):
    for k in range(2, 61):
        for parity in ("odd", "even"):
            tset = targets(k, parity, tables)
            w = witness_partition(k, parity)
            assert hook_product_factored(w, tables) == tset.unit
            assert tset.double == tset.unit * FactoredInteger({2: 1})
            if tset.unit.exponent(2) == 0:
                assert tset.half is None
            else:
                assert tset.half * FactoredInteger({2: 1}) == tset.unit


def test_targets_closed_forms(tables):
    # unit values straight from the defining products
    for k in (2, 5, 10, 23):
        odd = targets(k, "odd", tables)
        assert odd.unit.value() == (2 * k + 1) * math.factorial(k) ** 2
        even = targets(k, "even", tables)
        assert even.unit.value() == (2 * k + 1) * (k + 1) ** 2 * math.factorial(k - 1) ** 2


def test_targets_half_missing_when_odd_unit(tables):
    # k=1 odd: witness (2,1) has hook product 3, so half is not integral
    tset = targets(1, "odd", tables)
    assert tset.unit.value() == 3
    assert tset.half is None
    assert tset.double.value() == 6


def test_target_matching_and_which(tables):
    tset = targets(7, "odd", tables)
    for fi, name in ((tset.unit, "unit"), (tset.half, "half"), (tset.double, "double")):
        assert tset.matches(fi)
        assert tset.which(fi) == name
    quad = tset.unit * FactoredInteger({2: 2})
    assert not tset.matches(quad)
    assert tset.which(quad) is None
    off = tset.unit * FactoredInteger({3: 1})
    assert not tset.matches(off)


def test_exponent_caps_allow_one_extra_two(tables):
    tset = targets(9, "even", tables)
    n = tset.n
    unit = tset.unit_exponents(n)
    caps = tset.exponent_caps(n)
    assert caps[2] == unit[2] + 1
    for p in range(3, n + 1):
        assert caps[p] == unit[p]


def test_dimension_known_small_cases(tables):
    # n=5: shape (3,1,1) is self-conjugate, dim 6 in S_5 and two halves of 3 below
    d_s = dimension((3, 1, 1), "S", tables)
    assert d_s.value.value() == 6
    assert d_s.multiplicity == 1
    d_a = dimension((3, 1, 1), "A", tables)
    assert d_a.value.value() == 3
    assert d_a.multiplicity == 2
    # non-self-conjugate shape keeps its dimension on restriction
    d = dimension((4, 1), "A", tables)
    assert d.value.value() == 4
    assert d.multiplicity == 1


def test_dimension_sum_of_squares_is_factorial(tables):
    from hookcert.enumeration import iter_partitions

    for n in (4, 6, 9):
        total = sum(
            dimension(parts, "S", tables).value.value() ** 2
            for parts in iter_partitions(n)
        )
        assert total == math.factorial(n)


def test_conjugate_orbit():
    assert conjugate_orbit((3, 1, 1)) == ((3, 1, 1),)
    orbit = conjugate_orbit((4, 1))
    assert set(orbit) == {(4, 1), (2, 1, 1, 1)}
    assert len(orbit) == 2
    for parts in orbit:
        assert conjugate(parts) in orbit
