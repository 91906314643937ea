import random

import pytest

from hookcert.enumeration import (
    NAIVE_GUARD,
    iter_partitions,
    iter_partitions_between,
    iter_partitions_with_corner_hook,
    partition_count,
    partition_counts_up_to,
)
from hookcert.partitions import contains, hook_length, weight


def _corner_hook(parts):
    return hook_length(parts, 1, 1)

P_KNOWN = {0: 1, 1: 1, 5: 7, 10: 42, 20: 627, 40: 37_338, 50: 204_226}


def test_partition_count_known_values():
    for n, p in P_KNOWN.items():
        assert partition_count(n) == p


def test_counts_up_to_agrees_with_single():
    counts = partition_counts_up_to(50)
    assert len(counts) == 51
    for n, p in P_KNOWN.items():
        assert counts[n] == p


def test_iter_partitions_exact(tables):
    for n in range(1, 26):
        seen = list(iter_partitions(n))
        assert len(seen) == partition_count(n)
        assert len(set(seen)) == len(seen)
        for parts in seen:
            assert weight(parts) == n
            assert all(a >= b for a, b in zip(parts, parts[1:]))
        # descending lexicographic order, (n,) first and all-ones last
        assert seen[0] == (n,)
        assert seen[-1] == (1,) * n
        assert seen == sorted(seen, reverse=True)


def test_iter_partitions_guard():
    with pytest.raises(ValueError):
        next(iter_partitions(NAIVE_GUARD + 1))
    it = iter_partitions(NAIVE_GUARD + 1, force=True)
    assert next(it) == (NAIVE_GUARD + 1,)


def _random_shape(rng, n_max):
    n = rng.randint(1, n_max)
    parts = []
    while sum(parts) < n:
        parts.append(rng.randint(1, n - sum(parts)))
    return tuple(sorted(parts, reverse=True))


def test_between_matches_brute_filter():
    rng = random.Random(21)
    for _ in range(150):
        lower = _random_shape(rng, 12)
        # grow an upper bound that contains lower
        upper = tuple(a + rng.randint(0, 3) for a in lower) + tuple(
            rng.randint(1, 3) for _ in range(rng.randint(0, 2))
        )
        upper = tuple(sorted(upper, reverse=True))
        n = rng.randint(weight(lower), min(weight(upper), 18))
        got = set(iter_partitions_between(n, lower, upper))
        want = {
            parts
            for parts in iter_partitions(n)
            if contains(parts, lower) and contains(upper, parts)
        }
        assert got == want


def test_between_rejects_infeasible_windows():
    with pytest.raises(ValueError):
        next(iter_partitions_between(3, (2, 2), (2, 2)))  # weight below window
    with pytest.raises(ValueError):
        next(iter_partitions_between(10, (1,), (2, 2)))  # weight above window
    with pytest.raises(ValueError):
        next(iter_partitions_between(4, (3, 1), (2, 2)))  # lower not inside upper


def test_corner_hook_iterator_matches_filter():
    for n in range(4, 21):
        for h in (n, n - 1, n // 2 + 1):
            got = set(iter_partitions_with_corner_hook(n, h))
            want = {
                parts for parts in iter_partitions(n) if _corner_hook(parts) == h
            }
            assert got == want
    # h = n gives exactly the hooks of weight n
    assert len(list(iter_partitions_with_corner_hook(9, 9))) == 9


def test_corner_hook_family_size_at_84():
    # the h=83 family inside n=84: a hook of 83 plus one loose box, 81 ways to
    # slide the loose box plus nothing else
    fam = list(iter_partitions_with_corner_hook(84, 83))
    assert len(fam) == 81
    assert all(weight(parts) == 84 for parts in fam)
    assert all(_corner_hook(parts) == 83 for parts in fam)
    assert (42, 2) + (1,) * 40 in fam
