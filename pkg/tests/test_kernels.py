import os
import random
import subprocess
import sys

import numpy as np
import pytest

from hookcert import kernels
from hookcert.enumeration import iter_partitions, iter_partitions_between
from hookcert.factored import hook_product_factored, targets
from hookcert.partitions import weight

IMPLS = kernels.available_impls()


def _target_for(n, tables):
    if n % 2 == 1:
        k = (n - 1) // 2
        return targets(k, "odd", tables) if k >= 1 else None
    k = (n - 2) // 2
    return targets(k, "even", tables) if k >= 2 else None


def test_python_impl_always_available():
    assert "python" in IMPLS


@pytest.mark.parametrize("name", sorted(IMPLS))
def test_full_scan_agrees_with_factored_route(name, tables):
    impl = IMPLS[name]
    for n in range(5, 23):
        tset = _target_for(n, tables)
        unit = tset.unit_exponents(n)
        matches, _ = kernels.scan_full(n, tables.spf, unit, impl=impl)
        want = {
            parts
            for parts in iter_partitions(n)
            if tset.matches(hook_product_factored(parts, tables))
        }
        assert set(matches) == want
        assert len(matches) == len(set(matches))


def test_impls_agree_on_full_scans(tables):
    if len(IMPLS) < 2:
        pytest.skip("single implementation build")
    for n in range(3, 31):
        tset = _target_for(n, tables)
        unit = tset.unit_exponents(n) if tset else None
        results = {
            name: kernels.scan_full(n, tables.spf, unit, impl=impl)
            for name, impl in IMPLS.items()
        }
        match_sets = {name: sorted(r[0]) for name, r in results.items()}
        first = next(iter(match_sets.values()))
        assert all(m == first for m in match_sets.values())
        if unit is None:
            counts = {r[1] for r in results.values()}
            assert len(counts) == 1  # count-only mode is exact on every core


def _random_window(rng, n_max):
    m = rng.randint(1, n_max - 1)
    lower = []
    while sum(lower) < m:
        lower.append(rng.randint(1, m - sum(lower)))
    lower = tuple(sorted(lower, reverse=True))
    upper = tuple(a + rng.randint(0, 4) for a in lower) + tuple(
        rng.randint(1, 4) for _ in range(rng.randint(0, 3))
    )
    upper = tuple(sorted(upper, reverse=True))
    n = rng.randint(weight(lower), min(weight(upper), n_max))
    return n, lower, upper


def test_windowed_scan_agreement_and_counts(tables):
    rng = random.Random(31)
    for _ in range(200):
        n, lower, upper = _random_window(rng, 24)
        tset = _target_for(n, tables)
        unit = tset.unit_exponents(n) if tset else None
        in_window = list(iter_partitions_between(n, lower, upper))
        per_impl = {}
        for name, impl in IMPLS.items():
            matches, examined = kernels.scan_window(
                n, lower, upper, tables.spf, unit, impl=impl
            )
            per_impl[name] = sorted(matches)
            if unit is None:
                assert examined == len(in_window)
        values = list(per_impl.values())
        assert all(v == values[0] for v in values)
        if unit is not None:
            want = sorted(
                parts
                for parts in in_window
                if tset.matches(hook_product_factored(parts, tables))
            )
            assert values[0] == want


def test_scan_window_validates_inputs(tables):
    with pytest.raises(ValueError):
        kernels.scan_window(5, (3, 1), (2, 2), tables.spf, None)
    with pytest.raises(ValueError):
        kernels.scan_window(9, (1,), (2, 2), tables.spf, None)
    with pytest.raises(ValueError):
        kernels.scan_window(5, (1,), (5, 5), tables.spf, np.zeros(3, dtype=np.int32))


def test_overlong_unit_array_with_high_prime_short_circuits(tables):
    exps = np.zeros(12, dtype=np.int32)
    exps[11] = 1  # a prime larger than the weight divides the target
    matches, examined = kernels.scan_full(5, tables.spf, exps)
    assert matches == [] and examined == 0


def test_pure_env_forces_python_impl():
    env = dict(os.environ, **{kernels.PURE_ENV: "1"})
    out = subprocess.run(
        [sys.executable, "-c", "import hookcert.kernels as k; print(k.IMPL_NAME)"],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    assert out.stdout.strip() == "python"
