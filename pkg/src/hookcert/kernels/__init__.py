"""Scan-core selection: compiled extension when built, pure Python otherwise.

Set HOOKCERT_PURE=1 to force the fallback (the benchmark and the agreement
tests load both implementations explicitly regardless of the default).
"""

from __future__ import annotations

import os

import numpy as np

from ..partitions import as_partition, contains, weight

PURE_ENV = "HOOKCERT_PURE"


def _select():
    if os.environ.get(PURE_ENV, "") not in ("", "0"):
        from . import _scan_py

        return _scan_py
    try:
        from . import _scan_c  # type: ignore[attr-defined]

        return _scan_c
    except ImportError:
        from . import _scan_py

        return _scan_py


_impl = _select()
IMPL_NAME: str = _impl.IMPL_NAME


def available_impls() -> dict:
    """Importable scan cores by name; 'c' is absent when the ext never built."""
    from . import _scan_py

    out = {"python": _scan_py}
    try:
        from . import _scan_c  # type: ignore[attr-defined]

        out["c"] = _scan_c
    except ImportError:
        pass
    return out


def scan_window(n, lower, upper, spf, unit_exps=None, impl=None):
    """Scan partitions of n inside [lower, upper] for target hook products.

    Returns (matches, examined).  matches agree across cores; examined is a
    per-core work counter, except with unit_exps None (count-only) where both
    cores report the exact number of partitions in the window.  `impl` picks
    an explicit core from available_impls(); default is the selected one.
    """
    lower = as_partition(lower)
    upper = as_partition(upper)
    if not contains(upper, lower):
        raise ValueError(f"window lower {list(lower)} not inside upper {list(upper)}")
    if not (weight(lower) <= n <= weight(upper)):
        raise ValueError(f"weight {n} outside [{weight(lower)}, {weight(upper)}]")
    if unit_exps is not None:
        arr = np.asarray(unit_exps, dtype=np.int32)
        if arr.ndim != 1 or arr.shape[0] < n + 1:
            raise ValueError("unit exponent array must cover every prime up to n")
        if arr.shape[0] > n + 1 and arr[n + 1 :].any():
            # a prime above the weight divides the target; no hook product can
            return [], 0
        size = max(n, 2) + 1
        if arr.shape[0] >= size:
            arr = np.ascontiguousarray(arr[:size])
        else:
            arr = np.concatenate([arr, np.zeros(size - arr.shape[0], dtype=np.int32)])
        unit_exps = arr
    mod = _impl if impl is None else impl
    return mod.scan_bounded(n, lower, upper, spf, unit_exps)


def scan_full(n, spf, unit_exps=None, impl=None):
    """Unconstrained scan over every partition of n."""
    return scan_window(n, (), (n,) * n, spf, unit_exps, impl=impl)
