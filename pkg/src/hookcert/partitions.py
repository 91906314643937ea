"""Integer partitions as Young diagrams, with hook-length machinery.

A partition is a weakly decreasing tuple of positive ints, matrix convention:
row 1 on top, row i has length lam[i-1], column j of the diagram has length
conjugate(lam)[j-1].  The empty partition is ().
"""

from __future__ import annotations

import math
from typing import Iterable, Literal

Parts = tuple[int, ...]
Parity = Literal["odd", "even"]


def as_partition(parts: Iterable[int]) -> Parts:
    """Validate and normalize to a partition tuple.

    Raises ValueError unless the parts are positive and weakly decreasing.
    """
    out = tuple(int(x) for x in parts)
    for i, x in enumerate(out):
        if x < 1:
            raise ValueError(f"parts must be positive, got {x} at index {i}")
        if i and out[i - 1] < x:
            raise ValueError(f"parts must be weakly decreasing, got {out}")
    return out


def weight(parts: Parts) -> int:
    return sum(parts)


def conjugate(parts: Parts) -> Parts:
    """Transpose of the diagram: conjugate(lam)[j] = #{i : lam[i] > j}."""
    if not parts:
        return ()
    out = []
    rows = len(parts)
    for j in range(parts[0]):
        while parts[rows - 1] <= j:
            rows -= 1
        out.append(rows)
    return tuple(out)


def contains(outer: Parts, inner: Parts) -> bool:
    """True iff the diagram of `inner` sits inside the diagram of `outer`."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def hook_length(parts: Parts, row: int, col: int) -> int:
    """Hook length of box (row, col), 1-based: arm + leg + 1."""
    if not (1 <= row <= len(parts)) or not (1 <= col <= parts[row - 1]):
        raise ValueError(f"box ({row},{col}) not in partition {list(parts)}")
    arm = parts[row - 1] - col
    leg = sum(1 for x in parts[row:] if x >= col) # rows below with a box in col
    return arm + leg + 1


def hook_lengths(parts: Parts) -> list[int]:
    """All hook lengths, row by row.  len == weight(parts)."""
    conj = conjugate(parts)
    out = []
    for i, row_len in enumerate(parts, start=1):
        for j in range(1, row_len + 1):
            out.append(row_len - j + conj[j - 1] - i + 1)
    return out


def hook_product(parts: Parts) -> int:
    """Product of all hook lengths, as a plain int.

    Kept independent of the factored-arithmetic route on purpose: the two
    implementations cross-check each other in the tests.
    """
    return math.prod(hook_lengths(parts))


def is_self_conjugate(parts: Parts) -> bool:
    return parts == conjugate(parts)


def witness_partition(k: int, parity: Parity) -> Parts:
    """The self-conjugate near-hook shapes whose hook products are scanned for.

    odd  k: (k+1, 1^k)       with 2k+1 boxes
    even k: (k+1, 2, 1^(k-1)) with 2k+2 boxes
    Both are fixed by conjugation; k >= 1 (odd kind) or k >= 2 (even kind).
    """
    if parity == "odd":
        if k < 1:
            raise ValueError("odd-kind witness needs k >= 1")
        return (k + 1,) + (1,) * k
    if parity == "even":
        if k < 2:
            raise ValueError("even-kind witness needs k >= 2")
        return (k + 1, 2) + (1,) * (k - 1)
    raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")


def witness_weight(k: int, parity: Parity) -> int:
    return 2 * k + 1 if parity == "odd" else 2 * k + 2


def format_partition(parts: Parts) -> str:
    """Canonical textual form, e.g. "[3,1,1]"."""
    return "[" + ",".join(str(x) for x in parts) + "]"


def parse_partition(text: str) -> Parts:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"expected bracketed partition, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    return as_partition(int(tok) for tok in body.split(","))
