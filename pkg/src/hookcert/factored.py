"""Exact arithmetic on prime-factored integers.

Hook products and factorials in the verified ranges overflow anything fixed
width and are wasteful even as bigints; every comparison we need is
exponentwise.  A FactoredInteger is just the exponent map, and division
refuses to produce anything non-integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .partitions import Parts, conjugate, hook_lengths, is_self_conjugate, weight
from .primes import PrimeTables


class FactoredInteger:
    """A positive integer as {prime: exponent}.  Immutable by convention."""

    __slots__ = ("_e",)

    def __init__(self, exps: dict[int, int] | None = None):
        e = {}
        for p, m in (exps or {}).items():
            if m < 0:
                raise ValueError(f"negative exponent {m} for prime {p}")
            if m > 0:
                if p < 2:
                    raise ValueError(f"bad prime {p}")
                e[p] = m
        self._e = e

    @classmethod
    def one(cls) -> "FactoredInteger":
        return cls()

    def exponent(self, p: int) -> int:
        return self._e.get(p, 0)

    def factors(self) -> dict[int, int]:
        return dict(self._e)

    def __mul__(self, other: "FactoredInteger") -> "FactoredInteger":
        e = dict(self._e)
        for p, m in other._e.items():
            e[p] = e.get(p, 0) + m
        return FactoredInteger(e)

    def pow(self, m: int) -> "FactoredInteger":
        if m < 0:
            raise ValueError("negative power")
        return FactoredInteger({p: e * m for p, e in self._e.items()})

    def divides(self, other: "FactoredInteger") -> bool:
        return all(other._e.get(p, 0) >= m for p, m in self._e.items())

    def exact_div(self, other: "FactoredInteger") -> "FactoredInteger":
        """self / other; raises ValueError when the quotient is not integral."""
        e = dict(self._e)
        for p, m in other._e.items():
            left = e.get(p, 0) - m
            if left < 0:
                raise ValueError(
                    f"not divisible: prime {p} has exponent {e.get(p, 0)} < {m}"
                )
            e[p] = left
        return FactoredInteger(e)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FactoredInteger) and self._e == other._e

    def __hash__(self) -> int:
        return hash(frozenset(self._e.items()))

    def value(self) -> int:
        out = 1
        for p, m in self._e.items():
            out *= p**m
        return out

    def format(self) -> str:
        """Ascending primes joined with middle dots, e.g. "2^2·5"."""
        if not self._e:
            return "1"
        bits = []
        for p in sorted(self._e):
            m = self._e[p]
            bits.append(f"{p}^{m}" if m > 1 else f"{p}")
        return "·".join(bits)

    def __repr__(self) -> str:
        return f"FactoredInteger({self.format()})"


def factor_small(m: int, tables: PrimeTables) -> FactoredInteger:
    """Factor 1 <= m <= tables.bound."""
    return FactoredInteger(tables.factor(m))


def factorial_factored(m: int, tables: PrimeTables) -> FactoredInteger:
    """m! by Legendre's formula: v_p(m!) = sum_i floor(m / p^i)."""
    if m < 0:
        raise ValueError(f"factorial of {m}")
    if m > tables.bound:
        raise ValueError(f"{m}! needs primes beyond table bound {tables.bound}")
    e = {}
    for p in tables.primes_in(2, m):
        s = 0
        pk = p
        while pk <= m:
            s += m // pk
            pk *= p
        e[p] = s
    return FactoredInteger(e)


def hook_product_factored(parts: Parts, tables: PrimeTables) -> FactoredInteger:
    e: dict[int, int] = {}
    for h in hook_lengths(parts):
        for p, m in tables.factor(h).items():
            e[p] = e.get(p, 0) + m
    return FactoredInteger(e)


@dataclass(frozen=True)
class TargetSet:
    """The hook products a scan accepts: unit, unit/2 (when integral), 2*unit.

    A candidate matches iff its odd-prime exponents equal the unit's and its
    exponent of 2 is within 1 of the unit's.  (unit/2 with v_2(unit) = 0 cannot
    occur in a match since exponents are nonnegative.)
    """

    k: int
    parity: Literal["odd", "even"]
    n: int
    unit: FactoredInteger
    half: FactoredInteger | None
    double: FactoredInteger

    def matches(self, f: FactoredInteger) -> bool:
        u = self.unit.factors()
        got = f.factors()
        if abs(got.get(2, 0) - u.get(2, 0)) > 1:
            return False
        u.pop(2, None)
        got.pop(2, None)
        return u == got

    def which(self, f: FactoredInteger) -> str | None:
        if f == self.unit:
            return "unit"
        if self.half is not None and f == self.half:
            return "half"
        if f == self.double:
            return "double"
        return None

    def exponent_caps(self, n: int) -> "np.ndarray":
        """int32 caps indexed by prime p <= n: unit exponent, +1 for p = 2.

        The scan kernels abort a candidate as soon as any running exponent
        exceeds its cap.
        """
        import numpy as np

        caps = np.zeros(n + 1, dtype=np.int32)
        for p, m in self.unit.factors().items():
            if p <= n:
                caps[p] = m
        caps[2] += 1
        return caps

    def unit_exponents(self, n: int) -> "np.ndarray":
        import numpy as np

        out = np.zeros(n + 1, dtype=np.int32)
        for p, m in self.unit.factors().items():
            if p <= n:
                out[p] = m
        return out


def targets(k: int, parity: Literal["odd", "even"], tables: PrimeTables) -> TargetSet:
    """Hook-product targets for the weight-n witness, n = 2k+1 or 2k+2.

    odd  kind: unit = (2k+1) * (k!)^2
    even kind: unit = (2k+1) * (k+1)^2 * ((k-1)!)^2
    """
    if parity == "odd":
        if k < 1:
            raise ValueError("odd kind needs k >= 1")
        n = 2 * k + 1
        unit = factor_small(2 * k + 1, tables) * factorial_factored(k, tables).pow(2)
    elif parity == "even":
        if k < 2:
            raise ValueError("even kind needs k >= 2")
        n = 2 * k + 2
        unit = (
            factor_small(2 * k + 1, tables)
            * factor_small(k + 1, tables).pow(2)
            * factorial_factored(k - 1, tables).pow(2)
        )
    else:
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    two = FactoredInteger({2: 1})
    half = unit.exact_div(two) if unit.exponent(2) >= 1 else None
    return TargetSet(k=k, parity=parity, n=n, unit=unit, half=half, double=unit * two)


@dataclass(frozen=True)
class Dimension:
    """An irreducible character degree together with its multiplicity.

    multiplicity 2 marks the self-conjugate split on the index-2 subgroup:
    the one shape contributes two distinct irreducibles of this dimension.
    """

    value: FactoredInteger
    multiplicity: int


def dimension(parts: Parts, group: Literal["S", "A"], tables: PrimeTables) -> Dimension:
    """Degree of the irreducible labelled by `parts`, exact.

    group "S": n! / hookprod.  group "A": restriction rule, with conjugate
    pairs sharing one degree and self-conjugate shapes splitting in half.
    """
    n = weight(parts)
    if n == 0:
        raise ValueError("empty partition has no irreducible")
    base = factorial_factored(n, tables).exact_div(hook_product_factored(parts, tables))
    if group == "S":
        return Dimension(base, 1)
    if group == "A":
        if is_self_conjugate(parts):
            return Dimension(base.exact_div(FactoredInteger({2: 1})), 2)
        return Dimension(base, 1)
    raise ValueError(f"group must be 'S' or 'A', got {group!r}")


def conjugate_orbit(parts: Parts) -> tuple[Parts, ...]:
    """The conjugation orbit {parts, parts*}, deduplicated."""
    c = conjugate(parts)
    return (parts,) if c == parts else (parts, c)
