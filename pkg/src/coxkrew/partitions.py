"""Partitions, bipartitions and the statistics the Kreweras formulas consume."""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

__all__ = [
    "Partition",
    "Bipartition",
    "PairStats",
    "conjugate",
    "weighted_size",
    "c_stat",
    "pair_stats",
    "enumerate_partitions",
    "enumerate_bipartitions",
    "parse_partition",
    "parse_bipartition",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction; anything else that is not a
    partition raises ``ValueError``.

    >>> Partition([2, 1, 0])
    Partition((2, 1))
    >>> str(Partition([3, 1, 1]))
    '(3,1,1)'
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-indexed part, zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def multiplicity(self, r: int) -> int:
        return self.count(r)

    def multiplicities(self) -> dict[int, int]:
        """``{r: m(r)}`` over the distinct parts, largest first."""
        return dict(sorted(Counter(self).items(), reverse=True))

    def tail(self, k: int) -> "Partition":
        """``(lambda_k, lambda_{k+1}, ...)``."""
        return Partition(self[k - 1:])

    def __add__(self, other):
        # pointwise sum, padding the shorter with zeros
        n = max(len(self), len(other))
        return Partition(self.part(i) + Partition.part(other, i) for i in range(1, n + 1))

    def union(self, other: "Partition") -> "Partition":
        return Partition(sorted(tuple(self) + tuple(other), reverse=True))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


@dataclass(frozen=True, order=True)
class Bipartition:
    """A pair ``(mu, nu)`` of partitions; its size is ``|mu| + |nu|``."""

    mu: Partition
    nu: Partition

    def __post_init__(self):
        object.__setattr__(self, "mu", Partition(self.mu))
        object.__setattr__(self, "nu", Partition(self.nu))

    @property
    def size(self) -> int:
        return self.mu.size + self.nu.size

    def interleaved(self, length: int | None = None) -> list[int]:
        """The quasi-partition ``(mu_1, nu_1, mu_2, nu_2, ...)`` padded with zeros.

        Default length ``l(mu) + l(nu) + 2`` (rounded up to even) leaves at least
        one zero pair at the end.
        """
        if length is None:
            length = 2 * (max(len(self.mu), len(self.nu)) + 1)
        out = []
        for i in range(1, length // 2 + 2):
            out += [self.mu.part(i), self.nu.part(i)]
        return out[:length]

    def __str__(self) -> str:
        return f"({self.mu},{self.nu})"


# -- statistics on a single partition -------------------------------------------------

def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram.

    >>> conjugate(Partition([3]))
    Partition((1, 1, 1))
    """
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def weighted_size(lam: Partition) -> int:
    """``z(lambda) = sum (i-1) lambda_i``, cross-checked against the column form.

    >>> weighted_size(Partition([2, 2, 1]))
    4
    """
    lam = Partition(lam)
    by_rows = sum(i * p for i, p in enumerate(lam))
    by_cols = sum(c * (c - 1) // 2 for c in conjugate(lam))
    assert by_rows == by_cols, (lam, by_rows, by_cols)
    return by_rows


def c_stat(lam: Partition) -> int:
    """``c(lambda) = sum lambda^T_i lambda^T_{i+1}``.

    >>> c_stat(Partition([2, 1])), c_stat(Partition([1, 1, 1])), c_stat(Partition([3]))
    (2, 0, 2)
    """
    t = conjugate(lam)
    return sum(a * b for a, b in zip(t, t[1:]))


# -- bipartition statistics -------------------------------------------------------------

@dataclass(frozen=True)
class PairStats:
    """Statistics of a bipartition used by the type BC formulas.

    ``m`` maps each positive value r of ``(mu+nu) u (mu_{>=2}+nu)`` to
    ``m_{mu,nu}(r)``; ``hm_case`` maps the same values to 1, 2 or 3 according to
    the parities of the first and last index i with ``a_i + a_{i+1} = r`` in the
    interleaved sequence (both even, mixed, both odd).
    """

    l: int
    L: int
    z: int
    d: int
    m: dict[int, int] = field(default_factory=dict)
    hm_case: dict[int, int] = field(default_factory=dict)

    def m_total(self) -> int:
        return sum(self.m.values())


@lru_cache(maxsize=None)
def pair_stats(b: Bipartition) -> PairStats:
    mu, nu = b.mu, b.nu
    upper = mu + nu  # mu + nu
    lower = mu.tail(2) + nu  # mu_{>=2} + nu
    l = max(len(mu) - 1, len(nu))
    assert l == len(lower)
    combined = Counter(upper) + Counter(lower)
    m = {r: combined[r] // 2 for r in sorted(combined, reverse=True)}

    a = b.interleaved()
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i in range(1, len(a)):  # 1-indexed i pairs a_i, a_{i+1}
        r = a[i - 1] + a[i]
        if r == 0:
            continue
        first.setdefault(r, i)
        last[r] = i
    assert set(first) == set(combined), (b, first, combined)
    hm_case = {}
    for r in m:
        pi, pj = first[r] % 2, last[r] % 2
        hm_case[r] = 1 if pi == pj == 0 else 3 if pi == pj == 1 else 2

    L = l - sum(m.values())
    L_direct = sum(1 for c in hm_case.values() if c == 1)
    assert L == L_direct, (b, L, L_direct)
    z = 2 * weighted_size(upper) + nu.size
    assert z == 2 * weighted_size(mu) + 2 * weighted_size(nu) + nu.size
    d = sum(v * (v + 1) for v in m.values())
    return PairStats(l=l, L=L, z=z, d=d, m=m, hm_case=hm_case)


# -- enumeration ------------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _partitions(n: int, cap: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order.

    >>> [str(p) for p in enumerate_partitions(3)]
    ['(3)', '(2,1)', '(1,1,1)']
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n if max_part is None else max_part)]


def enumerate_bipartitions(n: int) -> list[Bipartition]:
    """All bipartitions of ``n``, ordered by ``|mu|`` descending then by partition order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Bipartition(mu, nu)
            for k in range(n, -1, -1)
            for mu in enumerate_partitions(k)
            for nu in enumerate_partitions(n - k)]


# -- text form --------------------------------------------------------------------------------

_EMPTY = ("∅", "()", "")


def parse_partition(text: str) -> Partition:
    """Parse ``"(3,2,1)"``, ``"3,2,1"``, ``"()"`` or ``"∅"``."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    if s in _EMPTY:
        return Partition()
    return Partition(int(x) for x in s.split(","))


_BIPART = re.compile(r"^\(\s*(\(.*?\)|∅)\s*,\s*(\(.*?\)|∅)\s*\)$")


def parse_bipartition(text: str) -> Bipartition:
    """Parse ``"((2,1),(1))"``; either side may be ``()`` or ``∅``."""
    m = _BIPART.match(text.strip())
    if not m:
        raise ValueError(f"not a bipartition: {text!r}")
    return Bipartition(parse_partition(m.group(1)), parse_partition(m.group(2)))
