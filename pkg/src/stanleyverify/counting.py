"""Exact values of the partition function P(n).

Two unrelated algorithms live here.  :func:`build_count_table` uses Euler's
pentagonal number recurrence and is what everything else consumes;
:func:`pfunc_oracle` is a plain dynamic program over the largest allowed
part and exists only to cross-check the table.

Counts are Python ints throughout, so nothing ever overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import CountRangeError, ParameterError, TableLimitError

# Counts are plain ints; the alias documents intent at call sites.
BigCount = int

#: Largest table :func:`build_count_table` agrees to build.  The recurrence is
#: O(n**1.5) big-int additions, so 20k is a few seconds and anything far past
#: it is almost certainly a typo.
MAX_TABLE_SIZE = 20_000


@dataclass(frozen=True)
class CountTable:
    """Immutable table of P(0), ..., P(max_n)."""

    values: tuple[BigCount, ...]

    def __post_init__(self) -> None:
        if not self.values or self.values[0] != 1:
            raise ValueError("a count table must start with P(0) = 1")

    @property
    def max_n(self) -> int:
        return len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[BigCount]:
        return iter(self.values)

    def __getitem__(self, n: int) -> BigCount:
        return self.p(n)

    def p(self, m: int) -> BigCount:
        """P(m), with P(m) = 0 for every negative m.

        Raises :class:`CountRangeError` when ``m`` exceeds ``max_n`` rather
        than guessing.
        """
        if m < 0:
            return 0
        if m > self.max_n:
            raise CountRangeError(f"P({m}) requested but table only covers 0..{self.max_n}")
        return self.values[m]

    def require(self, m: int) -> None:
        if m > self.max_n:
            raise CountRangeError(f"table covers 0..{self.max_n}, need {m}")


def _pentagonal_offsets(limit: int) -> list[tuple[int, int]]:
    """(generalised pentagonal number, sign) pairs not exceeding ``limit``."""
    out = []
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        if g1 > limit:
            break
        sign = 1 if j % 2 else -1
        out.append((g1, sign))
        g2 = g1 + j  # j(3j+1)/2
        if g2 <= limit:
            out.append((g2, sign))
        j += 1
    return out


def build_count_table(max_n: int) -> CountTable:
    """Build P(0..max_n) with the pentagonal number recurrence.

    P(n) = sum_{j>=1} (-1)^(j+1) [P(n - j(3j-1)/2) + P(n - j(3j+1)/2)],
    dropping terms whose argument is negative.
    """
    if max_n < 0:
        raise ParameterError(f"max_n must be >= 0, got {max_n}")
    if max_n > MAX_TABLE_SIZE:
        raise TableLimitError(
            f"refusing to build a count table of size {max_n} (cap is {MAX_TABLE_SIZE})"
        )
    offsets = _pentagonal_offsets(max_n)
    p = [0] * (max_n + 1)
    p[0] = 1
    for n in range(1, max_n + 1):
        total = 0
        for g, sign in offsets:
            if g > n:
                break
            if sign > 0:
                total += p[n - g]
            else:
                total -= p[n - g]
        p[n] = total
    return CountTable(tuple(p))


def pfunc_oracle(n: int) -> BigCount:
    """P(n) by counting partitions of m into parts <= p, for p = 1..n.

    This is the coin-change table D[p][m] kept one row at a time.  It shares
    nothing with the recurrence above and is quadratic, so use it for checks
    only.
    """
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    row = [1] + [0] * n  # D[0][m]: only m = 0 is reachable with no parts
    for part in range(1, n + 1):
        for m in range(part, n + 1):
            row[m] += row[m - part]
    return row[n]
