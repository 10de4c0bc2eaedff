"""Partitions of an integer and a streaming enumerator over them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Iterator

from .errors import ParameterError


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = self.parts
        if not isinstance(parts, tuple):
            object.__setattr__(self, "parts", tuple(parts))
            parts = self.parts
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Build from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def multiplicities(self) -> dict[int, int]:
        """Map part value -> multiplicity, largest part first."""
        return {v: len(list(g)) for v, g in groupby(self.parts)}


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in reverse lexicographic order.

    Starts from ``[n]``; each step strips the trailing 1s, lowers the last
    part above 1 by one and refills greedily with copies of the new value.
    Only the current partition is held in memory.
    """
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    return _revlex(n)


def _revlex(n: int) -> Iterator[Partition]:
    if n == 0:
        yield Partition(())
        return
    a = [n]
    while True:
        yield Partition(tuple(a))
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        x = a.pop() - 1
        a.append(x)
        rem = ones + 1
        while rem >= x:
            a.append(x)
            rem -= x
        if rem:
            a.append(rem)


def count_occurrences(p: Partition, k: int) -> int:
    """Multiplicity of the part value ``k`` in ``p``."""
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    return p.parts.count(k)


def count_distinct(p: Partition) -> int:
    """Number of distinct part values in ``p``."""
    return len(set(p.parts))
