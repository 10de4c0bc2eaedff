"""Tilings of a one-row infinite board by stacks of black squares.

A tiling records, for each occupied position, how many black squares are
stacked there.  White squares carry no information and are not stored.  A
black square at position i has measure q**i, so the measure of a whole tiling
is q raised to ``sum(position * height)``; only that exponent is tracked.

Reading stack positions as part values and heights as multiplicities turns a
tiling into a partition whose weight is the measure exponent, and back.

The three pairs of maps below move squares between two positions.  Each map
is parametrised explicitly and checks that its input lies in its domain.

=====  ==========================================  =================
map    action                                      exponent change
=====  ==========================================  =================
T      k-i squares off position r, r onto k        +i*r
S      r squares off position k, k-i onto r        -i*r
Q      i squares off position r, r onto i          0
Z      r squares off position i, i onto r          0
F      1 square off position r, j onto k           +k*j - r
G      j squares off position k, 1 onto r          -(k*j - r)
=====  ==========================================  =================
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import DomainError, ParameterError
from .partitions import Partition


@dataclass(frozen=True)
class Tiling:
    """Immutable map position -> stack height, stored largest position first."""

    stacks: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_mapping(cls, stacks: Mapping[int, int]) -> "Tiling":
        items = []
        for pos, height in stacks.items():
            if pos < 1:
                raise ParameterError(f"positions start at 1, got {pos}")
            if height < 0:
                raise ParameterError(f"negative stack height {height} at {pos}")
            if height:
                items.append((pos, height))
        return cls(tuple(sorted(items, reverse=True)))

    def height(self, pos: int) -> int:
        for p, h in self.stacks:
            if p == pos:
                return h
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.stacks)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{p}:{h}" for p, h in self.stacks) + "}"


def tiling_from_partition(p: Partition) -> Tiling:
    return Tiling(tuple(p.multiplicities().items()))


def partition_from_tiling(t: Tiling) -> Partition:
    parts: list[int] = []
    for pos, height in t.stacks:
        parts.extend([pos] * height)
    return Partition(tuple(parts))


def measure_exponent(t: Tiling) -> int:
    """Exponent of q in the measure of ``t``."""
    return sum(pos * height for pos, height in t.stacks)


def _move(t: Tiling, take_pos: int, take: int, put_pos: int, put: int, name: str) -> Tiling:
    stacks = t.as_dict()
    have = stacks.get(take_pos, 0)
    if have < take:
        raise DomainError(
            f"map {name} needs {take} square(s) at position {take_pos}, tiling {t} has {have}"
        )
    stacks[take_pos] = have - take
    stacks[put_pos] = stacks.get(put_pos, 0) + put
    return Tiling.from_mapping(stacks)


def _positive(**kw: int) -> None:
    for name, value in kw.items():
        if value < 1:
            raise ParameterError(f"{name} must be >= 1, got {value}")


def _check_tsi(r: int, k: int, i: int) -> None:
    _positive(r=r, k=k, i=i)
    if not 1 <= i <= k - 1:
        raise ParameterError(f"i must satisfy 1 <= i <= k-1, got i={i}, k={k}")
    if r == k:
        raise ParameterError(f"r and k must be different positions, both are {r}")


def map_T(t: Tiling, r: int, k: int, i: int) -> Tiling:
    """Remove k-i squares from position r and stack r squares on position k."""
    _check_tsi(r, k, i)
    return _move(t, r, k - i, k, r, "T")


def map_S(t: Tiling, r: int, k: int, i: int) -> Tiling:
    """Inverse of :func:`map_T`."""
    _check_tsi(r, k, i)
    return _move(t, k, r, r, k - i, "S")


def map_Q(t: Tiling, r: int, i: int) -> Tiling:
    """Remove i squares from position r and stack r squares on position i."""
    _positive(r=r, i=i)
    return _move(t, r, i, i, r, "Q")


def map_Z(t: Tiling, r: int, i: int) -> Tiling:
    """Inverse of :func:`map_Q`."""
    _positive(r=r, i=i)
    return _move(t, i, r, r, i, "Z")


def map_F(t: Tiling, r: int, k: int, j: int) -> Tiling:
    """Remove one square from position r and stack j squares on position k.

    Defined for every ``j >= 1``; the exponent change ``k*j - r`` may be
    negative.
    """
    _positive(r=r, k=k, j=j)
    return _move(t, r, 1, k, j, "F")


def map_G(t: Tiling, r: int, k: int, j: int) -> Tiling:
    """Inverse of :func:`map_F`."""
    _positive(r=r, k=k, j=j)
    return _move(t, k, j, r, 1, "G")


#: map name -> (function, parameter names in call order)
MAPS = {
    "T": (map_T, ("r", "k", "i")),
    "S": (map_S, ("r", "k", "i")),
    "Q": (map_Q, ("r", "i")),
    "Z": (map_Z, ("r", "i")),
    "F": (map_F, ("r", "k", "j")),
    "G": (map_G, ("r", "k", "j")),
}
