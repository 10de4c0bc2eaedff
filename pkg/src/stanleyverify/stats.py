"""Occurrence statistics over partitions, in closed form and by enumeration.

Notation used in names and docstrings:

* ``Q_k(m)``: total number of parts equal to ``k`` over all partitions of m.
* ``A(n)``: ``Q_k(n) + Q_k(n+1) + ... + Q_k(n+k-1)`` for a window width k.
* ``B(n)``: total number of distinct part values over all partitions of n.
* ``V_p^q(m)``: partitions of m in which ``q`` appears at least ``p`` times.

Every closed form takes an explicit :class:`CountTable`.  The ``*_enumerated``
functions walk :func:`enumerate_partitions` and are the ground truth the
closed forms are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .counting import BigCount, CountTable
from .errors import ParameterError
from .partitions import count_distinct, enumerate_partitions


@dataclass(frozen=True)
class ScheduleEntry:
    q: int
    r: int


@dataclass(frozen=True)
class DivisionSchedule:
    """Quotients and remainders of n, n+1, ..., n+k-1 by k.

    ``s = k - r_0`` is the offset at which the quotient steps up by one:
    entries before it have quotient ``q_0`` and remainder ``r_0 + i``, entries
    from it on have quotient ``q_0 + 1`` and remainder ``i - s``.
    """

    n: int
    k: int
    entries: tuple[ScheduleEntry, ...]
    s: int

    @property
    def q(self) -> list[int]:
        return [e.q for e in self.entries]

    @property
    def r(self) -> list[int]:
        return [e.r for e in self.entries]

    def pattern_violations(self) -> list[tuple[int, str, int, int]]:
        """List ``(i, field, actual, expected)`` where an entry breaks the pattern."""
        q0, r0 = self.entries[0].q, self.entries[0].r
        bad = []
        if self.s != self.k - r0:
            bad.append((0, "s", self.s, self.k - r0))
        for i, e in enumerate(self.entries):
            if i == 0:
                continue
            if i < self.s:
                want_q, want_r = q0, r0 + i
            else:
                want_q, want_r = q0 + 1, i - self.s
            if e.q != want_q:
                bad.append((i, "q", e.q, want_q))
            if e.r != want_r:
                bad.append((i, "r", e.r, want_r))
            if self.n + i != e.q * self.k + e.r or not 0 <= e.r < self.k:
                bad.append((i, "division", self.n + i, e.q * self.k + e.r))
        return bad


def division_schedule(n: int, k: int) -> DivisionSchedule:
    """Divide each of n, ..., n+k-1 by k and confirm the step pattern."""
    if not 1 <= k <= n:
        raise ParameterError(f"need 1 <= k <= n, got n={n}, k={k}")
    entries = tuple(ScheduleEntry(*divmod(n + i, k)) for i in range(k))
    sched = DivisionSchedule(n=n, k=k, entries=entries, s=k - entries[0].r)
    bad = sched.pattern_violations()
    # Unreachable for genuine integer division; kept as a hard stop.
    assert not bad, f"division schedule pattern broken for n={n}, k={k}: {bad}"
    return sched


def _check_pq(p: int, q: int, m: int) -> None:
    if p < 1 or q < 1:
        raise ParameterError(f"p and q must be >= 1, got p={p}, q={q}")
    if m < 0:
        raise ParameterError(f"m must be >= 0, got {m}")


def occurrences_formula(k: int, m: int, table: CountTable) -> BigCount:
    """Q_k(m) = sum_{j=1}^{floor(m/k)} P(m - j*k).  Zero when m < k."""
    if k < 1 or m < 0:
        raise ParameterError(f"need k >= 1 and m >= 0, got k={k}, m={m}")
    table.require(m)
    return sum(table.p(m - j * k) for j in range(1, m // k + 1))


def occurrences_by_multiplicity(k: int, m: int, table: CountTable) -> BigCount:
    """Q_k(m) before telescoping.

    Partitions of m with exactly c copies of k number P(m-ck) - P(m-(c+1)k),
    so Q_k(m) is the c-weighted sum of those, with the top multiplicity
    ``floor(m/k)`` contributing P(m mod k) partitions.
    """
    if k < 1 or m < 0:
        raise ParameterError(f"need k >= 1 and m >= 0, got k={k}, m={m}")
    table.require(m)
    top, rem = divmod(m, k)
    total = sum(c * (table.p(m - c * k) - table.p(m - (c + 1) * k)) for c in range(1, top))
    if top:
        total += top * table.p(rem)
    return total


def a_sum(n: int, k: int, table: CountTable, *, probe: bool = False) -> BigCount:
    """A(n) = Q_k(n) + ... + Q_k(n+k-1).

    Only ``1 <= k <= n`` is accepted unless ``probe`` is set, in which case any
    ``k >= 1`` is evaluated.
    """
    if k < 1 or n < 1 or (k > n and not probe):
        raise ParameterError(f"need 1 <= k <= n, got n={n}, k={k}")
    table.require(n + k - 1)
    return sum(occurrences_formula(k, n + i, table) for i in range(k))


def a_sum_regrouped(n: int, k: int, table: CountTable) -> BigCount:
    """A(n) evaluated block by block through the division schedule.

    The j-th block ``P(n-jk) + P(n+1-jk) + ... + P(n+k-1-jk)`` for
    ``j = 1..q_0`` is the run ``P(n-(j-1)k-1), ..., P(n-jk)``; the entries
    with ``i >= s`` contribute one extra term ``P(r_i)`` each.
    """
    sched = division_schedule(n, k)
    table.require(n + k - 1)
    q0 = sched.entries[0].q
    total = sum(block_sum(n, k, j, table) for j in range(1, q0 + 1))
    total += sum(table.p(e.r) for e in sched.entries[sched.s:])
    return total


def block_sum(n: int, k: int, j: int, table: CountTable) -> BigCount:
    """sum_{i=0}^{k-1} P(n + i - j*k)."""
    return sum(table.p(n + i - j * k) for i in range(k))


def block_run(n: int, k: int, j: int, table: CountTable) -> BigCount:
    """P(n-(j-1)k-1) + ... + P(n-jk): the same block read as a contiguous run."""
    return sum(table.p(n - u) for u in range((j - 1) * k + 1, j * k + 1))


def distinct_sum_formula(n: int, table: CountTable) -> BigCount:
    """B(n) = 1 + P(1) + ... + P(n-1)."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    table.require(n - 1)
    return 1 + sum(table.p(i) for i in range(1, n))


def v_count(p: int, q: int, m: int, table: CountTable) -> BigCount:
    """V_p^q(m) = P(m - p*q), or 0 when p copies of q do not fit in m.

    Deleting p copies of q is a bijection onto all partitions of m - pq.
    """
    _check_pq(p, q, m)
    if m < p * q:
        return 0
    table.require(m - p * q)
    return table.p(m - p * q)


@dataclass(frozen=True)
class Census:
    """Everything the enumerated statistics need from one pass over P(m) partitions."""

    m: int
    partitions: int
    occurrences: Mapping[int, int]
    distinct_total: int
    exact: Mapping[tuple[int, int], int]  # (part, multiplicity) -> #partitions

    def at_least(self, p: int, q: int) -> int:
        return sum(cnt for (part, c), cnt in self.exact.items() if part == q and c >= p)


@lru_cache(maxsize=None)
def census(m: int) -> Census:
    """Tally occurrences, distinct parts and multiplicities over partitions of m."""
    if m < 0:
        raise ParameterError(f"m must be >= 0, got {m}")
    occ: dict[int, int] = {}
    exact: dict[tuple[int, int], int] = {}
    distinct = 0
    total = 0
    for part in enumerate_partitions(m):
        total += 1
        distinct += count_distinct(part)
        for value, c in part.multiplicities().items():
            occ[value] = occ.get(value, 0) + c
            exact[value, c] = exact.get((value, c), 0) + 1
    return Census(
        m=m,
        partitions=total,
        occurrences=MappingProxyType(occ),
        distinct_total=distinct,
        exact=MappingProxyType(exact),
    )


def occurrences_enumerated(k: int, m: int) -> BigCount:
    """Q_k(m) by counting parts equal to k across every partition of m."""
    if k < 1 or m < 0:
        raise ParameterError(f"need k >= 1 and m >= 0, got k={k}, m={m}")
    return census(m).occurrences.get(k, 0)


def distinct_sum_enumerated(n: int) -> BigCount:
    """B(n) by counting distinct parts across every partition of n."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    return census(n).distinct_total


def v_count_enumerated(p: int, q: int, m: int) -> BigCount:
    """V_p^q(m) by filtering every partition of m on the multiplicity of q."""
    _check_pq(p, q, m)
    return census(m).at_least(p, q)
