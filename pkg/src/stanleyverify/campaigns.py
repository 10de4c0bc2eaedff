"""Verification campaigns.

Each campaign sweeps a parameter range, evaluates both sides of one identity
for every cell and collects mismatches into a :class:`VerificationReport`.
Work is split into rows (one value of n, or of m, per row) so rows can be
farmed out to worker processes; results are merged in row order, so serial
and parallel runs produce identical reports apart from ``elapsed_ms``.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import repeat
from typing import Any, Callable, Iterable

from .counting import CountTable, build_count_table
from .errors import ParameterError
from .partitions import enumerate_partitions
from .report import CampaignConfig, Failure, VerificationReport
from .stats import (
    a_sum,
    a_sum_regrouped,
    block_run,
    block_sum,
    distinct_sum_enumerated,
    distinct_sum_formula,
    division_schedule,
    occurrences_by_multiplicity,
    occurrences_enumerated,
    occurrences_formula,
    v_count,
    v_count_enumerated,
)
from .tiling import (
    Tiling,
    map_F,
    map_G,
    map_Q,
    map_S,
    map_T,
    map_Z,
    measure_exponent,
    tiling_from_partition,
)


@dataclass
class RowResult:
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    probes: list[dict[str, Any]] = field(default_factory=list)

    def expect(self, lhs: int, rhs: int, **params: Any) -> bool:
        if lhs != rhs:
            self.failures.append(Failure(params, lhs, rhs))
            return False
        return True


@lru_cache(maxsize=8)
def _table(size: int) -> CountTable:
    return build_count_table(size)


def _run(
    identity: str,
    cfg: CampaignConfig,
    rows: Iterable[int],
    row_fn: Callable[[CampaignConfig, int, int], RowResult],
    table_size: int,
    **range_extra: Any,
) -> VerificationReport:
    start = time.perf_counter()
    rows = list(rows)
    if not rows:
        raise ParameterError(f"{identity}: the requested range contains no cells")
    workers = cfg.parallelism or os.cpu_count() or 1
    if workers == 1 or len(rows) == 1:
        results = [row_fn(cfg, row, table_size) for row in rows]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(rows))) as pool:
            results = list(pool.map(row_fn, repeat(cfg), rows, repeat(table_size)))
    report = VerificationReport(identity, cfg.range_dict(**range_extra))
    probes: list[dict[str, Any]] = []
    for res in results:
        report.cells_checked += res.checked
        report.failures.extend(res.failures)
        probes.extend(res.probes)
    if cfg.probe_beyond_k and identity == "theorem1":
        unequal = [p for p in probes if not p["equal"]]
        report.probe = {
            "cells": len(probes),
            "equal": len(probes) - len(unequal),
            "unequal": [{"n": p["n"], "k": p["k"], "lhs": p["lhs"], "rhs": p["rhs"]} for p in unequal],
        }
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


def _enum_rows(cfg: CampaignConfig) -> range:
    """Rows 1..n_max, truncated to the enumeration cap in enumerate-only mode."""
    top = cfg.n_max if cfg.use_formula else min(cfg.n_max, cfg.enum_cap)
    return range(1, top + 1)


# -- Theorem 1: A(n) = B(n) ----------------------------------------------


def _theorem1_row(cfg: CampaignConfig, n: int, size: int) -> RowResult:
    table = _table(size)
    res = RowResult()
    cap = cfg.enum_cap
    b_formula = distinct_sum_formula(n, table) if cfg.use_formula else None
    b_enum = distinct_sum_enumerated(n) if cfg.use_enumeration and n <= cap else None
    if b_formula is not None and b_enum is not None:
        res.expect(b_formula, b_enum, n=n, check="B_formula=B_enumerated")
    for k in range(1, n + 1):
        enum_ok = cfg.use_enumeration and n + k - 1 <= cap
        if not cfg.use_formula and not enum_ok:
            continue
        res.checked += 1
        if cfg.use_formula:
            a = a_sum(n, k, table)
            res.expect(a, b_formula, n=n, k=k, check="A=B")
            sched = division_schedule(n, k)
            for j in range(1, sched.entries[0].q + 1):
                res.expect(
                    block_sum(n, k, j, table), block_run(n, k, j, table),
                    n=n, k=k, j=j, check="block_regrouping",
                )
            res.expect(a_sum_regrouped(n, k, table), a, n=n, k=k, check="A_regrouped=A")
        if enum_ok:
            a_enum = sum(occurrences_enumerated(k, n + i) for i in range(k))
            b = b_enum if b_enum is not None else b_formula
            res.expect(a_enum, b, n=n, k=k, check="A_enumerated=B")
    if cfg.probe_beyond_k:
        b = b_formula if b_formula is not None else distinct_sum_formula(n, table)
        for k in range(n + 1, cfg.n_max + 1):
            a = a_sum(n, k, table, probe=True)
            res.probes.append({"n": n, "k": k, "lhs": str(a), "rhs": str(b), "equal": a == b})
    return res


def verify_theorem1(cfg: CampaignConfig) -> VerificationReport:
    """Check A(n) = B(n) for every 1 <= k <= n <= n_max.

    With ``probe_beyond_k`` the cells with n < k <= n_max are also evaluated
    and summarised under ``probe``; they never count as failures.
    """
    size = 2 * cfg.n_max
    return _run("theorem1", cfg, _enum_rows(cfg), _theorem1_row, size)


# -- Stanley's classical case: B(n) = Q_1(n) -------------------------------


def _stanley_row(cfg: CampaignConfig, n: int, size: int) -> RowResult:
    table = _table(size)
    res = RowResult(checked=1)
    if cfg.use_formula:
        b = distinct_sum_formula(n, table)
        res.expect(occurrences_formula(1, n, table), b, n=n, check="Q1_formula=B_formula")
    if cfg.use_enumeration and n <= cfg.enum_cap:
        b_e = distinct_sum_enumerated(n)
        res.expect(occurrences_enumerated(1, n), b_e, n=n, check="Q1_enumerated=B_enumerated")
        if cfg.use_formula:
            res.expect(b, b_e, n=n, check="B_formula=B_enumerated")
    return res


def verify_stanley_classic(cfg: CampaignConfig) -> VerificationReport:
    """Check that the number of 1s over all partitions of n equals B(n)."""
    return _run("stanley_classic", cfg, _enum_rows(cfg), _stanley_row, cfg.n_max)


# -- Lemma 1.1: division schedule pattern ---------------------------------


def _schedule_row(cfg: CampaignConfig, n: int, size: int) -> RowResult:
    res = RowResult()
    for k in range(1, n + 1):
        res.checked += 1
        sched = division_schedule(n, k)
        q0, r0 = divmod(n, k)
        s = k - r0
        res.expect(sched.s, s, n=n, k=k, check="s")
        for i in range(k):
            q_direct, r_direct = divmod(n + i, k)
            if i == 0:
                q_want, r_want = q0, r0
            elif i < s:
                q_want, r_want = q0, r0 + i
            else:
                q_want, r_want = q0 + 1, i - s
            res.expect(q_direct, q_want, n=n, k=k, i=i, check="q_pattern")
            res.expect(r_direct, r_want, n=n, k=k, i=i, check="r_pattern")
            res.expect(sched.entries[i].q, q_direct, n=n, k=k, i=i, check="q_schedule")
            res.expect(sched.entries[i].r, r_direct, n=n, k=k, i=i, check="r_schedule")
    return res


def verify_lemma_schedule(cfg: CampaignConfig) -> VerificationReport:
    """Check the quotient/remainder step pattern for all 1 <= k <= n <= n_max."""
    return _run("lemma11", cfg, range(1, cfg.n_max + 1), _schedule_row, 0)


# -- Lemma 1.2: Q_k(m) closed form -----------------------------------------


def _occurrence_row(cfg: CampaignConfig, m: int, size: int) -> RowResult:
    table = _table(size)
    res = RowResult()
    enum_ok = m <= cfg.enum_cap and cfg.use_enumeration
    for k in range(1, m + 1):
        res.checked += 1
        closed = occurrences_formula(k, m, table)
        if cfg.oracle_mode != "enumerate-only":
            res.expect(
                closed, occurrences_by_multiplicity(k, m, table),
                k=k, m=m, check="telescoped=by_multiplicity",
            )
        if enum_ok:
            res.expect(closed, occurrences_enumerated(k, m), k=k, m=m, check="formula=enumerated")
    return res


def verify_occurrence_formula(cfg: CampaignConfig) -> VerificationReport:
    """Check the telescoped formula for Q_k(m) over all 1 <= k <= m <= n_max.

    The formula is compared with the pre-telescoping multiplicity sum unless
    the mode is enumerate-only, and with enumeration whenever m is within the
    enumeration cap and the mode allows it.
    """
    if cfg.oracle_mode == "enumerate-only" and cfg.n_max > cfg.enum_cap:
        raise ParameterError(
            f"lemma12 in enumerate-only mode needs n_max <= enum_cap ({cfg.enum_cap})"
        )
    return _run("lemma12", cfg, range(1, cfg.n_max + 1), _occurrence_row, cfg.n_max)


# -- Tilings: fixed-weight slices ------------------------------------------


@lru_cache(maxsize=None)
def _slices(weight: int) -> dict[tuple[int, int], frozenset[Tiling]]:
    """(position, h) -> tilings of ``weight`` with at least h squares at position."""
    buckets: dict[tuple[int, int], set[Tiling]] = {}
    for p in enumerate_partitions(weight):
        t = tiling_from_partition(p)
        for pos, height in t.stacks:
            for h in range(1, height + 1):
                buckets.setdefault((pos, h), set()).add(t)
    return {key: frozenset(val) for key, val in buckets.items()}


def tilings_with_at_least(weight: int, pos: int, h: int) -> frozenset[Tiling]:
    """All tilings of measure exponent ``weight`` with >= h squares at ``pos``."""
    if weight < 0:
        return frozenset()
    return _slices(weight).get((pos, h), frozenset())


def _transport(
    res: RowResult,
    domain: frozenset[Tiling],
    forward: Callable[[Tiling], Tiling],
    backward: Callable[[Tiling], Tiling],
    delta: int,
    target_weight: int,
    target_pos: int,
    target_h: int,
    enum_cap: int,
    params: dict[str, Any],
) -> None:
    """Push a domain slice through ``forward`` and compare with the codomain slice."""
    images = set()
    for t in domain:
        u = forward(t)
        images.add(u)
        if not res.expect(measure_exponent(u) - measure_exponent(t), delta, **params, check="exponent_delta"):
            break
        if not res.expect(int(backward(u) == t), 1, **params, check="backward(forward(t))=t"):
            break
        if not res.expect(int(u.height(target_pos) >= target_h), 1, **params, check="image_in_codomain"):
            break
    res.expect(len(images), len(domain), **params, check="injective")
    if target_weight > enum_cap:
        return
    codomain = tilings_with_at_least(target_weight, target_pos, target_h)
    res.expect(len(images), len(codomain), **params, check="slice_sizes")
    res.expect(int(images == codomain), 1, **params, check="image=codomain")
    for u in codomain:
        if not res.expect(int(forward(backward(u)) == u), 1, **params, check="forward(backward(u))=u"):
            break


def _v_pair(
    res: RowResult,
    cfg: CampaignConfig,
    table: CountTable,
    lhs: tuple[int, int, int],
    rhs: tuple[int, int, int],
    params: dict[str, Any],
) -> None:
    """Compare V(lhs) with V(rhs) by closed form and, within the cap, by enumeration."""
    cap = cfg.enum_cap
    if cfg.use_formula:
        res.expect(v_count(*lhs, table), v_count(*rhs, table), **params, check="closed_form")
    if cfg.use_enumeration and lhs[2] <= cap and rhs[2] <= cap:
        le, re_ = v_count_enumerated(*lhs), v_count_enumerated(*rhs)
        res.expect(le, re_, **params, check="enumerated")
    if cfg.oracle_mode == "cross-check":
        for side, args in (("lhs", lhs), ("rhs", rhs)):
            if args[2] <= cap:
                res.expect(
                    v_count(*args, table), v_count_enumerated(*args),
                    **params, check=f"{side}_closed=enumerated",
                )


# -- Lemma 2.1 ---------------------------------------------------------------


def _lemma21_row(cfg: CampaignConfig, n: int, size: int) -> RowResult:
    table = _table(size)
    res = RowResult()
    for r in range(1, n + 1):
        for k in range(2, n + 1):
            for i in range(1, k):
                params = {"n": n, "r": r, "k": k, "i": i}
                res.checked += 1
                _v_pair(res, cfg, table, (k - i, r, n), (r, k, n + i * r), params)
                if r == k or n > cfg.bijection_cap:
                    continue
                domain = tilings_with_at_least(n, r, k - i)
                _transport(
                    res, domain,
                    lambda t: map_T(t, r, k, i), lambda u: map_S(u, r, k, i),
                    i * r, n + i * r, k, r, cfg.enum_cap, params,
                )
    return res


# -- Lemma 2.2 ---------------------------------------------------------------


def _lemma22_row(cfg: CampaignConfig, n: int, size: int) -> RowResult:
    table = _table(size)
    res = RowResult()
    for r in range(1, n + 1):
        for i in range(1, n + 1):
            params = {"n": n, "r": r, "i": i}
            res.checked += 1
            _v_pair(res, cfg, table, (i, r, n), (r, i, n), params)
            if n > cfg.bijection_cap:
                continue
            domain = tilings_with_at_least(n, r, i)
            _transport(
                res, domain,
                lambda t: map_Q(t, r, i), lambda u: map_Z(u, r, i),
                0, n, i, r, cfg.enum_cap, params,
            )
    return res


# -- Lemma 2.3 ---------------------------------------------------------------


def _lemma23_row(cfg: CampaignConfig, n: int, size: int) -> RowResult:
    table = _table(size)
    res = RowResult()
    for k in range(1, n + 1):
        for r in range(1, n + 1):
            first = None
            for j in range(1, n // k + 1):
                target = n + k * j - r
                params = {"n": n, "k": k, "r": r, "j": j}
                res.checked += 1
                _v_pair(res, cfg, table, (1, r, n), (j, k, target), params)
                if cfg.use_formula:
                    v = v_count(j, k, target, table)
                    if first is None:
                        first = v
                    res.expect(v, first, **params, check="independent_of_j")
                if n > cfg.bijection_cap:
                    continue
                domain = tilings_with_at_least(n, r, 1)
                _transport(
                    res, domain,
                    lambda t: map_F(t, r, k, j), lambda u: map_G(u, r, k, j),
                    k * j - r, target, k, j, cfg.enum_cap, params,
                )
    return res


def _lemma_size(identity: str, n_max: int) -> int:
    # Largest weight any closed-form V needs: n + i*r for Lemma 2.1,
    # n + k*j - r <= 2n for Lemma 2.3.
    if identity == "lemma21":
        return n_max + (n_max - 1) * n_max
    return 2 * n_max


_LEMMA_ROWS = {"lemma21": _lemma21_row, "lemma22": _lemma22_row, "lemma23": _lemma23_row}


def verify_tiling_lemma(identity: str, cfg: CampaignConfig) -> VerificationReport:
    """Verify one of the three tiling lemmas over all tuples with n <= n_max.

    Every tuple gets a count comparison of the two V values (closed form
    and/or enumeration per the oracle mode) and, where the map's parameters
    are admissible and n <= ``bijection_cap``, the bijection checks: round trips, exponent change,
    injectivity and, when the target weight is within the enumeration cap,
    equality of the image with the codomain slice.
    """
    if identity not in _LEMMA_ROWS:
        raise ParameterError(f"unknown tiling lemma {identity!r}")
    return _run(
        identity, cfg, range(1, cfg.n_max + 1), _LEMMA_ROWS[identity],
        _lemma_size(identity, cfg.n_max),
    )


def verify_tiling_lemmas(cfg: CampaignConfig) -> list[VerificationReport]:
    return [verify_tiling_lemma(name, cfg) for name in ("lemma21", "lemma22", "lemma23")]


# -- Proof chain -------------------------------------------------------------


class _Counts:
    """V and Q lookups for one proof-chain row, routed by oracle mode.

    In cross-check mode the closed form is returned and every value within
    the enumeration cap is also checked against enumeration, once.
    """

    def __init__(self, cfg: CampaignConfig, table: CountTable, res: RowResult) -> None:
        self.cfg = cfg
        self.table = table
        self.res = res
        self.seen: set[tuple[str, int, int, int]] = set()

    def _oracle(self, key: tuple[str, int, int, int], closed: int, enum: Callable[[], int]) -> None:
        if key in self.seen:
            return
        self.seen.add(key)
        self.res.expect(closed, enum(), what=key[0], args=list(key[1:]), check="closed=enumerated")

    def v(self, p: int, q: int, m: int) -> int:
        if not self.cfg.use_formula:
            return v_count_enumerated(p, q, m)
        closed = v_count(p, q, m, self.table)
        if self.cfg.use_enumeration and m <= self.cfg.enum_cap:
            self._oracle(("V", p, q, m), closed, lambda: v_count_enumerated(p, q, m))
        return closed

    def q(self, k: int, m: int) -> int:
        if not self.cfg.use_formula:
            return occurrences_enumerated(k, m)
        closed = occurrences_formula(k, m, self.table)
        if self.cfg.use_enumeration and m <= self.cfg.enum_cap:
            self._oracle(("Q", k, 0, m), closed, lambda: occurrences_enumerated(k, m))
        return closed


def _proof_chain_row(cfg: CampaignConfig, n: int, size: int) -> RowResult:
    table = _table(size)
    res = RowResult()
    c = _Counts(cfg, table, res)
    ones = c.q(1, n)
    res.expect(sum(c.v(i, 1, n) for i in range(1, n + 1)), ones, n=n, check="ones=sum_V_i^1")
    for k in range(1, n + 1):
        if not cfg.use_formula and n + k - 1 > cfg.enum_cap:
            continue
        res.checked += 1
        cell = {"n": n, "k": k}
        # (1): Lemma 2.1 at r = 1, summed over i.
        res.expect(
            sum(c.v(k - i, 1, n) for i in range(1, k)),
            sum(c.v(1, k, n + i) for i in range(1, k)),
            **cell, check="eq1",
        )
        # (2): Lemma 2.2 at r = 1, summed over k <= i <= n.
        res.expect(
            sum(c.v(i, 1, n) for i in range(k, n + 1)),
            sum(c.v(1, i, n) for i in range(k, n + 1)),
            **cell, check="eq2",
        )
        tail = sum(c.v(1, i, n) for i in range(k + 1, n + 1))
        window = sum(c.v(1, k, n + i) for i in range(k))
        # (4)
        res.expect(ones, window + tail, **cell, check="eq4")
        # Each tail term V_1^i(n) is moved by Lemma 2.3 into the window,
        # with j = ceil(i/k) so that the new weight n + jk - i lies in [n, n+k-1].
        for i in range(k + 1, n + 1):
            j = -(-i // k)
            res.expect(c.v(1, i, n), c.v(j, k, n + j * k - i), **cell, i=i, j=j, check="lemma23_step")
        # (6): blocks j = 2..J, J = floor((n+k-1)/k); see notes on the bound.
        top_j = (n + k - 1) // k
        blocks = sum(c.v(j, k, n + t) for j in range(2, top_j + 1) for t in range(k))
        res.expect(tail, blocks, **cell, check="eq6")
        # Final regrouping: sum_j V_j^k(m) = Q_k(m) for every m in the window.
        for t in range(k):
            m = n + t
            res.expect(
                sum(c.v(j, k, m) for j in range(1, m // k + 1)), c.q(k, m),
                **cell, m=m, check="sum_j_V=Q",
            )
        res.expect(ones, sum(c.q(k, n + t) for t in range(k)), **cell, check="ones=A")
    return res


def verify_proof_chain(cfg: CampaignConfig) -> VerificationReport:
    """Check the intermediate identities of the tiling proof for 1 <= k <= n <= n_max."""
    if not cfg.use_formula and cfg.n_max > cfg.enum_cap:
        raise ParameterError(
            f"proof_chain in enumerate-only mode needs n_max <= enum_cap ({cfg.enum_cap})"
        )
    return _run("proof_chain", cfg, range(1, cfg.n_max + 1), _proof_chain_row, 2 * cfg.n_max)


def verify(identity: str, cfg: CampaignConfig) -> VerificationReport:
    """Run the campaign registered under ``identity``."""
    if identity == "theorem1":
        return verify_theorem1(cfg)
    if identity == "stanley_classic":
        return verify_stanley_classic(cfg)
    if identity == "lemma11":
        return verify_lemma_schedule(cfg)
    if identity == "lemma12":
        return verify_occurrence_formula(cfg)
    if identity in _LEMMA_ROWS:
        return verify_tiling_lemma(identity, cfg)
    if identity == "proof_chain":
        return verify_proof_chain(cfg)
    raise ParameterError(f"unknown identity {identity!r}")
