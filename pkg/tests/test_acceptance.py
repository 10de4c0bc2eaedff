"""Exit criteria.  Each test prints one PASS/FAIL line; run with ``-s`` or ``-v``."""

import re
import subprocess
import sys
import time

import pytest

from stanleyverify import (
    CampaignConfig,
    build_count_table,
    distinct_sum_formula,
    enumerate_partitions,
    occurrences_formula,
    pfunc_oracle,
    verify,
)


@pytest.fixture
def verdict(capsys):
    def emit(criterion, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
        assert ok, detail

    return emit


def _clean(report):
    return report.passed and report.cells_checked > 0


def test_ac1_count_kernel_dual_algorithms(verdict):
    start = time.perf_counter()
    table = build_count_table(200)
    oracle_ok = all(table[n] == pfunc_oracle(n) for n in range(201))
    enum_ok = all(sum(1 for _ in enumerate_partitions(n)) == table[n] for n in range(41))
    elapsed = time.perf_counter() - start
    verdict(
        "AC1 count kernel",
        oracle_ok and enum_ok and elapsed < 5,
        f"recurrence=DP n<=200: {oracle_ok}, =enumeration n<=40: {enum_ok}, {elapsed:.2f}s (<5s)",
    )


def test_ac2_theorem1(verdict):
    start = time.perf_counter()
    formula = verify("theorem1", CampaignConfig(n_max=60, oracle_mode="formula-only"))
    crossed = verify("theorem1", CampaignConfig(n_max=30, oracle_mode="cross-check"))
    elapsed = time.perf_counter() - start
    verdict(
        "AC2 theorem1 A(n)=B(n)",
        _clean(formula) and formula.cells_checked == 1830
        and _clean(crossed) and crossed.cells_checked == 465 and elapsed < 10,
        f"formula n<=60: {formula.cells_checked} cells/{len(formula.failures)} failures, "
        f"cross-check n<=30: {crossed.cells_checked} cells/{len(crossed.failures)} failures, "
        f"{elapsed:.2f}s (<10s)",
    )


def test_ac3_stanley_classic(verdict):
    table = build_count_table(60)
    direct = all(distinct_sum_formula(n, table) == occurrences_formula(1, n, table) for n in range(1, 61))
    report = verify("stanley_classic", CampaignConfig(n_max=60))
    verdict(
        "AC3 Stanley B(n)=Q_1(n)",
        direct and _clean(report),
        f"n<=60, {report.cells_checked} cells, {len(report.failures)} failures",
    )


def test_ac4_occurrence_formula(verdict):
    report = verify("lemma12", CampaignConfig(n_max=30, oracle_mode="cross-check"))
    verdict(
        "AC4 Q_k formula vs enumeration",
        _clean(report) and report.cells_checked == 465,
        f"{report.cells_checked} cells, {len(report.failures)} failures",
    )


def test_ac5_division_schedule(verdict):
    report = verify("lemma11", CampaignConfig(n_max=200))
    verdict(
        "AC5 division schedule pattern",
        _clean(report) and report.cells_checked == 200 * 201 // 2,
        f"{report.cells_checked} cells, {len(report.failures)} failures",
    )


def test_ac6_tiling_bijections(verdict):
    start = time.perf_counter()
    cfg = CampaignConfig(n_max=15, bijection_cap=15)
    reports = [verify(name, cfg) for name in ("lemma21", "lemma22", "lemma23")]
    elapsed = time.perf_counter() - start
    verdict(
        "AC6 tiling bijection suite",
        all(_clean(r) for r in reports) and elapsed < 30,
        ", ".join(f"{r.identity_id}: {r.cells_checked} cells/{len(r.failures)} failures" for r in reports)
        + f", {elapsed:.2f}s (<30s)",
    )


def test_ac7_lemma_counts(verdict):
    cfg = CampaignConfig(n_max=25, oracle_mode="cross-check", bijection_cap=0)
    reports = [verify(name, cfg) for name in ("lemma21", "lemma22", "lemma23")]
    verdict(
        "AC7 lemma count equalities n<=25",
        all(_clean(r) for r in reports),
        ", ".join(f"{r.identity_id}: {r.cells_checked} cells/{len(r.failures)} failures" for r in reports),
    )


def test_ac8_proof_chain(verdict):
    report = verify("proof_chain", CampaignConfig(n_max=30, oracle_mode="cross-check"))
    verdict(
        "AC8 proof chain identities",
        _clean(report) and report.cells_checked == 465,
        f"{report.cells_checked} cells, {len(report.failures)} failures",
    )


def test_ac9_determinism(verdict):
    argv = [sys.executable, "-m", "stanleyverify", "verify", "--identity", "theorem1",
            "--n-max", "60", "--format", "json"]
    runs = [subprocess.run(argv, capture_output=True, text=True) for _ in range(2)]
    strip = [re.sub(r'"elapsed_ms": \d+', '"elapsed_ms": 0', r.stdout) for r in runs]
    ok = all(r.returncode == 0 for r in runs) and strip[0] == strip[1] and strip[0]
    verdict("AC9 deterministic report", bool(ok), f"exit codes {[r.returncode for r in runs]}, identical={strip[0] == strip[1]}")
