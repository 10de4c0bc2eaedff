"""Campaign configuration and the report every campaign returns."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

from .errors import ParameterError

IDENTITIES = (
    "theorem1",
    "lemma11",
    "lemma12",
    "lemma21",
    "lemma22",
    "lemma23",
    "proof_chain",
    "stanley_classic",
)
ORACLE_MODES = ("formula-only", "enumerate-only", "cross-check")
FORMATS = ("json", "csv")

#: Largest weight whose partitions campaigns are willing to enumerate.
DEFAULT_ENUM_CAP = 30
#: Largest n for which tiling campaigns push whole slices through the maps.
DEFAULT_BIJECTION_CAP = 15


@dataclass(frozen=True)
class CampaignConfig:
    n_max: int
    probe_beyond_k: bool = False
    oracle_mode: str = "cross-check"
    output_format: str = "json"
    parallelism: int = 1
    enum_cap: int = DEFAULT_ENUM_CAP
    bijection_cap: int = DEFAULT_BIJECTION_CAP

    def __post_init__(self) -> None:
        if self.n_max < 1:
            raise ParameterError(f"n_max must be >= 1, got {self.n_max}")
        if self.oracle_mode not in ORACLE_MODES:
            raise ParameterError(f"unknown oracle mode {self.oracle_mode!r}")
        if self.output_format not in FORMATS:
            raise ParameterError(f"unknown output format {self.output_format!r}")
        if self.parallelism < 0:
            raise ParameterError("parallelism must be >= 0")
        if self.enum_cap < 0:
            raise ParameterError("enum_cap must be >= 0")
        if self.bijection_cap < 0:
            raise ParameterError("bijection_cap must be >= 0")

    @property
    def use_formula(self) -> bool:
        return self.oracle_mode != "enumerate-only"

    @property
    def use_enumeration(self) -> bool:
        return self.oracle_mode != "formula-only"

    @property
    def k_policy(self) -> str:
        return "probe-beyond" if self.probe_beyond_k else "within-paper-scope"

    def range_dict(self, **extra: Any) -> dict[str, Any]:
        out: dict[str, Any] = {
            "n_max": self.n_max,
            "k_policy": self.k_policy,
            "oracle": self.oracle_mode,
            "enum_cap": self.enum_cap,
            "bijection_cap": self.bijection_cap,
        }
        out.update(extra)
        return out


@dataclass(frozen=True)
class Failure:
    params: dict[str, Any]
    lhs: int
    rhs: int

    def to_dict(self) -> dict[str, Any]:
        return {"params": self.params, "lhs": str(self.lhs), "rhs": str(self.rhs)}


@dataclass
class VerificationReport:
    identity_id: str
    range: dict[str, Any]
    cells_checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: int = 0
    probe: dict[str, Any] | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "identity": self.identity_id,
            "range": self.range,
            "cells_checked": self.cells_checked,
            "failures": [f.to_dict() for f in self.failures],
        }
        if self.probe is not None:
            out["probe"] = self.probe
        out["elapsed_ms"] = self.elapsed_ms
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["params", "lhs", "rhs"])
        for f in self.failures:
            params = ";".join(f"{k}={v}" for k, v in f.params.items())
            writer.writerow([params, str(f.lhs), str(f.rhs)])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        return self.to_csv() if fmt == "csv" else self.to_json()
