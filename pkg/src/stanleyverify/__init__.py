"""Exact counting and exhaustive verification of Stanley's partition theorem and its generalisation."""

from .campaigns import (
    verify,
    verify_lemma_schedule,
    verify_occurrence_formula,
    verify_proof_chain,
    verify_stanley_classic,
    verify_theorem1,
    verify_tiling_lemma,
    verify_tiling_lemmas,
)
from .counting import BigCount, CountTable, build_count_table, pfunc_oracle
from .errors import CountRangeError, DomainError, ParameterError, StanleyError, TableLimitError
from .partitions import Partition, count_distinct, count_occurrences, enumerate_partitions
from .report import CampaignConfig, Failure, VerificationReport
from .stats import (
    DivisionSchedule,
    a_sum,
    distinct_sum_enumerated,
    distinct_sum_formula,
    division_schedule,
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
    partition_from_tiling,
    tiling_from_partition,
)

__version__ = "0.1.0"
