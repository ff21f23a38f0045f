"""Partition and totient quantities, with machinery to cross-check the
identities linking them: closed formulas, truncated q-series, and brute
force enumeration."""

from partotient.totient import (
    TotientTable,
    build_totient_table,
    coprime_pair_count_oracle,
    divisor_totient_sum,
    half_totient,
)
from partotient.partitions import (
    Partition,
    PartitionTable,
    build_partition_table,
    distinct_parts_sum_oracle,
    enumerate_partitions,
    part_count_S,
    part_count_S_oracle,
    partition_count,
)
from partotient.qseries import TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "PartitionTable",
    "TotientTable",
    "TruncatedSeries",
    "build_partition_table",
    "build_totient_table",
    "coprime_pair_count_oracle",
    "distinct_parts_sum_oracle",
    "divisor_totient_sum",
    "enumerate_partitions",
    "half_totient",
    "part_count_S",
    "part_count_S_oracle",
    "partition_count",
]
