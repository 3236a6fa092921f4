from __future__ import annotations

from enum import Enum


class Mutant(str, Enum):
    """Deliberate defects a checker can switch on to prove the checks bite."""

    COMBINE_SKIP = "combine-skip"
    FP_RETURNS_L = "fp-returns-l"
    MERGE_ITER_NO_DRAIN = "merge-iter-no-drain"
    MERGE_PAIR_NO_COPY_BACK = "merge-pair-no-copy-back"
    PARTITION_NO_EXCHANGE = "partition-no-exchange"
