from __future__ import annotations

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from dncsort.contracts import CheckMode
from dncsort.mutants import Mutant


class Algo(str, Enum):
    REC = "rec"
    ITER = "iter"
    QUICK = "quick"


class MergeBackend(str, Enum):
    REC = "rec"
    ITER = "iter"


def _all_algos() -> List[Algo]:
    return list(Algo)


class SortSettings(BaseModel):
    algo: Algo = Algo.REC
    mode: CheckMode = CheckMode.UNCHECKED
    backend: MergeBackend = MergeBackend.REC


class TraceSettings(BaseModel):
    algo: Algo = Algo.REC
    backend: MergeBackend = MergeBackend.REC


class _Domain(BaseModel):
    low: int
    high: int

    @model_validator(mode="after")
    def _ordered_domain(self) -> "_Domain":
        if self.low > self.high:
            raise ValueError(f"empty value domain [{self.low}, {self.high}]")
        return self


class VerifySettings(_Domain):
    algos: List[Algo] = Field(default_factory=_all_algos, min_length=1)
    mode: CheckMode = CheckMode.FULL
    backend: MergeBackend = MergeBackend.REC
    cases: int = Field(100, ge=1)
    seed: int = 0
    max_len: int = Field(64, ge=0)
    # Small domain so that duplicates are common.
    low: int = -5
    high: int = 5
    workers: int = Field(1, ge=1)
    shrink: bool = True
    mutant: Optional[Mutant] = None


class BenchSettings(_Domain):
    algos: List[Algo] = Field(default_factory=_all_algos, min_length=1)
    sizes: List[int] = Field(default_factory=lambda: [1000], min_length=1)
    repeats: int = Field(3, ge=1)
    seed: int = 0
    low: int = -50
    high: int = 50
    backend: MergeBackend = MergeBackend.REC

    @field_validator("sizes")
    @classmethod
    def _positive_sizes(cls, sizes: List[int]) -> List[int]:
        if any(n < 1 for n in sizes):
            raise ValueError("sizes must be positive counts")
        return sizes
