from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List

_MASK64 = (1 << 64) - 1
# Odd 64-bit multiplier; spreads consecutive case indices over the seed space.
_GOLDEN = 0x9E3779B97F4A7C15


@dataclass
class SeededRandom:
    """Seeded random number generator for reproducible campaigns."""
    seed: int
    _random: random.Random = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self._random = random.Random(self.seed)

    def derive(self, index: int) -> SeededRandom:
        """Independent generator for case ``index``; depends only on ``(seed, index)``."""
        return SeededRandom(((self.seed & _MASK64) * _GOLDEN + index) & _MASK64)

    def int(self, min_val: int, max_val: int) -> int:
        return self._random.randint(min_val, max_val)

    def int_list(self, count: int, min_val: int, max_val: int) -> List[int]:
        return [self.int(min_val, max_val) for _ in range(count)]

    def array(self, max_len: int, min_val: int, max_val: int) -> List[int]:
        """Length uniform in ``[0, max_len]``, values uniform in ``[min_val, max_val]``."""
        return self.int_list(self.int(0, max_len), min_val, max_val)


def case_input(seed: int, index: int, max_len: int, low: int, high: int) -> List[int]:
    return SeededRandom(seed).derive(index).array(max_len, low, high)
