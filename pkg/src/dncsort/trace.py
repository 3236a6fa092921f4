"""Trace events for the divide tree, the combine tree and iterative level passes."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Protocol


class Phase(str, Enum):
    DIVIDE = "Divide"
    BASE = "Base"
    COMBINE = "Combine"
    LEVEL_PASS = "LevelPass"


@dataclass(frozen=True, slots=True)
class TraceEvent:
    seq: int
    algo: str
    phase: Phase
    l: int
    m: Optional[int]
    r: int
    depth: int
    s: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        # Key order is part of the output format.
        return {
            "seq": self.seq,
            "phase": self.phase.value,
            "l": self.l,
            "m": self.m,
            "r": self.r,
            "depth": self.depth,
            "s": self.s,
        }


class TraceSink(Protocol):
    def record(
        self,
        algo: str,
        phase: Phase,
        l: int,
        m: Optional[int],
        r: int,
        depth: int,
        s: Optional[int] = None,
    ) -> None: ...


@dataclass
class TraceRecorder:
    """Collects events of one algorithm; events from helper algorithms are dropped."""
    algo: str
    events: List[TraceEvent] = field(default_factory=list)

    def record(
        self,
        algo: str,
        phase: Phase,
        l: int,
        m: Optional[int],
        r: int,
        depth: int,
        s: Optional[int] = None,
    ) -> None:
        if algo != self.algo:
            return
        self.events.append(TraceEvent(len(self.events), algo, phase, l, m, r, depth, s))

    def count(self, phase: Phase) -> int:
        return sum(1 for e in self.events if e.phase is phase)

    def to_document(self, name: str, n: int) -> Dict[str, Any]:
        return {"algo": name, "n": n, "events": [e.to_dict() for e in self.events]}

    def dumps(self, name: str, n: int) -> str:
        return json.dumps(self.to_document(name, n), ensure_ascii=False) + "\n"


def is_post_order(events: List[TraceEvent]) -> bool:
    """Every Combine closes the most recent open Divide with the same window."""
    open_nodes: list[tuple[int, int, Optional[int]]] = []
    for e in events:
        if e.phase is Phase.DIVIDE:
            open_nodes.append((e.l, e.r, e.m))
        elif e.phase is Phase.COMBINE:
            if not open_nodes or open_nodes[-1] != (e.l, e.r, e.m):
                return False
            open_nodes.pop()
    return not open_nodes


def is_doubling(events: List[TraceEvent]) -> bool:
    """Level passes run with s = 1, 2, 4, ..."""
    expected = 1
    for e in events:
        if e.phase is not Phase.LEVEL_PASS:
            continue
        if e.s != expected:
            return False
        expected *= 2
    return True
