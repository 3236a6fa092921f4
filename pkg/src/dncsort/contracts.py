"""Runtime Hoare-triple checking.

A ``Checker`` carries the check mode, the comparison counter, the optional trace
sink and the active mutant through one run. Failed checks raise
``ContractViolation``; the value-returning helpers (``check_triple``,
``check_variant``) hand back the ``Violation`` instead.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, NoReturn, Optional, Sequence, TypeVar

from dncsort.core import Snapshot
from dncsort.logging import get_logger
from dncsort.mutants import Mutant
from dncsort.trace import Phase, TraceSink

log = get_logger(__name__)

S = TypeVar("S")
R = TypeVar("R")


class CheckMode(str, Enum):
    UNCHECKED = "unchecked"
    CONTRACTS = "contracts"
    FULL = "full"


class Proviso(str, Enum):
    PRE = "Pre"
    POST = "Post"
    NON_INTERFERENCE = "NonInterference"
    PARTITION_PREDICATE = "PartitionPredicate"
    BASE_IMPLIES_SHORT = "BaseImpliesShort"
    VARIANT_DECREASE = "VariantDecrease"
    LOOP_INVARIANT = "LoopInvariant"
    LOOP_VARIANT = "LoopVariant"


@dataclass(frozen=True, slots=True)
class Location:
    """Call site of a check: algorithm, operation, window and depth."""
    algo: str
    op: str
    l: Optional[int] = None
    r: Optional[int] = None
    n: Optional[int] = None
    depth: int = 0

    def __str__(self) -> str:
        window = f" [{self.l}..{self.r}) of {self.n}" if self.l is not None else ""
        return f"{self.algo}.{self.op}{window} depth={self.depth}"


@dataclass(frozen=True, slots=True)
class Violation:
    proviso: Proviso
    location: Location
    detail: str
    before: Snapshot
    after: tuple[Any, ...]
    case_index: Optional[int] = None
    shrunk_input: Optional[tuple[Any, ...]] = None

    def to_dict(self) -> Dict[str, Any]:
        loc = self.location
        return {
            "proviso": self.proviso.value,
            "algo": loc.algo,
            "op": loc.op,
            "l": loc.l,
            "r": loc.r,
            "n": loc.n,
            "depth": loc.depth,
            "detail": self.detail,
            "before": list(self.before),
            "after": list(self.after),
            "case_index": self.case_index,
            "shrunk_input": None if self.shrunk_input is None else list(self.shrunk_input),
        }

    def __str__(self) -> str:
        return f"{self.proviso.value} violated at {self.location}: {self.detail}"


class ContractViolation(AssertionError):
    def __init__(self, violation: Violation) -> None:
        super().__init__(str(violation))
        self.violation = violation


@dataclass
class VerificationReport:
    cases_run: int
    seed: int
    violations: List[Violation] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cases_run": self.cases_run,
            "seed": self.seed,
            "elapsed_seconds": round(self.elapsed, 6),
            "violations": [v.to_dict() for v in self.violations],
        }


@dataclass
class Checker:
    mode: CheckMode = CheckMode.UNCHECKED
    mutant: Optional[Mutant] = None
    trace: Optional[TraceSink] = None
    comparisons: int = 0

    @property
    def contracts(self) -> bool:
        return self.mode is not CheckMode.UNCHECKED

    @property
    def full(self) -> bool:
        return self.mode is CheckMode.FULL

    def has(self, mutant: Mutant) -> bool:
        return self.mutant is mutant

    # ---- counted comparisons
    def leq(self, x: Any, y: Any) -> bool:
        self.comparisons += 1
        return bool(x <= y)

    def lt(self, x: Any, y: Any) -> bool:
        self.comparisons += 1
        return bool(x < y)

    def eq(self, x: Any, y: Any) -> bool:
        self.comparisons += 1
        return bool(x == y)

    # ---- failures
    def fail(
        self,
        proviso: Proviso,
        where: Location,
        detail: str,
        before: Snapshot,
        after: Sequence[Any],
    ) -> NoReturn:
        violation = Violation(proviso, where, detail, before, tuple(after))
        log.debug("%s", violation)
        raise ContractViolation(violation)

    def ensure(
        self,
        ok: bool,
        proviso: Proviso,
        where: Location,
        detail: str,
        state: Sequence[Any],
        before: Optional[Snapshot] = None,
    ) -> None:
        if not ok:
            self.fail(proviso, where, detail, before if before is not None else Snapshot.capture(state), state)

    def variant(
        self,
        previous: int,
        current: int,
        where: Location,
        state: Sequence[Any] = (),
    ) -> None:
        if not (0 <= current < previous):
            self.fail(
                Proviso.VARIANT_DECREASE,
                where,
                f"variant {previous} -> {current} is not a strict decrease above 0",
                Snapshot.capture(state),
                state,
            )

    def invariant(
        self,
        holds: Callable[[], bool],
        where: Location,
        detail: str,
        state: Sequence[Any],
        before: Optional[Snapshot] = None,
    ) -> None:
        """Loop invariant, evaluated in full mode only."""
        if self.full and not holds():
            self.fail(Proviso.LOOP_INVARIANT, where, detail, before if before is not None else Snapshot.capture(state), state)

    def loop_variant(self, previous: int, current: int, where: Location, state: Sequence[Any]) -> None:
        # Bounded below while the guard holds; may drop past 0 on the last step.
        if self.full and not (previous > 0 and current < previous):
            self.fail(
                Proviso.LOOP_VARIANT,
                where,
                f"loop variant {previous} -> {current}",
                Snapshot.capture(state),
                state,
            )

    def triple(
        self,
        pre: Callable[[S], bool],
        body: Callable[[S], R],
        post: Callable[[Snapshot, S], bool],
        state: S,
        where: Location,
    ) -> R:
        """Run ``{pre} body {post}``; ``state`` must be a sequence for snapshots."""
        if not self.contracts:
            return body(state)
        seq: Sequence[Any] = state  # type: ignore[assignment]
        if not pre(state):
            self.fail(Proviso.PRE, where, "precondition does not hold", Snapshot.capture(seq), seq)
        old = Snapshot.capture(seq)
        result = body(state)
        if not post(old, state):
            self.fail(Proviso.POST, where, "postcondition does not hold", old, seq)
        return result

    # ---- tracing
    def emit(
        self,
        algo: str,
        phase: Phase,
        l: int,
        m: Optional[int],
        r: int,
        depth: int,
        s: Optional[int] = None,
    ) -> None:
        if self.trace is not None:
            self.trace.record(algo, phase, l, m, r, depth, s)


def as_checker(mode: CheckMode | Checker) -> Checker:
    if isinstance(mode, Checker):
        return mode
    return Checker(mode=CheckMode(mode))


def check_triple(
    pre: Callable[[S], bool],
    body: Callable[[S], R],
    post: Callable[[Snapshot, S], bool],
    state: S,
    mode: CheckMode | Checker = CheckMode.CONTRACTS,
    *,
    where: Optional[Location] = None,
) -> R | Violation:
    checker = as_checker(mode)
    try:
        return checker.triple(pre, body, post, state, where or Location("triple", "body"))
    except ContractViolation as exc:
        return exc.violation


def check_variant(previous: int, current: int) -> Optional[Violation]:
    try:
        Checker(mode=CheckMode.CONTRACTS).variant(previous, current, Location("variant", "check"))
    except ContractViolation as exc:
        return exc.violation
    return None
