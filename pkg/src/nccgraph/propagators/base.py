"""Shared types for the NCC propagators."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from ..domain import DomainDelta, GraphDomain, Inconsistency


class Kind(str, enum.Enum):
    MIN_NCC = "min_ncc"
    MAX_NCC = "max_ncc"


class FilterStatus(str, enum.Enum):
    FAILED = "failed"
    PROGRESSED = "progressed"
    AT_FIXPOINT = "at_fixpoint"


@dataclass
class IntervalVar:
    """Closed integer interval ``[lb, ub]`` for the property variable P."""

    lb: int
    ub: int

    def __post_init__(self) -> None:
        if self.lb < 0 or self.ub < 0:
            raise ValueError(f"interval bounds must be non-negative, got [{self.lb}, {self.ub}]")

    def __contains__(self, value: int) -> bool:
        return self.lb <= value <= self.ub

    def as_tuple(self) -> tuple[int, int]:
        return self.lb, self.ub

    def copy(self) -> IntervalVar:
        return IntervalVar(self.lb, self.ub)


@dataclass(frozen=True)
class StepChange:
    """What one step of a filtering scheme changed."""

    step: str
    graph_delta: DomainDelta
    p: tuple[int, int]  # interval after the step


@dataclass
class FilterOutcome:
    status: FilterStatus
    graph_delta: DomainDelta = field(default_factory=DomainDelta)
    p_delta: tuple[int, int] | None = None
    failed_step: str | None = None
    trace: list[StepChange] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return self.status is FilterStatus.FAILED

    def step_delta(self, step: str) -> DomainDelta:
        delta = DomainDelta()
        for change in self.trace:
            if change.step == step:
                delta.update(change.graph_delta)
        return delta


class StepFailure(Exception):
    def __init__(self, step: str) -> None:
        super().__init__(step)
        self.step = step


class FilterRun:
    """Bookkeeping for one propagator call: tracing, failure and rollback."""

    def __init__(self, g: GraphDomain, p: IntervalVar) -> None:
        self.g = g
        self.p = p
        self._entry = g.snapshot()
        self._entry_p = p.as_tuple()
        self.trace: list[StepChange] = []
        self.delta = DomainDelta()

    def record(self, step: str, delta: DomainDelta | None = None, p_changed: bool = False) -> None:
        delta = delta or DomainDelta()
        if delta or p_changed:
            self.delta.update(delta)
            self.trace.append(StepChange(step, delta, self.p.as_tuple()))

    def raise_lb(self, step: str, value: int) -> None:
        if self.p.lb < value:
            self.p.lb = value
            if self.p.lb > self.p.ub:
                raise StepFailure(step)
            self.record(step, p_changed=True)

    def lower_ub(self, step: str, value: int) -> None:
        if self.p.ub > value:
            self.p.ub = value
            if self.p.lb > self.p.ub:
                raise StepFailure(step)
            self.record(step, p_changed=True)

    def instantiate(self, step: str, value: int) -> None:
        if not self.p.lb <= value <= self.p.ub:
            raise StepFailure(step)
        if self.p.as_tuple() != (value, value):
            self.p.lb = self.p.ub = value
            self.record(step, p_changed=True)

    def finish(self, body) -> FilterOutcome:
        try:
            body(self)
        except (StepFailure, Inconsistency) as exc:
            self.g.restore(self._entry)
            self.p.lb, self.p.ub = self._entry_p
            step = exc.step if isinstance(exc, StepFailure) else "closure"
            return FilterOutcome(FilterStatus.FAILED, failed_step=step)
        p_now = self.p.as_tuple()
        p_delta = p_now if p_now != self._entry_p else None
        if not self.delta and p_delta is None:
            return FilterOutcome(FilterStatus.AT_FIXPOINT)
        return FilterOutcome(FilterStatus.PROGRESSED, self.delta, p_delta, trace=self.trace)
