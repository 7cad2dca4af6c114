"""Fixpoint propagation and depth-first search over one graph domain."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

from .connectivity import KERNEL, components
from .domain import GraphDomain, Inconsistency, T, U
from .propagators import FilterStatus, IntervalVar, Kind, propagator_for


@dataclass
class ConstraintSpec:
    kind: Kind
    p: IntervalVar

    def __post_init__(self) -> None:
        self.kind = Kind(self.kind)

    def copy(self) -> ConstraintSpec:
        return ConstraintSpec(self.kind, self.p.copy())


@dataclass(frozen=True)
class Solution:
    vertices: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]  # sorted (tail, head) pairs
    p_values: tuple[int, ...]  # one per constraint, declaration order


@dataclass(frozen=True)
class FixpointResult:
    status: FilterStatus
    rounds: int
    failed_constraint: int | None = None
    failed_step: str | None = None

    @property
    def failed(self) -> bool:
        return self.status is FilterStatus.FAILED


def property_value(g: GraphDomain, kind: Kind | str) -> int:
    """Evaluate MIN_NCC or MAX_NCC on the kernel of ``g`` (0 for the empty graph)."""
    sizes = components(g, KERNEL).sizes()
    if not sizes:
        return 0
    return min(sizes) if Kind(kind) is Kind.MIN_NCC else max(sizes)


def run_round(g: GraphDomain, constraints: Sequence[ConstraintSpec]) -> FixpointResult:
    """Run every propagator once, in declaration order."""
    changed = False
    for i, con in enumerate(constraints):
        outcome = propagator_for(con.kind)(g, con.p)
        if outcome.failed:
            return FixpointResult(FilterStatus.FAILED, 1, i, outcome.failed_step)
        changed |= outcome.status is FilterStatus.PROGRESSED
    return FixpointResult(FilterStatus.PROGRESSED if changed else FilterStatus.AT_FIXPOINT, 1)


def propagate_fixpoint(g: GraphDomain, constraints: Sequence[ConstraintSpec]) -> FixpointResult:
    """Repeat propagation rounds until one round changes nothing.

    Status is ``AT_FIXPOINT`` if the very first round was quiet, ``PROGRESSED``
    if some round changed the domain, ``FAILED`` as soon as any propagator fails.
    """
    rounds = 0
    progressed = False
    while True:
        rounds += 1
        res = run_round(g, constraints)
        if res.failed:
            return FixpointResult(FilterStatus.FAILED, rounds, res.failed_constraint, res.failed_step)
        if res.status is FilterStatus.AT_FIXPOINT:
            status = FilterStatus.PROGRESSED if progressed else FilterStatus.AT_FIXPOINT
            return FixpointResult(status, rounds)
        progressed = True


Brancher = Callable[[GraphDomain], tuple[str, int] | None]


def lowest_index_first(g: GraphDomain) -> tuple[str, int] | None:
    """Lowest-indexed U vertex, else lowest-id U arc, else ``None``."""
    for v, s in enumerate(g.vertex_states):
        if s is U:
            return "vertex", v
    for a, s in enumerate(g.arc_states):
        if s is U:
            return "arc", a
    return None


def solve(
    g: GraphDomain,
    constraints: Sequence[ConstraintSpec],
    limit: int | None = None,
    brancher: Brancher = lowest_index_first,
) -> list[Solution]:
    """Enumerate complete assignments satisfying every constraint.

    Branches try inclusion before exclusion.  ``g`` and the constraint
    intervals are restored to their entry state on return.
    """
    solutions: list[Solution] = []
    root = _save(g, constraints)

    def dfs() -> bool:
        if propagate_fixpoint(g, constraints).failed:
            return False
        choice = brancher(g)
        if choice is None:
            values = tuple(property_value(g, con.kind) for con in constraints)
            if all(val in con.p for val, con in zip(values, constraints)):
                solutions.append(_solution(g, values))
                if limit is not None and len(solutions) >= limit:
                    return True
            return False
        kind, el = choice
        saved = _save(g, constraints)
        for include in (True, False):
            try:
                if kind == "vertex":
                    g.include_vertex(el) if include else g.exclude_vertex(el)
                else:
                    g.include_arc(el) if include else g.exclude_arc(el)
            except Inconsistency:
                _load(g, constraints, saved)
                continue
            stop = dfs()
            _load(g, constraints, saved)
            if stop:
                return True
        return False

    if limit is None or limit > 0:
        dfs()
    _load(g, constraints, root)
    return solutions


def _save(g, constraints):
    return g.snapshot(), [con.p.as_tuple() for con in constraints]


def _load(g, constraints, saved) -> None:
    snap, intervals = saved
    g.restore(snap)
    for con, (lb, ub) in zip(constraints, intervals):
        con.p.lb, con.p.ub = lb, ub


def _solution(g: GraphDomain, values: tuple[int, ...]) -> Solution:
    arcs = tuple(sorted(g.arcs[a] for a in g.arcs_in(T)))
    return Solution(tuple(g.vertices_in(T)), arcs, values)
