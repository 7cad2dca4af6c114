"""Oracle-backed checks of bounds, propagators, fixpoint and solver.

Every ``check_*`` function returns a list of human-readable violation
messages; an empty list means the check passed.
"""

from __future__ import annotations

from collections.abc import Sequence

from .bounds import property_bounds
from .domain import F, GraphDomain, T, U
from .engine import ConstraintSpec, propagate_fixpoint, run_round, solve
from .instance import Instance
from .oracle import Completion, completion_table, oracle_solutions
from .propagators import FilterStatus, IntervalVar, Kind, propagator_for

Table = list[tuple[Completion, int, int]]

PROPERTIES = (Kind.MIN_NCC, Kind.MAX_NCC)


def _column(kind: Kind) -> int:
    return 1 if kind is Kind.MIN_NCC else 2


def check_bound_soundness(g: GraphDomain, table: Table) -> list[str]:
    out = []
    for kind in PROPERTIES:
        lb, ub = property_bounds(g, kind.value)
        col = _column(kind)
        for row in table:
            if not lb <= row[col] <= ub:
                out.append(f"{kind.value}: completion {row[0]} has value {row[col]} outside [{lb}, {ub}] on {g}")
                break
    return out


def check_bound_sharpness(g: GraphDomain, table: Table) -> list[str]:
    out = []
    for kind in PROPERTIES:
        lb, ub = property_bounds(g, kind.value)
        values = {row[_column(kind)] for row in table}
        for name, bound in (("lb", lb), ("ub", ub)):
            if bound not in values:
                out.append(f"{kind.value}: {name}={bound} attained by no completion on {g}")
    return out


def _fingerprint(g: GraphDomain, p: IntervalVar, outcome) -> str:
    trace = [(c.step, sorted(c.graph_delta.promoted_to_t), sorted(c.graph_delta.demoted_to_f), c.p) for c in outcome.trace]
    return f"{outcome.status.value}|{outcome.failed_step}|{g!r}|{p.as_tuple()}|{trace}"


def check_filter(
    g: GraphDomain, kind: Kind | str, interval: tuple[int, int], table: Table
) -> dict[str, list[str]]:
    """Run one propagator on a copy of ``g`` and compare with the oracle.

    Returns violations keyed by ``soundness``, ``failure``, ``contractance``
    and ``determinism``.
    """
    kind = Kind(kind)
    lb, ub = interval
    col = _column(kind)
    sols = [(row[0], (row[col],)) for row in table if lb <= row[col] <= ub]
    h = g.copy()
    p = IntervalVar(lb, ub)
    outcome = propagator_for(kind)(h, p)
    tag = f"{kind.value} p=[{lb}, {ub}] on {g}"
    res: dict[str, list[str]] = {"soundness": [], "failure": [], "contractance": [], "determinism": []}

    h2 = g.copy()
    p2 = IntervalVar(lb, ub)
    outcome2 = propagator_for(kind)(h2, p2)
    if _fingerprint(h, p, outcome) != _fingerprint(h2, p2, outcome2):
        res["determinism"].append(f"two runs differ: {tag}")

    if outcome.failed:
        if sols:
            res["failure"].append(f"failed at step {outcome.failed_step} but {len(sols)} solutions exist: {tag}")
        if h != g or p.as_tuple() != (lb, ub):
            res["contractance"].append(f"failure did not roll back: {tag}")
        return res

    try:
        h.validate()
    except AssertionError as exc:
        res["contractance"].append(f"invariant broken ({exc}): {tag}")
    for v, (before, after) in enumerate(zip(g.vertex_states, h.vertex_states)):
        if before is not U and before is not after:
            res["contractance"].append(f"vertex {v} moved {before.value}->{after.value}: {tag}")
    for a, (before, after) in enumerate(zip(g.arc_states, h.arc_states)):
        if before is not U and before is not after:
            res["contractance"].append(f"arc {g.arcs[a]} moved {before.value}->{after.value}: {tag}")
    if not lb <= p.lb <= p.ub <= ub:
        res["contractance"].append(f"interval {p.as_tuple()} not inside [{lb}, {ub}]: {tag}")

    new_t_v = {v for v in range(g.n) if g.vertex_states[v] is U and h.vertex_states[v] is T}
    new_f_v = {v for v in range(g.n) if g.vertex_states[v] is U and h.vertex_states[v] is F}
    new_t_a = {g.arcs[a] for a in range(g.m) if g.arc_states[a] is U and h.arc_states[a] is T}
    new_f_a = {g.arcs[a] for a in range(g.m) if g.arc_states[a] is U and h.arc_states[a] is F}
    delta = outcome.graph_delta
    if (
        delta.vertices_to_t != new_t_v
        or delta.vertices_to_f != new_f_v
        or {g.arcs[a] for a in delta.arcs_to_t} != new_t_a
        or {g.arcs[a] for a in delta.arcs_to_f} != new_f_a
    ):
        res["contractance"].append(f"reported delta disagrees with the state change: {tag}")

    if sols:
        in_some_v = set().union(*(c.vertices for c, _ in sols))
        in_some_a = set().union(*(c.arcs for c, _ in sols))
        in_all_v = set.intersection(*(set(c.vertices) for c, _ in sols))
        in_all_a = set.intersection(*(set(c.arcs) for c, _ in sols))
        if new_f_v & in_some_v or new_f_a & in_some_a:
            res["soundness"].append(
                f"excluded {sorted(new_f_v & in_some_v)} / {sorted(new_f_a & in_some_a)} used by a solution: {tag}"
            )
        if not (new_t_v <= in_all_v and new_t_a <= in_all_a):
            res["soundness"].append(
                f"forced {sorted(new_t_v - in_all_v)} / {sorted(new_t_a - in_all_a)} missing from a solution: {tag}"
            )
        outside = sorted({val for _, (val,) in sols} - set(range(p.lb, p.ub + 1)))
        if outside:
            res["soundness"].append(f"achievable values {outside} outside {p.as_tuple()}: {tag}")
    return res


def check_fixpoint(g: GraphDomain, constraints: Sequence[ConstraintSpec]) -> list[str]:
    h = g.copy()
    cons = [c.copy() for c in constraints]
    res = propagate_fixpoint(h, cons)
    if res.failed:
        return []
    before = (h.state_key(), [c.p.as_tuple() for c in cons])
    again = run_round(h, cons)
    after = (h.state_key(), [c.p.as_tuple() for c in cons])
    if again.status is not FilterStatus.AT_FIXPOINT or before != after:
        return [f"extra round after fixpoint changed the domain ({again.status.value}) on {g}"]
    return []


def check_solver(g: GraphDomain, constraints: Sequence[ConstraintSpec], table: Table) -> list[str]:
    expected = {(c.vertices, c.arcs, vals) for c, vals in oracle_solutions(g, constraints, table=table)}
    cons = [c.copy() for c in constraints]
    found = solve(g.copy(), cons)
    got = [(s.vertices, s.arcs, s.p_values) for s in found]
    out = []
    if len(set(got)) != len(got):
        out.append(f"solver reported duplicate solutions on {g}")
    if set(got) != expected:
        missing = expected - set(got)
        extra = set(got) - expected
        out.append(f"solver/oracle mismatch on {g}: {len(missing)} missing, {len(extra)} extra")
    again = [(s.vertices, s.arcs, s.p_values) for s in solve(g.copy(), [c.copy() for c in constraints])]
    if again != got:
        out.append(f"solver output not deterministic on {g}")
    return out


def check_instance(inst: Instance, cap: int) -> list[tuple[str, list[str]]]:
    """All checks for one instance, as ``(name, violations)`` pairs."""
    g = inst.to_domain()
    table = completion_table(g, cap)
    cons = inst.constraint_specs()
    results = [
        ("bounds.soundness", check_bound_soundness(g, table)),
        ("bounds.sharpness", check_bound_sharpness(g, table)),
    ]
    for i, con in enumerate(cons):
        filt = check_filter(g, con.kind, con.p.as_tuple(), table)
        for key, violations in filt.items():
            results.append((f"constraints[{i}].{con.kind.value}.{key}", violations))
    results.append(("engine.fixpoint", check_fixpoint(g, cons)))
    results.append(("engine.solver_equivalence", check_solver(g, cons, table)))
    return results


__all__ = [
    "check_bound_sharpness",
    "check_bound_soundness",
    "check_filter",
    "check_fixpoint",
    "check_instance",
    "check_solver",
]
