"""Filtering for MIN_NCC(G, P): P is the size of the smallest component of G."""

from __future__ import annotations

from ..bounds import min_ncc_lb, min_ncc_ub
from ..connectivity import ENVELOPE, KERNEL, components
from ..domain import DomainDelta, GraphDomain, U
from .base import FilterOutcome, FilterRun, IntervalVar, StepFailure


def filter_min_ncc(g: GraphDomain, p: IntervalVar) -> FilterOutcome:
    """Run the ten-step MIN_NCC filtering scheme once, mutating ``g`` and ``p``.

    On failure both ``g`` and ``p`` are rolled back to their entry state.
    Steps are labelled ``"1"`` .. ``"10b"`` in the returned trace.
    """
    return FilterRun(g, p).finish(_run)


def _run(run: FilterRun) -> None:
    g, p = run.g, run.p
    c = g.counts()

    if p.lb > c.v_tu:
        raise StepFailure("1")
    # A lone mandatory vertex is a size-1 component without any arc.
    if p.lb >= 2 and c.e_tu < p.lb - 1:
        raise StepFailure("2")
    ub = min_ncc_ub(g)
    if ub < p.lb:
        raise StepFailure("3")
    lb = min_ncc_lb(g)
    if lb > p.ub:
        raise StepFailure("4")
    run.raise_lb("5", lb)
    run.lower_ub("6", ub)

    # Step 7: optional envelope components too small to be part of any solution.
    delta = DomainDelta()
    for comp in components(g, ENVELOPE).select(lambda s: s < p.lb, lambda m: not m):
        for v in comp.vertices:
            delta.update(g.exclude_vertex(v))
    run.record("7", delta)

    changed_8b = False
    if min_ncc_lb(g) < p.lb:
        if g.counts().v_t >= 1:
            forced = components(g, ENVELOPE).select(lambda s: s == p.lb, bool)
            if forced:
                delta = DomainDelta()
                for comp in forced:
                    for v in comp.vertices:
                        delta.update(g.include_vertex(v))
                run.record("8a", delta)
                run.instantiate("8a", p.lb)
        # Deductions are collected against one state and applied afterwards:
        # an arc promoted for one component must not hide that it also
        # serves as another component's way out.
        actions: list[tuple[str, int]] = []
        for comp in components(g, KERNEL).select(lambda s: s < p.lb):
            inside = set(comp.vertices)
            leaving = [
                (a, w)
                for v in comp.vertices
                for a, w in g.neighbors[v]
                if g.arc_states[a] is U and w not in inside
            ]
            if len(leaving) == 1:
                actions.append(("arc", leaving[0][0]))
            elif leaving:
                outside = {y for _, y in leaving}
                if len(outside) == 1:
                    (y,) = outside
                    if g.vertex_states[y] is U:
                        actions.append(("vertex", y))
        delta = DomainDelta()
        for kind, el in actions:
            delta.update(g.include_arc(el) if kind == "arc" else g.include_vertex(el))
        run.record("8b", delta)
        changed_8b = bool(delta)

    if changed_8b:
        lb = min_ncc_lb(g)
        if lb > p.ub:
            raise StepFailure("9")
        run.raise_lb("9", lb)

    if min_ncc_ub(g) > p.ub:
        if p.ub == 0:
            delta = DomainDelta()
            for v in g.vertices_in(U):
                delta.update(g.exclude_vertex(v))
            run.record("10a", delta)
        elif p.ub == 1:
            c = g.counts()
            smallest = components(g, KERNEL).extreme_size("min")
            if c.v_u == 1 and smallest is not None and smallest > 1:
                (u,) = g.vertices_in(U)
                delta = g.include_vertex(u)
                for a in g.incident[u]:
                    if g.arc_states[a] is U and not g.is_loop(a):
                        delta.update(g.exclude_arc(a))
                run.record("10b", delta)
