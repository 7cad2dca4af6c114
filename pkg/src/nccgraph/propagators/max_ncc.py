"""Filtering for MAX_NCC(G, P): P is the size of the largest component of G."""

from __future__ import annotations

from ..bounds import max_ncc_lb, max_ncc_ub
from ..connectivity import ENVELOPE, KERNEL, components
from ..domain import DomainDelta, GraphDomain, U
from .base import FilterOutcome, FilterRun, IntervalVar, StepFailure


def filter_max_ncc(g: GraphDomain, p: IntervalVar) -> FilterOutcome:
    """Run the eight-step MAX_NCC filtering scheme once, mutating ``g`` and ``p``.

    On failure both ``g`` and ``p`` are rolled back to their entry state.
    """
    return FilterRun(g, p).finish(_run)


def _run(run: FilterRun) -> None:
    g, p = run.g, run.p
    c = g.counts()

    if p.lb > c.v_tu:
        raise StepFailure("1")
    if p.lb >= 2 and c.e_tu < p.lb - 1:
        raise StepFailure("2")
    ub = max_ncc_ub(g)
    if ub < p.lb:
        raise StepFailure("3")
    lb = max_ncc_lb(g)
    if lb > p.ub:
        raise StepFailure("4")
    run.raise_lb("5", lb)
    run.lower_ub("6", ub)

    if max_ncc_ub(g) > p.ub:
        if p.ub == 1:
            delta = DomainDelta()
            for a in g.arcs_in(U):
                if not g.is_loop(a):
                    delta.update(g.exclude_arc(a))
            run.record("7a", delta)
        if p.ub == 0:
            delta = DomainDelta()
            for v in g.vertices_in(U):
                delta.update(g.exclude_vertex(v))
            run.record("7b", delta)

        # Arc exclusions never change the kernel, so one partition serves 7c and 7d.
        kernel = components(g, KERNEL)
        sizes = kernel.sizes()
        delta = DomainDelta()
        for a in g.arcs_in(U):
            ends = {kernel.component_of.get(v) for v in g.arcs[a]}
            if len(ends) == 2 and any(ci is not None and sizes[ci] == p.ub for ci in ends):
                delta.update(g.exclude_arc(a))
        run.record("7c", delta)

        delta = DomainDelta()
        for a in g.arcs_in(U):
            ct = kernel.component_of.get(g.arcs[a][0])
            ch = kernel.component_of.get(g.arcs[a][1])
            if ct is not None and ch is not None and ct != ch and sizes[ct] + sizes[ch] > p.ub:
                delta.update(g.exclude_arc(a))
        run.record("7d", delta)

        if delta:
            ub = max_ncc_ub(g)
            if ub < p.lb:
                raise StepFailure("7e")
            run.lower_ub("7e", ub)

    candidates = components(g, ENVELOPE).select(lambda s: s >= p.lb)
    if len(candidates) == 1 and candidates[0].size == p.lb:
        delta = DomainDelta()
        for v in candidates[0].vertices:
            delta.update(g.include_vertex(v))
        run.record("8", delta)
        run.instantiate("8", p.lb)
