"""Connected components of the kernel or envelope view of a graph domain."""

from __future__ import annotations

import enum
from collections.abc import Callable
from dataclasses import dataclass

from .domain import F, GraphDomain, T


class View(str, enum.Enum):
    KERNEL = "kernel"
    ENVELOPE = "envelope"


KERNEL, ENVELOPE = View.KERNEL, View.ENVELOPE


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]  # ascending
    has_mandatory: bool

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def first(self) -> int:
        return self.vertices[0]

    def __contains__(self, v: int) -> bool:
        return v in self.vertices


@dataclass(frozen=True)
class ComponentSet:
    components: tuple[Component, ...]  # ascending first vertex
    component_of: dict[int, int]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def sizes(self) -> list[int]:
        return [c.size for c in self.components]

    def select(
        self,
        size_pred: Callable[[int], bool] | None = None,
        mandatory_pred: Callable[[bool], bool] | None = None,
    ) -> list[Component]:
        return select(self, size_pred, mandatory_pred)

    def extreme_size(
        self,
        which: str,
        size_pred: Callable[[int], bool] | None = None,
        mandatory_pred: Callable[[bool], bool] | None = None,
    ) -> int | None:
        return extreme_size(self, which, size_pred, mandatory_pred)


def components(g: GraphDomain, view: View | str) -> ComponentSet:
    """Maximal connected components of ``view``, treating arcs as undirected.

    The kernel view keeps only ``T`` vertices and ``T`` arcs; the envelope view
    keeps everything not in state ``F``.  Loops never join anything.
    """
    view = View(view)
    # The last result per view is reused only for an identical state vector.
    key = (tuple(g.vertex_states), tuple(g.arc_states))
    cached = g._memo.get(view)
    if cached is not None and cached[0] == key:
        return cached[1]
    if view is KERNEL:
        present = [s is T for s in g.vertex_states]
        live = [s is T for s in g.arc_states]
    else:
        present = [s is not F for s in g.vertex_states]
        live = [s is not F for s in g.arc_states]

    component_of: dict[int, int] = {}
    comps: list[Component] = []
    for root in range(g.n):
        if not present[root] or root in component_of:
            continue
        idx = len(comps)
        component_of[root] = idx
        members = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            for a, w in g.neighbors[v]:
                if live[a] and w not in component_of:
                    component_of[w] = idx
                    members.append(w)
                    stack.append(w)
        members.sort()
        comps.append(Component(tuple(members), any(g.vertex_states[v] is T for v in members)))
    result = ComponentSet(tuple(comps), component_of)
    g._memo[view] = (key, result)
    return result


def select(
    cs: ComponentSet,
    size_pred: Callable[[int], bool] | None = None,
    mandatory_pred: Callable[[bool], bool] | None = None,
) -> list[Component]:
    """Components satisfying both predicates, in ascending first-vertex order.

    A ``None`` predicate accepts everything.
    """
    return [
        c
        for c in cs.components
        if (size_pred is None or size_pred(c.size))
        and (mandatory_pred is None or mandatory_pred(c.has_mandatory))
    ]


def extreme_size(
    cs: ComponentSet,
    which: str,
    size_pred: Callable[[int], bool] | None = None,
    mandatory_pred: Callable[[bool], bool] | None = None,
) -> int | None:
    """Smallest (``which="min"``) or largest (``"max"``) selected component size.

    Returns ``None`` when no component is selected.
    """
    if which not in ("min", "max"):
        raise ValueError(f"which must be 'min' or 'max', got {which!r}")
    sizes = [c.size for c in select(cs, size_pred, mandatory_pred)]
    if not sizes:
        return None
    return min(sizes) if which == "min" else max(sizes)
