"""Brute-force ground truth over every completion of a graph domain.

Independent of the connectivity module: component sizes are computed with a
small union-find over the concrete completion.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .domain import GraphDomain, T, U

DEFAULT_CAP = 24


class InstanceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Completion:
    vertices: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]  # sorted (tail, head) pairs


def _root(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def component_sizes(n: int, vertices: Sequence[int], arcs: Sequence[tuple[int, int]]) -> list[int]:
    """Sizes of the connected components of a concrete graph (arcs undirected)."""
    parent = list(range(n))
    for x, y in arcs:
        rx, ry = _root(parent, x), _root(parent, y)
        if rx != ry:
            parent[rx] = ry
    counts: dict[int, int] = {}
    for v in vertices:
        r = _root(parent, v)
        counts[r] = counts.get(r, 0) + 1
    return sorted(counts.values())


def ncc_values(n: int, vertices: Sequence[int], arcs: Sequence[tuple[int, int]]) -> tuple[int, int]:
    """``(MIN_NCC, MAX_NCC)`` of a concrete graph; ``(0, 0)`` when it is empty."""
    sizes = component_sizes(n, vertices, arcs)
    if not sizes:
        return 0, 0
    return sizes[0], sizes[-1]


def enumerate_completions(g: GraphDomain, cap: int = DEFAULT_CAP) -> Iterator[Completion]:
    """Yield every completion once: U-vertex subsets outer, U-arc subsets inner.

    Both radixes count in binary with the lowest id as the least significant
    digit.  Only arcs whose endpoints are both chosen are enumerated.
    """
    free = g.free_count()
    if free > cap:
        raise InstanceTooLarge(f"{free} free elements exceed the enumeration cap of {cap}")
    opt_vertices = g.vertices_in(U)
    base_vertices = set(g.vertices_in(T))
    base_arcs = [g.arcs[a] for a in g.arcs_in(T)]
    opt_arcs = [g.arcs[a] for a in g.arcs_in(U)]
    for vmask in range(1 << len(opt_vertices)):
        chosen = base_vertices | {v for i, v in enumerate(opt_vertices) if vmask >> i & 1}
        usable = [arc for arc in opt_arcs if arc[0] in chosen and arc[1] in chosen]
        vertices = tuple(sorted(chosen))
        for amask in range(1 << len(usable)):
            picked = [arc for i, arc in enumerate(usable) if amask >> i & 1]
            yield Completion(vertices, tuple(sorted(base_arcs + picked)))


def value_of(completion: Completion, n: int, kind: str) -> int:
    lo, hi = ncc_values(n, completion.vertices, completion.arcs)
    return lo if _kind(kind) == "min_ncc" else hi


def completion_table(g: GraphDomain, cap: int = DEFAULT_CAP) -> list[tuple[Completion, int, int]]:
    """Every completion with its ``(MIN_NCC, MAX_NCC)`` values, enumeration order."""
    return [
        (c, *ncc_values(g.n, c.vertices, c.arcs)) for c in enumerate_completions(g, cap)
    ]


def exact_range(g: GraphDomain, kind: str, cap: int = DEFAULT_CAP) -> tuple[int, int]:
    """Exact ``(min, max)`` of a property over all completions."""
    col = 1 if _kind(kind) == "min_ncc" else 2
    values = [row[col] for row in completion_table(g, cap)]
    return min(values), max(values)


def oracle_solutions(
    g: GraphDomain,
    constraints: Sequence,
    cap: int = DEFAULT_CAP,
    table: list[tuple[Completion, int, int]] | None = None,
) -> list[tuple[Completion, tuple[int, ...]]]:
    """Completions whose property values lie in every constraint's interval.

    ``constraints`` holds objects with ``kind`` and ``p`` (``lb``/``ub``)
    attributes, or ``(kind, lb, ub)`` triples.
    """
    specs = [_spec(c) for c in constraints]
    if table is None:
        table = completion_table(g, cap)
    out = []
    for comp, lo, hi in table:
        values = tuple(lo if kind == "min_ncc" else hi for kind, _, _ in specs)
        if all(lb <= val <= ub for val, (_, lb, ub) in zip(values, specs)):
            out.append((comp, values))
    return out


def _kind(kind) -> str:
    kind = getattr(kind, "value", kind)
    if kind not in ("min_ncc", "max_ncc"):
        raise ValueError(f"unknown property {kind!r}")
    return kind


def _spec(c) -> tuple[str, int, int]:
    if isinstance(c, tuple):
        kind, lb, ub = c
        return _kind(kind), lb, ub
    return _kind(c.kind), c.p.lb, c.p.ub
