"""Graph domain variables: per-vertex and per-arc three-valued states.

A graph variable is represented by two nested graphs, the kernel (mandatory
elements, state ``T``) and the envelope (mandatory or possible elements,
states ``T`` and ``U``).  Excluded elements are in state ``F``.  Refinement is
monotone: states only move ``U -> T`` or ``U -> F``.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import NamedTuple


class State(str, enum.Enum):
    T = "T"
    U = "U"
    F = "F"


# Short aliases used throughout the package.
T, U, F = State.T, State.U, State.F


class Inconsistency(Exception):
    """A refinement contradicts the current state of an element."""


class DomainShapeError(ValueError):
    """A snapshot was restored on a domain of a different shape."""


class Counts(NamedTuple):
    v_t: int
    v_u: int
    v_tu: int
    e_t: int
    e_u: int
    e_tu: int


@dataclass
class DomainDelta:
    """Element promotions and exclusions produced by a batch of operations."""

    vertices_to_t: set[int] = field(default_factory=set)
    vertices_to_f: set[int] = field(default_factory=set)
    arcs_to_t: set[int] = field(default_factory=set)
    arcs_to_f: set[int] = field(default_factory=set)

    @property
    def promoted_to_t(self) -> frozenset[tuple[str, int]]:
        return frozenset(
            [("vertex", v) for v in self.vertices_to_t] + [("arc", a) for a in self.arcs_to_t]
        )

    @property
    def demoted_to_f(self) -> frozenset[tuple[str, int]]:
        return frozenset(
            [("vertex", v) for v in self.vertices_to_f] + [("arc", a) for a in self.arcs_to_f]
        )

    def __bool__(self) -> bool:
        return bool(self.vertices_to_t or self.vertices_to_f or self.arcs_to_t or self.arcs_to_f)

    def update(self, other: DomainDelta) -> DomainDelta:
        self.vertices_to_t |= other.vertices_to_t
        self.vertices_to_f |= other.vertices_to_f
        self.arcs_to_t |= other.arcs_to_t
        self.arcs_to_f |= other.arcs_to_f
        return self


@dataclass(frozen=True)
class Snapshot:
    shape: tuple[int, tuple[tuple[int, int], ...]]
    vertex_states: tuple[State, ...]
    arc_states: tuple[State, ...]


class GraphDomain:
    """A graph domain variable over vertices ``0..n-1`` and a fixed arc list.

    Arcs are ordered pairs but connectivity treats them as undirected edges.
    At most one arc per unordered endpoint pair is allowed (a loop counts as
    the pair ``{v}``).  Arc ids follow insertion order.
    """

    def __init__(
        self,
        n: int,
        vertex_states: Sequence[State] | None = None,
        arcs: Iterable[tuple[int, int, State] | tuple[int, int]] = (),
    ) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        self.n = n
        if vertex_states is None:
            vertex_states = [U] * n
        if len(vertex_states) != n:
            raise ValueError(f"expected {n} vertex states, got {len(vertex_states)}")
        self.vertex_states: list[State] = [State(s) for s in vertex_states]
        self.arcs: list[tuple[int, int]] = []
        self.arc_states: list[State] = []
        self.incident: list[list[int]] = [[] for _ in range(n)]
        # (arc id, other endpoint) per vertex; loops listed once.
        self.neighbors: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        self._memo: dict = {}
        self._arc_index: dict[frozenset[int], int] = {}
        for arc in arcs:
            if len(arc) == 2:
                tail, head = arc  # type: ignore[misc]
                state = U
            else:
                tail, head, state = arc  # type: ignore[misc]
            self._add_arc(tail, head, State(state))
        self.validate()

    def _add_arc(self, tail: int, head: int, state: State) -> int:
        for v in (tail, head):
            if not 0 <= v < self.n:
                raise ValueError(f"arc ({tail}, {head}) references vertex {v} outside 0..{self.n - 1}")
        key = frozenset((tail, head))
        if key in self._arc_index:
            raise ValueError(f"parallel arc ({tail}, {head}) rejected")
        a = len(self.arcs)
        self._arc_index[key] = a
        self.arcs.append((tail, head))
        self.arc_states.append(state)
        self.incident[tail].append(a)
        self.neighbors[tail].append((a, head))
        if head != tail:
            self.incident[head].append(a)
            self.neighbors[head].append((a, tail))
        return a

    # -- queries -----------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.arcs)

    def arc_id(self, tail: int, head: int) -> int:
        """Return the id of the arc joining ``tail`` and ``head`` (either orientation)."""
        try:
            return self._arc_index[frozenset((tail, head))]
        except KeyError:
            raise KeyError(f"no arc between {tail} and {head}") from None

    def other_end(self, a: int, v: int) -> int:
        tail, head = self.arcs[a]
        return head if tail == v else tail

    def is_loop(self, a: int) -> bool:
        tail, head = self.arcs[a]
        return tail == head

    def vertices_in(self, state: State) -> list[int]:
        return [v for v, s in enumerate(self.vertex_states) if s is state]

    def arcs_in(self, state: State) -> list[int]:
        return [a for a, s in enumerate(self.arc_states) if s is state]

    def counts(self) -> Counts:
        vs, es = self.vertex_states, self.arc_states
        v_t, v_u = vs.count(T), vs.count(U)
        e_t, e_u = es.count(T), es.count(U)
        return Counts(v_t, v_u, v_t + v_u, e_t, e_u, e_t + e_u)

    def is_instantiated(self) -> bool:
        return U not in self.vertex_states and U not in self.arc_states

    def free_count(self) -> int:
        return self.vertex_states.count(U) + self.arc_states.count(U)

    def validate(self) -> None:
        """Raise ``AssertionError`` if any structural invariant is broken."""
        for a, ((tail, head), s) in enumerate(zip(self.arcs, self.arc_states)):
            ends = (self.vertex_states[tail], self.vertex_states[head])
            if s is T:
                assert ends == (T, T), f"T arc {a} ({tail}, {head}) has endpoint states {ends}"
            elif s is U:
                assert F not in ends, f"U arc {a} ({tail}, {head}) has an excluded endpoint"
        for v, s in enumerate(self.vertex_states):
            if s is F:
                for a in self.incident[v]:
                    assert self.arc_states[a] is F, f"excluded vertex {v} has live arc {a}"

    # -- refinement --------------------------------------------------------

    def include_vertex(self, v: int) -> DomainDelta:
        s = self.vertex_states[v]
        if s is F:
            raise Inconsistency(f"cannot include excluded vertex {v}")
        if s is T:
            return DomainDelta()
        self.vertex_states[v] = T
        return DomainDelta(vertices_to_t={v})

    def exclude_vertex(self, v: int) -> DomainDelta:
        s = self.vertex_states[v]
        if s is T:
            raise Inconsistency(f"cannot exclude mandatory vertex {v}")
        if s is F:
            return DomainDelta()
        self.vertex_states[v] = F
        delta = DomainDelta(vertices_to_f={v})
        for a in self.incident[v]:
            # U vertex cannot carry a T arc, so every live incident arc is U.
            if self.arc_states[a] is U:
                self.arc_states[a] = F
                delta.arcs_to_f.add(a)
        return delta

    def include_arc(self, a: int) -> DomainDelta:
        s = self.arc_states[a]
        if s is F:
            raise Inconsistency(f"cannot include excluded arc {a} {self.arcs[a]}")
        if s is T:
            return DomainDelta()
        tail, head = self.arcs[a]
        if F in (self.vertex_states[tail], self.vertex_states[head]):
            raise Inconsistency(f"arc {a} {self.arcs[a]} has an excluded endpoint")
        self.arc_states[a] = T
        delta = DomainDelta(arcs_to_t={a})
        for v in {tail, head}:
            delta.update(self.include_vertex(v))
        return delta

    def exclude_arc(self, a: int) -> DomainDelta:
        s = self.arc_states[a]
        if s is T:
            raise Inconsistency(f"cannot exclude mandatory arc {a} {self.arcs[a]}")
        if s is F:
            return DomainDelta()
        self.arc_states[a] = F
        return DomainDelta(arcs_to_f={a})

    # -- search support ----------------------------------------------------

    def shape(self) -> tuple[int, tuple[tuple[int, int], ...]]:
        return self.n, tuple(self.arcs)

    def snapshot(self) -> Snapshot:
        return Snapshot(self.shape(), tuple(self.vertex_states), tuple(self.arc_states))

    def restore(self, snap: Snapshot) -> None:
        if snap.shape != self.shape():
            raise DomainShapeError("snapshot was taken from a domain of a different shape")
        self.vertex_states[:] = snap.vertex_states
        self.arc_states[:] = snap.arc_states

    def copy(self) -> GraphDomain:
        return GraphDomain(
            self.n,
            list(self.vertex_states),
            [(t, h, s) for (t, h), s in zip(self.arcs, self.arc_states)],
        )

    def state_key(self) -> tuple[tuple[State, ...], tuple[State, ...]]:
        return tuple(self.vertex_states), tuple(self.arc_states)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphDomain):
            return NotImplemented
        return self.shape() == other.shape() and self.state_key() == other.state_key()

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        vs = "".join(s.value for s in self.vertex_states)
        arcs = ", ".join(f"{t}-{h}:{s.value}" for (t, h), s in zip(self.arcs, self.arc_states))
        return f"GraphDomain(n={self.n}, vertices={vs!r}, arcs=[{arcs}])"


def include_vertex(g: GraphDomain, v: int) -> DomainDelta:
    return g.include_vertex(v)


def exclude_vertex(g: GraphDomain, v: int) -> DomainDelta:
    return g.exclude_vertex(v)


def include_arc(g: GraphDomain, a: int) -> DomainDelta:
    return g.include_arc(a)


def exclude_arc(g: GraphDomain, a: int) -> DomainDelta:
    return g.exclude_arc(a)
