"""JSON instance format: envelope, initial states and NCC constraints.

::

    {
      "n": 3,
      "vertices": {"mandatory": [0], "excluded": [2]},
      "arcs": [{"from": 0, "to": 1, "state": "U"}],
      "constraints": [{"type": "min_ncc", "p": {"lb": 1, "ub": 2}}]
    }

Unlisted vertices are possible, unlisted arcs are excluded.  The canonical
form sorts id lists and arcs ascending; constraint order is significant and
kept as declared.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass

from .domain import F, GraphDomain, T, U
from .engine import ConstraintSpec
from .propagators import IntervalVar, Kind


class InstanceError(ValueError):
    """Syntax or semantic error in an instance document."""


@dataclass(frozen=True)
class Instance:
    n: int
    mandatory: tuple[int, ...] = ()
    excluded: tuple[int, ...] = ()
    arcs: tuple[tuple[int, int, str], ...] = ()
    constraints: tuple[tuple[str, int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "mandatory", tuple(sorted(self.mandatory)))
        object.__setattr__(self, "excluded", tuple(sorted(self.excluded)))
        object.__setattr__(self, "arcs", tuple(sorted(tuple(a) for a in self.arcs)))
        object.__setattr__(self, "constraints", tuple(tuple(c) for c in self.constraints))
        _check(self)

    def to_domain(self) -> GraphDomain:
        states = [U] * self.n
        for v in self.mandatory:
            states[v] = T
        for v in self.excluded:
            states[v] = F
        return GraphDomain(self.n, states, [(t, h, s) for t, h, s in self.arcs])

    def constraint_specs(self) -> list[ConstraintSpec]:
        return [ConstraintSpec(Kind(k), IntervalVar(lb, ub)) for k, lb, ub in self.constraints]

    @classmethod
    def from_domain(cls, g: GraphDomain, constraints: Sequence[ConstraintSpec] = ()) -> Instance:
        return cls(
            n=g.n,
            mandatory=tuple(g.vertices_in(T)),
            excluded=tuple(g.vertices_in(F)),
            arcs=tuple((t, h, s.value) for (t, h), s in zip(g.arcs, g.arc_states) if s is not F),
            constraints=tuple((c.kind.value, c.p.lb, c.p.ub) for c in constraints),
        )

    @property
    def free_count(self) -> int:
        v_u = self.n - len(self.mandatory) - len(self.excluded)
        return v_u + sum(1 for *_, s in self.arcs if s == "U")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "vertices": {"mandatory": list(self.mandatory), "excluded": list(self.excluded)},
            "arcs": [{"from": t, "to": h, "state": s} for t, h, s in self.arcs],
            "constraints": [{"type": k, "p": {"lb": lb, "ub": ub}} for k, lb, ub in self.constraints],
        }


def _check(inst: Instance) -> None:
    n = inst.n
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InstanceError(f"n: expected a non-negative integer, got {n!r}")
    for name, ids in (("vertices.mandatory", inst.mandatory), ("vertices.excluded", inst.excluded)):
        for i, v in enumerate(ids):
            if not 0 <= v < n:
                raise InstanceError(f"{name}[{i}]: vertex {v} outside 0..{n - 1}")
        if len(set(ids)) != len(ids):
            raise InstanceError(f"{name}: duplicate vertex ids")
    both = set(inst.mandatory) & set(inst.excluded)
    if both:
        raise InstanceError(f"vertices: {sorted(both)} listed both mandatory and excluded")
    seen: set[frozenset[int]] = set()
    states = {v: "T" for v in inst.mandatory} | {v: "F" for v in inst.excluded}
    for i, (t, h, s) in enumerate(inst.arcs):
        where = f"arcs[{i}] ({t}, {h})"
        for v in (t, h):
            if not 0 <= v < n:
                raise InstanceError(f"{where}: vertex {v} outside 0..{n - 1}")
        if s not in ("T", "U"):
            raise InstanceError(f"{where}: state must be 'T' or 'U', got {s!r}")
        key = frozenset((t, h))
        if key in seen:
            raise InstanceError(f"{where}: parallel arc (one arc per endpoint pair)")
        seen.add(key)
        ends = (states.get(t, "U"), states.get(h, "U"))
        if "F" in ends:
            raise InstanceError(f"{where}: closure violated, an endpoint is excluded")
        if s == "T" and ends != ("T", "T"):
            raise InstanceError(f"{where}: closure violated, a T arc needs mandatory endpoints")
    for i, (k, lb, ub) in enumerate(inst.constraints):
        if k not in ("min_ncc", "max_ncc"):
            raise InstanceError(f"constraints[{i}].type: expected 'min_ncc' or 'max_ncc', got {k!r}")
        if not 0 <= lb <= ub:
            raise InstanceError(f"constraints[{i}].p: need 0 <= lb <= ub, got [{lb}, {ub}]")


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InstanceError(f"{where}: expected an integer, got {value!r}")
    return value


def _obj(value, where: str) -> dict:
    if not isinstance(value, dict):
        raise InstanceError(f"{where}: expected an object")
    return value


def _list(value, where: str) -> list:
    if not isinstance(value, list):
        raise InstanceError(f"{where}: expected a list")
    return value


def instance_from_dict(doc) -> Instance:
    doc = _obj(doc, "document")
    if "n" not in doc:
        raise InstanceError("n: missing")
    n = _int(doc["n"], "n")
    verts = _obj(doc.get("vertices", {}), "vertices")
    mandatory = [_int(v, f"vertices.mandatory[{i}]") for i, v in enumerate(_list(verts.get("mandatory", []), "vertices.mandatory"))]
    excluded = [_int(v, f"vertices.excluded[{i}]") for i, v in enumerate(_list(verts.get("excluded", []), "vertices.excluded"))]
    arcs = []
    for i, arc in enumerate(_list(doc.get("arcs", []), "arcs")):
        arc = _obj(arc, f"arcs[{i}]")
        for key in ("from", "to"):
            if key not in arc:
                raise InstanceError(f"arcs[{i}].{key}: missing")
        arcs.append((_int(arc["from"], f"arcs[{i}].from"), _int(arc["to"], f"arcs[{i}].to"), arc.get("state", "U")))
    constraints = []
    for i, con in enumerate(_list(doc.get("constraints", []), "constraints")):
        con = _obj(con, f"constraints[{i}]")
        p = _obj(con.get("p"), f"constraints[{i}].p")
        lb = _int(p.get("lb"), f"constraints[{i}].p.lb")
        ub = _int(p.get("ub"), f"constraints[{i}].p.ub")
        constraints.append((con.get("type"), lb, ub))
    return Instance(n, tuple(mandatory), tuple(excluded), tuple(arcs), tuple(constraints))


def parse_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"syntax error at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return instance_from_dict(doc)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def serialize_instance(inst: Instance) -> str:
    return dumps(inst.to_dict())
