"""Lower and upper bounds of the MIN_NCC and MAX_NCC graph properties.

Empty component sets map to 0: the empty graph has a smallest and a largest
component of size 0.
"""

from __future__ import annotations

from typing import NamedTuple

from .connectivity import ENVELOPE, KERNEL, components
from .domain import GraphDomain


class PropertyBounds(NamedTuple):
    lb: int
    ub: int


def min_ncc_lb(g: GraphDomain) -> int:
    c = g.counts()
    if c.v_t == 0:
        return 0
    if c.v_u >= 1:
        return 1
    smallest = components(g, KERNEL).extreme_size("min")
    assert smallest is not None
    return smallest


def min_ncc_ub(g: GraphDomain) -> int:
    env = components(g, ENVELOPE)
    if g.counts().v_t >= 1:
        # Every T vertex lies in some envelope component, so this is never empty.
        smallest = env.extreme_size("min", mandatory_pred=bool)
        assert smallest is not None, "mandatory vertex outside every envelope component"
        return smallest
    return env.extreme_size("max") or 0


def max_ncc_lb(g: GraphDomain) -> int:
    return components(g, KERNEL).extreme_size("max") or 0


def max_ncc_ub(g: GraphDomain) -> int:
    return components(g, ENVELOPE).extreme_size("max") or 0


def min_ncc_bounds(g: GraphDomain) -> PropertyBounds:
    return PropertyBounds(min_ncc_lb(g), min_ncc_ub(g))


def max_ncc_bounds(g: GraphDomain) -> PropertyBounds:
    return PropertyBounds(max_ncc_lb(g), max_ncc_ub(g))


def property_bounds(g: GraphDomain, kind: str) -> PropertyBounds:
    if kind == "min_ncc":
        return min_ncc_bounds(g)
    if kind == "max_ncc":
        return max_ncc_bounds(g)
    raise ValueError(f"unknown property {kind!r}")
