"""Graph domain variables with MIN_NCC / MAX_NCC propagation, search and a brute-force oracle."""

from .bounds import max_ncc_lb, max_ncc_ub, min_ncc_lb, min_ncc_ub
from .connectivity import ENVELOPE, KERNEL, components
from .domain import F, GraphDomain, Inconsistency, State, T, U
from .engine import ConstraintSpec, Solution, propagate_fixpoint, solve
from .instance import Instance, InstanceError, parse_instance, serialize_instance
from .propagators import FilterOutcome, FilterStatus, IntervalVar, Kind, filter_max_ncc, filter_min_ncc

__all__ = [
    "ENVELOPE",
    "KERNEL",
    "ConstraintSpec",
    "F",
    "FilterOutcome",
    "FilterStatus",
    "GraphDomain",
    "Inconsistency",
    "Instance",
    "InstanceError",
    "IntervalVar",
    "Kind",
    "Solution",
    "State",
    "T",
    "U",
    "components",
    "filter_max_ncc",
    "filter_min_ncc",
    "max_ncc_lb",
    "max_ncc_ub",
    "min_ncc_lb",
    "min_ncc_ub",
    "parse_instance",
    "propagate_fixpoint",
    "serialize_instance",
    "solve",
]
