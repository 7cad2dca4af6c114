from .base import FilterOutcome, FilterStatus, IntervalVar, Kind, StepChange
from .max_ncc import filter_max_ncc
from .min_ncc import filter_min_ncc

PROPAGATORS = {Kind.MIN_NCC: filter_min_ncc, Kind.MAX_NCC: filter_max_ncc}


def propagator_for(kind):
    return PROPAGATORS[Kind(kind)]


__all__ = [
    "FilterOutcome",
    "FilterStatus",
    "IntervalVar",
    "Kind",
    "StepChange",
    "filter_max_ncc",
    "filter_min_ncc",
    "propagator_for",
]
