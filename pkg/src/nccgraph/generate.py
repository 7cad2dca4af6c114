"""Seeded random instance generator."""

from __future__ import annotations

import random
from collections.abc import Sequence

from .instance import Instance


def generate_instance(
    n: int,
    density: float,
    mandatory_ratio: float,
    seed: int,
    *,
    excluded_ratio: float = 0.0,
    kernel_arc_prob: float = 0.5,
    loop_density: float = 0.0,
    constraints: Sequence[tuple[str, int, int]] = (),
) -> Instance:
    """Draw a random instance; identical arguments give an identical instance.

    Each non-loop vertex pair becomes an arc with probability ``density`` and
    each vertex gets a loop with probability ``loop_density``.  A fraction
    ``mandatory_ratio`` of the vertices is mandatory and ``excluded_ratio``
    excluded; arcs touching excluded vertices are then dropped.  Arcs between
    two mandatory vertices are mandatory with probability ``kernel_arc_prob``.
    """
    for name, value in (
        ("density", density),
        ("mandatory_ratio", mandatory_ratio),
        ("excluded_ratio", excluded_ratio),
        ("kernel_arc_prob", kernel_arc_prob),
        ("loop_density", loop_density),
    ):
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"{name} must lie in [0, 1], got {value}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")

    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    k_mand = round(mandatory_ratio * n)
    k_excl = min(round(excluded_ratio * n), n - k_mand)
    mandatory = set(order[:k_mand])
    excluded = set(order[k_mand : k_mand + k_excl])

    candidates = [(i, j) for i in range(n) for j in range(i, n)]
    arcs = []
    for i, j in candidates:
        keep = rng.random() < (loop_density if i == j else density)
        state = "T" if rng.random() < kernel_arc_prob else "U"
        if not keep or i in excluded or j in excluded:
            continue
        if not (i in mandatory and j in mandatory):
            state = "U"
        arcs.append((i, j, state))
    return Instance(n, tuple(mandatory), tuple(excluded), tuple(arcs), tuple(constraints))
