"""Small-instance suites used for oracle certification.

* ``exhaustive_domains``: every consistent domain on up to ``max_n`` vertices,
  i.e. every vertex labelling together with every envelope (no parallel arcs,
  at most one loop per vertex) and every admissible arc labelling.
* ``random_suite``: seeded random instances on 4..7 vertices with bounded
  numbers of free elements so the oracle stays cheap.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator

from .domain import F, GraphDomain, State, T, U
from .generate import generate_instance
from .instance import Instance

SUITE_SEED = 20180501
RANDOM_SUITE_SIZE = 1000
RANDOM_MAX_FREE = 14


def exhaustive_domains(max_n: int = 3) -> Iterator[GraphDomain]:
    """Yield every consistent domain with ``n <= max_n`` in a fixed order."""
    for n in range(max_n + 1):
        pairs = [(i, j) for i in range(n) for j in range(i, n)]
        for labels in itertools.product((T, U, F), repeat=n):
            options: list[list[State | None]] = []
            for i, j in pairs:
                opts: list[State | None] = [None]
                if labels[i] is not F and labels[j] is not F:
                    opts.append(U)
                if labels[i] is T and labels[j] is T:
                    opts.append(T)
                options.append(opts)
            for choice in itertools.product(*options):
                arcs = [(i, j, s) for (i, j), s in zip(pairs, choice) if s is not None]
                yield GraphDomain(n, list(labels), arcs)


def all_intervals(n: int) -> list[tuple[int, int]]:
    """Every interval ``[lb, ub]`` with ``0 <= lb <= ub <= n + 1``."""
    return [(lb, ub) for lb in range(n + 2) for ub in range(lb, n + 2)]


def random_interval(rng: random.Random, n: int) -> tuple[int, int]:
    lb = rng.randint(0, n + 1)
    ub = rng.randint(0, n + 1)
    return min(lb, ub), max(lb, ub)


def random_constraints(rng: random.Random, n: int) -> tuple[tuple[str, int, int], ...]:
    pattern = rng.choice(("min", "max", "both", "both"))
    cons = []
    if pattern in ("min", "both"):
        cons.append(("min_ncc", *random_interval(rng, n)))
    if pattern in ("max", "both"):
        cons.append(("max_ncc", *random_interval(rng, n)))
    if pattern == "both" and rng.random() < 0.5:
        cons.reverse()
    return tuple(cons)


def random_suite(
    count: int = RANDOM_SUITE_SIZE, seed: int = SUITE_SEED, max_free: int = RANDOM_MAX_FREE
) -> list[Instance]:
    """Seeded random instances with ``4 <= n <= 7`` and at most ``max_free`` free elements.

    Draws that exceed ``max_free`` are discarded and redrawn from the same stream.
    """
    rng = random.Random(seed)
    out: list[Instance] = []
    while len(out) < count:
        n = rng.randint(4, 7)
        inst = generate_instance(
            n,
            density=rng.uniform(0.15, 0.6),
            mandatory_ratio=rng.uniform(0.0, 0.7),
            seed=rng.getrandbits(32),
            excluded_ratio=rng.choice((0.0, 0.0, 0.15)),
            kernel_arc_prob=rng.uniform(0.0, 0.8),
            loop_density=rng.choice((0.0, 0.2)),
            constraints=random_constraints(rng, n),
        )
        if inst.free_count <= max_free:
            out.append(inst)
    return out


def exhaustive_constraints(index: int, n: int) -> tuple[tuple[str, int, int], ...]:
    """Deterministic constraint list attached to the ``index``-th exhaustive domain."""
    return random_constraints(random.Random(SUITE_SEED + index), n)
