from __future__ import annotations

import hypothesis.strategies as st
from hypothesis import settings

from nccgraph.domain import F, GraphDomain, T, U

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@st.composite
def domains(draw, min_n: int = 0, max_n: int = 6, loops: bool = True) -> GraphDomain:
    """Arbitrary consistent graph domains (states respect the closure rules)."""
    n = draw(st.integers(min_n, max_n))
    states = draw(st.lists(st.sampled_from([T, U, F]), min_size=n, max_size=n))
    arcs = []
    for i in range(n):
        for j in range(i if loops else i + 1, n):
            if not draw(st.booleans()):
                continue
            if F in (states[i], states[j]):
                s = F
            elif states[i] is T and states[j] is T:
                s = draw(st.sampled_from([T, U, F]))
            else:
                s = draw(st.sampled_from([U, F]))
            tail, head = (i, j) if draw(st.booleans()) else (j, i)
            arcs.append((tail, head, s))
    order = draw(st.permutations(range(len(arcs))))
    return GraphDomain(n, states, [arcs[k] for k in order])


def small_domains(max_free: int = 10):
    return domains(max_n=5).filter(lambda g: g.free_count() <= max_free)
