import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

import cyclebound as cb


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    """Random spanning tree plus a random set of extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        edges.add((draw(st.integers(0, v - 1)), v))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    if pairs:
        edges |= draw(st.sets(st.sampled_from(pairs)))
    return cb.from_edges(n, sorted(edges))


@st.composite
def graphs_with_permutation(draw, min_n=2, max_n=8):
    g = draw(connected_graphs(min_n, max_n))
    sigma = draw(st.permutations(list(range(g.n))))
    return g, list(sigma)
