from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from esdelta.graph import Graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, min_edges: int = 0) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min(min_edges, len(pairs))) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def nonempty_graphs(max_n: int = 8) -> st.SearchStrategy[Graph]:
    return graphs(min_n=2, max_n=max_n, min_edges=1)
