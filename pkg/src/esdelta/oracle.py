"""Brute-force reference values.

Nothing here calls the matching, coloring or stability engines; these are
plain enumerations over edge or vertex subsets, used to certify the fast
paths.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations

from .errors import InstanceTooLargeError
from .graph import Graph

ES_EDGE_LIMIT = 24
ALPHA_VERTEX_LIMIT = 20
ALPHA_PRIME_EDGE_LIMIT = 24
CHI_EDGE_LIMIT = 20


def brute_es(g: Graph, limit: int = ES_EDGE_LIMIT) -> int:
    """Smallest ``k`` such that deleting some ``k`` edges drops the maximum
    degree, by enumerating edge subsets in increasing size."""
    edges = g.edges
    if not edges:
        raise ValueError("graph has no edges")
    if len(edges) > limit:
        raise InstanceTooLargeError(f"{len(edges)} edges exceeds oracle limit {limit}")
    deg0 = list(g.degrees)
    target = max(deg0) - 1
    for k in range(1, len(edges) + 1):
        for subset in combinations(edges, k):
            deg = deg0.copy()
            for u, v in subset:
                deg[u] -= 1
                deg[v] -= 1
            if max(deg) <= target:
                return k
    raise AssertionError("removing every edge must drop the maximum degree")


def brute_alpha(g: Graph, limit: int = ALPHA_VERTEX_LIMIT) -> int:
    """Independence number by include/exclude branching with a size bound."""
    if g.n > limit:
        raise InstanceTooLargeError(f"n={g.n} exceeds oracle limit {limit}")
    nbr = [set(a) for a in g.adj]
    best = 0

    def grow(chosen: int, candidates: list[int]) -> None:
        nonlocal best
        if chosen + len(candidates) <= best:
            return
        if not candidates:
            best = max(best, chosen)
            return
        v, rest = candidates[0], candidates[1:]
        grow(chosen + 1, [w for w in rest if w not in nbr[v]])
        grow(chosen, rest)

    grow(0, list(range(g.n)))
    return best


def brute_alpha_prime(g: Graph, limit: int = ALPHA_PRIME_EDGE_LIMIT) -> int:
    """Matching number by walking every matching (take/skip each edge)."""
    edges = g.edges
    if len(edges) > limit:
        raise InstanceTooLargeError(f"{len(edges)} edges exceeds oracle limit {limit}")
    best = 0

    def walk(i: int, used: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (len(edges) - i) <= best:
            return
        for j in range(i, len(edges)):
            u, v = edges[j]
            if not used >> u & 1 and not used >> v & 1:
                walk(j + 1, used | 1 << u | 1 << v, size + 1)

    walk(0, 0, 0)
    return best


def _colorable(edges: tuple[tuple[int, int], ...], n: int, k: int) -> bool:
    colors = [[False] * k for _ in range(n)]

    def place(i: int) -> bool:
        if i == len(edges):
            return True
        u, v = edges[i]
        for c in range(k):
            if not colors[u][c] and not colors[v][c]:
                colors[u][c] = colors[v][c] = True
                if place(i + 1):
                    return True
                colors[u][c] = colors[v][c] = False
        return False

    return place(0)


def brute_chromatic_index(g: Graph, limit: int = CHI_EDGE_LIMIT) -> int:
    """chi' by full backtracking for ``k = Delta`` then ``Delta + 1``."""
    if g.m > limit:
        raise InstanceTooLargeError(f"{g.m} edges exceeds oracle limit {limit}")
    if g.m == 0:
        return 0
    k = g.max_degree
    while not _colorable(g.edges, g.n, k):
        k += 1
    return k


# -- exhaustive small-graph sweep ---------------------------------------------


def _connected_mask(n: int, nbr: list[int]) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= nbr[b.bit_length() - 1]
            m ^= b
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def all_graphs(n: int, connected: bool = True) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices (isomorphs included), by
    enumerating all ``2^(n(n-1)/2)`` edge masks."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        chosen = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if connected:
            nbr = [0] * n
            for u, v in chosen:
                nbr[u] |= 1 << v
                nbr[v] |= 1 << u
            if not _connected_mask(n, nbr):
                continue
        yield Graph.from_edges(n, chosen)


def sweep(max_n: int, min_n: int = 2, connected: bool = True) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from all_graphs(n, connected)
