"""Immutable simple undirected graphs on vertices ``0..n-1``.

Edges are always stored and reported in canonical order ``(u, v)`` with
``u < v``, so edge sets compare by plain set equality.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

from .errors import EdgelessGraphError, GraphError

Edge = tuple[int, int]


def canon(u: int, v: int) -> Edge:
    """Return the edge ``uv`` in canonical ``(min, max)`` order."""
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=True)
class Graph:
    """Simple graph with sorted adjacency tuples.

    Build instances with :meth:`from_edges`; the raw constructor trusts its
    input.  ``labels`` is a presentation-only sidecar (vertex names read from
    a file) and does not take part in equality.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Iterable[str] | None = None,
    ) -> Graph:
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise GraphError(f"parallel edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        lab = tuple(labels) if labels is not None else None
        if lab is not None and len(lab) != n:
            raise GraphError("label table size does not match vertex count")
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), lab)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, tuple(() for _ in range(n)))

    # -- basic queries -------------------------------------------------

    @cached_property
    def _adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adjsets[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adj[v]

    def closed_neighborhood(self, vs: Iterable[int]) -> frozenset[int]:
        """``N[S]``: the vertices of ``vs`` together with all their neighbors."""
        out: set[int] = set()
        for v in vs:
            self._check_vertex(v)
            out.add(v)
            out.update(self.adj[v])
        return frozenset(out)

    def is_regular(self) -> bool:
        return self.n == 0 or self.max_degree == self.min_degree

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"vertex {v!r} out of range for n={self.n}")

    def require_edges(self) -> None:
        if self.m == 0:
            raise EdgelessGraphError("graph has no edges")

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def degree(g: Graph, v: int) -> int:
    g._check_vertex(v)
    return len(g.adj[v])


def core(g: Graph) -> frozenset[int]:
    """Vertices of maximum degree.  Rejects edgeless graphs."""
    g.require_edges()
    d = g.max_degree
    return frozenset(v for v in g.vertices if g.degrees[v] == d)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[s]`` relabeled to ``0..|s|-1`` (ascending order) and the map
    from original vertex to new index."""
    verts = sorted(set(s))
    for v in verts:
        g._check_vertex(v)
    relabel = {v: i for i, v in enumerate(verts)}
    edges = [
        (relabel[u], relabel[w])
        for u in verts
        for w in g.adj[u]
        if u < w and w in relabel
    ]
    labels = None
    if g.labels is not None:
        labels = [g.labels[v] for v in verts]
    return Graph.from_edges(len(verts), edges, labels), relabel


def remove_edges(g: Graph, s: Iterable[tuple[int, int]]) -> Graph:
    """``G - S`` on the same vertex set."""
    drop = set()
    for u, v in s:
        e = canon(u, v)
        if not g.has_edge(*e):
            raise GraphError(f"edge {e} not in graph")
        drop.add(e)
    if not drop:
        return g
    return Graph.from_edges(g.n, (e for e in g.edges if e not in drop), g.labels)


def remove_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    gone = set(s)
    return induced_subgraph(g, (v for v in g.vertices if v not in gone))


def components(g: Graph, within: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Connected components of ``g`` (or of ``g[within]``), in order of their
    smallest vertex."""
    allowed = set(g.vertices) if within is None else set(within)
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def e_between(g: Graph, s: Iterable[int], t: Iterable[int]) -> int:
    """Number of edges with one end in ``s`` and the other in ``t``."""
    s, t = set(s), set(t)
    for v in s | t:
        g._check_vertex(v)
    if s & t:
        raise GraphError("e_between needs disjoint vertex sets")
    return sum(1 for u in s for w in g.adj[u] if w in t)


def two_coloring(g: Graph) -> list[int] | None:
    """A proper vertex 2-coloring, or ``None`` if the graph is not bipartite."""
    color = [-1] * g.n
    for s in g.vertices:
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def odd_girth(g: Graph) -> int | None:
    """Length of a shortest odd cycle, ``None`` for bipartite graphs.

    BFS from every vertex; an edge ``xy`` with ``dist[x] == dist[y]`` closes
    an odd closed walk of length ``2*dist[x] + 1`` through the root, and the
    minimum of these over all roots is exactly the odd girth.
    """
    best: int | None = None
    for root in g.vertices:
        dist = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] + 1 >= best:
                break
            for y in g.adj[x]:
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    queue.append(y)
                elif dist[y] == dist[x]:
                    length = 2 * dist[x] + 1
                    if best is None or length < best:
                        best = length
    return best
