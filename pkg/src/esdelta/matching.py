"""Maximum matchings in general graphs and the certificates built on them.

The engine is Edmonds' blossom algorithm in its contracted-base form: one
alternating BFS tree per exposed root, blossoms collapsed by relabelling
their vertices with a common base.  Roots and neighbors are scanned in
ascending index order, so the returned matching is a deterministic function
of the graph.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

from .errors import GraphError, VerificationError
from .graph import Edge, Graph, canon, components, induced_subgraph, remove_vertices

EXACT_TUTTE_THRESHOLD = 16


@dataclass(frozen=True)
class DeficiencyWitness:
    """Proof that no matching of ``G`` saturates ``A``.

    ``components`` are odd components of ``G - s`` lying inside ``A``; there
    are at least ``|s| + 1`` of them, and each needs a partner outside
    itself that only ``s`` could supply.
    """

    s: frozenset[int]
    components: tuple[frozenset[int], ...]


# -- blossom engine ---------------------------------------------------------


def _find_augmenting_path(
    adj: Sequence[Sequence[int]], match: list[int], root: int
) -> list[int] | None:
    """Search an augmenting path starting at exposed vertex ``root``.

    Returns the path as a vertex list ``[root, ..., exposed]`` or ``None``.
    """
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    path = [to]
                    while True:
                        p = parent[path[-1]]
                        path.append(p)
                        if p == root:
                            break
                        path.append(match[p])
                    path.reverse()
                    return path
                used[match[to]] = True
                queue.append(match[to])
    return None


def _augment(match: list[int], path: list[int]) -> None:
    for i in range(0, len(path), 2):
        a, b = path[i], path[i + 1]
        match[a] = b
        match[b] = a


def _max_matching_array(adj: Sequence[Sequence[int]], match: list[int] | None = None) -> list[int]:
    n = len(adj)
    if match is None:
        match = [-1] * n
        # greedy seed; only shortens the phase count
        for v in range(n):
            if match[v] == -1:
                for w in adj[v]:
                    if match[w] == -1:
                        match[v], match[w] = w, v
                        break
    for root in range(n):
        if match[root] == -1:
            path = _find_augmenting_path(adj, match, root)
            if path is not None:
                _augment(match, path)
    return match


def _pairs(match: list[int]) -> frozenset[Edge]:
    return frozenset((v, w) for v, w in enumerate(match) if w > v)


def maximum_matching(g: Graph) -> frozenset[Edge]:
    """A maximum matching of ``g`` as a set of canonical edges.

    A root that fails to augment once never augments later (standard
    blossom property), so one pass over the roots suffices.
    """
    return _pairs(_max_matching_array(g.adj))


def matching_number(g: Graph) -> int:
    return len(maximum_matching(g))


def is_matching(g: Graph, edges: Iterable[Edge]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def saturated(edges: Iterable[Edge]) -> frozenset[int]:
    return frozenset(x for e in edges for x in e)


def has_perfect_matching(g: Graph) -> bool:
    if g.n % 2:
        return False
    return 2 * matching_number(g) == g.n


# -- Gallai-Edmonds ---------------------------------------------------------


def gallai_edmonds(g: Graph) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Return the partition ``(D, A, C)`` of ``V(g)``.

    ``D`` holds the vertices missed by at least one maximum matching,
    ``A = N(D) - D`` and ``C`` the rest.  A vertex ``v`` matched to ``w`` by
    the reference matching lies in ``D`` exactly when ``w`` can be
    re-augmented in ``g - v``.
    """
    match = _max_matching_array(g.adj)
    d: set[int] = {v for v in g.vertices if match[v] == -1}
    for v in g.vertices:
        w = match[v]
        if w == -1:
            continue
        sub_adj = [tuple(x for x in g.adj[u] if x != v) if u != v else () for u in g.vertices]
        trial = list(match)
        trial[v] = trial[w] = -1
        if _find_augmenting_path(sub_adj, trial, w) is not None:
            d.add(v)
    a = {w for v in d for w in g.adj[v]} - d
    c = set(g.vertices) - d - a
    return frozenset(d), frozenset(a), frozenset(c)


def odd_component_count(g: Graph, removed: Iterable[int]) -> int:
    gone = set(removed)
    rest = [v for v in g.vertices if v not in gone]
    return sum(1 for comp in components(g, rest) if len(comp) % 2)


# -- saturating matchings ---------------------------------------------------


def auxiliary_graph(g: Graph, a: Iterable[int]) -> Graph:
    """``H``: disjoint union of ``g`` and ``K_n`` (vertices ``n..2n-1``), with
    every clique vertex joined to every vertex outside ``a``."""
    n = g.n
    a = set(a)
    edges = list(g.edges)
    edges.extend((n + i, n + j) for i, j in combinations(range(n), 2))
    edges.extend((b, n + i) for b in g.vertices if b not in a for i in range(n))
    return Graph.from_edges(2 * n, edges)


def saturating_matching(g: Graph, a: Iterable[int]) -> frozenset[Edge] | DeficiencyWitness:
    """A matching of ``g`` covering every vertex of ``a``, or a witness that
    none exists.

    Works on the auxiliary graph ``H`` from :func:`auxiliary_graph`: ``H`` has
    a perfect matching iff ``g`` has an ``a``-saturating matching, and the
    edges of such a perfect matching inside ``g`` already saturate ``a``
    (clique vertices only reach vertices outside ``a``).  On failure the
    Gallai-Edmonds barrier of ``H`` is projected back onto ``g``.
    """
    a = frozenset(a)
    for v in a:
        g._check_vertex(v)
    if not a:
        return frozenset()
    h = auxiliary_graph(g, a)
    match = _max_matching_array(h.adj)
    if all(x != -1 for x in match):
        m = frozenset(e for e in _pairs(match) if e[1] < g.n)
        if not a <= saturated(m):
            raise VerificationError("auxiliary perfect matching does not saturate A")
        return m
    _, barrier, _ = gallai_edmonds(h)
    s = frozenset(v for v in barrier if v < g.n)
    rest = [v for v in g.vertices if v not in s]
    comps = tuple(c for c in components(g, rest) if len(c) % 2 and c <= a)
    witness = DeficiencyWitness(s, comps)
    if not verify_witness(g, a, witness):
        raise VerificationError("extracted deficiency witness failed verification")
    return witness


def verify_witness(g: Graph, a: Iterable[int], w: DeficiencyWitness) -> bool:
    """Independent check of a :class:`DeficiencyWitness`."""
    a = set(a)
    if len(w.components) < len(w.s) + 1:
        return False
    seen: set[int] = set()
    for comp in w.components:
        if not comp or len(comp) % 2 == 0 or not comp <= a:
            return False
        if comp & w.s or comp & seen:
            return False
        seen |= comp
        # a component of g - s: connected, and closed under neighbors outside s
        if components(g, comp) != [comp]:
            return False
        for v in comp:
            if any(x not in comp and x not in w.s for x in g.adj[v]):
                return False
    return True


# -- factor-criticality and Tutte sets ---------------------------------------


def is_factor_critical(g: Graph) -> bool:
    if g.n % 2 == 0:
        return False
    for v in g.vertices:
        sub, _ = remove_vertices(g, [v])
        if not has_perfect_matching(sub):
            return False
    return True


def _tutte_set_exhaustive(g: Graph) -> frozenset[int]:
    verts = list(g.vertices)
    for size in range((g.n - 1) // 2, -1, -1):
        for s in combinations(verts, size):
            if odd_component_count(g, s) > size:
                return frozenset(s)
    raise VerificationError("graph without perfect matching but no Tutte set found")


def _tutte_set_structural(g: Graph) -> frozenset[int]:
    """Grow the Gallai-Edmonds barrier until every component of ``g - S`` is
    factor-critical.

    An even component ``C`` lets ``S + v`` (any ``v`` in ``C``) stay a Tutte
    set; an odd, non-factor-critical component ``C`` with ``C - v`` lacking
    a perfect matching lets ``S + v + S'`` stay one, ``S'`` being a barrier
    of ``C - v``.  Each step enlarges ``S``.
    """
    _, s, _ = gallai_edmonds(g)
    s = set(s)
    while True:
        rest = [v for v in g.vertices if v not in s]
        grown = False
        for comp in components(g, rest):
            if len(comp) % 2 == 0:
                s.add(min(comp))
                grown = True
                break
            sub, relabel = induced_subgraph(g, comp)
            back = {i: v for v, i in relabel.items()}
            for i in sub.vertices:
                minus, rel2 = remove_vertices(sub, [i])
                if has_perfect_matching(minus):
                    continue
                back2 = {j: back[x] for x, j in rel2.items()}
                _, bar, _ = gallai_edmonds(minus)
                s.add(back[i])
                s.update(back2[j] for j in bar)
                grown = True
                break
            if grown:
                break
        if not grown:
            return frozenset(s)


def maximal_tutte_set(g: Graph, exact_threshold: int = EXACT_TUTTE_THRESHOLD) -> frozenset[int] | None:
    """Largest ``S`` with ``o(g - S) > |S|``; ``None`` if ``g`` has a perfect
    matching.

    Exhaustive (largest cardinality, lexicographically first) for
    ``g.n <= exact_threshold``; above it the result is the structurally grown
    barrier of :func:`_tutte_set_structural`, which is maximal with respect to
    the one-step extensions and leaves only factor-critical components.
    """
    if has_perfect_matching(g):
        return None
    if g.n <= exact_threshold:
        return _tutte_set_exhaustive(g)
    s = _tutte_set_structural(g)
    if odd_component_count(g, s) <= len(s):
        raise VerificationError("structural Tutte set violates o(G-S) > |S|")
    return s


def bipartite_saturating_matching(
    g: Graph, left: Iterable[int], right: Iterable[int]
) -> frozenset[Edge] | None:
    """Kuhn augmenting paths from ``left`` into ``right`` using only edges of
    ``g`` between the two sides; ``None`` when ``left`` cannot be saturated."""
    right = set(right)
    owner: dict[int, int] = {}

    def try_vertex(u: int, seen: set[int]) -> bool:
        for w in g.adj[u]:
            if w in right and w not in seen:
                seen.add(w)
                if w not in owner or try_vertex(owner[w], seen):
                    owner[w] = u
                    return True
        return False

    for u in sorted(left):
        if not try_vertex(u, set()):
            return None
    return frozenset(canon(u, w) for w, u in owner.items())
