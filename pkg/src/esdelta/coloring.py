"""Proper edge colorings: Misra-Gries (Delta+1) and exact Delta-colorability."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InstanceTooLargeError
from .graph import Edge, Graph, canon, core, induced_subgraph, is_bipartite

EXACT_EDGE_THRESHOLD = 40
DEFAULT_NODE_BUDGET = 200_000


@dataclass(frozen=True)
class EdgeColoring:
    colors: dict[Edge, int]
    k: int

    def color_classes(self) -> list[frozenset[Edge]]:
        classes: list[set[Edge]] = [set() for _ in range(self.k)]
        for e, c in self.colors.items():
            classes[c].add(e)
        return [frozenset(c) for c in classes]


def is_proper(g: Graph, coloring: EdgeColoring) -> bool:
    """Every edge colored from ``range(k)`` and no two adjacent edges share
    a color."""
    if set(coloring.colors) != set(g.edges):
        return False
    for v in g.vertices:
        seen = set()
        for w in g.adj[v]:
            c = coloring.colors[canon(v, w)]
            if not 0 <= c < coloring.k or c in seen:
                return False
            seen.add(c)
    return True


def vizing_coloring(g: Graph) -> EdgeColoring:
    """Misra-Gries fan rotation; uses at most ``Delta + 1`` colors."""
    g.require_edges()
    k = g.max_degree + 1
    color: dict[Edge, int] = {}
    at: list[dict[int, int]] = [{} for _ in g.vertices]  # vertex -> color -> neighbor

    def set_color(x: int, y: int, c: int) -> None:
        color[canon(x, y)] = c
        at[x][c] = y
        at[y][c] = x

    def unset(x: int, y: int) -> int:
        c = color.pop(canon(x, y))
        del at[x][c]
        del at[y][c]
        return c

    def free(x: int) -> int:
        return next(c for c in range(k) if c not in at[x])

    for u, v in g.edges:
        fan = [v]
        in_fan = {v}
        while True:
            last = fan[-1]
            for w in g.adj[u]:
                if w in in_fan:
                    continue
                cw = color.get(canon(u, w))
                if cw is not None and cw not in at[last]:
                    fan.append(w)
                    in_fan.add(w)
                    break
            else:
                break
        c = free(u)
        d = free(fan[-1])

        # invert the cd-path starting at u (its first edge has color d)
        path = []
        x, col = u, d
        while col in at[x]:
            y = at[x][col]
            path.append((x, y, col))
            x = y
            col = c if col == d else d
        for x, y, _ in path:
            unset(x, y)
        for x, y, col in path:
            set_color(x, y, c if col == d else d)

        # shortest prefix of the fan that is still a fan and ends where d is free
        end = None
        for i, w in enumerate(fan):
            if i > 0:
                cw = color.get(canon(u, w))
                if cw is None or cw in at[fan[i - 1]]:
                    break
            if d not in at[w]:
                end = i
                break
        if end is None:
            raise AssertionError("Misra-Gries invariant broken: no rotatable fan prefix")
        shifted = [unset(u, fan[i + 1]) for i in range(end)]
        for i, cw in enumerate(shifted):
            set_color(u, fan[i], cw)
        set_color(u, fan[end], d)

    return EdgeColoring(dict(sorted(color.items())), k)


def _is_overfull(g: Graph, k: int) -> bool:
    # each color class is a matching of size at most floor(n/2)
    return g.m > k * (g.n // 2)


def _edge_order(g: Graph) -> list[Edge]:
    deg = g.degrees
    return sorted(g.edges, key=lambda e: (-(deg[e[0]] + deg[e[1]]), e))


def color_with(g: Graph, k: int, budget: int | None = None) -> EdgeColoring | None | bool:
    """Backtracking search for a proper ``k``-edge coloring.

    Returns the coloring, ``None`` if none exists, or ``False`` when the node
    budget ran out first.  The first edge is fixed to color 0 and a new color
    is only opened as the next unused one, which removes color permutations.
    """
    if g.m == 0:
        return EdgeColoring({}, k)
    if k < g.max_degree or _is_overfull(g, k):
        return None
    order = _edge_order(g)
    used = [0] * g.n  # bitmask of colors at each vertex
    assign = [0] * len(order)
    nodes = 0

    def search(i: int, top: int) -> bool | None:
        nonlocal nodes
        if i == len(order):
            return True
        nodes += 1
        if budget is not None and nodes > budget:
            return None
        u, v = order[i]
        busy = used[u] | used[v]
        for c in range(min(top + 1, k - 1) + 1):
            bit = 1 << c
            if busy & bit:
                continue
            used[u] |= bit
            used[v] |= bit
            assign[i] = c
            r = search(i + 1, max(top, c))
            used[u] &= ~bit
            used[v] &= ~bit
            if r is None or r:
                return r
        return False

    u, v = order[0]
    used[u] = used[v] = 1
    r = search(1, 0)
    if r is None:
        return False
    if not r:
        return None
    return EdgeColoring(dict(sorted(zip(order, assign))), k)


def chromatic_index_exact(g: Graph, threshold: int = EXACT_EDGE_THRESHOLD) -> int:
    """chi'(g), deciding Delta-colorability by backtracking (Vizing leaves
    only Delta and Delta+1)."""
    g.require_edges()
    if g.m > threshold:
        raise InstanceTooLargeError(f"{g.m} edges exceeds exact threshold {threshold}")
    delta = g.max_degree
    return delta if color_with(g, delta) is not None else delta + 1


def core_is_class1(
    g: Graph,
    threshold: int = EXACT_EDGE_THRESHOLD,
    budget: int = DEFAULT_NODE_BUDGET,
) -> bool | None:
    """Whether ``G[core(G)]`` has a proper ``Delta(G)``-edge coloring.

    ``Delta`` is the maximum degree of the whole graph, not of the core.
    ``None`` means undecided: the core is above ``threshold`` edges and the
    budgeted search neither found a coloring nor ran to completion.
    """
    delta = g.max_degree
    h, _ = induced_subgraph(g, core(g))
    if h.m == 0:
        return True
    if h.max_degree < delta:
        return vizing_coloring(h).k <= delta
    if is_bipartite(h):
        return True
    if _is_overfull(h, delta):
        return False
    if h.m <= threshold:
        return color_with(h, delta) is not None
    r = color_with(h, delta, budget=budget)
    if r is False:
        return None
    return r is not None
