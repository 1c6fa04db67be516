"""Deterministic graph constructors, including the two extremal families."""

from __future__ import annotations

import random
from itertools import combinations

from .errors import GraphError
from .graph import Graph

DEFAULT_RETRY_BUDGET = 10_000


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("both parts must be nonempty")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the center at vertex 0."""
    return complete_bipartite(1, leaves)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def _k5_minus_e(offset: int) -> list[tuple[int, int]]:
    # the missing edge is (offset, offset + 1)
    return [(offset + i, offset + j) for i, j in combinations(range(5), 2) if (i, j) != (0, 1)]


def gen_gk(k: int) -> Graph:
    """The 4-regular graph of order ``11k`` built from ``2k`` copies of K5 - e.

    Block ``i`` occupies ``5i .. 5i+4`` with its deleted edge between
    ``a_i = 5i`` and ``b_i = 5i + 1``.  Hub ``v_j`` (vertex ``10k + j``) is
    joined to ``b`` of blocks ``2j, 2j+1`` and to ``a`` of blocks
    ``2j+2, 2j+3`` (indices mod ``2k``), so the last hub closes the ring
    back onto blocks 0 and 1.
    """
    if not isinstance(k, int) or k < 1:
        raise GraphError("G_k needs k >= 1")
    blocks = 2 * k
    edges = []
    for i in range(blocks):
        edges.extend(_k5_minus_e(5 * i))
    for j in range(k):
        hub = 10 * k + j
        left = (2 * j, 2 * j + 1)
        right = ((2 * j + 2) % blocks, (2 * j + 3) % blocks)
        edges.extend((5 * i + 1, hub) for i in left)
        edges.extend((5 * i, hub) for i in right)
    return Graph.from_edges(11 * k, edges)


def gen_gt(t: int) -> Graph:
    """Three copies of ``K_t`` minus an edge plus a vertex ``u`` (the last
    vertex, ``3t``) joined to the six ends of the deleted edges."""
    if not isinstance(t, int) or t < 7 or t % 2 == 0:
        raise GraphError("G_t needs odd t >= 7")
    u = 3 * t
    edges = []
    for b in range(3):
        off = b * t
        edges.extend(
            (off + i, off + j) for i, j in combinations(range(t), 2) if (i, j) != (0, 1)
        )
        edges.extend([(off, u), (off + 1, u)])
    return Graph.from_edges(3 * t + 1, edges)


def gen_random_regular(n: int, k: int, seed: int, budget: int = DEFAULT_RETRY_BUDGET) -> Graph:
    """Pairing model: shuffle ``n*k`` stubs, pair them off, reject the whole
    pairing on any loop or repeated edge."""
    if n < 1 or k < 0 or k >= n or (n * k) % 2:
        raise GraphError(f"no simple {k}-regular graph on {n} vertices")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(k)]
    for _ in range(budget):
        rng.shuffle(stubs)
        edges = set()
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                break
            e = (u, v) if u < v else (v, u)
            if e in edges:
                break
            edges.add(e)
        else:
            return Graph.from_edges(n, sorted(edges))
    raise GraphError(f"pairing model gave up after {budget} attempts")


def gen_random(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi ``G(n, p)`` drawn from ``rng``."""
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def parse_family(spec: str) -> Graph:
    """Build a graph from a family string such as ``gk:2`` or ``kbip:3,3``."""
    name, _, arg = spec.strip().partition(":")
    try:
        params = [int(x) for x in arg.split(",")] if arg else []
    except ValueError:
        raise GraphError(f"bad parameters in family spec {spec!r}") from None
    builders = {
        "gk": (gen_gk, 1),
        "gt": (gen_gt, 1),
        "cycle": (cycle, 1),
        "path": (path, 1),
        "complete": (complete, 1),
        "star": (star, 1),
        "kbip": (complete_bipartite, 2),
        "petersen": (petersen, 0),
        "randreg": (gen_random_regular, 3),
    }
    if name not in builders:
        raise GraphError(f"unknown family {name!r}")
    fn, arity = builders[name]
    if len(params) != arity:
        raise GraphError(f"family {name!r} takes {arity} parameter(s)")
    if name == "randreg":
        n, k, seed = params
        return gen_random_regular(n, k, seed)
    return fn(*params)
