"""Delta-edge stability: exact value, certified mitigating sets, bounds.

A set of edges is *mitigating* when deleting it lowers the maximum degree.
The minimum size of such a set equals ``|core| - alpha'(G[core])``, and a
minimum one is obtained from a maximum matching ``M`` of the core plus a
matching ``M'`` that saturates the core vertices ``M`` leaves exposed.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .coloring import core_is_class1
from .errors import InstanceTooLargeError, PreconditionError, VerificationError
from .graph import (
    Edge,
    Graph,
    canon,
    components,
    core,
    induced_subgraph,
    is_bipartite,
    is_connected,
    odd_girth,
    remove_edges,
)
from .matching import (
    DeficiencyWitness,
    bipartite_saturating_matching,
    is_matching,
    maximum_matching,
    saturated,
    saturating_matching,
)

CONDITION3_THRESHOLD = 16
ALPHA_THRESHOLD = 40


def es_delta(g: Graph) -> int:
    c = core(g)
    h, _ = induced_subgraph(g, c)
    return len(c) - len(maximum_matching(h))


def is_mitigating(g: Graph, s: Iterable[tuple[int, int]]) -> bool:
    g.require_edges()
    return remove_edges(g, s).max_degree <= g.max_degree - 1


@dataclass(frozen=True)
class MitigatingCertificate:
    edge_set: frozenset[Edge]
    claimed_es: int
    structure: tuple[str, ...]
    core_matching: frozenset[Edge]
    hall_matching: frozenset[Edge]


def path_structure(edges: Iterable[Edge]) -> list[tuple[str, frozenset[Edge]]]:
    """Split an edge set into connected pieces tagged ``P2``, ``P3`` or
    ``other``; pieces are ordered by their smallest edge."""
    edges = sorted(set(edges))
    owner: dict[int, int] = {}
    parent = list(range(len(edges)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, (u, v) in enumerate(edges):
        for x in (u, v):
            if x in owner:
                parent[find(i)] = find(owner[x])
            else:
                owner[x] = i
    groups: dict[int, list[Edge]] = {}
    for i, e in enumerate(edges):
        groups.setdefault(find(i), []).append(e)
    out = []
    for grp in sorted(groups.values()):
        verts = {x for e in grp for x in e}
        if len(grp) == 1:
            tag = "P2"
        elif len(grp) == 2 and len(verts) == 3:
            tag = "P3"
        else:
            tag = "other"
        out.append((tag, frozenset(grp)))
    return out


def construct_mitigating_set(g: Graph) -> MitigatingCertificate:
    c = core(g)
    h, relabel = induced_subgraph(g, c)
    back = {i: v for v, i in relabel.items()}
    m = frozenset(canon(back[a], back[b]) for a, b in maximum_matching(h))
    exposed = c - saturated(m)
    # exposed core vertices are pairwise non-adjacent and have full degree,
    # so Hall's condition holds from them into their neighborhood
    nbhd = {w for v in exposed for w in g.adj[v]}
    m2 = bipartite_saturating_matching(g, exposed, nbhd)
    if m2 is None:
        raise VerificationError("Hall matching from exposed core vertices failed")
    edge_set = m | m2
    cert = MitigatingCertificate(
        edge_set=edge_set,
        claimed_es=len(c) - len(m),
        structure=tuple(tag for tag, _ in path_structure(edge_set)),
        core_matching=m,
        hall_matching=m2,
    )
    problems = certificate_problems(g, cert)
    if problems:
        raise VerificationError("; ".join(problems))
    return cert


def certificate_problems(g: Graph, cert: MitigatingCertificate) -> list[str]:
    """Independent re-check of every certificate invariant; empty when sound."""
    out = []
    if remove_edges(g, cert.edge_set).max_degree != g.max_degree - 1:
        out.append("removal does not lower the maximum degree by exactly one")
    if len(cert.edge_set) != cert.claimed_es:
        out.append("edge set size differs from claimed value")
    if cert.claimed_es != es_delta(g):
        out.append("claimed value differs from |core| - alpha'(core)")
    tags = [tag for tag, _ in path_structure(cert.edge_set)]
    if any(t not in ("P2", "P3") for t in tags):
        out.append("mitigating subgraph has a component other than P2/P3")
    if tuple(tags) != cert.structure:
        out.append("recorded structure does not match the edge set")
    if cert.edge_set != cert.core_matching | cert.hall_matching:
        out.append("edge set is not the union of the two matchings")
    if not is_matching(g, cert.core_matching) or not is_matching(g, cert.hall_matching):
        out.append("a component matching is not a matching of the graph")
    return out


def has_matching_minimum_mitigating_set(g: Graph) -> bool:
    g.require_edges()
    return not isinstance(saturating_matching(g, core(g)), DeficiencyWitness)


def _matchingize_step(
    g: Graph, delta: int, current: set[Edge], e: Edge, m_partner: dict[int, int]
) -> set[Edge]:
    """Insert ``e`` into the matching ``current`` (a minimum mitigating set of
    ``g - e``), repairing the one possible conflict by a replacement chain
    along edges of the core-saturating matching."""
    covered = {x: f for f in current for x in f}
    u, v = e
    hit = [x for x in e if x in covered]
    if not hit:
        return current | {e}
    if len(hit) == 2:
        raise PreconditionError("edge joins two mitigating edges; set was not minimum")
    v = hit[0]
    u = e[0] if e[1] == v else e[1]
    if len(g.adj[u]) != delta:
        raise PreconditionError("free endpoint of a peeled edge is not a core vertex")
    out = set(current)
    # e is dropped; u's own matching edge takes its place
    x = u
    while True:
        y = m_partner.get(x)
        if y is None:
            raise PreconditionError(f"core vertex {x} not saturated by the given matching")
        out.add(canon(x, y))
        clash = covered.get(y)
        if clash is None or clash not in out:
            break
        out.discard(clash)
        nxt = clash[0] if clash[1] == y else clash[1]
        if len(g.adj[nxt]) < delta:
            break
        x = nxt
    return out


def matchingize_mitigating_set(
    g: Graph, l: Iterable[tuple[int, int]], m: Iterable[tuple[int, int]]
) -> frozenset[Edge]:
    """Turn a minimum mitigating set into one that is a matching.

    ``m`` must be a matching saturating the core.  Edges of ``l`` outside
    ``m`` are peeled one at a time (smallest first); unwinding that peel,
    each edge is put back and a single adjacency conflict is resolved by
    walking the chain ``e -> e1 = u y1 in m -> e2 = x1 y2 in m -> ...`` until
    no clash remains.  The result is checked before it is returned.
    """
    g.require_edges()
    l = {canon(*e) for e in l}
    m = {canon(*e) for e in m}
    delta = g.max_degree
    target = es_delta(g)
    if not is_matching(g, m) or not core(g) <= saturated(m):
        raise PreconditionError("m is not a matching saturating core(G)")
    if not all(g.has_edge(*e) for e in l):
        raise PreconditionError("l contains an edge outside the graph")
    if len(l) != target or not is_mitigating(g, l):
        raise PreconditionError("l is not a minimum mitigating set")

    partner = {}
    for a, b in m:
        partner[a] = b
        partner[b] = a
    peeled = sorted(l - m)
    graphs = [g]
    for e in peeled:
        graphs.append(remove_edges(graphs[-1], [e]))
    current = set(l & m)
    for e, gi in zip(reversed(peeled), reversed(graphs[:-1])):
        current = _matchingize_step(gi, delta, current, e, partner)

    result = frozenset(current)
    if not (is_matching(g, result) and len(result) == target and is_mitigating(g, result)):
        raise VerificationError("matching transformation produced an invalid set")
    return result


def check_condition3(g: Graph, threshold: int = CONDITION3_THRESHOLD) -> bool:
    """For every nonempty ``S`` within the core: ``2*es(G[N[S]]) <= |N[S]|``."""
    c = sorted(core(g))
    if len(c) > threshold:
        raise InstanceTooLargeError(f"core of size {len(c)} exceeds threshold {threshold}")
    cache: dict[frozenset[int], bool] = {}
    for size in range(1, len(c) + 1):
        for s in combinations(c, size):
            closed = g.closed_neighborhood(s)
            ok = cache.get(closed)
            if ok is None:
                h, _ = induced_subgraph(g, closed)
                ok = cache[closed] = 2 * es_delta(h) <= h.n
            if not ok:
                return False
    return True


# -- bounds -----------------------------------------------------------------


@dataclass(frozen=True)
class BoundEntry:
    name: str
    hypothesis_holds: bool
    bound_value: Fraction | None
    es_value: int
    satisfied: bool | None
    informational: bool = False

    @property
    def violated(self) -> bool:
        return self.hypothesis_holds and self.satisfied is False and not self.informational

    @property
    def tight(self) -> bool:
        return self.bound_value is not None and self.es_value == self.bound_value


def _entry(name: str, holds: bool, bound: Fraction | None, es: int, informational: bool = False) -> BoundEntry:
    sat = None if bound is None else es <= bound
    return BoundEntry(name, holds, bound, es, sat, informational)


def independence_number(g: Graph, limit: int = ALPHA_THRESHOLD) -> int:
    """Exact alpha via bitmask branching on a maximum-degree vertex."""
    if g.n > limit:
        raise InstanceTooLargeError(f"n={g.n} exceeds exact independence threshold {limit}")
    nb = [sum(1 << w for w in g.adj[v]) for v in g.vertices]
    memo: dict[int, int] = {}

    def best(mask: int) -> int:
        if mask == 0:
            return 0
        if mask in memo:
            return memo[mask]
        # pick a vertex of max degree in the remaining graph
        pick, pdeg = -1, -1
        low_v = -1
        m = mask
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            d = (nb[v] & mask).bit_count()
            if d <= 1:
                low_v = v
                break
            if d > pdeg:
                pick, pdeg = v, d
        if low_v >= 0:
            # a vertex of degree <= 1 is always in some maximum independent set
            r = 1 + best(mask & ~(nb[low_v] | (1 << low_v)))
        else:
            r = max(
                best(mask & ~(1 << pick)),
                1 + best(mask & ~(nb[pick] | (1 << pick))),
            )
        memo[mask] = r
        return r

    return best((1 << g.n) - 1)


def bound_n_minus_alpha(g: Graph, es: int | None = None, alpha_limit: int = ALPHA_THRESHOLD) -> BoundEntry:
    es = es_delta(g) if es is None else es
    return _entry("n_minus_alpha", True, Fraction(g.n - independence_number(g, alpha_limit)), es)


def bound_odd_girth(g: Graph, es: int | None = None) -> BoundEntry:
    es = es_delta(g) if es is None else es
    og = odd_girth(g)
    if og is None:
        return _entry("odd_girth", False, None, es)
    k = (og - 1) // 2
    return _entry("odd_girth", True, Fraction(k + 1, 2 * k + 1) * g.n, es)


def regular_bound_value(k: int, n: int) -> Fraction:
    """Upper bound on es for connected k-regular graphs of order n (k >= 2)."""
    if k < 2:
        raise PreconditionError("degree must be at least 2")
    if k % 2 == 0:
        main = (1 - Fraction(k * k + 4, 2 * (k * k + k + 2))) * n
        return max(main, Fraction(n + 1, 2))
    return Fraction((k**3 + k**2 - 6 * k + 2) * n + 2 * k - 2, 2 * (k**3 - 3 * k))


def bound_regular(g: Graph, es: int | None = None) -> list[BoundEntry]:
    """Closed-form regular bounds; the second entry is the simplified even
    ``k >= 4`` form, reported but informational (it fails for some small
    odd orders, e.g. K5)."""
    es = es_delta(g) if es is None else es
    k = g.max_degree
    holds = g.is_regular() and is_connected(g) and k >= 2
    out = [_entry("regular", holds, regular_bound_value(k, g.n) if holds else None, es)]
    if holds and k % 2 == 0 and k >= 4:
        simple = (1 - Fraction(k * k + 4, 2 * (k * k + k + 2))) * g.n
        out.append(_entry("regular_even_simple", True, simple, es, informational=True))
    return out


def bound_bipartite(g: Graph, es: int | None = None) -> BoundEntry:
    es = es_delta(g) if es is None else es
    holds = is_bipartite(g)
    return _entry("bipartite_half", holds, Fraction(g.n, 2) if holds else None, es)


def bound_class1(g: Graph, es: int | None = None, class1: bool | None = None) -> BoundEntry:
    es = es_delta(g) if es is None else es
    if class1 is None:
        class1 = core_is_class1(g)
    return _entry("class1_half", bool(class1), Fraction(g.n, 2) if class1 else None, es)


def bound_dense(g: Graph, es: int | None = None) -> list[BoundEntry]:
    """Dense bound ``ceil(n/2)`` under ``3*Delta >= n - 2`` and the edge-count
    variant under ``6m >= n(n-2)``; both assume a connected graph."""
    es = es_delta(g) if es is None else es
    conn = is_connected(g)
    half_up = Fraction(math.ceil(g.n / 2))
    return [
        _entry("dense", conn and 3 * g.max_degree >= g.n - 2, half_up, es),
        _entry("dense_size", conn and 6 * g.m >= g.n * (g.n - 2), half_up, es),
    ]


def all_bounds(
    g: Graph,
    es: int | None = None,
    alpha_limit: int = ALPHA_THRESHOLD,
    class1: bool | None = None,
) -> list[BoundEntry]:
    es = es_delta(g) if es is None else es
    out = []
    if g.n <= alpha_limit:
        out.append(bound_n_minus_alpha(g, es, alpha_limit))
    out.append(bound_odd_girth(g, es))
    out.extend(bound_regular(g, es))
    out.append(bound_bipartite(g, es))
    out.append(bound_class1(g, es, class1))
    out.extend(bound_dense(g, es))
    return out


# -- report -----------------------------------------------------------------


@dataclass
class StabilityReport:
    n: int
    m: int
    delta: int
    core: list[int]
    alpha_prime_core: int
    es: int
    certificate: MitigatingCertificate
    bounds: list[BoundEntry] = field(default_factory=list)

    def to_dict(self) -> dict:
        def frac(x: Fraction | None) -> str | None:
            return None if x is None else str(x)

        return {
            "schema": 1,
            "n": self.n,
            "m": self.m,
            "delta": self.delta,
            "core_size": len(self.core),
            "core": self.core,
            "alpha_prime_core": self.alpha_prime_core,
            "es": self.es,
            "mitigating_set": [list(e) for e in sorted(self.certificate.edge_set)],
            "structure": list(self.certificate.structure),
            "core_matching": [list(e) for e in sorted(self.certificate.core_matching)],
            "hall_matching": [list(e) for e in sorted(self.certificate.hall_matching)],
            "bounds": [
                {
                    "name": b.name,
                    "hypothesis_holds": b.hypothesis_holds,
                    "bound_value": frac(b.bound_value),
                    "es_value": b.es_value,
                    "satisfied": b.satisfied,
                    "informational": b.informational,
                }
                for b in self.bounds
            ],
        }


def stability_report(g: Graph, alpha_limit: int = ALPHA_THRESHOLD) -> StabilityReport:
    cert = construct_mitigating_set(g)
    c = sorted(core(g))
    return StabilityReport(
        n=g.n,
        m=g.m,
        delta=g.max_degree,
        core=c,
        alpha_prime_core=len(cert.core_matching),
        es=cert.claimed_es,
        certificate=cert,
        bounds=all_bounds(g, cert.claimed_es, alpha_limit),
    )
