"""Doubling construction that turns a graph into a Delta-regular one.

Each step takes two copies of the current graph (``v`` and ``v + n``) and
joins ``v`` to ``v + n`` for every vertex below maximum degree.  After
``Delta - delta`` steps the result is Delta-regular.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GraphError, PreconditionError, VerificationError
from .graph import Edge, Graph, odd_girth
from .io import to_graph6
from .stability import es_delta


@dataclass(frozen=True)
class RegularizationTrace:
    steps: tuple[Graph, ...]
    matchings_added: tuple[frozenset[Edge], ...]

    @property
    def result(self) -> Graph:
        return self.steps[-1]

    def to_graph6_lines(self) -> str:
        lines = []
        for i, h in enumerate(self.steps):
            lines.append(f"# step {i}, delta={h.max_degree}, deltamin={h.min_degree}")
            lines.append(to_graph6(h))
        return "\n".join(lines) + "\n"


def _double(g: Graph) -> tuple[Graph, frozenset[Edge]]:
    n, delta = g.n, g.max_degree
    cross = frozenset((v, v + n) for v in g.vertices if g.degrees[v] < delta)
    edges = list(g.edges)
    edges.extend((u + n, v + n) for u, v in g.edges)
    edges.extend(cross)
    return Graph.from_edges(2 * n, edges), cross


def regularize_step(g: Graph) -> Graph:
    return _checked_step(g)[0]


def _checked_step(g: Graph) -> tuple[Graph, frozenset[Edge]]:
    if g.is_regular():
        raise PreconditionError("graph is already regular")
    h, cross = _double(g)
    if h.max_degree != g.max_degree or h.min_degree != g.min_degree + 1:
        raise VerificationError(
            f"step broke degree arithmetic: ({g.max_degree},{g.min_degree}) -> "
            f"({h.max_degree},{h.min_degree})"
        )
    return h, cross


def regularize(g: Graph) -> RegularizationTrace:
    g.require_edges()
    steps, added = [g], []
    for _ in range(g.max_degree - g.min_degree):
        h, cross = _checked_step(steps[-1])
        steps.append(h)
        added.append(cross)
    if not steps[-1].is_regular():
        raise VerificationError("regularization did not end in a regular graph")
    return RegularizationTrace(tuple(steps), tuple(added))


@dataclass(frozen=True)
class RatioCheck:
    holds: bool
    ratio_regularized: Fraction
    ratio_original: Fraction


def check_ratio_lemma(g: Graph, trace: RegularizationTrace | None = None) -> RatioCheck:
    """Compare ``|V(R)|/es(R)`` with ``|V(G)|/es(G)`` exactly."""
    trace = regularize(g) if trace is None else trace
    r = trace.result
    rr = Fraction(r.n, es_delta(r))
    rg = Fraction(g.n, es_delta(g))
    return RatioCheck(rr <= rg, rr, rg)


def check_odd_girth_preserved(g: Graph, trace: RegularizationTrace | None = None) -> bool:
    og = odd_girth(g)
    if og is None:
        raise GraphError("odd girth undefined for bipartite graphs")
    trace = regularize(g) if trace is None else trace
    return all((odd_girth(h) or 0) >= og for h in trace.steps)
