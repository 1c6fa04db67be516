"""Exact Delta-edge stability numbers, certified mitigating sets and the
bounds around them."""

from .errors import (
    EdgelessGraphError,
    GraphError,
    InstanceTooLargeError,
    ParseError,
    PreconditionError,
    VerificationError,
)
from .graph import Graph, core, degree, induced_subgraph, odd_girth, remove_edges
from .io import from_edgelist, from_graph6, to_edgelist, to_graph6
from .matching import maximum_matching, saturating_matching
from .stability import (
    MitigatingCertificate,
    construct_mitigating_set,
    es_delta,
    is_mitigating,
    stability_report,
)

__all__ = [
    "EdgelessGraphError",
    "Graph",
    "GraphError",
    "InstanceTooLargeError",
    "MitigatingCertificate",
    "ParseError",
    "PreconditionError",
    "VerificationError",
    "construct_mitigating_set",
    "core",
    "degree",
    "es_delta",
    "from_edgelist",
    "from_graph6",
    "induced_subgraph",
    "is_mitigating",
    "maximum_matching",
    "odd_girth",
    "remove_edges",
    "saturating_matching",
    "stability_report",
    "to_edgelist",
    "to_graph6",
]
