import random

import networkx as nx
import pytest
from hypothesis import given

from esdelta.errors import ParseError
from esdelta.generators import complete, cycle, gen_random, petersen
from esdelta.graph import Graph
from esdelta.io import from_edgelist, from_graph6, parse_graph_text, to_edgelist, to_graph6

from .strategies import graphs


def nx_graph6(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return nx.to_graph6_bytes(h, header=False).decode().strip()


@pytest.mark.parametrize("g6, n, m", [("@", 1, 0), ("A_", 2, 1), ("Bw", 3, 3), ("Dhc", 5, 5), ("IheA@GUAo", 10, 15)])
def test_known_strings(g6, n, m):
    g = from_graph6(g6)
    assert (g.n, g.m) == (n, m)
    assert to_graph6(g) == g6


def test_petersen_and_header():
    assert to_graph6(petersen()) == "IheA@GUAo"
    assert from_graph6(">>graph6<<Dhc\n") == cycle(5)
    assert to_graph6(cycle(5), header=True) == ">>graph6<<Dhc"


def test_large_order_header():
    g = Graph.from_edges(70, [(0, 69), (5, 6)])
    s = to_graph6(g)
    # 70 = 0b000000_000001_000110
    assert s.startswith("~?@E")
    assert s == nx_graph6(g)
    assert from_graph6(s) == g


@given(graphs(min_n=0, max_n=20))
def test_encoding_agrees_with_networkx(g):
    assert to_graph6(g) == nx_graph6(g)


def test_round_trip_random():
    rng = random.Random(5)
    for _ in range(200):
        g = gen_random(rng.randint(0, 70), rng.random(), rng)
        s = to_graph6(g)
        assert from_graph6(s) == g
        assert to_graph6(from_graph6(s)) == s


@pytest.mark.parametrize("bad", ["", "D", "Dhcc", "D\x01c", "Dh~", ":Fa@x^", "~?"])
def test_malformed_graph6(bad):
    with pytest.raises(ParseError):
        from_graph6(bad)


def test_edgelist_round_trip_and_comments():
    g = petersen()
    assert from_edgelist(to_edgelist(g)) == g
    text = "# a comment\n3 2\n0 1  # inline\n1 2\n"
    assert from_edgelist(text) == Graph.from_edges(3, [(0, 1), (1, 2)])


def test_edgelist_names_become_labels():
    g = from_edgelist("3 2\nalice bob\nbob carol\n")
    assert g.labels == ("alice", "bob", "carol")
    assert g.edges == ((0, 1), (1, 2))
    assert g.label(2) == "carol"


@pytest.mark.parametrize(
    "bad",
    ["", "3\n", "3 2\n0 1\n", "2 1\n0 0\n", "2 2\n0 1\n1 0\n", "2 1\n0 1 2\n", "2 1\na b\n c d"],
)
def test_malformed_edgelist(bad):
    with pytest.raises(ParseError):
        from_edgelist(bad)


def test_parse_graph_text_dispatch():
    assert parse_graph_text("Dhc") == cycle(5)
    assert parse_graph_text(to_edgelist(complete(4))) == complete(4)
