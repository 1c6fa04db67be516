import pytest

from esdelta.errors import GraphError
from esdelta.generators import (
    complete,
    complete_bipartite,
    cycle,
    gen_gk,
    gen_gt,
    gen_random_regular,
    parse_family,
    path,
    petersen,
    star,
)
from esdelta.graph import core, is_connected
from esdelta.matching import matching_number
from esdelta.stability import es_delta


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_gk_invariants(k):
    g = gen_gk(k)
    assert g.n == 11 * k and g.m == 22 * k
    assert g.is_regular() and g.max_degree == 4
    assert is_connected(g)
    assert matching_number(g) == 5 * k
    assert es_delta(g) == 6 * k


@pytest.mark.parametrize("t,es", [(7, 12), (9, 15), (11, 18)])
def test_gt_invariants(t, es):
    g = gen_gt(t)
    assert g.n == 3 * t + 1 and g.max_degree == t - 1
    u = 3 * t
    assert g.degrees[u] == 6
    expected = frozenset(range(3 * t + 1)) if t == 7 else frozenset(range(3 * t))
    assert core(g) == expected
    assert is_connected(g)
    assert es_delta(g) == es


def test_gt_rejects_bad_parameters():
    for t in (5, 8, 0):
        with pytest.raises(GraphError):
            gen_gt(t)
    with pytest.raises(GraphError):
        gen_gk(0)


def test_basic_families():
    assert cycle(5).m == 5 and cycle(5).is_regular()
    assert path(4).m == 3
    assert complete(5).m == 10
    assert complete_bipartite(2, 3).m == 6
    assert star(4).degrees[0] == 4
    p = petersen()
    assert p.n == 10 and p.m == 15 and p.is_regular()


def test_random_regular_is_deterministic():
    a = gen_random_regular(12, 3, seed=7)
    b = gen_random_regular(12, 3, seed=7)
    assert a == b
    assert a.is_regular() and a.max_degree == 3
    assert gen_random_regular(6, 5, seed=0) == complete(6)


def test_random_regular_rejects_impossible():
    with pytest.raises(GraphError):
        gen_random_regular(5, 3, seed=0)
    with pytest.raises(GraphError):
        gen_random_regular(4, 4, seed=0)


def test_parse_family():
    assert parse_family("gk:2") == gen_gk(2)
    assert parse_family("kbip:3,3") == complete_bipartite(3, 3)
    assert parse_family("petersen") == petersen()
    assert parse_family("randreg:10,3,1") == gen_random_regular(10, 3, 1)
    for bad in ("nope:1", "gk", "gk:x", "kbip:3"):
        with pytest.raises(GraphError):
            parse_family(bad)
