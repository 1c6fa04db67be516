from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings

from esdelta.coloring import core_is_class1
from esdelta.errors import EdgelessGraphError, InstanceTooLargeError, PreconditionError
from esdelta.generators import complete, complete_bipartite, cycle, gen_gk, gen_gt, path, petersen, star
from esdelta.graph import Graph, core, is_bipartite, is_connected, remove_edges
from esdelta.matching import DeficiencyWitness, is_matching, saturated, saturating_matching
from esdelta.oracle import brute_alpha, brute_es
from esdelta.stability import (
    bound_class1,
    bound_dense,
    bound_n_minus_alpha,
    bound_odd_girth,
    bound_regular,
    certificate_problems,
    check_condition3,
    construct_mitigating_set,
    es_delta,
    has_matching_minimum_mitigating_set,
    independence_number,
    is_mitigating,
    matchingize_mitigating_set,
    path_structure,
    regular_bound_value,
    stability_report,
)

from .strategies import nonempty_graphs


def all_minimum_mitigating_sets(g):
    k = brute_es(g)
    return [set(s) for s in combinations(g.edges, k) if is_mitigating(g, s)]


def test_es_delta_examples():
    assert es_delta(path(3)) == 1
    assert es_delta(cycle(5)) == 3 == brute_es(cycle(5))
    assert es_delta(complete(4)) == 2 == brute_es(complete(4))
    assert es_delta(petersen()) == 5 == brute_es(petersen())
    assert es_delta(gen_gk(2)) == 12
    with pytest.raises(EdgelessGraphError):
        es_delta(Graph.empty(4))


@settings(max_examples=400)
@given(nonempty_graphs(max_n=7))
def test_formula_matches_brute_force(g):
    if g.m <= 16:
        assert es_delta(g) == brute_es(g)


def test_is_mitigating_examples():
    assert is_mitigating(complete(4), [(0, 1), (2, 3)])
    assert not is_mitigating(complete(4), [(0, 1)])
    assert not is_mitigating(cycle(5), [(0, 1), (2, 3)])


@given(nonempty_graphs(max_n=8))
def test_supersets_of_mitigating_sets_stay_mitigating(g):
    s = construct_mitigating_set(g).edge_set
    extra = set(s) | set(g.edges[::2])
    assert is_mitigating(g, extra)


def test_construct_mitigating_set_examples():
    cert = construct_mitigating_set(path(3))
    assert len(cert.edge_set) == 1 and cert.structure == ("P2",)
    assert 1 in saturated(cert.edge_set)
    cert = construct_mitigating_set(cycle(5))
    assert len(cert.edge_set) == 3
    assert sorted(cert.structure) == ["P2", "P3"]
    assert len(cert.core_matching) == 2 and len(cert.hall_matching) == 1
    cert = construct_mitigating_set(gen_gk(1))
    assert len(cert.edge_set) == 6
    assert set(cert.structure) <= {"P2", "P3"}
    assert certificate_problems(gen_gk(1), cert) == []


@settings(max_examples=300)
@given(nonempty_graphs(max_n=10))
def test_certificate_soundness(g):
    cert = construct_mitigating_set(g)
    assert certificate_problems(g, cert) == []
    assert is_mitigating(g, cert.edge_set)
    assert len(cert.edge_set) == es_delta(g)
    assert all(tag in ("P2", "P3") for tag in cert.structure)


def test_certificate_problems_detects_tampering():
    g = cycle(5)
    cert = construct_mitigating_set(g)
    bad = type(cert)(frozenset(list(cert.edge_set)[:2]), 3, cert.structure, cert.core_matching, cert.hall_matching)
    assert certificate_problems(g, bad)


def test_path_structure_tags():
    assert [t for t, _ in path_structure([(0, 1), (1, 2), (3, 4)])] == ["P3", "P2"]
    assert [t for t, _ in path_structure([(0, 1), (1, 2), (2, 3)])] == ["other"]
    assert [t for t, _ in path_structure([(0, 1), (0, 2), (0, 3)])] == ["other"]


def test_has_matching_minimum_mitigating_set_examples():
    assert has_matching_minimum_mitigating_set(cycle(6))
    assert not has_matching_minimum_mitigating_set(cycle(5))
    assert not has_matching_minimum_mitigating_set(gen_gt(7))
    assert has_matching_minimum_mitigating_set(star(3))


def test_matchingize_examples():
    c6 = cycle(6)
    pm = {(0, 1), (2, 3), (4, 5)}
    assert matchingize_mitigating_set(c6, pm, pm) == pm
    assert matchingize_mitigating_set(c6, {(1, 2), (3, 4), (0, 5)}, pm) == {(1, 2), (3, 4), (0, 5)}
    k4 = complete(4)
    assert matchingize_mitigating_set(k4, {(0, 1), (2, 3)}, {(0, 1), (2, 3)}) == {(0, 1), (2, 3)}
    # P5: the only minimum mitigating sets through the center are P3-shaped
    p5 = path(5)
    out = matchingize_mitigating_set(p5, {(1, 2), (2, 3)}, {(0, 1), (2, 3)})
    assert out == {(0, 1), (2, 3)}


def test_matchingize_rejects_bad_input():
    c6 = cycle(6)
    pm = {(0, 1), (2, 3), (4, 5)}
    with pytest.raises(PreconditionError):
        # covers only five vertices, so it is not mitigating
        matchingize_mitigating_set(c6, {(0, 1), (1, 2), (3, 4)}, pm)
    with pytest.raises(PreconditionError):
        matchingize_mitigating_set(c6, pm, {(0, 1), (2, 3)})
    with pytest.raises(PreconditionError):
        matchingize_mitigating_set(c6, pm | {(1, 2)}, pm)


@settings(max_examples=250, deadline=None)
@given(nonempty_graphs(max_n=7))
def test_matchingize_every_minimum_set(g):
    m = saturating_matching(g, core(g))
    if isinstance(m, DeficiencyWitness) or g.m > 14:
        return
    target = es_delta(g)
    for l in all_minimum_mitigating_sets(g):
        out = matchingize_mitigating_set(g, l, m)
        assert is_matching(g, out) and len(out) == target and is_mitigating(g, out)


def test_check_condition3_examples():
    assert check_condition3(cycle(6))
    assert not check_condition3(cycle(5))
    assert check_condition3(complete(4))
    with pytest.raises(InstanceTooLargeError):
        check_condition3(gen_gk(2), threshold=10)


@settings(max_examples=300)
@given(nonempty_graphs(max_n=8))
def test_three_way_equivalence(g):
    if len(core(g)) <= 8:
        assert has_matching_minimum_mitigating_set(g) == check_condition3(g)


def test_independence_number_matches_oracle():
    for g in (cycle(5), complete_bipartite(3, 3), petersen(), gen_gk(1), gen_gt(7)):
        assert independence_number(g) == brute_alpha(g, limit=40)
    assert independence_number(petersen()) == 4


@settings(max_examples=200)
@given(nonempty_graphs(max_n=12))
def test_independence_number_property(g):
    assert independence_number(g) == brute_alpha(g)


def test_bound_n_minus_alpha_examples():
    b = bound_n_minus_alpha(cycle(6))
    assert (b.bound_value, b.es_value, b.satisfied, b.tight) == (3, 3, True, True)
    b = bound_n_minus_alpha(complete(4))
    assert (b.bound_value, b.es_value, b.satisfied) == (3, 2, True)
    b = bound_n_minus_alpha(cycle(5))
    assert (b.bound_value, b.es_value, b.tight) == (3, 3, True)
    assert bound_n_minus_alpha(complete_bipartite(3, 3)).tight


def test_bound_odd_girth_examples():
    b = bound_odd_girth(cycle(5))
    assert b.hypothesis_holds and b.bound_value == 3 and b.tight
    b = bound_odd_girth(petersen())
    assert b.bound_value == 6 and b.es_value == 5 and b.satisfied
    assert not bound_odd_girth(cycle(6)).hypothesis_holds


def test_bound_regular_examples():
    for k in (1, 2, 3):
        g = gen_gk(k)
        main, simple = bound_regular(g)
        assert main.bound_value == simple.bound_value == Fraction(6, 11) * g.n == 6 * k
        assert main.tight and simple.tight
    b = bound_regular(petersen())[0]
    assert b.bound_value == Fraction(17, 3) and b.satisfied
    b = bound_regular(cycle(6))[0]
    assert b.bound_value == Fraction(7, 2) and b.satisfied
    assert not bound_regular(path(3))[0].hypothesis_holds


def test_simplified_even_regular_bound_fails_on_k5():
    # 4-regular, connected, odd order below 11: the (n+1)/2 term is needed
    main, simple = bound_regular(complete(5))
    assert main.satisfied and main.bound_value == 3
    assert simple.informational and simple.satisfied is False
    assert not simple.violated


def test_regular_bound_value_formulas():
    assert regular_bound_value(3, 10) == Fraction(204, 36)
    assert regular_bound_value(2, 6) == Fraction(7, 2)
    assert regular_bound_value(4, 11) == 6
    with pytest.raises(PreconditionError):
        regular_bound_value(1, 4)


def test_bound_dense_examples():
    dense, size = bound_dense(complete(4))
    assert dense.hypothesis_holds and dense.bound_value == 2 and dense.tight
    dense, _ = bound_dense(gen_gt(7))
    assert not dense.hypothesis_holds
    assert dense.es_value == 12 and dense.bound_value == 11 and dense.satisfied is False
    assert not dense.violated
    dense, _ = bound_dense(cycle(5))
    assert dense.hypothesis_holds and dense.bound_value == 3 and dense.tight


@settings(max_examples=300)
@given(nonempty_graphs(max_n=10))
def test_half_bounds(g):
    es = es_delta(g)
    if is_bipartite(g):
        assert 2 * es <= g.n
    c1 = core_is_class1(g)
    if c1:
        assert 2 * es <= g.n
        assert not isinstance(saturating_matching(g, core(g)), DeficiencyWitness)
        assert bound_class1(g, es, c1).satisfied
    if is_connected(g):
        for b in bound_dense(g, es):
            assert not b.violated


def test_report_dict_is_stable():
    d1 = stability_report(gen_gk(1)).to_dict()
    d2 = stability_report(gen_gk(1)).to_dict()
    assert d1 == d2
    assert list(d1)[:9] == ["schema", "n", "m", "delta", "core_size", "core", "alpha_prime_core", "es", "mitigating_set"]
    assert d1["es"] == 6 and d1["schema"] == 1
    names = [b["name"] for b in d1["bounds"]]
    assert "regular" in names and "dense" in names
