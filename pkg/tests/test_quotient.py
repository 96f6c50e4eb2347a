import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kedgecon import (
    Multigraph,
    NotEdgeMinimal,
    NotKConnected,
    check_quotient_properties,
    edge_connectivity,
    is_k_edge_connected,
    quotient_graph,
    r_k_classes,
    random_k_edge_connected,
    reduce_to_edge_minimal,
)
from kedgecon.multigraph import parallel_k2
from kedgecon.quotient import class_separation_violations, partition_violations

from conftest import multigraphs


def test_c4_classes(c4):
    assert r_k_classes(c4, 3).classes == ((0,), (1,), (2,), (3,))


def test_k23_classes(k23):
    part = r_k_classes(k23, 3)
    assert part.classes == ((0, 1), (2,), (3,), (4,))
    assert part.class_of == (0, 0, 1, 2, 3)


def test_k1_classes_are_components():
    g = Multigraph(5, [(0, 3), (1, 4)])
    assert r_k_classes(g, 1).classes == ((0, 3), (1, 4), (2,))


def test_c4_quotient(c4):
    q = quotient_graph(c4, 2)
    assert q.graph == c4
    assert q.edge_origin == {e: e for e in c4.edge_ids}


def test_k23_quotient(k23):
    q = quotient_graph(k23, 2)
    assert q.graph.degrees() == [6, 2, 2, 2]
    assert [q.graph.multiplicity(0, w) for w in (1, 2, 3)] == [2, 2, 2]
    assert sorted(q.edge_origin.values()) == list(k23.edge_ids)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_parallel_k2_quotient_is_itself(k):
    g = parallel_k2(k)
    assert quotient_graph(g, k).graph == g


def test_quotient_rejects_disconnected():
    with pytest.raises(NotKConnected):
        quotient_graph(Multigraph(3, [(0, 1)]), 1)


def test_check_k23(k23):
    rep = check_quotient_properties(k23, 2)
    assert rep.ok
    assert set(rep.claims) == {"prop8", "prop9", "prop9.no_intraclass_edge", "prop4"}


def test_check_c4_and_path(c4, p3):
    assert check_quotient_properties(c4, 2).ok
    assert check_quotient_properties(p3, 1).ok
    assert quotient_graph(p3, 1).graph == p3


def test_check_requires_minimal(theta):
    with pytest.raises(NotEdgeMinimal):
        check_quotient_properties(theta, 2)


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_n=7, max_m=12), st.integers(1, 4))
def test_partition_invariants(g, k):
    part = r_k_classes(g, k)
    assert partition_violations(g, part) == []
    assert sorted(v for c in part.classes for v in c) == list(g.vertices)
    # direct check without the helper
    for u, v in itertools.combinations(g.vertices, 2):
        same = part.class_of[u] == part.class_of[v]
        assert same == (edge_connectivity(g, u, v) >= k)


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_n=6, max_m=12), st.integers(1, 4))
def test_class_separation(g, k):
    assert class_separation_violations(g, k) == []


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.integers(1, 4), st.integers(0, 10_000))
def test_quotient_of_minimal_graphs(n, k, seed):
    g, _ = reduce_to_edge_minimal(random_k_edge_connected(n, k, seed), k)
    rep = check_quotient_properties(g, k)
    assert rep.ok, rep.counterexamples
    q = quotient_graph(g, k)
    assert is_k_edge_connected(q.graph, k)
    assert q.graph.m == sum(1 for _, a, b in g.edges if q.partition.class_of[a] != q.partition.class_of[b])
