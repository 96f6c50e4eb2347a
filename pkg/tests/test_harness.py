from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kedgecon import (
    EnumSpec,
    Multigraph,
    TooLarge,
    brute_force_lambda,
    edge_connectivity,
    enumerate_multigraphs,
    enumerate_trees,
    format_mgraph,
    is_k_edge_connected,
    parse_mgraph,
    random_k_edge_connected,
    verify_propositions,
    verify_theorem,
)
from kedgecon import harness
from kedgecon.decomposition import WitnessPair
from kedgecon.multigraph import parallel_k2, path

from conftest import bipartition_lambda, multigraphs


def test_enum_n2():
    got = list(enumerate_multigraphs(EnumSpec(n_max=2, m_max=2, mult_max=2, k_set=(1,))))
    assert got == [parallel_k2(1), parallel_k2(2)]
    assert list(enumerate_multigraphs(EnumSpec(n_max=2, mult_max=1))) == [parallel_k2(1)]


def test_enum_n3_hand_counts():
    simple = [g for g in enumerate_multigraphs(EnumSpec(n_max=3, mult_max=1)) if g.n == 3]
    assert len(simple) == 4
    doubled = [g for g in enumerate_multigraphs(EnumSpec(n_max=3, m_max=6, mult_max=2)) if g.n == 3]
    # 27 multiplicity vectors minus the empty one and the six with one nonzero pair
    assert len(doubled) == 20


def _closed_form(npairs, m_max, mult_max):
    @lru_cache(None)
    def f(i, left):
        if i == npairs:
            return 1
        return sum(f(i + 1, left - c) for c in range(min(mult_max, left) + 1))

    return f(0, m_max)


@pytest.mark.parametrize("n_max, m_max, mult_max", [(3, 4, 2), (4, 5, 2), (4, 6, 3), (5, 4, 1)])
def test_enum_counts_closed_form(n_max, m_max, mult_max):
    spec = EnumSpec(n_max=n_max, m_max=m_max, mult_max=mult_max, require_connected=False)
    graphs = list(enumerate_multigraphs(spec))
    expected = sum(_closed_form(n * (n - 1) // 2, m_max, mult_max) for n in range(2, n_max + 1))
    assert len(graphs) == expected
    assert len(set(graphs)) == len(graphs)
    conn = list(enumerate_multigraphs(EnumSpec(n_max=n_max, m_max=m_max, mult_max=mult_max)))
    assert conn == [g for g in graphs if g.is_connected()]
    for g in graphs:
        assert g.m <= m_max and all(g.multiplicity(u, v) <= mult_max for _, u, v in g.edges)


def test_enum_deterministic():
    spec = EnumSpec(n_max=4, m_max=5, mult_max=2)
    assert list(enumerate_multigraphs(spec)) == list(enumerate_multigraphs(spec))


def test_enum_spec_validation():
    with pytest.raises(ValueError):
        EnumSpec(k_set=())
    with pytest.raises(ValueError):
        EnumSpec(n_max=1)
    with pytest.raises(ValueError):
        EnumSpec(mult_max=0)
    with pytest.raises(ValueError):
        EnumSpec(k_set=(0, 1))


def test_trees_counts():
    # Cayley: n^(n-2) labeled trees
    for n in range(2, 7):
        trees = list(enumerate_trees(n))
        assert len(trees) == max(1, n ** (n - 2))
        assert len(set(trees)) == len(trees)
        assert all(t.m == n - 1 and t.is_connected() for t in trees)


def test_brute_force_examples(c4, p3, k2_triple):
    assert brute_force_lambda(c4, 0, 1) == 2
    assert brute_force_lambda(p3, 0, 2) == 1
    assert brute_force_lambda(k2_triple, 0, 1) == 3
    with pytest.raises(TooLarge):
        brute_force_lambda(Multigraph(2, [(0, 1)] * 9), 0, 1)


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_n=6, max_m=8))
def test_brute_force_matches_cut_scan(g):
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert brute_force_lambda(g, u, v) == bipartition_lambda(g, u, v) == edge_connectivity(g, u, v)


@pytest.mark.parametrize("k", [1, 2, 5])
def test_random_n2(k):
    assert random_k_edge_connected(2, k, seed=11) == parallel_k2(k)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 10), st.integers(1, 5), st.integers(0, 2**31))
def test_random_connected_and_deterministic(n, k, seed):
    g = random_k_edge_connected(n, k, seed)
    assert g.n == n and is_k_edge_connected(g, k)
    assert format_mgraph(g) == format_mgraph(random_k_edge_connected(n, k, seed))


def test_verify_theorem_k2():
    rep = verify_theorem(EnumSpec(n_max=5, m_max=8, mult_max=2, k_set=(2,)))
    assert rep.ok
    assert rep.passes("theorem1") > 0 and rep.passes("theorem1") == rep.passes("theorem1.constructive")


def test_verify_theorem_k1_trees():
    rep = verify_theorem(EnumSpec(n_max=6, m_max=6, mult_max=2, k_set=(1,)))
    assert rep.ok
    # every edge-minimal connected graph is a tree: one per labeled tree
    assert rep.passes("theorem1.k1_tree") == sum(n ** (n - 2) for n in range(2, 7))


def test_verify_propositions_small():
    rep = verify_propositions(EnumSpec(n_max=5, m_max=7, mult_max=2, k_set=(2,)))
    assert rep.ok, rep.counterexamples[:3]
    for claim in ("oracle", "partition", "prop4", "prop6", "prop8", "prop9", "prop11", "lemma", "descent"):
        assert rep.passes(claim) > 0, claim


def test_counterexamples_are_reproducible(monkeypatch):
    monkeypatch.setattr(harness, "scan_witnesses", lambda g, k: WitnessPair((0,), "scan"))
    rep = verify_theorem(EnumSpec(n_max=3, m_max=3, mult_max=1, k_set=(2,)))
    assert not rep.ok
    ce = rep.counterexamples[0]
    assert ce["claim"] == "theorem1"
    assert parse_mgraph(ce["graph_mgraph"]).degrees() == [2, 2, 2]
    doc = rep.to_json()
    fails = {c["id"]: c["failures"] for c in doc["claims"]}
    assert fails["theorem1"] == len([c for c in rep.counterexamples if c["claim"] == "theorem1"])


def test_report_deterministic_and_parallel_merge():
    spec = EnumSpec(n_max=4, m_max=6, mult_max=2, k_set=(1, 2))
    a = verify_propositions(spec)
    b = verify_propositions(spec)
    c = verify_propositions(spec, jobs=2)
    assert a.claims == b.claims == c.claims
    assert a.graphs_examined == c.graphs_examined


def test_report_json_schema():
    doc = verify_theorem(EnumSpec(n_max=3, m_max=3, k_set=(1,))).to_json()
    assert set(doc) == {"spec", "graphs_examined", "claims", "counterexamples", "elapsed_ms"}
    assert doc["spec"]["k_set"] == [1]
    assert all(set(c) == {"id", "passes", "failures"} for c in doc["claims"])


def test_explicit_graph_list():
    rep = verify_theorem(EnumSpec(k_set=(1,)), graphs=[path(4), path(5)])
    assert rep.graphs_examined == 2 and rep.passes("theorem1") == 2
