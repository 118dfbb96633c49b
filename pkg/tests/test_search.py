from __future__ import annotations

from collections import Counter
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from strategies import graphs
from cyclesat.canon import canonical_form, canonical_key, refine
from cyclesat.families import CycleFamily
from cyclesat.graph import build_graph, decode_graph6, encode_graph6
from cyclesat.search import (
    Budget,
    SearchResult,
    compute_sat,
    enumerate_connected,
    enumerate_graphs,
    verify_result,
)


def atlas_by_n():
    out = Counter()
    conn = Counter()
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        out[n] += 1
        if n and nx.is_connected(h):
            conn[(n, h.number_of_edges())] += 1
    return out, conn


ATLAS, ATLAS_CONNECTED = atlas_by_n()


@pytest.mark.parametrize("n", range(1, 6))
def test_canonical_key_is_complete_invariant(n):
    by_brute: dict = {}
    by_key: dict = {}
    for mask in range(1 << len(oracles.pairs(n))):
        edges = oracles.mask_edges(n, mask)
        ref = oracles.brute_canonical(n, edges)
        key = canonical_key(build_graph(n, edges).adj)[0]
        by_brute.setdefault(ref, set()).add(key)
        by_key.setdefault(key, set()).add(ref)
    assert all(len(v) == 1 for v in by_brute.values())
    assert all(len(v) == 1 for v in by_key.values())
    assert len(by_key) == ATLAS[n]


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=10), st.randoms(use_true_random=False))
def test_canonical_form_relabel_invariant(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    h = g.relabel(order)
    assert canonical_form(g).graph6 == canonical_form(h).graph6
    cf = canonical_form(g)
    assert decode_graph6(cf.graph6) == cf.graph(g)


def test_canonical_on_regular_graphs():
    # vertex-transitive graphs stress refinement: cycles, Petersen, K_{3,3}
    pet = nx.petersen_graph()
    g = build_graph(10, pet.edges())
    rng = list(range(10))[::-1]
    assert canonical_form(g).graph6 == canonical_form(g.relabel(rng)).graph6
    c10 = build_graph(10, [(i, (i + 1) % 10) for i in range(10)])
    assert canonical_form(c10).graph6 != canonical_form(g).graph6
    k33 = build_graph(6, [(a, b) for a in range(3) for b in range(3, 6)])
    prism = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert canonical_form(k33).graph6 != canonical_form(prism).graph6


def test_refine_splits_by_degree():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    cells = refine(g.adj, [[0, 1, 2, 3]])
    assert sorted(map(sorted, cells)) == [[0, 3], [1, 2]]


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_counts_match_atlas(n):
    assert sum(1 for _ in enumerate_graphs(n)) == ATLAS[n]


@pytest.mark.parametrize("n", range(2, 7))
def test_enumerate_connected_counts(n):
    for m in range(n - 1, n * (n - 1) // 2 + 1):
        assert sum(1 for _ in enumerate_connected(n, m)) == ATLAS_CONNECTED[(n, m)]


def test_enumerate_connected_range_errors():
    with pytest.raises(ValueError):
        list(enumerate_connected(5, 3))
    with pytest.raises(ValueError):
        list(enumerate_connected(4, 7))


def test_enumerate_family_free():
    # triangle-free graphs on 5 vertices: 14 classes
    assert sum(1 for _ in enumerate_graphs(5, family="{3}")) == 14


FAMILY_SUBSETS = [s for r in range(1, 4) for s in combinations((3, 4, 5), r)]


@pytest.mark.parametrize("lengths", FAMILY_SUBSETS)
def test_full_mode_matches_brute_force_classes(lengths):
    fam = CycleFamily.finite(lengths)
    for n in range(1, 6):
        value, masks = oracles.brute_sat(n, lengths)
        classes = {oracles.brute_canonical(n, oracles.mask_edges(n, m)) for m in masks}
        res = compute_sat(n, fam, mode="full")
        assert res.value == value and res.exhaustive
        got = {oracles.brute_canonical(n, decode_graph6(w).edges()) for w in res.witnesses}
        assert got == classes


def test_value_mode_single_witness_and_counters():
    res = compute_sat(7, "{4,5}")
    assert res.value == 8 and len(res.witnesses) == 1
    assert res.graphs_enumerated > 0 and res.saturation_checks > 0
    d = res.to_json()
    assert set(d["counters"]) == {"graphs_enumerated", "saturation_checks", "wall_time"}


def test_max_edges_budget():
    res = compute_sat(8, "{4,5}", budget=Budget(max_edges=5))
    assert res.value is None and not res.exhaustive
    assert res.lower_bound == 6


def test_timeout_budget():
    res = compute_sat(9, "{4,5}", budget=Budget(timeout=0.0))
    assert res.value is None and not res.exhaustive


def test_parallel_matches_serial():
    a = compute_sat(7, "{4,5}", mode="full")
    b = compute_sat(7, "{4,5}", mode="full", jobs=2)
    assert (a.value, a.witnesses) == (b.value, b.witnesses)


def test_verify_result_catches_bad_witness():
    p4 = encode_graph6(build_graph(4, [(0, 1), (1, 2), (2, 3)])).decode()
    bad = SearchResult(4, "{4,5}", "value", 3, 3, True, [p4])  # P4 is not maximal
    assert verify_result(bad)
    good = compute_sat(4, "{4,5}")
    assert verify_result(good) == []


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        compute_sat(0, "{4}")
    with pytest.raises(ValueError):
        compute_sat(4, "{4}", mode="fast")
