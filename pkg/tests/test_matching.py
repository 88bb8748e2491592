from __future__ import annotations

import networkx as nx
from hypothesis import given, settings

from conftest import graphs, random_graph
from sizeramsey.families import family
from sizeramsey.matching import matching_in_mask, matching_number, max_matching, neighborhood_matching
from sizeramsey.oracle import matching_number_exhaustive, matching_number_subsets


def _is_matching(g, edges):
    used = [x for e in edges for x in e]
    return len(used) == len(set(used)) and all(g.has_edge(*e) for e in edges)


@given(graphs(max_n=10))
@settings(max_examples=300)
def test_agrees_with_exhaustive(g):
    size, edges = max_matching(g)
    assert _is_matching(g, edges) and len(edges) == size
    assert size == matching_number_exhaustive(g)


@given(graphs(max_n=7))
def test_exhaustive_oracles_agree(g):
    assert matching_number_exhaustive(g) == matching_number_subsets(g)


def test_against_networkx(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 16), rng.random())
        ng = nx.Graph(g.edges())
        assert matching_number(g) == len(nx.max_weight_matching(ng, maxcardinality=True))


def test_odd_cycles_and_blossoms():
    for k in range(3, 16):
        assert matching_number(family("Cycle", k)) == k // 2
    # two triangles joined by a path force blossom contraction
    g = family("Cycle", 5).add_edge(0, 5).add_edge(5, 6).add_edge(6, 7).add_edge(7, 5)
    assert matching_number(g) == matching_number_exhaustive(g) == 4


def test_stop_early_and_neighbourhood():
    g = family("Path", 10)
    assert len(matching_in_mask(g.adj, g.vertex_mask(), stop_at=2)) >= 2
    assert len(matching_in_mask(g.adj, g.vertex_mask())) == 5
    fan = family("Fan", 4)
    assert len(neighborhood_matching(fan, 8)) == 4
    assert len(neighborhood_matching(fan, 0)) == 1
