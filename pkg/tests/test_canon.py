from __future__ import annotations

import random

import networkx as nx
from hypothesis import given, settings

from conftest import graphs, random_graph
from sizeramsey.canon import canonical, canonical_brute_force, canonical_labeling, orbits
from sizeramsey.enumerate import EnumerationTask, graphs_with_edges
from sizeramsey.families import family
from sizeramsey.graph import Graph


def _shuffle(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_three_edge_graphs_distinct():
    forms = {canonical(g) for g in graphs_with_edges(EnumerationTask(3))}
    assert len(forms) == 5
    named = [family("Path", 4), family("Star", 3), family("Clique", 3),
             Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)]), family("Matching", 3)]
    assert {canonical(g) for g in named} == forms


@given(graphs(max_n=7))
@settings(max_examples=150)
def test_agrees_with_brute_force_up_to_isomorphism(g):
    # both are class invariants, so equal inputs up to relabelling agree
    h = g.relabel(list(reversed(range(g.n))))
    assert canonical(g) == canonical(h)
    assert canonical_brute_force(g) == canonical_brute_force(h)


def test_brute_force_partition_matches(rng):
    for _ in range(300):
        n = rng.randint(1, 7)
        a, b = random_graph(rng, n, rng.random()), random_graph(rng, n, rng.random())
        same = canonical_brute_force(a) == canonical_brute_force(b)
        assert same == (canonical(a) == canonical(b))


def test_random_permutations_invariant(rng):
    hosts = [family("HGraph", 3), family("K1PlusNC4", 2), family("TwoF2"), family("Cycle", 9),
             family("CompleteBipartite", 3, 4), family("PathUnion", 3, 3), family("Wheel", 6)]
    hosts += [random_graph(rng, 12, 0.3) for _ in range(8)]
    for g in hosts:
        form = canonical(g)
        for _ in range(80):
            assert canonical(_shuffle(g, rng)) == form


def test_no_collisions_against_networkx(rng):
    seen: dict[bytes, Graph] = {}
    for _ in range(600):
        g = random_graph(rng, rng.randint(2, 9), rng.random())
        seen.setdefault(canonical(g), g)
    gs = list(seen.values())
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            if gs[i].n == gs[j].n and gs[i].num_edges == gs[j].num_edges:
                a = nx.Graph(gs[i].edges()); a.add_nodes_from(range(gs[i].n))
                b = nx.Graph(gs[j].edges()); b.add_nodes_from(range(gs[j].n))
                assert not nx.is_isomorphic(a, b)


@given(graphs(max_n=10))
def test_generators_are_automorphisms(g):
    lab = canonical_labeling(g)
    edges = set(g.edges())
    for p in lab.generators:
        assert {tuple(sorted((p[a], p[b]))) for a, b in edges} == edges
    assert lab.canonical_graph().num_edges == g.num_edges
    assert sorted(lab.order) == list(range(g.n))


def test_orbits_of_symmetric_graphs():
    lab = canonical_labeling(family("Fan", 3))
    orb = orbits(7, lab.generators)
    assert len(set(orb[v] for v in range(6))) == 1 and orb[6] != orb[0]
    lab = canonical_labeling(family("Cycle", 8))
    assert len(set(orbits(8, lab.generators))) == 1
