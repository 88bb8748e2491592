from __future__ import annotations

import pytest

from sizeramsey.canon import canonical
from sizeramsey.enumerate import EnumerationTask, count_with_edges, graphs_with_edges
from sizeramsey.errors import BudgetExceeded, InvalidParameter
from sizeramsey.graph import max_degree
from sizeramsey.graph6 import graph6_str
from sizeramsey.oracle import classes_by_labeled_reduction
from sizeramsey.suite import KNOWN_COUNTS


@pytest.mark.parametrize("q", range(1, 9))
def test_counts(q):
    gs = list(graphs_with_edges(EnumerationTask(q)))
    assert len(gs) == KNOWN_COUNTS[q]
    forms = [canonical(g) for g in gs]
    assert len(set(forms)) == len(forms)
    assert all(g.num_edges == q and not g.isolated_vertices() for g in gs)
    # emitted graphs are already in canonical labelling
    assert [graph6_str(g).encode() for g in gs] == forms


@pytest.mark.parametrize("q", range(1, 6))
def test_complete_against_labelled_reduction(q):
    assert {canonical(g) for g in graphs_with_edges(EnumerationTask(q))} == classes_by_labeled_reduction(q)


@pytest.mark.parametrize("q,d", [(5, 3), (6, 3), (6, 4), (7, 4)])
def test_degree_prune_is_sound(q, d):
    pruned = {graph6_str(g) for g in graphs_with_edges(EnumerationTask(q, min_max_degree=d, prune=True))}
    filtered = {graph6_str(g) for g in graphs_with_edges(EnumerationTask(q))
                if max_degree(g) >= d}
    assert pruned == filtered


@pytest.mark.parametrize("q", range(1, 7))
def test_connected_filter(q):
    all_graphs = list(graphs_with_edges(EnumerationTask(q)))
    conn = list(graphs_with_edges(EnumerationTask(q, connected=True)))
    assert conn == [g for g in all_graphs if g.is_connected()]


def test_vertex_limit():
    gs = list(graphs_with_edges(EnumerationTask(4, max_vertices=4)))
    assert gs and all(g.n <= 4 for g in gs)
    assert len(gs) == 2  # C4 and the paw


def test_parallel_order_matches_serial():
    task = EnumerationTask(7)
    assert list(graphs_with_edges(task, workers=2)) == list(graphs_with_edges(task))
    assert count_with_edges(8, workers=2) == KNOWN_COUNTS[8]


def test_budget_and_parameters():
    with pytest.raises(BudgetExceeded):
        list(graphs_with_edges(EnumerationTask(16)))
    with pytest.raises(InvalidParameter):
        EnumerationTask(0)
    # K1,16 and K1,15 plus a pendant, a chord or a disjoint edge
    assert count_with_edges(16, budget=16, min_max_degree=15) == 4
