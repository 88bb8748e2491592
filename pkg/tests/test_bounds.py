from __future__ import annotations

import json

import pytest

from sizeramsey.arrowing import EdgeColoring, check_coloring
from sizeramsey.bounds import (REGISTRY, ExhaustionRecord, connected_sweep, formula_matches, predicted,
                               size_ramsey, verify_lower, verify_upper, witness_for)
from sizeramsey.canon import canonical
from sizeramsey.errors import BudgetExceeded, InvalidParameter, RefutedLowerBound
from sizeramsey.families import family
from sizeramsey.graph6 import parse_graph6
from sizeramsey.patterns import Clique, CompleteBipartite, Fan, Matching, Path, PathPack, Star

P3, TWO_K2 = Path(3), Matching(2)


def test_predicted_examples():
    assert predicted(P3, Fan(5)) == 24
    assert predicted(P3, Fan(4)) == 21
    assert predicted(P3, Fan(2)) == 10
    assert predicted(TWO_K2, Fan(2)) == 12
    assert predicted(TWO_K2, Fan(3)) == 18
    # min{nm+1, (n+1)(m-1)} = min{7, 6}
    assert predicted(TWO_K2, PathPack(2, 3)) == 6
    assert predicted(TWO_K2, PathPack(2, 4)) == 9
    assert predicted(P3, Clique(3)) == 8
    assert predicted(TWO_K2, Clique(3)) == 6
    assert predicted(TWO_K2, Clique(6)) == 28
    assert predicted(TWO_K2, CompleteBipartite(2, 3)) == 11
    assert predicted(Matching(3), Matching(2)) == 4
    assert predicted(TWO_K2, Path(4)) == 5
    assert predicted(Matching(3), Star(2)) == 6
    assert predicted(Clique(4), Fan(2)) is None


def test_registry_aliases_agree():
    # K3 = F1 = C3: several entries apply and must agree
    assert len(formula_matches(TWO_K2, Clique(3))) >= 2
    assert predicted(TWO_K2, Fan(1)) == predicted(TWO_K2, Clique(3)) == 6


def test_registry_refuses_outside_domain():
    # K1,3 is outside the bipartite entry's domain but is covered as a star
    assert predicted(TWO_K2, CompleteBipartite(1, 3)) == predicted(TWO_K2, Star(3)) == 6
    assert predicted(Path(4), Fan(2)) is None
    assert {e.key for e in REGISTRY} >= {"P3-fan", "2K2-fan", "2K2-nPm", "P3-Kn", "2K2-Km", "2K2-Kmn"}


def test_witness_examples():
    assert witness_for(TWO_K2, Fan(4)) == family("HGraph", 4)
    assert witness_for(TWO_K2, Fan(4)).num_edges == 23
    assert witness_for(P3, Fan(3)) == family("K1PlusNC4", 2)
    assert witness_for(P3, Fan(3)).num_edges == 16
    assert witness_for(TWO_K2, PathPack(2, 3)) == family("PathUnion", 3, 3)
    assert witness_for(TWO_K2, PathPack(2, 4)) == family("Cycle", 9)
    assert witness_for(P3, Fan(2)) is None


@pytest.mark.parametrize("n", range(1, 7))
def test_witness_sizes_equal_predictions(n):
    pairs = [(P3, Fan(n)), (TWO_K2, Fan(n)), (TWO_K2, Clique(n + 1))]
    pairs += [(TWO_K2, PathPack(n, m)) for m in range(2, 7)]
    for red, blue in pairs:
        w = witness_for(red, blue)
        if w is not None:
            assert w.num_edges == predicted(red, blue), (red, blue)


@pytest.mark.parametrize("red,blue", [(TWO_K2, Fan(3)), (P3, Fan(4)), (TWO_K2, Clique(6)), (P3, Fan(3)),
                                      (TWO_K2, PathPack(3, 3))])
def test_verify_upper(red, blue):
    assert verify_upper(red, blue).arrows


def test_verify_upper_without_witness():
    with pytest.raises(InvalidParameter):
        verify_upper(P3, Fan(2))


@pytest.mark.parametrize("red,blue,q", [(P3, Fan(2), 9), (P3, Clique(3), 7), (TWO_K2, PathPack(2, 3), 5),
                                        (TWO_K2, Clique(3), 5), (TWO_K2, Path(4), 4)])
def test_verify_lower(red, blue, q):
    rec = verify_lower(red, blue, q, validate=True)
    assert rec.complete and rec.graphs == len(rec.certificates)
    for key, red_edges in list(rec.certificates.items())[:200]:
        c = EdgeColoring.from_red(parse_graph6(key), [tuple(e) for e in red_edges])
        assert check_coloring(c, red, blue)


def test_verify_lower_refuted_at_true_value():
    # 3P3 has 6 edges and arrows (2K2, 2P3), so no 6-edge lower bound exists
    with pytest.raises(RefutedLowerBound) as info:
        verify_lower(TWO_K2, PathPack(2, 3), 6)
    assert canonical(family("PathUnion", 3, 3)).decode() in info.value.record.arrowing


def test_prune_agrees_with_full_sweep():
    full = verify_lower(P3, Fan(2), 8)
    pruned = verify_lower(P3, Fan(2), 8, prune=True)
    assert pruned.graphs == full.graphs - full.degree_certified
    assert pruned.search_certified == full.search_certified


def test_parallel_sweep_is_identical():
    a = verify_lower(P3, Fan(2), 8, workers=1)
    b = verify_lower(P3, Fan(2), 8, workers=2)
    assert json.dumps(a.to_dict(True)) == json.dumps(b.to_dict(True))


def test_record_merge():
    a = ExhaustionRecord("P3", "F2", 5, graphs=2, certificates={"x": []})
    b = ExhaustionRecord("P3", "F2", 5, graphs=3, arrowing=["y"], certificates={"z": [[0, 1]]})
    a.merge(b)
    assert a.graphs == 5 and a.arrowing == ["y"] and set(a.certificates) == {"x", "z"}


@pytest.mark.parametrize("n,m", [(1, 3), (2, 3), (1, 4), (2, 4), (3, 3)])
def test_connected_sweep(n, m):
    rec = connected_sweep(n, m)
    assert rec.complete and rec.graphs > 0 and len(rec.certificates) == rec.graphs


def test_connected_sweep_small_case_by_hand():
    rec = connected_sweep(1, 3)
    assert rec.graphs == 3  # K3, P4, K1,3


@pytest.mark.parametrize("red,blue,value", [(TWO_K2, Path(4), 5), (TWO_K2, TWO_K2, 3), (TWO_K2, Clique(3), 6),
                                            (P3, Clique(3), 8), (TWO_K2, PathPack(2, 3), 6),
                                            (Matching(3), TWO_K2, 4), (P3, Fan(2), 10)])
def test_size_ramsey_exact(red, blue, value):
    report = size_ramsey(red, blue, budget=value)
    assert report.status == "exact" and report.value == value
    assert report.formula_check == "agree"
    assert parse_graph6(report.witness).num_edges == value


def test_size_ramsey_generic_avoiders():
    report = size_ramsey(Matching(3), Matching(3), budget=5, generic=True)
    assert report.value == 5


def test_size_ramsey_interval():
    report = size_ramsey(TWO_K2, Fan(3), budget=8)
    assert report.status == "interval" and report.budget_exceeded
    assert report.lower == 9 and report.upper == 18 and report.formula_check == "consistent"
    d = report.to_dict()
    assert "elapsed" not in d and d["value"] is None


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        verify_lower(P3, Fan(3), 16)
