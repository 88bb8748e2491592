"""Built-in verification suite behind ``sizeramsey verify-paper``.

Each check returns a JSON-ready dict with no timings and no worker counts,
so a report is byte-identical across runs and thread settings.  Levels:

``quick``
    every required check at its stated parameters (about a minute).
``full``
    ``quick`` plus wider cross-checks: enumeration counts up to 10 edges
    and the brute-force arrowing comparison on all 9-edge graphs.
``stretch``
    ``full`` plus the (P3, F3) lower bound at 15 edges, which runs for hours.
"""

from __future__ import annotations

import json
import random
import time
from collections.abc import Callable
from math import ceil

from .arrowing import arrows, cycle_term, eval_degree_bound, path_term, period3_coloring
from .bounds import connected_sweep, size_ramsey, verify_lower, witness_for
from .canon import canonical
from .enumerate import EnumerationTask, count_with_edges, graphs_with_edges
from .errors import RefutedLowerBound
from .families import family
from .graph import Graph
from .graph6 import graph6_str
from .matching import max_matching
from .oracle import arrows_brute_many, classes_by_labeled_reduction, matching_number_exhaustive
from .patterns import Clique, Fan, Matching, Path, PathPack, parse_pattern

SCHEMA = "sizeramsey.verify/1"
LEVELS = ("quick", "full", "stretch")

# isomorphism classes of graphs with q edges and no isolated vertices
KNOWN_COUNTS = {1: 1, 2: 2, 3: 5, 4: 11, 5: 26, 6: 68, 7: 177, 8: 497, 9: 1476, 10: 4613}


def _check(cid: str, criterion: int, passed: bool, cases: list[dict]) -> dict:
    return {"id": cid, "criterion": criterion, "passed": bool(passed), "cases": cases}


def upper_witnesses(workers: int = 1) -> dict:
    """Known constructions arrow their pattern pairs, each within a second."""
    P3, K2x2 = Path(3), Matching(2)
    items: list[tuple[str, Graph, object, object]] = []
    for n in (1, 2, 3):
        items.append((f"K1+{n}C4", family("K1PlusNC4", n), P3, Fan(2 * n - 1)))
    for n in (1, 2):
        items.append((f"K1+{n}C4+P3", family("K1PlusNC4P3", n), P3, Fan(2 * n)))
    for n in (3, 4, 5):
        items.append((f"H{n}", family("HGraph", n), K2x2, Fan(n)))
    items.append(("2F2", family("TwoF2"), K2x2, Fan(2)))
    for n, m in ((1, 3), (2, 3), (2, 4), (3, 3)):
        items.append((f"C{n * m + 1}", family("Cycle", n * m + 1), K2x2, PathPack(n, m)))
        items.append((f"{n + 1}P{m}", family("PathUnion", n + 1, m), K2x2, PathPack(n, m)))
    cases = []
    ok = True
    for name, g, red, blue in items:
        start = time.perf_counter()
        v = arrows(g, red, blue)
        fast = time.perf_counter() - start < 1.0
        good = v.arrows and fast
        ok &= good
        cases.append({"graph": name, "edges": g.num_edges, "red": str(red), "blue": str(blue),
                      "arrows": v.arrows, "avoiders_examined": v.examined, "within_time": fast})
    return _check("upper-witnesses", 1, ok, cases)


def _exact(red, blue, value: int, workers: int, witness: Graph | None = None, generic: bool = False) -> dict:
    """Exhaust ``value - 1`` edges, then show some ``value``-edge graph arrows."""
    case = {"red": str(red), "blue": str(blue), "value": value}
    try:
        rec = verify_lower(red, blue, value - 1, workers=workers, keep_certificates=False,
                           validate=True) if not generic else None
    except RefutedLowerBound as err:
        case.update(passed=False, refuted_by=err.graph)
        return case
    if rec is not None:
        case["lower_sweep"] = rec.to_dict()
    if witness is not None:
        v = arrows(witness, red, blue, generic=generic)
        case.update(witness=graph6_str(witness), witness_source="construction", witness_arrows=v.arrows,
                    passed=v.arrows)
        return case
    report = size_ramsey(red, blue, budget=value, workers=workers, generic=generic)
    case["report"] = report.to_dict()
    case["passed"] = report.status == "exact" and report.value == value
    return case


def exact_values(workers: int = 1) -> dict:
    P3, K2x2 = Path(3), Matching(2)
    cases = [
        _exact(P3, Clique(3), 8, workers),
        _exact(K2x2, Clique(3), 6, workers, witness=witness_for(K2x2, Clique(3))),
        _exact(P3, Fan(2), 10, workers),
        _exact(K2x2, Fan(2), 12, workers, witness=family("TwoF2")),
        _exact(K2x2, PathPack(2, 3), 6, workers, witness=family("PathUnion", 3, 3)),
        _exact(K2x2, Path(4), 5, workers, witness=witness_for(K2x2, Path(4))),
    ]
    # the size-6 graphs that beat the C7 construction
    try:
        verify_lower(K2x2, PathPack(2, 3), 6, workers=workers, keep_certificates=False)
        cases.append({"red": "2K2", "blue": "2P3", "six_edge_arrowing": False, "passed": False})
    except RefutedLowerBound as err:
        cases.append({"red": "2K2", "blue": "2P3", "six_edge_arrowing": True,
                      "arrowing_graphs": err.record.arrowing, "passed": True})
    for n1 in (1, 2, 3):
        for n2 in (1, 2, 3):
            case = _exact(Matching(n1), Matching(n2), n1 + n2 - 1, workers, generic=True)
            case["avoiders"] = "generic"
            cases.append(case)
    return _check("exact-values", 2, all(c["passed"] for c in cases), cases)


def stretch_p3_f3(workers: int = 1) -> dict:
    try:
        rec = verify_lower(Path(3), Fan(3), 15, prune=True, min_max_degree=6, workers=workers,
                           keep_certificates=False, validate=True)
    except RefutedLowerBound as err:
        return _check("p3-f3-lower", 3, False, [{"refuted_by": err.graph}])
    return _check("p3-f3-lower", 3, rec.complete, [rec.to_dict()])


def connected_sweeps(workers: int = 1) -> dict:
    cases = []
    ok = True
    for n, m in ((1, 3), (2, 3), (1, 4), (2, 4), (3, 3)):
        rec = connected_sweep(n, m, workers=workers, keep_certificates=True)
        good = rec.complete and len(rec.certificates) == rec.graphs
        ok &= good
        cases.append({"n": n, "m": m, **rec.to_dict(), "certificates_checked": len(rec.certificates)})
    return _check("connected-path-sweeps", 4, ok, cases)


ORACLE_REDS = ("P3", "2K2")
ORACLE_BLUES = ("F1", "F2", "K3", "P4", "2P3", "3K2")


def oracle_equivalence(max_edges: int = 8) -> dict:
    reds = [parse_pattern(t) for t in ORACLE_REDS]
    blues = [parse_pattern(t) for t in ORACLE_BLUES]
    disagreements = []
    per_q = []
    for q in range(1, max_edges + 1):
        count = 0
        for g in graphs_with_edges(EnumerationTask(q)):
            count += 1
            brute = arrows_brute_many(g, reds, blues)
            for r in reds:
                for b in blues:
                    if arrows(g, r, b).arrows != brute[(str(r), str(b))]:
                        disagreements.append({"graph": graph6_str(g), "red": str(r), "blue": str(b)})
        per_q.append({"q": q, "graphs": count})
    cases = [{"reds": list(ORACLE_REDS), "blues": list(ORACLE_BLUES), "per_q": per_q,
              "disagreements": disagreements}]
    return _check(f"oracle-equivalence-{max_edges}", 5, not disagreements, cases)


def _odd_cycle_rich(rng: random.Random, n: int) -> Graph:
    edges = set()
    v = 0
    while v + 3 <= n:
        length = rng.choice([3, 5, 7])
        if v + length > n:
            length = 3
        for i in range(length):
            a, b = v + i, v + (i + 1) % length
            edges.add((min(a, b), max(a, b)))
        v += length
    for _ in range(rng.randint(0, n)):
        a, b = rng.sample(range(n), 2)
        edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(n, sorted(edges))


def matching_exactness(samples: int = 500, seed: int = 20240607) -> dict:
    rng = random.Random(seed)
    bad = []
    odd_rich = 0
    for i in range(samples):
        n = rng.randint(1, 12)
        if i % 2 and n >= 3:
            g = _odd_cycle_rich(rng, n)
            odd_rich += 1
        else:
            p = rng.random()
            g = Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p])
        size, edges = max_matching(g)
        used = [x for e in edges for x in e]
        valid = len(edges) == size and len(set(used)) == len(used) and all(g.has_edge(*e) for e in edges)
        if not valid or size != matching_number_exhaustive(g):
            bad.append(graph6_str(g))
    cases = [{"samples": samples, "seed": seed, "odd_cycle_rich": odd_rich, "disagreements": bad}]
    return _check("matching-exactness", 6, not bad, cases)


def period3_property() -> dict:
    cases = []
    ok = True
    for length in range(3, 21):
        for kind, g in (("cycle", family("Cycle", length)), ("path", family("Path", length + 1))):
            c = period3_coloring(g)
            red_nu = max_matching(c.red_graph())[0]
            blue_nu = max_matching(c.blue_graph())[0]
            good = red_nu == len(c.red) and blue_nu == ceil(length / 3)
            ok &= good
            cases.append({"kind": kind, "length": length, "red": len(c.red), "blue_matching": blue_nu,
                          "passed": good})
    for length in (0, 1):
        c = period3_coloring(family("Path", length + 1) if length else Graph.empty(1))
        good = not c.blue
        ok &= good
        cases.append({"kind": "path", "length": length, "red": len(c.red), "blue_matching": 0, "passed": good})
    return _check("period3-colouring", 7, ok, cases)


def inequality_terms(limit: int = 20) -> dict:
    cases = []
    ok = True
    for c in range(3, limit + 1):
        t = cycle_term(c)
        good = t == 0 if c == 4 else t <= -2
        lhs, _ = eval_degree_bound([c], [], 0, 0)
        good &= lhs == t + 3
        ok &= good
        cases.append({"cycle": c, "term": t, "passed": good})
    for p in range(2, limit + 1):
        t = path_term(p)
        good = t == -1 if p in (2, 4) else t <= -3
        lhs, _ = eval_degree_bound([], [p], 0, 1)
        good &= lhs == t + 4
        ok &= good
        cases.append({"path": p, "term": t, "passed": good})
    return _check("inequality-terms", 8, ok, cases)


def enumeration_counts(max_q: int = 5, workers: int = 1) -> dict:
    cases = []
    ok = True
    for q in range(1, max_q + 1):
        forms = [canonical(g) for g in graphs_with_edges(EnumerationTask(q))]
        case = {"q": q, "classes": len(forms), "duplicates": len(forms) - len(set(forms))}
        good = case["duplicates"] == 0 and len(forms) == KNOWN_COUNTS[q]
        if q in (4, 5):
            oracle = classes_by_labeled_reduction(q)
            case["oracle_match"] = set(forms) == oracle
            good &= case["oracle_match"]
        case["passed"] = good
        ok &= good
        cases.append(case)
    for q in range(max_q + 1, 11) if max_q > 5 else ():
        got = count_with_edges(q, workers=workers)
        cases.append({"q": q, "classes": got, "passed": got == KNOWN_COUNTS[q]})
        ok &= got == KNOWN_COUNTS[q]
    return _check("enumeration-counts", 9, ok, cases)


def checks_for(level: str, workers: int = 1) -> list[tuple[str, Callable[[], dict]]]:
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}")
    plan: list[tuple[str, Callable[[], dict]]] = [
        ("upper-witnesses", lambda: upper_witnesses(workers)),
        ("exact-values", lambda: exact_values(workers)),
        ("connected-path-sweeps", lambda: connected_sweeps(workers)),
        ("oracle-equivalence", lambda: oracle_equivalence(8)),
        ("matching-exactness", matching_exactness),
        ("period3-colouring", period3_property),
        ("inequality-terms", inequality_terms),
        ("enumeration-counts", lambda: enumeration_counts(5, workers)),
    ]
    if level in ("full", "stretch"):
        plan.append(("oracle-equivalence-9", lambda: oracle_equivalence(9)))
        plan.append(("enumeration-counts-10", lambda: enumeration_counts(10, workers)))
    if level == "stretch":
        plan.append(("p3-f3-lower", lambda: stretch_p3_f3(workers)))
    return plan


def run_suite(level: str = "quick", workers: int = 1,
              progress: Callable[[dict], None] | None = None) -> dict:
    results = []
    for _, fn in checks_for(level, workers):
        res = fn()
        results.append(res)
        if progress is not None:
            progress(res)
    return {"schema": SCHEMA, "level": level, "passed": all(r["passed"] for r in results), "checks": results}


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


__all__ = ["SCHEMA", "LEVELS", "KNOWN_COUNTS", "run_suite", "report_json", "checks_for",
           "upper_witnesses", "exact_values", "stretch_p3_f3", "connected_sweeps", "oracle_equivalence",
           "matching_exactness", "period3_property", "inequality_terms", "enumeration_counts"]
