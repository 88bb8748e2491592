"""Size Ramsey numbers: closed forms, witness graphs, exhaustive sweeps.

``size_ramsey`` determines r(red, blue) by the definition: the least q such
that some graph with q edges arrows.  Lower bounds come from exhausting all
graphs of a size (each gets a colouring certificate), upper bounds from a
single arrowing witness.  Results are cross-checked against a registry of
published closed forms.
"""

from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import dataclass, field
from math import comb

from .arrowing import DEFAULT_EDGE_BUDGET, ArrowVerdict, EdgeColoring, arrows, check_coloring
from .enumerate import DEFAULT_EDGE_LIMIT, EnumerationTask, Node, map_subtrees, subtree_graphs
from .errors import BudgetExceeded, InvalidParameter, LemmaViolated, RefutedLowerBound
from .families import FamilySpec, build
from .graph import Graph, max_degree
from .graph6 import graph6_str, parse_graph6
from .patterns import Matching, PathPack, Pattern, aliases, pattern_max_degree

# -- formula registry -------------------------------------------------------------------


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class FormulaEntry:
    """A closed form r(red, blue) valid on a stated parameter domain.

    ``value`` receives the red and blue parameter tuples and returns
    ``None`` outside the domain; the registry never extrapolates.
    """

    key: str
    red_kind: str
    blue_kind: str
    value: Callable[[tuple[int, ...], tuple[int, ...]], int | None]
    domain: str
    source: str
    red_args: tuple[int, ...] | None = None


def _p3_fan(r, b):
    n = b[0]
    if n == 2:
        return 10
    return 4 * n + 4 if n % 2 else 4 * n + 5


def _2k2_fan(r, b):
    n = b[0]
    return 6 * n if n <= 2 else 5 * n + 3


def _2k2_pathpack(r, b):
    n, m = b
    return min(n * m + 1, (n + 1) * (m - 1)) if m >= 2 else None


def _p3_clique(r, b):
    n = b[0]
    return 2 * (n - 1) ** 2 if n >= 2 else None


def _2k2_clique(r, b):
    m = b[0]
    if m >= 6:
        return comb(m + 2, 2)
    if m >= 2:
        return 2 * comb(m, 2)
    return None


def _2k2_bipartite(r, b):
    m, n = b
    return m * n + m + n if m >= 2 and n >= 2 else None


def _matching_small(r, b, size):
    return r[0] * size


REGISTRY: tuple[FormulaEntry, ...] = (
    FormulaEntry("P3-fan", "Path", "Fan", _p3_fan, "n >= 1 (10 at n = 2; 4n+4 odd; 4n+5 even)",
                 "P3 versus fans", (3,)),
    FormulaEntry("2K2-fan", "Matching", "Fan", _2k2_fan, "n >= 1 (6n for n <= 2; 5n+3 for n >= 3)",
                 "2K2 versus fans", (2,)),
    FormulaEntry("2K2-nPm", "Matching", "PathPack", _2k2_pathpack, "n >= 1, m >= 2",
                 "2K2 versus path forests", (2,)),
    FormulaEntry("P3-Kn", "Path", "Clique", _p3_clique, "n >= 2", "Faudree-Sheehan 1983", (3,)),
    FormulaEntry("2K2-Km", "Matching", "Clique", _2k2_clique, "m >= 2 (C(m+2,2) for m >= 6, 2C(m,2) below)",
                 "Erdos-Faudree 1984", (2,)),
    FormulaEntry("2K2-Kmn", "Matching", "CompleteBipartite", _2k2_bipartite, "m, n >= 2",
                 "Erdos-Faudree 1984"),
    FormulaEntry("n1K2-n2K2", "Matching", "Matching", lambda r, b: r[0] + b[0] - 1, "n1, n2 >= 1",
                 "folklore (matching vs matching)"),
    FormulaEntry("2K2-Pn", "Matching", "Path", lambda r, b: b[0] + 1 if b[0] >= 3 else None, "n >= 3",
                 "folklore (2K2 vs path)", (2,)),
    FormulaEntry("nK2-K1m", "Matching", "Star", lambda r, b: r[0] * b[0], "n, m >= 1", "Erdos-Faudree 1984"),
    FormulaEntry("nK2-P4", "Matching", "Path", lambda r, b: _ceil_div(5 * r[0], 2) if b[0] == 4 else None,
                 "n >= 1", "Erdos-Faudree 1984"),
    FormulaEntry("nK2-P5", "Matching", "Path",
                 lambda r, b: (3 * r[0] if r[0] % 2 == 0 else 3 * r[0] + 1) if b[0] == 5 else None,
                 "n >= 1", "Erdos-Faudree 1984"),
    FormulaEntry("nK2-K3", "Matching", "Clique", lambda r, b: _matching_small(r, b, 3) if b[0] == 3 else None,
                 "n >= 1", "Erdos-Faudree 1984 (connected, at most 4 vertices)"),
    FormulaEntry("nK2-K4", "Matching", "Clique", lambda r, b: _matching_small(r, b, 6) if b[0] == 4 else None,
                 "n >= 1", "Erdos-Faudree 1984 (connected, at most 4 vertices)"),
    FormulaEntry("nK2-C4", "Matching", "Cycle", lambda r, b: _matching_small(r, b, 4) if b[0] == 4 else None,
                 "n >= 1", "Erdos-Faudree 1984 (connected, at most 4 vertices)"),
    FormulaEntry("nK2-Km-large", "Matching", "Clique",
                 lambda r, b: comb(b[0] + 2 * r[0] - 2, 2) if b[0] >= 4 * r[0] - 1 else None,
                 "m >= 4n - 1", "Erdos-Faudree 1984"),
    FormulaEntry("K1m-K1n", "Star", "Star", lambda r, b: r[0] + b[0] - 1, "m, n >= 1", "folklore (star vs star)"),
)


class RegistryInconsistency(AssertionError):
    pass


def formula_matches(red: Pattern, blue: Pattern) -> list[tuple[FormulaEntry, Pattern, Pattern, int]]:
    """Every registry entry applicable to the pair (up to isomorphism of the patterns)."""
    out = []
    for entry in REGISTRY:
        for r in aliases(red):
            if r.kind != entry.red_kind or (entry.red_args is not None and r.args != entry.red_args):
                continue
            for b in aliases(blue):
                if b.kind != entry.blue_kind:
                    continue
                v = entry.value(r.args, b.args)
                if v is not None:
                    out.append((entry, r, b, v))
    return out


def predicted(red: Pattern, blue: Pattern) -> int | None:
    """Registry value of r(red, blue), or None when no closed form covers it.

    Raises RegistryInconsistency if two applicable closed forms disagree.
    """
    matches = formula_matches(red, blue)
    values = {v for *_, v in matches}
    if len(values) > 1:
        detail = ", ".join(f"{e.key}={v}" for e, _, _, v in matches)
        raise RegistryInconsistency(f"closed forms disagree for ({red}, {blue}): {detail}")
    return values.pop() if values else None


def _alias(p: Pattern, kind: str) -> Pattern | None:
    return next((a for a in aliases(p) if a.kind == kind), None)


def witness_spec(red: Pattern, blue: Pattern) -> FamilySpec | None:
    """Family spec of the extremal construction for the pair, when one is known."""
    red_p3 = _alias(red, "Path") == Pattern("Path", (3,))
    red_2k2 = _alias(red, "Matching") == Matching(2)
    fan = _alias(blue, "Fan")
    if red_p3 and fan is not None:
        n = fan.args[0]
        if n % 2 == 1:
            return FamilySpec("K1PlusNC4", ((n + 1) // 2,))
        if n >= 4:
            return FamilySpec("K1PlusNC4P3", (n // 2,))
        return None
    if red_2k2 and fan is not None and fan.args[0] >= 2:
        n = fan.args[0]
        return FamilySpec("TwoF2") if n == 2 else FamilySpec("HGraph", (n,))
    pack = _alias(blue, "PathPack")
    if red_2k2 and pack is not None and pack.args[1] >= 2:
        n, m = pack.args
        if n * m + 1 <= (n + 1) * (m - 1):
            return FamilySpec("Cycle", (n * m + 1,))
        return FamilySpec("PathUnion", (n + 1, m))
    clique = _alias(blue, "Clique")
    if red_2k2 and clique is not None and clique.args[0] >= 2:
        m = clique.args[0]
        if m >= 6:
            return FamilySpec("Clique", (m + 2,))
        return FamilySpec("DisjointUnion", parts=(FamilySpec("Clique", (m,)),) * 2)
    return None


def witness_for(red: Pattern, blue: Pattern) -> Graph | None:
    spec = witness_spec(red, blue)
    return build(spec) if spec is not None else None


def verify_upper(red: Pattern, blue: Pattern, budget: int = DEFAULT_EDGE_BUDGET) -> ArrowVerdict:
    w = witness_for(red, blue)
    if w is None:
        raise InvalidParameter(f"no witness construction known for ({red}, {blue})")
    return arrows(w, red, blue, budget)


# -- exhaustive lower bounds ----------------------------------------------------------------

@dataclass
class ExhaustionRecord:
    """Outcome of checking every graph with ``q`` edges.

    ``certificates`` maps the canonical graph6 of each graph to its red edge
    list (the blue class is the rest).  Graphs lacking a vertex of the
    required degree get the trivial one-colour certificate.
    """

    red: str
    blue: str
    q: int
    graphs: int = 0
    degree_certified: int = 0
    search_certified: int = 0
    avoiders_examined: int = 0
    arrowing: list[str] = field(default_factory=list)
    certificates: dict[str, list[list[int]]] | None = None
    connected_only: bool = False
    pruned_in_search: bool = False

    @property
    def complete(self) -> bool:
        return not self.arrowing

    def merge(self, other: ExhaustionRecord) -> None:
        self.graphs += other.graphs
        self.degree_certified += other.degree_certified
        self.search_certified += other.search_certified
        self.avoiders_examined += other.avoiders_examined
        self.arrowing.extend(other.arrowing)
        if self.certificates is not None and other.certificates is not None:
            self.certificates.update(other.certificates)

    def to_dict(self, with_certificates: bool = False) -> dict:
        d = {
            "red": self.red,
            "blue": self.blue,
            "q": self.q,
            "graphs": self.graphs,
            "degree_certified": self.degree_certified,
            "search_certified": self.search_certified,
            "avoiders_examined": self.avoiders_examined,
            "arrowing": list(self.arrowing),
            "connected_only": self.connected_only,
            "pruned_in_search": self.pruned_in_search,
        }
        if with_certificates and self.certificates is not None:
            d["certificates"] = {k: self.certificates[k] for k in sorted(self.certificates)}
        return d


@dataclass(frozen=True)
class _Job:
    red: Pattern
    blue: Pattern
    d_red: int
    d_blue: int
    keep: bool
    budget: int
    validate: bool = False
    generic: bool = False


def _sweep_subtree(job: _Job, task: EnumerationTask, node: Node) -> ExhaustionRecord:
    rec = ExhaustionRecord(str(job.red), str(job.blue), task.q,
                           certificates={} if job.keep else None,
                           connected_only=task.connected, pruned_in_search=task.prune)
    for g in subtree_graphs(task, node):
        rec.graphs += 1
        key = graph6_str(g)
        dmax = max_degree(g)
        if dmax < job.d_blue or dmax < job.d_red:
            rec.degree_certified += 1
            if job.keep:
                # all blue misses blue; otherwise all red misses red
                rec.certificates[key] = [] if dmax < job.d_blue else [list(e) for e in g.edges()]
            continue
        verdict = arrows(g, job.red, job.blue, job.budget, job.generic)
        rec.avoiders_examined += verdict.examined
        if verdict.arrows:
            rec.arrowing.append(key)
            continue
        if job.validate and not check_coloring(verdict.certificate, job.red, job.blue):
            raise AssertionError(f"certificate for {key} does not re-validate")
        rec.search_certified += 1
        if job.keep:
            rec.certificates[key] = [list(e) for e in verdict.certificate.red]
    return rec


def _run_sweep(job: _Job, task: EnumerationTask, workers: int) -> ExhaustionRecord:
    total = ExhaustionRecord(str(job.red), str(job.blue), task.q,
                             certificates={} if job.keep else None,
                             connected_only=task.connected, pruned_in_search=task.prune)
    for part in map_subtrees(task, _partial_sweep(job), workers):
        total.merge(part)
    return total


class _partial_sweep:
    """Picklable ``(task, node) -> record`` closure over a job."""

    def __init__(self, job: _Job):
        self.job = job

    def __call__(self, task: EnumerationTask, node: Node) -> ExhaustionRecord:
        return _sweep_subtree(self.job, task, node)


def verify_lower(red: Pattern, blue: Pattern, q: int, *, min_max_degree: int | None = None,
                 prune: bool = False, workers: int = 1, keep_certificates: bool = True,
                 validate: bool = False, budget: int = DEFAULT_EDGE_LIMIT,
                 avoider_budget: int = DEFAULT_EDGE_BUDGET, raise_on_refute: bool = True) -> ExhaustionRecord:
    """Show that no graph with ``q`` edges arrows ``(red, blue)``.

    Every graph is enumerated; those whose maximum degree is below the
    pattern's get a one-colour certificate without running the avoider loop
    (an arrowing graph contains both patterns).  With ``prune`` such graphs
    are cut from the search tree instead and not counted.
    """
    d_red, d_blue = pattern_max_degree(red), pattern_max_degree(blue)
    d0 = max(d_red, d_blue) if min_max_degree is None else min_max_degree
    task = EnumerationTask(q, min_max_degree=d0 if prune else 0, prune=prune, budget=budget)
    job = _Job(red, blue, d_red, d_blue, keep_certificates, avoider_budget, validate)
    rec = _run_sweep(job, task, workers)
    if rec.arrowing and raise_on_refute:
        err = RefutedLowerBound(f"{len(rec.arrowing)} graph(s) with {q} edges arrow ({red}, {blue}): "
                                f"{rec.arrowing[:5]}", rec.arrowing[0])
        err.record = rec
        raise err
    return rec


def connected_sweep(n: int, m: int, *, workers: int = 1, keep_certificates: bool = True,
                  budget: int = DEFAULT_EDGE_LIMIT) -> ExhaustionRecord:
    """Every connected graph with ``n*m`` edges must fail to arrow (2K2, nP_m).

    Certificates are re-validated with :func:`check_coloring`.
    """
    if m < 3:
        raise InvalidParameter("the connected sweep needs m >= 3")
    red, blue = Matching(2), PathPack(n, m)
    task = EnumerationTask(n * m, connected=True, prune=False, budget=budget)
    job = _Job(red, blue, pattern_max_degree(red), pattern_max_degree(blue), keep_certificates,
               DEFAULT_EDGE_BUDGET, validate=True)
    rec = _run_sweep(job, task, workers)
    if rec.arrowing:
        raise LemmaViolated(f"connected graph(s) with {n * m} edges arrow (2K2, {n}P{m}): {rec.arrowing[:5]}",
                            rec.arrowing[0])
    return rec


# -- end-to-end determination ---------------------------------------------------------------

@dataclass
class RamseyReport:
    red: str
    blue: str
    status: str                   # "exact" or "interval"
    lower: int
    upper: int | None
    witness: str | None = None
    witness_source: str | None = None
    witness_examined: int = 0
    exhausted: list[dict] = field(default_factory=list)
    predicted: int | None = None
    formula_check: str = "no-formula"
    budget_exceeded: bool = False
    elapsed: float = 0.0

    @property
    def value(self) -> int | None:
        return self.lower if self.status == "exact" else None

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "red": self.red,
            "blue": self.blue,
            "status": self.status,
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "witness": self.witness,
            "witness_source": self.witness_source,
            "witness_avoiders_examined": self.witness_examined,
            "exhausted": self.exhausted,
            "predicted": self.predicted,
            "formula_check": self.formula_check,
            "budget_exceeded": self.budget_exceeded,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 3)
        return d


def _first_arrowing(job: _Job, task: EnumerationTask, workers: int) -> tuple[Graph | None, ExhaustionRecord]:
    rec = ExhaustionRecord(str(job.red), str(job.blue), task.q, pruned_in_search=task.prune)
    if workers > 1:
        rec = _run_sweep(job, task, workers)
        return None, rec
    for g in subtree_graphs(task, (Graph.empty(0), [])):
        rec.graphs += 1
        verdict = arrows(g, job.red, job.blue, job.budget, job.generic)
        rec.avoiders_examined += verdict.examined
        if verdict.arrows:
            rec.arrowing.append(graph6_str(g))
            return g, rec
        rec.search_certified += 1
    return None, rec


def size_ramsey(red: Pattern, blue: Pattern, budget: int = 12, *, workers: int = 1,
                avoider_budget: int = DEFAULT_EDGE_BUDGET, generic: bool = False) -> RamseyReport:
    """Determine r(red, blue) by an ascending sweep over the number of edges.

    At each size q, a registry witness with q edges is tried first; otherwise
    all graphs with q edges (and a vertex of large enough degree) are tested.
    If the sweep passes ``budget`` the report is an interval whose upper end
    is the witness size, when a witness is known.
    """
    start = time.perf_counter()
    pred = predicted(red, blue)
    witness = witness_for(red, blue)
    d_red, d_blue = pattern_max_degree(red), pattern_max_degree(blue)
    job = _Job(red, blue, d_red, d_blue, False, avoider_budget, generic=generic)
    report = RamseyReport(str(red), str(blue), "interval", 1, None, predicted=pred)

    def finish(q: int, g: Graph, source: str, examined: int) -> RamseyReport:
        report.status = "exact"
        report.lower = report.upper = q
        report.witness = graph6_str(g)
        report.witness_source = source
        report.witness_examined = examined
        if pred is not None:
            report.formula_check = "agree" if pred == q else "disagree"
        report.elapsed = time.perf_counter() - start
        return report

    for q in range(1, budget + 1):
        if witness is not None and witness.num_edges == q:
            v = arrows(witness, red, blue, avoider_budget, generic)
            if v.arrows:
                return finish(q, witness, "construction", v.examined)
        task = EnumerationTask(q, min_max_degree=max(d_red, d_blue), prune=True, budget=max(budget, q))
        found, rec = _first_arrowing(job, task, workers)
        if found is None and rec.arrowing:
            found = parse_graph6(rec.arrowing[0])
        if found is not None:
            return finish(q, found, "search", arrows(found, red, blue, avoider_budget, generic).examined)
        report.exhausted.append({"q": q, "graphs": rec.graphs})
        report.lower = q + 1

    report.budget_exceeded = True
    if witness is not None and arrows(witness, red, blue, avoider_budget, generic).arrows:
        report.upper = witness.num_edges
        report.witness = graph6_str(witness)
        report.witness_source = "construction"
    if pred is not None:
        inside = report.lower <= pred and (report.upper is None or pred <= report.upper)
        report.formula_check = "consistent" if inside else "disagree"
    report.elapsed = time.perf_counter() - start
    return report
