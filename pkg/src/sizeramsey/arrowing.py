"""Deciding G -> (G1, G2) and checking colouring certificates.

A colouring defeats the arrow iff its red class avoids G1 and its blue class
avoids G2.  Enlarging the red class only shrinks the blue class, so it is
enough to try the *maximal* red avoiders: if any red avoider leaves no blue
G2, a maximal one containing it does too.  For the two red targets that
matter here the maximal avoiders have a closed description:

* no red P3  <=>  red is a matching, so the maximal avoiders are the
  maximal matchings;
* no red 2K2 <=>  red is a star or a triangle.

Other red targets fall back to a budgeted backtracking enumeration.
"""

from __future__ import annotations

import json
import time
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BudgetExceeded, InvalidComponent, InvalidParameter, PartitionMismatch
from .graph import Edge, Graph, bits, disjoint_union, norm_edge
from .graph6 import graph6_str, parse_graph6
from .patterns import Matching, Path, Pattern, has, is_isomorphic_to, parse_pattern

DEFAULT_EDGE_BUDGET = 24


@dataclass(frozen=True)
class EdgeColoring:
    host: Graph
    red: tuple[Edge, ...]
    blue: tuple[Edge, ...]

    @classmethod
    def from_red(cls, host: Graph, red: Iterable[Edge]) -> EdgeColoring:
        red = tuple(sorted(norm_edge(*e) for e in red))
        rs = set(red)
        blue = tuple(e for e in host.edges() if e not in rs)
        return cls(host, red, blue)

    def validate(self) -> None:
        red = [norm_edge(*e) for e in self.red]
        blue = [norm_edge(*e) for e in self.blue]
        rs, bs = set(red), set(blue)
        if len(rs) != len(red) or len(bs) != len(blue):
            raise PartitionMismatch("repeated edge in a colour class")
        if rs & bs:
            raise PartitionMismatch(f"edges coloured twice: {sorted(rs & bs)}")
        host = set(self.host.edges())
        if rs | bs != host:
            missing = sorted(host - rs - bs)
            extra = sorted((rs | bs) - host)
            raise PartitionMismatch(f"not a partition of E(host): missing {missing}, extra {extra}")

    def red_graph(self) -> Graph:
        return self.host.edge_subgraph(self.red)

    def blue_graph(self) -> Graph:
        return self.host.edge_subgraph(self.blue)

    def to_dict(self, red_pattern: Pattern | None = None, blue_pattern: Pattern | None = None) -> dict:
        d = {
            "host": graph6_str(self.host),
            "red": [list(e) for e in self.red],
            "blue": [list(e) for e in self.blue],
        }
        if red_pattern is not None:
            d["red_pattern"] = str(red_pattern)
        if blue_pattern is not None:
            d["blue_pattern"] = str(blue_pattern)
        return d

    def to_json(self, red_pattern: Pattern | None = None, blue_pattern: Pattern | None = None) -> str:
        return json.dumps(self.to_dict(red_pattern, blue_pattern), sort_keys=True)

    @staticmethod
    def from_dict(d: dict) -> tuple[EdgeColoring, Pattern | None, Pattern | None]:
        host = parse_graph6(d["host"])
        col = EdgeColoring(host, tuple(tuple(e) for e in d["red"]), tuple(tuple(e) for e in d["blue"]))
        rp = parse_pattern(d["red_pattern"]) if "red_pattern" in d else None
        bp = parse_pattern(d["blue_pattern"]) if "blue_pattern" in d else None
        return col, rp, bp


@dataclass
class ArrowVerdict:
    """``arrows`` is True for Arrows; otherwise ``certificate`` defeats the arrow."""

    arrows: bool
    examined: int
    elapsed: float = 0.0
    certificate: EdgeColoring | None = None

    def __bool__(self) -> bool:
        return self.arrows


# -- maximal red avoiders ------------------------------------------------------------

def maximal_p3_free_sets(g: Graph) -> Iterator[tuple[Edge, ...]]:
    """Every maximal matching of ``g`` exactly once.

    Branches on the lowest vertex that can still be matched: either it is
    matched to one of its free neighbours, or it stays unmatched for good.
    """
    adj = g.adj
    full = g.vertex_mask()
    if g.num_edges == 0:
        yield ()
        return

    def rec(matched: int, excluded: int, chosen: list[Edge]) -> Iterator[tuple[Edge, ...]]:
        free = full & ~matched & ~excluded
        v = -1
        for x in bits(free):
            if adj[x] & free:
                v = x
                break
        if v < 0:
            unmatched = full & ~matched
            for x in bits(unmatched):
                if adj[x] & unmatched:
                    return
            yield tuple(sorted(chosen))
            return
        bv = 1 << v
        for u in bits(adj[v] & free):
            yield from rec(matched | bv | (1 << u), excluded, chosen + [(v, u)])
        if not adj[v] & excluded:
            yield from rec(matched, excluded | bv, chosen)

    yield from rec(0, 0, [])


def maximal_2k2_free_sets(g: Graph) -> Iterator[tuple[Edge, ...]]:
    """Maximal edge sets without two independent edges: stars, then triangles.

    A star E(v) is skipped when it sits inside a larger star (a pendant
    edge at a vertex of degree >= 2) or inside a triangle (degree 2 with
    adjacent neighbours); a lone edge component is emitted once.
    """
    adj = g.adj
    if g.num_edges == 0:
        yield ()
        return
    deg = g.degrees()
    for v in range(g.n):
        d = deg[v]
        if d == 0:
            continue
        nb = list(bits(adj[v]))
        if d == 1:
            u = nb[0]
            if deg[u] != 1 or u < v:
                continue
        elif d == 2 and adj[nb[0]] >> nb[1] & 1:
            continue
        yield tuple(sorted(norm_edge(v, u) for u in nb))
    for a in range(g.n):
        for b in bits(adj[a] >> (a + 1)):
            b += a + 1
            for c in bits((adj[a] & adj[b]) >> (b + 1)):
                c += b + 1
                yield ((a, b), (a, c), (b, c))


def maximal_avoiders_generic(g: Graph, red: Pattern, budget: int = DEFAULT_EDGE_BUDGET) -> Iterator[tuple[Edge, ...]]:
    """All maximal edge sets of ``g`` whose subgraph omits ``red``.

    Include/exclude backtracking over the edge list with a maximality check
    at the leaves.  Refuses hosts with more than ``budget`` edges.
    """
    edges = g.edges()
    if len(edges) > budget:
        raise BudgetExceeded(f"{len(edges)} edges exceeds the generic-avoider budget of {budget}")
    n = g.n

    def graph_of(chosen: list[Edge]) -> Graph:
        return Graph.from_edges(n, chosen)

    def rec(i: int, chosen: list[Edge], skipped: list[Edge]) -> Iterator[tuple[Edge, ...]]:
        if i == len(edges):
            for e in skipped:
                if not has(graph_of(chosen + [e]), red):
                    return
            yield tuple(chosen)
            return
        e = edges[i]
        if not has(graph_of(chosen + [e]), red):
            yield from rec(i + 1, chosen + [e], skipped)
        yield from rec(i + 1, chosen, skipped + [e])

    yield from rec(0, [], [])


@lru_cache(maxsize=256)
def avoider_kind(red: Pattern) -> str:
    if is_isomorphic_to(red, Path(3)):
        return "p3"
    if is_isomorphic_to(red, Matching(2)):
        return "2k2"
    return "generic"


def maximal_avoiders(g: Graph, red: Pattern, budget: int = DEFAULT_EDGE_BUDGET,
                     generic: bool = False) -> Iterator[tuple[Edge, ...]]:
    kind = "generic" if generic else avoider_kind(red)
    if kind == "p3":
        return maximal_p3_free_sets(g)
    if kind == "2k2":
        return maximal_2k2_free_sets(g)
    return maximal_avoiders_generic(g, red, budget)


def arrows(g: Graph, red: Pattern, blue: Pattern, budget: int = DEFAULT_EDGE_BUDGET,
           generic: bool = False) -> ArrowVerdict:
    """Decide ``g -> (red, blue)``.

    Avoiders are consumed lazily in their canonical order; the first one
    whose blue complement misses ``blue`` is returned as the certificate.
    ``generic`` forces the budgeted backtracking avoiders even for P3/2K2.
    """
    start = time.perf_counter()
    examined = 0
    for red_set in maximal_avoiders(g, red, budget, generic):
        examined += 1
        if not has(g.remove_edges(red_set), blue):
            cert = EdgeColoring.from_red(g, red_set)
            return ArrowVerdict(False, examined, time.perf_counter() - start, cert)
    return ArrowVerdict(True, examined, time.perf_counter() - start)


def check_coloring(c: EdgeColoring, red: Pattern, blue: Pattern) -> bool:
    """True iff ``c`` certifies non-arrowing: red omits ``red`` and blue omits ``blue``."""
    c.validate()
    return not has(c.red_graph(), red) and not has(c.blue_graph(), blue)


# -- the period-3 adversary colouring --------------------------------------------------

@dataclass
class Period3Plan:
    cycles: list[int] = field(default_factory=list)
    paths: list[int] = field(default_factory=list)
    isolated: int = 0
    red: list[Edge] = field(default_factory=list)


def _walk(g: Graph, start: int, first: int) -> list[int]:
    seq = [start, first]
    while True:
        prev, cur = seq[-2], seq[-1]
        nxt = [u for u in bits(g.adj[cur]) if u != prev]
        if not nxt or nxt[0] == start:
            return seq
        seq.append(nxt[0])


def period3_plan(g: Graph) -> Period3Plan:
    """Colour a graph of maximum degree <= 2 component by component.

    Along each cycle (from its lowest vertex towards the lower neighbour) or
    path (from its lowest end vertex), edges at positions 1, 4, 7, ... are
    red, for ``floor(len/3)`` red edges in total; all others are blue.
    A component that is a single edge is coloured red.
    """
    plan = Period3Plan()
    for comp in g.components():
        verts = list(bits(comp))
        degs = [g.degree(v) for v in verts]
        if len(verts) == 1:
            plan.isolated += 1
            continue
        if max(degs) > 2:
            raise InvalidComponent(f"component {verts} has a vertex of degree > 2")
        ncomp_edges = sum(degs) // 2
        if all(d == 2 for d in degs):
            start = verts[0]
            seq = _walk(g, start, min(bits(g.adj[start])))
            seq.append(start)
            plan.cycles.append(ncomp_edges)
        elif ncomp_edges == len(verts) - 1:
            start = min(v for v, d in zip(verts, degs) if d == 1)
            seq = _walk(g, start, next(bits(g.adj[start])))
            plan.paths.append(ncomp_edges)
        else:
            raise InvalidComponent(f"component {verts} is neither a cycle nor a path")
        length = len(seq) - 1
        if length == 1:
            # a lone edge stays red so that it leaves nothing blue
            plan.red.append(norm_edge(seq[0], seq[1]))
            continue
        for i in range(length // 3):
            a, b = seq[3 * i], seq[3 * i + 1]
            plan.red.append(norm_edge(a, b))
    plan.red.sort()
    return plan


def period3_coloring(components: list[Graph] | Graph) -> EdgeColoring:
    """Period-3 colouring of a disjoint union of cycles and paths.

    Given a list, the host is their disjoint union (in order); given a single
    graph of maximum degree <= 2, it is coloured in place.
    """
    host = components if isinstance(components, Graph) else disjoint_union(components)
    return EdgeColoring.from_red(host, period3_plan(host).red)


def cycle_term(c: int) -> int:
    return 4 * (-(-c // 3)) - 2 * c


def path_term(p: int) -> int:
    return 4 * (-(-p // 3)) - 2 * p - 1


def eval_degree_bound(cycles: list[int], paths: list[int], du: int, eps: int) -> tuple[int, bool]:
    """Left side of the cycle/path counting bound and whether it is >= ``du``.

    lhs = sum(4*ceil(c/3) - 2c) + sum(4*ceil(p/3) - 2p - 1) + 3 + eps
    """
    if any(c < 3 for c in cycles):
        raise InvalidParameter("cycle lengths must be >= 3")
    if any(p < 2 for p in paths):
        raise InvalidParameter("path lengths must be >= 2")
    if du < 0:
        raise InvalidParameter("degree must be non-negative")
    if eps not in (0, 1):
        raise InvalidParameter("eps must be 0 or 1")
    lhs = sum(cycle_term(c) for c in cycles) + sum(path_term(p) for p in paths) + 3 + eps
    return lhs, lhs >= du
