"""Slow, independent reference implementations used to cross-check the engine.

Nothing here shares code with the fast paths it checks: matchings are found
by exhaustive recursion, pattern containment always goes through the generic
embedding search, arrowing tries all 2^|E| colourings, and graph classes
come from plain labelled enumeration.
"""

from __future__ import annotations

from collections.abc import Iterator
from functools import lru_cache
from itertools import combinations

from .canon import canonical
from .graph import Edge, Graph, bits
from .patterns import Pattern, pattern_graph, subgraph_iso


def matching_number_exhaustive(g: Graph) -> int:
    """nu(g) by recursion on the lowest remaining vertex (memoised on vertex sets)."""
    adj = g.adj

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        out = best(rest)
        for u in bits(adj[v] & rest):
            out = max(out, 1 + best(rest & ~(1 << u)))
        return out

    return best(g.vertex_mask())


def matching_number_subsets(g: Graph) -> int:
    """nu(g) as the largest pairwise-disjoint subset of edges (tiny graphs only)."""
    edges = g.edges()
    for k in range(len(edges), 0, -1):
        for sub in combinations(edges, k):
            verts = [x for e in sub for x in e]
            if len(set(verts)) == 2 * k:
                return k
    return 0


def contains_generic(g: Graph, p: Pattern) -> bool:
    h = pattern_graph(p)
    return subgraph_iso(g, h) is not None


def maximal_avoiders_brute(g: Graph, red: Pattern) -> list[tuple[Edge, ...]]:
    """All maximal red-avoiding edge subsets, by scanning every subset."""
    edges = g.edges()
    n = g.n
    free = []
    for mask in range(1 << len(edges)):
        sub = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        if not contains_generic(Graph.from_edges(n, sub), red):
            free.append(mask)
    free_set = set(free)
    out = []
    for mask in free:
        if all((mask | (1 << i)) not in free_set for i in range(len(edges)) if not mask >> i & 1):
            out.append(tuple(edges[i] for i in range(len(edges)) if mask >> i & 1))
    return sorted(out)


def arrows_brute(g: Graph, red: Pattern, blue: Pattern) -> tuple[bool, tuple[Edge, ...] | None]:
    """Try all 2^|E| colourings; returns ``(arrows, red edges of a defeating colouring)``."""
    edges = g.edges()
    n = g.n
    for mask in range(1 << len(edges)):
        red_edges = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        if contains_generic(Graph.from_edges(n, red_edges), red):
            continue
        blue_edges = [edges[i] for i in range(len(edges)) if not mask >> i & 1]
        if not contains_generic(Graph.from_edges(n, blue_edges), blue):
            return False, tuple(red_edges)
    return True, None


def arrows_brute_many(g: Graph, reds: list[Pattern], blues: list[Pattern]) -> dict[tuple[str, str], bool]:
    """:func:`arrows_brute` for every (red, blue) pair, sharing the colouring scan."""
    edges = g.edges()
    n = g.n
    defeated: dict[tuple[str, str], bool] = {(str(r), str(b)): False for r in reds for b in blues}
    blue_cache: dict[int, dict[str, bool]] = {}
    full = (1 << len(edges)) - 1
    for mask in range(1 << len(edges)):
        red_graph = Graph.from_edges(n, [edges[i] for i in range(len(edges)) if mask >> i & 1])
        for r in reds:
            if contains_generic(red_graph, r):
                continue
            bmask = full & ~mask
            if bmask not in blue_cache:
                bg = Graph.from_edges(n, [edges[i] for i in range(len(edges)) if bmask >> i & 1])
                blue_cache[bmask] = {str(b): contains_generic(bg, b) for b in blues}
            for b in blues:
                if not blue_cache[bmask][str(b)]:
                    defeated[(str(r), str(b))] = True
    return {k: not v for k, v in defeated.items()}


def labeled_graphs(q: int, n: int) -> Iterator[Graph]:
    """Every labelled graph on exactly ``n`` vertices with ``q`` edges and no isolated vertex."""
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    full = (1 << n) - 1

    def rec(start: int, chosen: list[Edge], covered: int) -> Iterator[Graph]:
        left = q - len(chosen)
        if left == 0:
            if covered == full:
                yield Graph.from_edges(n, chosen)
            return
        if (n - covered.bit_count()) > 2 * left:
            return
        for i in range(start, len(pairs)):
            a, b = pairs[i]
            yield from rec(i + 1, chosen + [(a, b)], covered | (1 << a) | (1 << b))

    yield from rec(0, [], 0)


def classes_by_labeled_reduction(q: int) -> set[bytes]:
    """Canonical forms of all graphs with ``q`` edges and no isolated vertices."""
    forms = set()
    for n in range(2, 2 * q + 1):
        for g in labeled_graphs(q, n):
            forms.add(canonical(g))
    return forms
