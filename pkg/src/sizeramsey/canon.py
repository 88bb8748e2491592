"""Canonical labelling by partition refinement and individualisation.

Small-scale version of the McKay search: colour refinement to an
equitable partition, branching on the first non-singleton cell, and
pruning of branches that lie in the same orbit of the automorphisms found
so far (restricted to those fixing the current branch prefix).  The best
leaf is the one whose relabelled adjacency rows are lexicographically
largest.

Disconnected graphs are labelled component by component, so a matching
``kK2`` costs ``k`` tiny searches instead of one exponential one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .graph import Graph, bits
from .graph6 import write_graph6

Perm = tuple[int, ...]


@dataclass
class Labeling:
    """Result of :func:`canonical_labeling`.

    ``order[i]`` is the original vertex placed at canonical position ``i``;
    ``generators`` generate the automorphism group (as permutations of the
    original vertices, ``p[v]`` = image of ``v``).
    """

    graph: Graph
    order: list[int]
    generators: list[Perm] = field(default_factory=list)

    @property
    def position(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos

    def canonical_graph(self) -> Graph:
        return self.graph.relabel(self.position)

    def form(self) -> bytes:
        return write_graph6(self.canonical_graph())


def _relabeled_rows(nbrs: list[list[int]], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        for u in nbrs[v]:
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    k = len(set(colors))
    n = len(colors)
    while True:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in nbrs[v]]))) for v in range(n)]
        uniq = sorted(set(sigs))
        if len(uniq) == k:
            rank = {s: i for i, s in enumerate(uniq)}
            return [rank[s] for s in sigs]
        k = len(uniq)
        rank = {s: i for i, s in enumerate(uniq)}
        colors = [rank[s] for s in sigs]


def _orbit_roots(n: int, gens: list[Perm]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        for v in range(n):
            a, b = find(v), find(p[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def _twin_generators(nbrs: list[list[int]], adj: tuple[int, ...]) -> list[Perm]:
    n = len(adj)
    gens = []
    for closed in (False, True):
        classes: dict[int, list[int]] = {}
        for v in range(n):
            key = adj[v] | (1 << v) if closed else adj[v]
            classes.setdefault(key, []).append(v)
        for cls in classes.values():
            for a, b in zip(cls, cls[1:]):
                p = list(range(n))
                p[a], p[b] = b, a
                gens.append(tuple(p))
    return gens


def _canon_connected(g: Graph) -> tuple[tuple[int, ...], list[int], list[Perm]]:
    n = g.n
    if n == 1:
        return (0,), [0], []
    nbrs = [list(bits(row)) for row in g.adj]
    gens: list[Perm] = _twin_generators(nbrs, g.adj)
    best: list = [None, None]   # cert, order
    first: list = [None, None]

    def record_auto(order_a: list[int], order_b: list[int]) -> None:
        p = [0] * n
        for a, b in zip(order_a, order_b):
            p[a] = b
        p = tuple(p)
        if any(p[v] != v for v in range(n)):
            gens.append(p)

    def search(colors: list[int], prefix: list[int]) -> None:
        counts = [0] * n
        for c in colors:
            counts[c] += 1
        target = next((c for c in range(n) if counts[c] > 1), None)
        if target is None:
            order = [0] * n
            for v, c in enumerate(colors):
                order[c] = v
            cert = _relabeled_rows(nbrs, order)
            if first[0] is None:
                first[0], first[1] = cert, order
                best[0], best[1] = cert, order
                return
            if cert == first[0]:
                record_auto(first[1], order)
            elif cert == best[0]:
                record_auto(best[1], order)
            elif cert > best[0]:
                best[0], best[1] = cert, order
            return
        cell = [v for v in range(n) if colors[v] == target]
        explored: list[int] = []
        for w in cell:
            if explored:
                stab = [p for p in gens if all(p[x] == x for x in prefix)]
                roots = _orbit_roots(n, stab)
                if any(roots[w] == roots[e] for e in explored):
                    continue
            child = [2 * c + (1 if c == target and v != w else 0) for v, c in enumerate(colors)]
            search(_refine(nbrs, child), prefix + [w])
            explored.append(w)

    degs = [len(x) for x in nbrs]
    search(_refine(nbrs, degs), [])
    return (n,) + best[0], best[1], gens


def canonical_labeling(g: Graph) -> Labeling:
    comps = g.components()
    if len(comps) == 1:
        cert, order, gens = _canon_connected(g)
        return Labeling(g, order, gens)
    parts = []
    for mask in comps:
        verts = list(bits(mask))
        cert, order, gens = _canon_connected(g.induced(verts))
        parts.append((cert, [verts[i] for i in order], [tuple(verts[i] for i in p) for p in gens], verts))
    parts.sort(key=lambda t: t[0])
    order: list[int] = []
    generators: list[Perm] = []
    n = g.n
    for idx, (cert, comp_order, comp_gens, verts) in enumerate(parts):
        order.extend(comp_order)
        for p in comp_gens:
            full = list(range(n))
            for v, img in zip(verts, p):
                full[v] = img
            generators.append(tuple(full))
        if idx and parts[idx - 1][0] == cert:
            prev_order = parts[idx - 1][1]
            full = list(range(n))
            for a, b in zip(prev_order, comp_order):
                full[a], full[b] = b, a
            generators.append(tuple(full))
    return Labeling(g, order, generators)


def canonical(g: Graph) -> bytes:
    """Canonical form: graph6 of the canonically relabelled graph."""
    return canonical_labeling(g).form()


def canonical_brute_force(g: Graph) -> bytes:
    """Exhaustive canonical form over all ``n!`` labellings (testing oracle).

    Picks the labelling whose graph6 string is lexicographically largest.
    """
    if g.n > 9:
        raise ValueError("brute-force canonical form limited to 9 vertices")
    best = None
    for perm in permutations(range(g.n)):
        s = write_graph6(g.relabel(perm))
        if best is None or s > best:
            best = s
    return best if best is not None else write_graph6(g)


def orbits(n: int, generators: list[Perm]) -> list[int]:
    """Orbit representative (smallest member) for each vertex."""
    return _orbit_roots(n, generators)
