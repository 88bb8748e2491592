"""Isomorph-free generation of graphs with a given number of edges.

Canonical augmentation on edges: a graph is grown one edge at a time (the
new edge may bring one or two new vertices), and a child is kept only if
the edge just added lies in the automorphism orbit of its *canonical last
edge*.  Candidate edges are first reduced to orbits of the parent's
automorphism group, so no global seen-set is needed and every isomorphism
class with ``q`` edges and no isolated vertices appears exactly once.

The canonical last edge is chosen among the edges minimising the
invariant ``(min degree, max degree, common neighbours)`` of its
endpoints; the cheap invariant rejects most children before any canonical
labelling is computed.  Removing low-degree edges also keeps hubs in
parents, which is what makes the max-degree prune effective.
"""

from __future__ import annotations

import os
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from .canon import Perm, canonical_labeling
from .errors import BudgetExceeded, InvalidParameter
from .graph import MAX_VERTICES, Graph, bits, max_degree

DEFAULT_EDGE_LIMIT = 15

Node = tuple[Graph, list[Perm]]


@dataclass(frozen=True)
class EnumerationTask:
    """What to enumerate.

    ``min_max_degree`` keeps only graphs with a vertex of at least that
    degree.  With ``prune`` it is also applied inside the search tree, where
    it is sound because every descendant is a supergraph with a known number
    of extra edges; without it the filter is applied to finished graphs only.
    """

    q: int
    min_max_degree: int = 0
    connected: bool = False
    max_vertices: int | None = None
    prune: bool = True
    budget: int = DEFAULT_EDGE_LIMIT

    def __post_init__(self):
        if self.q < 1:
            raise InvalidParameter("edge count must be at least 1")

    @property
    def vertex_limit(self) -> int:
        cap = min(2 * self.q, MAX_VERTICES)
        return cap if self.max_vertices is None else min(cap, self.max_vertices)

    def check_budget(self) -> None:
        if self.q > self.budget:
            raise BudgetExceeded(f"q={self.q} exceeds the enumeration budget of {self.budget} edges")

    def accepts(self, g: Graph) -> bool:
        if self.min_max_degree and max_degree(g) < self.min_max_degree:
            return False
        if self.connected and not g.is_connected():
            return False
        return True


ROOT: Node = (Graph.empty(0), [])


def _edge_key(adj, deg, a: int, b: int) -> tuple[int, int, int]:
    da, db = deg[a], deg[b]
    if da > db:
        da, db = db, da
    return (da, db, (adj[a] & adj[b]).bit_count())


def _is_canonical_extension(child: Graph, a: int, b: int) -> tuple[bool, object]:
    """Cheap test first; returns ``(accepted, labeling_or_None)``."""
    adj = child.adj
    deg = [r.bit_count() for r in adj]
    key = _edge_key(adj, deg, a, b)
    ties = []
    for u in range(child.n):
        for v in bits(adj[u] >> (u + 1)):
            v += u + 1
            k = _edge_key(adj, deg, u, v)
            if k < key:
                return False, None
            if k == key:
                ties.append((u, v))
    lab = canonical_labeling(child)
    if len(ties) == 1:
        return True, lab
    pos = lab.position
    last = max(ties, key=lambda e: (max(pos[e[0]], pos[e[1]]), min(pos[e[0]], pos[e[1]])))
    if last == (a, b):
        return True, lab
    # same orbit of Aut(child)?
    seen = {last}
    stack = [last]
    while stack:
        u, v = stack.pop()
        for p in lab.generators:
            x, y = p[u], p[v]
            e = (x, y) if x < y else (y, x)
            if e == (a, b):
                return True, lab
            if e not in seen:
                seen.add(e)
                stack.append(e)
    return False, lab


def _candidate_orbits(g: Graph, gens: list[Perm]) -> list[tuple[int, int]]:
    """One representative per Aut(g)-orbit of possible new edges."""
    n = g.n
    out: list[tuple[int, int]] = []
    # non-edges among existing vertices
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if not g.adj[a] >> b & 1]
    if pairs:
        index = {p: i for i, p in enumerate(pairs)}
        parent = list(range(len(pairs)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in gens:
            for i, (a, b) in enumerate(pairs):
                x, y = p[a], p[b]
                j = index[(x, y) if x < y else (y, x)]
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
        out.extend(pairs[i] for i in range(len(pairs)) if find(i) == i)
    # pendant edge to a new vertex
    vert_parent = list(range(n))

    def vfind(x: int) -> int:
        while vert_parent[x] != x:
            vert_parent[x] = vert_parent[vert_parent[x]]
            x = vert_parent[x]
        return x

    for p in gens:
        for v in range(n):
            a, b = vfind(v), vfind(p[v])
            if a != b:
                vert_parent[max(a, b)] = min(a, b)
    out.extend((v, n) for v in range(n) if vfind(v) == v)
    # a new disjoint edge
    out.append((n, n + 1))
    return out


def children(node: Node, task: EnumerationTask) -> Iterator[Node]:
    """Canonical children of ``node`` (graphs with one more edge), in a fixed order."""
    g, gens = node
    remaining = task.q - g.num_edges - 1
    limit = task.vertex_limit
    d0 = task.min_max_degree if task.prune else 0
    base_max = max_degree(g)
    for a, b in _candidate_orbits(g, gens):
        if b >= limit:
            continue
        if d0:
            grown = max(base_max, g.degree(a) + 1 if a < g.n else 1, g.degree(b) + 1 if b < g.n else 1)
            if grown + remaining < d0:
                continue
        child = g.add_edge(a, b)
        ok, lab = _is_canonical_extension(child, a, b)
        if not ok:
            continue
        pos = lab.position
        relabeled = child.relabel(pos)
        new_gens = []
        for p in lab.generators:
            q = [0] * child.n
            for v in range(child.n):
                q[pos[v]] = pos[p[v]]
            new_gens.append(tuple(q))
        yield relabeled, new_gens


def _expand(node: Node, task: EnumerationTask) -> Iterator[Graph]:
    if node[0].num_edges == task.q:
        if task.accepts(node[0]):
            yield node[0]
        return
    for child in children(node, task):
        yield from _expand(child, task)


def frontier(task: EnumerationTask, min_nodes: int) -> list[Node]:
    """Nodes at the shallowest depth with at least ``min_nodes`` members (below ``q``)."""
    level = [ROOT]
    depth = 0
    while len(level) < min_nodes and depth < task.q - 1:
        level = [c for node in level for c in children(node, task)]
        depth += 1
    return level


def graphs_with_edges(task: EnumerationTask, workers: int = 1) -> Iterator[Graph]:
    """Yield one canonically labelled graph per isomorphism class.

    Order is the depth-first order of the search tree, independent of the
    number of workers.
    """
    task.check_budget()
    if workers <= 1:
        yield from _expand(ROOT, task)
        return
    for chunk in map_subtrees(task, _collect, workers):
        yield from chunk


def _collect(task: EnumerationTask, node: Node) -> list[Graph]:
    return list(_expand(node, task))


def map_subtrees(task: EnumerationTask, fn: Callable[[EnumerationTask, Node], object], workers: int = 1) -> Iterator:
    """Apply ``fn(task, node)`` to every frontier subtree; results in tree order.

    ``fn`` must be a module-level function when ``workers > 1``.
    """
    task.check_budget()
    nodes = frontier(task, max(1, 8 * workers) if workers > 1 else 1)
    if workers <= 1:
        for node in nodes:
            yield fn(task, node)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(partial(fn, task), nodes, chunksize=1)


def subtree_graphs(task: EnumerationTask, node: Node) -> Iterator[Graph]:
    """All accepted graphs in the subtree below ``node``."""
    return _expand(node, task)


def count_with_edges(q: int, min_max_degree: int = 0, connected: bool = False,
                     workers: int = 1, budget: int = DEFAULT_EDGE_LIMIT) -> int:
    task = EnumerationTask(q, min_max_degree=min_max_degree, connected=connected, budget=budget)
    return sum(map_subtrees(task, _count, workers))


def _count(task: EnumerationTask, node: Node) -> int:
    return sum(1 for _ in _expand(node, task))


def default_workers() -> int:
    return os.cpu_count() or 1
