"""Maximum cardinality matching on general graphs (Edmonds' blossom algorithm).

Neighbourhood graphs routinely contain odd cycles (the neighbourhood of a
vertex of K5 is K4, of a wheel hub a cycle), so a bipartite augmenting-path
search is not enough here.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph, bits


def _augment_from(root, nbrs, match, verts):
    parent = {v: -1 for v in verts}
    base = {v: v for v in verts}
    used = {v: False for v in verts}
    used[root] = True
    queue = deque([root])

    def lca(a, b):
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = parent[match[b]]

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom.add(base[v])
            blossom.add(base[match[v]])
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in nbrs[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom: set[int] = set()
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in verts:
                    if base[i] in blossom:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                nxt = match[to]
                used[nxt] = True
                queue.append(nxt)
    return -1, parent


def matching_in_mask(adj: tuple[int, ...] | list[int], mask: int, stop_at: int | None = None) -> list[tuple[int, int]]:
    """Maximum matching of the subgraph induced by the vertex set ``mask``.

    With ``stop_at`` the search ends as soon as that many edges are matched
    (the result then has at least that many edges but is not necessarily
    maximum).
    """
    verts = list(bits(mask))
    nbrs = {v: list(bits(adj[v] & mask)) for v in verts}
    match = {v: -1 for v in verts}
    size = 0
    # greedy start
    for v in verts:
        if match[v] == -1:
            for u in nbrs[v]:
                if match[u] == -1:
                    match[v], match[u] = u, v
                    size += 1
                    break
    if stop_at is not None and size >= stop_at:
        return _pairs(match, stop_at)
    for root in verts:
        if match[root] != -1 or not nbrs[root]:
            continue
        end, parent = _augment_from(root, nbrs, match, verts)
        if end == -1:
            continue
        v = end
        while v != -1:
            pv = parent[v]
            ppv = match[pv]
            match[v], match[pv] = pv, v
            v = ppv
        size += 1
        if stop_at is not None and size >= stop_at:
            break
    return _pairs(match, stop_at)


def _pairs(match: dict[int, int], limit: int | None) -> list[tuple[int, int]]:
    out = sorted((v, u) for v, u in match.items() if u != -1 and v < u)
    return out if limit is None else out[:limit]


def max_matching(g: Graph) -> tuple[int, list[tuple[int, int]]]:
    """Return ``(nu(g), edges)`` for a maximum matching of ``g``."""
    edges = matching_in_mask(g.adj, g.vertex_mask())
    return len(edges), edges


def matching_number(g: Graph) -> int:
    return len(matching_in_mask(g.adj, g.vertex_mask()))


def neighborhood_matching(g: Graph, v: int, stop_at: int | None = None) -> list[tuple[int, int]]:
    """Maximum matching inside ``g[N(v)]``."""
    return matching_in_mask(g.adj, g.adj[v], stop_at)
