"""Bitset graph representation.

A :class:`Graph` is an immutable simple undirected graph on at most 64
vertices.  Vertex ``v``'s neighbourhood is stored as an ``int`` bit row, so
set operations on neighbourhoods are single integer operations.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from .errors import CapacityExceeded, InvalidParameter

MAX_VERTICES = 64

Edge = tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise InvalidParameter(f"negative vertex count {n}")
        if n > MAX_VERTICES:
            raise CapacityExceeded(f"{n} vertices exceeds the {MAX_VERTICES}-vertex capacity")
        if len(adj) != n:
            raise InvalidParameter("adjacency length does not match vertex count")
        self.n = n
        self.adj = tuple(adj)
        self._m = sum(row.bit_count() for row in self.adj) // 2

    # -- construction -----------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [0] * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        if n > MAX_VERTICES:
            raise CapacityExceeded(f"{n} vertices exceeds the {MAX_VERTICES}-vertex capacity")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise InvalidParameter(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    def __getstate__(self):
        return (self.n, self.adj)

    def __setstate__(self, state):
        n, adj = state
        self.n = n
        self.adj = adj
        self._m = sum(row.bit_count() for row in adj) // 2

    # -- basic queries ----------------------------------------------------

    @property
    def num_edges(self) -> int:
        return self._m

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[Edge]:
        """All edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        out = []
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def isolated_vertices(self) -> list[int]:
        return [v for v, row in enumerate(self.adj) if not row]

    def check_invariants(self) -> None:
        """Raise ``AssertionError`` unless the rows are symmetric and loop-free."""
        for v, row in enumerate(self.adj):
            assert not row >> v & 1, f"loop at {v}"
            assert row >> self.n == 0, f"row {v} points past n"
            for u in bits(row):
                assert self.adj[u] >> v & 1, f"asymmetric edge {v}-{u}"

    # -- derived graphs ---------------------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        """Return a copy with edge ``uv``; vertices ``>= n`` are created."""
        n = max(self.n, u + 1, v + 1)
        adj = list(self.adj) + [0] * (n - self.n)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(n, adj)

    def remove_edges(self, edges: Iterable[Edge]) -> Graph:
        adj = list(self.adj)
        for u, v in edges:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self.n, adj)

    def edge_subgraph(self, edges: Iterable[Edge]) -> Graph:
        """Spanning subgraph (same vertex set) with only ``edges``."""
        return Graph.from_edges(self.n, edges)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for u in bits(row):
                new |= 1 << perm[u]
            adj[perm[v]] = new
        return Graph(self.n, adj)

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph; ``vertices[i]`` becomes vertex ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for u in bits(self.adj[v]):
                i = index.get(u)
                if i is not None:
                    row |= 1 << i
            adj.append(row)
        return Graph(len(vertices), adj)

    def without_isolated(self) -> Graph:
        keep = [v for v, row in enumerate(self.adj) if row]
        if len(keep) == self.n:
            return self
        return self.induced(keep)

    def components(self) -> list[int]:
        """Vertex masks of the connected components, by lowest vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    if offset > MAX_VERTICES:
        raise CapacityExceeded(f"disjoint union needs {offset} vertices")
    return Graph(offset, adj)


def join_one(g: Graph) -> Graph:
    """Add a new vertex (numbered last) adjacent to every vertex of ``g``."""
    if g.n + 1 > MAX_VERTICES:
        raise CapacityExceeded(f"join needs {g.n + 1} vertices")
    c = g.n
    adj = [row | (1 << c) for row in g.adj]
    adj.append((1 << c) - 1)
    return Graph(c + 1, adj)


def max_degree(g: Graph) -> int:
    return max((row.bit_count() for row in g.adj), default=0)


def degree_sequence(g: Graph) -> list[int]:
    """Degrees sorted in non-increasing order."""
    return sorted(g.degrees(), reverse=True)
