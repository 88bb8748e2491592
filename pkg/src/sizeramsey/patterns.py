"""Pattern containment: does a graph contain a given (not necessarily induced) subgraph?

Fans are detected through matchings in neighbourhoods, disjoint path
packings by a component-wise backtracker, and anything else by a generic
VF2-style embedding search.  Every positive answer comes with a
:class:`Witness`, an explicit embedding of the pattern graph into the host.
"""

from __future__ import annotations

import re
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

from .canon import canonical
from .errors import InvalidParameter, PatternSyntaxError
from .families import family
from .graph import Graph, bits, max_degree
from .graph6 import graph6_str, parse_graph6
from .matching import matching_in_mask

KINDS = ("Fan", "Path", "PathPack", "Cycle", "Clique", "Star", "Matching", "CompleteBipartite", "Generic")
_ARITY = {"Fan": 1, "Path": 1, "PathPack": 2, "Cycle": 1, "Clique": 1, "Star": 1,
          "Matching": 1, "CompleteBipartite": 2, "Generic": 0}


@dataclass(frozen=True)
class Pattern:
    kind: str
    args: tuple[int, ...] = ()
    graph: Graph | None = None

    def __post_init__(self):
        if self.kind not in _ARITY:
            raise InvalidParameter(f"unknown pattern kind {self.kind!r}")
        if len(self.args) != _ARITY[self.kind]:
            raise InvalidParameter(f"{self.kind} takes {_ARITY[self.kind]} parameter(s)")
        if any(a < 1 for a in self.args):
            raise InvalidParameter(f"{self.kind}{self.args}: parameters must be >= 1")
        if self.kind == "Cycle" and self.args[0] < 3:
            raise InvalidParameter("cycle length must be at least 3")
        if self.kind == "Generic" and self.graph is None:
            raise InvalidParameter("Generic pattern needs a graph")

    def __str__(self) -> str:
        k, a = self.kind, self.args
        if k == "Fan":
            return f"F{a[0]}"
        if k == "Path":
            return f"P{a[0]}"
        if k == "PathPack":
            return f"{a[0]}P{a[1]}"
        if k == "Cycle":
            return f"C{a[0]}"
        if k == "Clique":
            return f"K{a[0]}"
        if k == "Star":
            return f"S{a[0]}"
        if k == "Matching":
            return f"{a[0]}K2"
        if k == "CompleteBipartite":
            return f"K{a[0]},{a[1]}"
        return "g6:" + graph6_str(self.graph)


def Fan(n: int) -> Pattern:
    return Pattern("Fan", (n,))


def Path(m: int) -> Pattern:
    return Pattern("Path", (m,))


def PathPack(n: int, m: int) -> Pattern:
    return Pattern("PathPack", (n, m))


def Cycle(length: int) -> Pattern:
    return Pattern("Cycle", (length,))


def Clique(k: int) -> Pattern:
    return Pattern("Clique", (k,))


def Star(k: int) -> Pattern:
    return Pattern("Star", (k,))


def Matching(n: int) -> Pattern:
    return Pattern("Matching", (n,))


def CompleteBipartite(a: int, b: int) -> Pattern:
    return Pattern("CompleteBipartite", (a, b))


def Generic(g: Graph) -> Pattern:
    return Pattern("Generic", (), g)


_TEXT = [
    (re.compile(r"g6:(.+)$"), lambda m: Generic(parse_graph6(m[1]))),
    (re.compile(r"F(\d+)$"), lambda m: Fan(int(m[1]))),
    (re.compile(r"P(\d+)$"), lambda m: Path(int(m[1]))),
    (re.compile(r"C(\d+)$"), lambda m: Cycle(int(m[1]))),
    (re.compile(r"S(\d+)$"), lambda m: Star(int(m[1]))),
    (re.compile(r"K(\d+),(\d+)$"), lambda m: CompleteBipartite(int(m[1]), int(m[2]))),
    (re.compile(r"(\d+)K2$"), lambda m: Matching(int(m[1]))),
    (re.compile(r"K(\d+)$"), lambda m: Clique(int(m[1]))),
    (re.compile(r"(\d+)P(\d+)$"), lambda m: PathPack(int(m[1]), int(m[2]))),
]


def parse_pattern(text: str) -> Pattern:
    """Parse ``F3``, ``P5``, ``2P4``, ``C7``, ``K4``, ``K1,3``, ``3K2``, ``S4``, ``g6:<graph6>``."""
    text = text.strip()
    for rx, make in _TEXT:
        m = rx.match(text)
        if m:
            try:
                return make(m)
            except (InvalidParameter, ValueError) as exc:
                raise PatternSyntaxError(f"bad pattern {text!r}: {exc}") from exc
    raise PatternSyntaxError(f"unrecognised pattern {text!r}")


def pattern_graph(p: Pattern) -> Graph:
    """The pattern as a graph, numbered like the matching family constructor."""
    k, a = p.kind, p.args
    if k == "Generic":
        return p.graph
    if k in ("Path", "Clique") and a[0] == 1:
        return Graph.empty(1)
    if k == "PathPack" and a[1] == 1:
        return Graph.empty(a[0])
    name = {"PathPack": "PathUnion"}.get(k, k)
    return family(name, *a)


@lru_cache(maxsize=512)
def _pattern_graph_cached(p: Pattern) -> Graph:
    return pattern_graph(p)


def pattern_max_degree(p: Pattern) -> int:
    return max_degree(_pattern_graph_cached(p))


# -- recognising parametric families ----------------------------------------------

def _candidates(nv: int, ne: int) -> Iterator[Pattern]:
    if nv % 2 == 1 and ne == 3 * (nv // 2) and nv >= 3:
        yield Fan(nv // 2)
    if ne == nv - 1 and nv >= 1:
        yield Path(nv)
        if nv >= 2:
            yield Star(nv - 1)
    for m in range(2, nv + 1):
        if nv % m == 0 and ne == (nv // m) * (m - 1):
            yield PathPack(nv // m, m)
    if ne == nv and nv >= 3:
        yield Cycle(nv)
    if ne == nv * (nv - 1) // 2:
        yield Clique(nv)
    if nv % 2 == 0 and ne == nv // 2 and nv >= 2:
        yield Matching(nv // 2)
    for s in range(1, nv):
        if s <= nv - s and s * (nv - s) == ne:
            yield CompleteBipartite(s, nv - s)


@lru_cache(maxsize=1024)
def aliases(p: Pattern) -> tuple[Pattern, ...]:
    """All parametric patterns whose graph is isomorphic to ``p``'s graph."""
    g = _pattern_graph_cached(p)
    form = canonical(g)
    out = []
    for c in _candidates(g.n, g.num_edges):
        cg = _pattern_graph_cached(c)
        if cg.n == g.n and cg.num_edges == g.num_edges and canonical(cg) == form:
            out.append(c)
    return tuple(out)


def is_isomorphic_to(p: Pattern, q: Pattern) -> bool:
    a, b = _pattern_graph_cached(p), _pattern_graph_cached(q)
    return a.n == b.n and a.num_edges == b.num_edges and canonical(a) == canonical(b)


# -- witnesses ---------------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    """Embedding of ``pattern_graph(pattern)`` into a host graph.

    ``mapping[i]`` is the host vertex playing pattern vertex ``i``.
    """

    pattern: Pattern
    mapping: tuple[int, ...]

    def edges(self) -> list[tuple[int, int]]:
        h = _pattern_graph_cached(self.pattern)
        out = []
        for u, v in h.edges():
            a, b = self.mapping[u], self.mapping[v]
            out.append((a, b) if a < b else (b, a))
        return sorted(out)

    @property
    def center(self) -> int | None:
        if self.pattern.kind in ("Fan", "Star"):
            return self.mapping[-1]
        return None

    def paths(self) -> list[tuple[int, ...]]:
        if self.pattern.kind == "PathPack":
            n, m = self.pattern.args
            return [self.mapping[m * i:m * i + m] for i in range(n)]
        if self.pattern.kind == "Path":
            return [self.mapping]
        return []


def validate_witness(g: Graph, w: Witness) -> bool:
    """Independent check that ``w`` embeds its pattern in ``g``."""
    h = pattern_graph(w.pattern)
    if len(w.mapping) != h.n or len(set(w.mapping)) != h.n:
        return False
    if any(not 0 <= x < g.n for x in w.mapping):
        return False
    return all(g.has_edge(w.mapping[u], w.mapping[v]) for u, v in h.edges())


# -- specialised searches -----------------------------------------------------------

def _fan_at(g: Graph, v: int, n: int) -> list[tuple[int, int]] | None:
    if g.adj[v].bit_count() < 2 * n:
        return None
    rim = matching_in_mask(g.adj, g.adj[v], stop_at=n)
    return rim if len(rim) >= n else None


def find_fan(g: Graph, n: int) -> Witness | None:
    for v in range(g.n):
        rim = _fan_at(g, v, n)
        if rim is not None:
            mapping = [x for e in rim for x in e] + [v]
            return Witness(Fan(n), tuple(mapping))
    return None


def max_fan(g: Graph) -> tuple[int, int | None]:
    """Largest ``n`` with ``F_n`` in ``g`` and its centre (lowest index on ties)."""
    best, center = 0, None
    for v in range(g.n):
        if g.adj[v].bit_count() < 2 * (best + 1):
            continue
        k = len(matching_in_mask(g.adj, g.adj[v]))
        if k > best:
            best, center = k, v
    return best, center


def find_matching(g: Graph, n: int) -> Witness | None:
    m = matching_in_mask(g.adj, g.vertex_mask(), stop_at=n)
    if len(m) < n:
        return None
    return Witness(Matching(n), tuple(x for e in m for x in e))


def find_star(g: Graph, k: int) -> Witness | None:
    for v in range(g.n):
        if g.adj[v].bit_count() >= k:
            leaves = list(bits(g.adj[v]))[:k]
            return Witness(Star(k), tuple(leaves) + (v,))
    return None


def find_clique(g: Graph, k: int) -> Witness | None:
    adj = g.adj

    def extend(chosen: list[int], cand: int) -> list[int] | None:
        if len(chosen) == k:
            return chosen
        if len(chosen) + cand.bit_count() < k:
            return None
        for v in bits(cand):
            if adj[v].bit_count() < k - 1:
                continue
            r = extend(chosen + [v], cand & adj[v] & ~((2 << v) - 1))
            if r is not None:
                return r
        return None

    if k == 1:
        return Witness(Clique(1), (0,)) if g.n else None
    r = extend([], g.vertex_mask())
    return Witness(Clique(k), tuple(r)) if r is not None else None


def find_path(g: Graph, m: int, within: int | None = None) -> list[int] | None:
    """A path on ``m`` vertices inside vertex set ``within`` (default: all)."""
    adj = g.adj
    avail = g.vertex_mask() if within is None else within
    if m <= 0:
        return []
    if m == 1:
        return [next(bits(avail))] if avail else None
    memo = set() if g.n <= 25 else None

    def dfs(v: int, used: int, length: int, seq: list[int]) -> list[int] | None:
        if length == m:
            return seq
        key = (v, used)
        if memo is not None and key in memo:
            return None
        for u in bits(adj[v] & avail & ~used):
            r = dfs(u, used | (1 << u), length + 1, seq + [u])
            if r is not None:
                return r
        if memo is not None:
            memo.add(key)
        return None

    for s in bits(avail):
        r = dfs(s, 1 << s, 1, [s])
        if r is not None:
            return r
    return None


def find_cycle(g: Graph, length: int) -> list[int] | None:
    adj = g.adj
    for s in range(g.n):
        higher = g.vertex_mask() & ~((2 << s) - 1)

        def dfs(v: int, used: int, seq: list[int]) -> list[int] | None:
            if len(seq) == length:
                return seq if adj[v] >> s & 1 else None
            for u in bits(adj[v] & higher & ~used):
                r = dfs(u, used | (1 << u), seq + [u])
                if r is not None:
                    return r
            return None

        r = dfs(s, 1 << s, [s])
        if r is not None:
            return r
    return None


def _component_masks(adj, avail: int) -> list[int]:
    comps = []
    rest = avail
    while rest:
        low = rest & -rest
        comp = frontier = low
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= adj[u]
            frontier = nxt & avail & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def _paths_through(adj, v: int, avail: int, m: int) -> dict[int, tuple[int, ...]]:
    """All ``m``-vertex paths in ``avail`` through ``v``, keyed by vertex mask."""
    arms: list[list[tuple[tuple[int, ...], int]]] = [[] for _ in range(m)]

    def grow(seq: tuple[int, ...], used: int) -> None:
        arms[len(seq) - 1].append((seq, used))
        if len(seq) == m:
            return
        for u in bits(adj[seq[-1]] & avail & ~used):
            grow(seq + (u,), used | (1 << u))

    grow((v,), 1 << v)
    out: dict[int, tuple[int, ...]] = {}
    for i in range(m):
        j = m - 1 - i
        if i > j:
            break
        for left, lmask in arms[i]:
            for right, rmask in arms[j]:
                if lmask & rmask != 1 << v:
                    continue
                mask = lmask | rmask
                if mask not in out:
                    out[mask] = tuple(reversed(left)) + right[1:]
    return out


def _pack(adj, avail: int, m: int, k: int) -> list[tuple[int, ...]] | None:
    if k == 0:
        return []
    comps = [c for c in _component_masks(adj, avail) if c.bit_count() >= m]
    if sum(c.bit_count() // m for c in comps) < k:
        return None
    avail = 0
    for c in comps:
        avail |= c
    v = (avail & -avail).bit_length() - 1
    for mask, seq in _paths_through(adj, v, avail, m).items():
        r = _pack(adj, avail & ~mask, m, k - 1)
        if r is not None:
            return [seq] + r
    return _pack(adj, avail & ~(1 << v), m, k)


def path_packing_number(g: Graph, m: int, limit: int | None = None) -> tuple[int, list[tuple[int, ...]]]:
    """Largest number of vertex-disjoint ``P_m`` (capped at ``limit``) and a packing."""
    adj = g.adj
    comps = sorted(_component_masks(adj, g.vertex_mask()), key=lambda c: -c.bit_count())
    total: list[tuple[int, ...]] = []
    for comp in comps:
        remaining = None if limit is None else limit - len(total)
        if remaining == 0:
            break
        cap = comp.bit_count() // m
        if remaining is not None:
            cap = min(cap, remaining)
        for k in range(cap, 0, -1):
            r = _pack(adj, comp, m, k)
            if r is not None:
                total.extend(r)
                break
    return len(total), total


def find_path_pack(g: Graph, n: int, m: int) -> Witness | None:
    if m == 1:
        return Witness(PathPack(n, 1), tuple(range(n))) if g.n >= n else None
    count, paths = path_packing_number(g, m, limit=n)
    if count < n:
        return None
    return Witness(PathPack(n, m), tuple(x for p in paths for x in p))


# -- generic embedding search -------------------------------------------------------

def subgraph_iso(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """Find an injective edge-preserving map ``h -> g`` (non-induced)."""
    if h.n > g.n or h.num_edges > g.num_edges:
        return None
    hdeg = h.degrees()
    gdeg = g.degrees()
    # connectivity-first order: start each component at its max-degree vertex
    order: list[int] = []
    placed = 0
    while len(order) < h.n:
        start = max((v for v in range(h.n) if not placed >> v & 1), key=lambda v: (hdeg[v], -v))
        order.append(start)
        placed |= 1 << start
        i = len(order) - 1
        while i < len(order):
            for u in sorted(bits(h.adj[order[i]] & ~placed), key=lambda x: (-hdeg[x], x)):
                order.append(u)
                placed |= 1 << u
            i += 1
    position = {v: i for i, v in enumerate(order)}
    back = [[u for u in bits(h.adj[v]) if position[u] < position[v]] for v in order]
    fits = [0] * h.n
    for v in range(h.n):
        mask = 0
        for x in range(g.n):
            if gdeg[x] >= hdeg[v]:
                mask |= 1 << x
        fits[v] = mask
    image = [-1] * h.n

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        cand = fits[v] & ~used
        for u in back[i]:
            cand &= g.adj[image[u]]
        for x in bits(cand):
            image[v] = x
            if extend(i + 1, used | (1 << x)):
                return True
        image[v] = -1
        return False

    return tuple(image) if extend(0, 0) else None


def contains(g: Graph, p: Pattern) -> Witness | None:
    """Witness that ``g`` contains ``p`` as a subgraph, or ``None``."""
    k, a = p.kind, p.args
    if k == "Fan":
        return find_fan(g, a[0])
    if k == "Matching":
        return find_matching(g, a[0])
    if k == "Star":
        return find_star(g, a[0])
    if k == "Clique":
        return find_clique(g, a[0])
    if k == "Path":
        seq = find_path(g, a[0])
        return Witness(p, tuple(seq)) if seq is not None else None
    if k == "PathPack":
        return find_path_pack(g, a[0], a[1])
    if k == "Cycle":
        seq = find_cycle(g, a[0])
        return Witness(p, tuple(seq)) if seq is not None else None
    mapping = subgraph_iso(g, pattern_graph(p))
    return Witness(p, mapping) if mapping is not None else None


def has(g: Graph, p: Pattern) -> bool:
    return contains(g, p) is not None
