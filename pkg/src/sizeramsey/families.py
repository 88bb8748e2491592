"""Named graph families.

Vertex numbering is deterministic so that certificates are reproducible.
Whenever a family has a distinguished centre it is numbered last:

=====================  ==================================================
family                 numbering
=====================  ==================================================
Path(m)                0-1-...-(m-1)
Cycle(n)               0-1-...-(n-1)-0
Clique(n)              0..n-1
Star(k)                leaves 0..k-1, centre k
Matching(n)            edges (2i, 2i+1)
Fan(n)                 rim edges (2i, 2i+1), centre 2n
Wheel(n)               cycle 0..n-1, centre n
CompleteBipartite(a,b) sides 0..a-1 and a..a+b-1
PathUnion(n,m)         path i on m*i .. m*i+m-1
K1PlusNC4(n)           cycle i on 4i..4i+3, centre 4n
K1PlusNC4P3(n)         cycles as above, path 4n-(4n+1)-(4n+2), centre 4n+3
HGraph(n)              rim edges (2i, 2i+1), pendant edge (2n, 2n+1),
                       second centre v = 2n+2, main centre u = 2n+3
TwoF2                  two copies of Fan(2): 0..4 and 5..9
DisjointUnion(parts)   parts in order
JoinOne(inner)         inner graph, then the new centre
=====================  ==================================================
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import CapacityExceeded, InvalidParameter
from .graph import MAX_VERTICES, Graph, disjoint_union, join_one

_ARITY = {
    "Path": 1,
    "Cycle": 1,
    "Clique": 1,
    "Star": 1,
    "Matching": 1,
    "Fan": 1,
    "Wheel": 1,
    "CompleteBipartite": 2,
    "PathUnion": 2,
    "K1PlusNC4": 1,
    "K1PlusNC4P3": 1,
    "HGraph": 1,
    "TwoF2": 0,
}


@dataclass(frozen=True)
class FamilySpec:
    """A named family member, e.g. ``FamilySpec("Fan", (3,))``.

    ``DisjointUnion`` carries a tuple of FamilySpecs in ``parts``;
    ``JoinOne`` carries a single one.
    """

    kind: str
    args: tuple[int, ...] = ()
    parts: tuple[FamilySpec, ...] = ()

    def __str__(self) -> str:
        if self.kind == "DisjointUnion":
            return "DisjointUnion(" + ", ".join(map(str, self.parts)) + ")"
        if self.kind == "JoinOne":
            return f"JoinOne({self.parts[0]})"
        if not self.args:
            return self.kind
        return f"{self.kind}({', '.join(map(str, self.args))})"


def _vertex_count(spec: FamilySpec) -> int:
    k, a = spec.kind, spec.args
    if k in ("Path", "Cycle", "Clique"):
        return a[0]
    if k in ("Star", "Wheel"):
        return a[0] + 1
    if k == "Matching":
        return 2 * a[0]
    if k == "Fan":
        return 2 * a[0] + 1
    if k == "CompleteBipartite":
        return a[0] + a[1]
    if k == "PathUnion":
        return a[0] * a[1]
    if k == "K1PlusNC4":
        return 4 * a[0] + 1
    if k == "K1PlusNC4P3":
        return 4 * a[0] + 4
    if k == "HGraph":
        return 2 * a[0] + 4
    if k == "TwoF2":
        return 10
    if k == "DisjointUnion":
        return sum(_vertex_count(p) for p in spec.parts)
    if k == "JoinOne":
        return _vertex_count(spec.parts[0]) + 1
    raise InvalidParameter(f"unknown family {k!r}")


def _validate(spec: FamilySpec) -> None:
    k = spec.kind
    if k in ("DisjointUnion", "JoinOne"):
        if k == "JoinOne" and len(spec.parts) != 1:
            raise InvalidParameter("JoinOne takes exactly one inner family")
        if k == "DisjointUnion" and not spec.parts:
            raise InvalidParameter("DisjointUnion needs at least one part")
        for p in spec.parts:
            _validate(p)
        return
    if k not in _ARITY:
        raise InvalidParameter(f"unknown family {k!r}")
    if len(spec.args) != _ARITY[k]:
        raise InvalidParameter(f"{k} takes {_ARITY[k]} parameter(s), got {len(spec.args)}")
    if any(not isinstance(x, int) or x < 1 for x in spec.args):
        raise InvalidParameter(f"{spec}: parameters must be positive integers")
    # members with isolated vertices are excluded: every graph here has edges at each vertex
    if k in ("Cycle", "Wheel") and spec.args[0] < 3:
        raise InvalidParameter(f"{spec}: cycle length must be at least 3")
    if k in ("Path", "Clique") and spec.args[0] < 2:
        raise InvalidParameter(f"{spec}: would be a single isolated vertex")
    if k == "PathUnion" and spec.args[1] < 2:
        raise InvalidParameter(f"{spec}: paths need at least 2 vertices")


def _path_edges(start: int, m: int) -> list[tuple[int, int]]:
    return [(start + i, start + i + 1) for i in range(m - 1)]


def _cycle_edges(start: int, n: int) -> list[tuple[int, int]]:
    return _path_edges(start, n) + [(start, start + n - 1)]


def _build(spec: FamilySpec) -> Graph:
    k, a = spec.kind, spec.args
    if k == "Path":
        return Graph.from_edges(a[0], _path_edges(0, a[0]))
    if k == "Cycle":
        return Graph.from_edges(a[0], _cycle_edges(0, a[0]))
    if k == "Clique":
        n = a[0]
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if k == "Star":
        return Graph.from_edges(a[0] + 1, [(i, a[0]) for i in range(a[0])])
    if k == "Matching":
        return Graph.from_edges(2 * a[0], [(2 * i, 2 * i + 1) for i in range(a[0])])
    if k == "Fan":
        return join_one(_build(FamilySpec("Matching", a)))
    if k == "Wheel":
        return join_one(_build(FamilySpec("Cycle", a)))
    if k == "CompleteBipartite":
        s, t = a
        return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])
    if k == "PathUnion":
        n, m = a
        edges = [e for i in range(n) for e in _path_edges(m * i, m)]
        return Graph.from_edges(n * m, edges)
    if k == "K1PlusNC4":
        n = a[0]
        inner = Graph.from_edges(4 * n, [e for i in range(n) for e in _cycle_edges(4 * i, 4)])
        return join_one(inner)
    if k == "K1PlusNC4P3":
        n = a[0]
        edges = [e for i in range(n) for e in _cycle_edges(4 * i, 4)]
        edges += _path_edges(4 * n, 3)
        return join_one(Graph.from_edges(4 * n + 3, edges))
    if k == "HGraph":
        n = a[0]
        u1, u2, v, u = 2 * n, 2 * n + 1, 2 * n + 2, 2 * n + 3
        edges = [(2 * i, 2 * i + 1) for i in range(n)]
        edges.append((u1, u2))
        edges += [(x, v) for x in range(2 * n)]
        edges += [(x, u) for x in range(2 * n + 2)]
        return Graph.from_edges(2 * n + 4, edges)
    if k == "TwoF2":
        fan = _build(FamilySpec("Fan", (2,)))
        return disjoint_union([fan, fan])
    if k == "DisjointUnion":
        return disjoint_union([_build(p) for p in spec.parts])
    if k == "JoinOne":
        return join_one(_build(spec.parts[0]))
    raise InvalidParameter(f"unknown family {k!r}")


def build(spec: FamilySpec) -> Graph:
    """Construct the graph named by ``spec``.

    Raises InvalidParameter for bad parameters and CapacityExceeded when the
    result would need more than 64 vertices.
    """
    _validate(spec)
    n = _vertex_count(spec)
    if n > MAX_VERTICES:
        raise CapacityExceeded(f"{spec} needs {n} vertices")
    return _build(spec)


def family(kind: str, *args: int) -> Graph:
    """Shorthand: ``family("Fan", 3)``."""
    return build(FamilySpec(kind, tuple(args)))


_FAMILY_TEXT = [
    (re.compile(r"H(\d+)$"), lambda m: FamilySpec("HGraph", (int(m[1]),))),
    (re.compile(r"K1\+(\d+)C4\+P3$"), lambda m: FamilySpec("K1PlusNC4P3", (int(m[1]),))),
    (re.compile(r"K1\+(\d+)C4$"), lambda m: FamilySpec("K1PlusNC4", (int(m[1]),))),
    (re.compile(r"2F2$"), lambda m: FamilySpec("TwoF2")),
    (re.compile(r"W(\d+)$"), lambda m: FamilySpec("Wheel", (int(m[1]),))),
    (re.compile(r"F(\d+)$"), lambda m: FamilySpec("Fan", (int(m[1]),))),
    (re.compile(r"P(\d+)$"), lambda m: FamilySpec("Path", (int(m[1]),))),
    (re.compile(r"C(\d+)$"), lambda m: FamilySpec("Cycle", (int(m[1]),))),
    (re.compile(r"S(\d+)$"), lambda m: FamilySpec("Star", (int(m[1]),))),
    (re.compile(r"K(\d+),(\d+)$"), lambda m: FamilySpec("CompleteBipartite", (int(m[1]), int(m[2])))),
    (re.compile(r"(\d+)K2$"), lambda m: FamilySpec("Matching", (int(m[1]),))),
    (re.compile(r"K(\d+)$"), lambda m: FamilySpec("Clique", (int(m[1]),))),
    (re.compile(r"(\d+)P(\d+)$"), lambda m: FamilySpec("PathUnion", (int(m[1]), int(m[2])))),
]


def parse_family(text: str) -> FamilySpec:
    """Parse the CLI family grammar (without the ``family:`` prefix).

    ``H3``, ``K1+2C4``, ``K1+2C4+P3``, ``2F2``, ``W5``, ``F3``, ``P5``,
    ``C6``, ``S4``, ``K2,3``, ``3K2``, ``K4``, ``2P3``; a ``|``-separated
    list denotes a disjoint union.
    """
    text = text.strip()
    if "|" in text:
        return FamilySpec("DisjointUnion", parts=tuple(parse_family(t) for t in text.split("|")))
    for rx, make in _FAMILY_TEXT:
        m = rx.match(text)
        if m:
            return make(m)
    raise InvalidParameter(f"unrecognised family {text!r}")
