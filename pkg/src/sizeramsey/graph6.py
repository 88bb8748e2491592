"""graph6 encoding and decoding (bit-exact with the nauty format)."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import Graph6Error, MalformedHeader, TrailingGarbage, VertexCountExceeds64
from .graph import MAX_VERTICES, Graph

_HEADER = b">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])


def write_graph6(g: Graph) -> bytes:
    """Encode ``g`` as a graph6 byte string (no trailing newline)."""
    out = bytearray(_encode_n(g.n))
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record.

    A single trailing newline and the optional ``>>graph6<<`` prefix are
    accepted; anything else outside the record raises.
    """
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    if data.endswith(b"\n"):
        data = data[:-1]
        if data.endswith(b"\r"):
            data = data[:-1]
    if not data:
        raise MalformedHeader("empty graph6 record")
    for c in data:
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} outside the graph6 range 63..126")

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedHeader("truncated 8-byte size header")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise MalformedHeader("truncated 4-byte size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
        if n <= 62:
            raise MalformedHeader(f"long header used for n={n}")
    if n > MAX_VERTICES:
        raise VertexCountExceeds64(f"graph6 record has {n} vertices")

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nchars:
        raise Graph6Error(f"truncated body: need {nchars} bytes, got {len(body)}")
    if len(body) > nchars:
        raise TrailingGarbage(f"{len(body) - nchars} extra bytes after record")

    adj = [0] * n
    k = 0
    i, j = 0, 1
    for c in body:
        word = c - 63
        for shift in range(5, -1, -1):
            if k == nbits:
                if word & ((1 << (shift + 1)) - 1):
                    raise TrailingGarbage("non-zero padding bits")
                break
            if word >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, adj)


def read_graph6_lines(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    """Parse a stream of graph6 lines, skipping blank ones."""
    for line in lines:
        if isinstance(line, str):
            line = line.encode("ascii")
        line = line.strip()
        if line:
            yield parse_graph6(line)


def graph6_str(g: Graph) -> str:
    return write_graph6(g).decode("ascii")


__all__ = ["parse_graph6", "write_graph6", "read_graph6_lines", "graph6_str"]
