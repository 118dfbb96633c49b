"""Immutable simple graphs on vertices 0..n-1 with bitset adjacency rows.

Every edit returns a new value, so a graph can be probed with many ``G + e``
variants without aliasing.  Serialization covers graph6 (bit exact) and a
layout-free DOT dump.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_VERTICES = 4096


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, loops, duplicates on edit)."""


class Graph6Error(GraphError):
    """Raised when a graph6 string cannot be decoded."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    m: int = field(compare=False, default=-1)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        total = 0
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
            total += row.bit_count()
        object.__setattr__(self, "m", total // 2)

    # -- queries -----------------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted pairs ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        """All non-adjacent pairs ``(u, v)`` with ``u < v``, in lexicographic order."""
        full = (1 << self.n) - 1
        out = []
        for u in range(self.n):
            missing = full & ~self.adj[u] & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in iter_bits(missing))
        return out

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    # -- copy-on-write edits -------------------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        return add_edge(self, u, v)

    def remove_edge(self, u: int, v: int) -> Graph:
        return remove_edge(self, u, v)

    def relabel(self, order: list[int]) -> Graph:
        """Return the graph whose vertex ``i`` is ``order[i]`` of this graph."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = [0] * self.n
        for i, v in enumerate(order):
            row = 0
            for u in iter_bits(self.adj[v]):
                row |= 1 << pos[u]
            rows[i] = row
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from unordered pairs; duplicates are merged."""
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in pair ({u}, {v}) for n={n}")
        if u == v:
            raise GraphError(f"loop pair ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError(f"loop pair ({u}, {v})")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"endpoint out of range in pair ({u}, {v})")
    if g.has_edge(u, v):
        raise GraphError(f"edge present: ({u}, {v})")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"edge absent: ({u}, {v})")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def component_mask(g: Graph, start: int) -> int:
    """Bitmask of the connected component containing ``start``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("connectivity is undefined for the empty vertex set")
    return component_mask(g, 0) == (1 << g.n) - 1


def bfs_distances(g: Graph, source: int, avoid: int = 0) -> list[int]:
    """Hop distances from ``source`` in ``g`` minus the vertex set ``avoid``; -1 if unreachable."""
    dist = [-1] * g.n
    dist[source] = 0
    seen = (1 << source) | avoid
    frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in iter_bits(frontier):
            dist[v] = d
    return dist


# -- graph6 ------------------------------------------------------------------

_G6_MAX = (1 << 36) - 1


def _encode_n(n: int) -> bytes:
    if n < 0 or n > _G6_MAX:
        raise Graph6Error(f"n={n} exceeds the graph6 size limit")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def encode_graph6(g: Graph) -> bytes:
    """graph6 encoding: size header then upper-triangle bits in column order, 6 per byte."""
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = bytearray()
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        body.append(x + 63)
    return _encode_n(g.n) + bytes(body)


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise Graph6Error("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise Graph6Error("graph6 bytes must lie in [63, 126]")
    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size header")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        body = data[8:]
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte size header")
        n = 0
        for c in data[1:4]:
            n = (n << 6) | (c - 63)
        body = data[4:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph6 size {n} exceeds supported ceiling {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error(f"graph6 body too short: {len(body)} bytes, expected {need}")
    if len(body) > need:
        raise Graph6Error("trailing bytes after graph6 body")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits in graph6 body")
    return Graph(n, tuple(rows))


def to_dot(g: Graph, name: str = "G") -> str:
    """Layout-free DOT text with edges in sorted-pair order."""
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
