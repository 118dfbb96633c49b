"""Cycle-family freeness and saturation, with checked witnesses.

A graph is saturated for a cycle family when it contains no cycle whose length
is in the family, yet adding any missing edge closes one.  Adding ``uv`` closes
a cycle of length ``l`` exactly when ``G`` has a simple ``u``-``v`` path with
``l - 1`` edges, so everything here reduces to fixed-length simple path search
over bitset rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .families import CycleFamily
from .graph import Graph, GraphError, bfs_distances, encode_graph6, iter_bits

SATURATED = "saturated"
CONTAINS_FORBIDDEN = "contains_forbidden"
NOT_MAXIMAL = "not_maximal"


class WitnessError(AssertionError):
    """A search produced a witness that does not check out against the graph."""


# -- witness checks ------------------------------------------------------------


def check_path(g: Graph, path: list[int], u: int, v: int, k: int) -> None:
    if len(path) != k + 1 or path[0] != u or path[-1] != v:
        raise WitnessError(f"path {path} is not a {k}-edge path from {u} to {v}")
    if len(set(path)) != len(path):
        raise WitnessError(f"path {path} repeats a vertex")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise WitnessError(f"path {path} uses non-edge ({a}, {b})")


def check_cycle(g: Graph, cycle: list[int], length: int) -> None:
    if len(cycle) != length or len(set(cycle)) != length or length < 3:
        raise WitnessError(f"{cycle} is not a simple cycle of length {length}")
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        if not g.has_edge(a, b):
            raise WitnessError(f"cycle {cycle} uses non-edge ({a}, {b})")


# -- fixed-length search ---------------------------------------------------------


def path_of_length(g: Graph, u: int, v: int, k: int) -> Optional[list[int]]:
    """A simple path from ``u`` to ``v`` with exactly ``k`` edges, or None."""
    if u == v:
        raise GraphError("path endpoints must differ")
    if not 1 <= k <= g.n - 1:
        raise GraphError(f"path length {k} outside [1, n-1]")
    adj = g.adj
    # hop distance to v in the full graph is a lower bound in every subgraph
    dist = bfs_distances(g, v)
    if dist[u] < 0 or dist[u] > k:
        return None
    vbit = 1 << v
    path = [u]

    def dfs(x: int, visited: int, rem: int) -> bool:
        if rem == 1:
            return bool(adj[x] & vbit)
        for y in iter_bits(adj[x] & ~visited & ~vbit):
            if dist[y] > rem - 1 or dist[y] < 0:
                continue
            path.append(y)
            if dfs(y, visited | (1 << y), rem - 1):
                return True
            path.pop()
        return False

    if not dfs(u, 1 << u, k):
        return None
    path.append(v)
    check_path(g, path, u, v, k)
    return path


def exists_path_of_length(g: Graph, u: int, v: int, k: int) -> bool:
    return path_of_length(g, u, v, k) is not None


def cycle_of_length(g: Graph, length: int) -> Optional[list[int]]:
    """A simple cycle on exactly ``length`` vertices, starting at its smallest vertex."""
    if not 3 <= length <= g.n:
        raise GraphError(f"cycle length {length} outside [3, {g.n}]")
    adj = g.adj
    for s in range(g.n - length + 1):
        if adj[s].bit_count() < 2:
            continue
        lower = (1 << (s + 1)) - 1
        dist = bfs_distances(g, s, avoid=lower & ~(1 << s))
        sbit = 1 << s
        cyc = [s]

        def dfs(x: int, visited: int, rem: int) -> bool:
            # rem edges still to place, the last one closes back to s
            if rem == 1:
                return bool(adj[x] & sbit)
            for y in iter_bits(adj[x] & ~visited & ~lower):
                if dist[y] < 0 or dist[y] > rem - 1:
                    continue
                cyc.append(y)
                if dfs(y, visited | (1 << y), rem - 1):
                    return True
                cyc.pop()
            return False

        if dfs(s, sbit, length):
            check_cycle(g, cyc, length)
            return cyc
    return None


def has_cycle_of_length(g: Graph, length: int) -> bool:
    return cycle_of_length(g, length) is not None


def forbidden_cycle(g: Graph, family: CycleFamily) -> Optional[tuple[int, list[int]]]:
    """The shortest family cycle present in ``g`` as ``(length, cycle)``, or None."""
    if g.n < 3:
        return None
    for length in family.truncate(g.n):
        cyc = cycle_of_length(g, length)
        if cyc is not None:
            return length, cyc
    return None


def is_family_free(g: Graph, family: CycleFamily) -> bool:
    return forbidden_cycle(g, family) is None


def creates_forbidden_cycle(g: Graph, u: int, v: int, family: CycleFamily) -> Optional[tuple[int, list[int]]]:
    """Shortest family cycle closed by adding ``uv``, as ``(length, cycle)``.

    The cycle is listed from ``u`` to ``v``; its closing edge is the new one.
    """
    if u == v:
        raise GraphError("a non-edge needs two distinct endpoints")
    if g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is already an edge")
    for length in family.truncate(g.n):
        path = path_of_length(g, u, v, length - 1)
        if path is not None:
            check_cycle(g.add_edge(u, v), path, length)
            return length, path
    return None


def closing_pairs(g: Graph, lengths: tuple[int, ...]) -> list[int]:
    """For each ``u``, a mask of non-neighbours ``w > u`` such that adding ``uw`` closes a
    cycle whose length is in ``lengths``.

    One depth-limited sweep of simple paths per source; a source stops as soon as
    every one of its targets is resolved.
    """
    n = g.n
    adj = g.adj
    full = (1 << n) - 1
    out = [0] * n
    if not lengths:
        return out
    want = 0
    for ell in lengths:
        want |= 1 << (ell - 1)
    max_edges = max(lengths) - 1
    for u in range(n):
        targets = full & ~adj[u] & ~((1 << (u + 1)) - 1)
        if not targets:
            continue
        pending = targets

        def dfs(x: int, visited: int, d: int) -> bool:
            nonlocal pending
            if want >> d & 1 and pending >> x & 1:
                pending &= ~(1 << x)
                if not pending:
                    return True
            if d == max_edges:
                return False
            for y in iter_bits(adj[x] & ~visited):
                if dfs(y, visited | (1 << y), d + 1):
                    return True
            return False

        dfs(u, 1 << u, 0)
        out[u] = targets & ~pending
    return out


def free_extensions(g: Graph, family: CycleFamily) -> list[tuple[int, int]]:
    """Non-edges, in lexicographic order, whose addition closes no family cycle."""
    lengths = family.truncate(g.n) if g.n >= 1 else ()
    closing = closing_pairs(g, lengths)
    full = (1 << g.n) - 1
    out = []
    for u in range(g.n):
        open_ = full & ~g.adj[u] & ~((1 << (u + 1)) - 1) & ~closing[u]
        out.extend((u, w) for w in iter_bits(open_))
    return out


# -- verdicts ---------------------------------------------------------------------


@dataclass(frozen=True)
class SaturationVerdict:
    status: str
    family: str
    graph6: str
    probes: int
    length: Optional[int] = None
    cycle: Optional[tuple[int, ...]] = None
    non_edge: Optional[tuple[int, int]] = None

    @property
    def saturated(self) -> bool:
        return self.status == SATURATED

    @property
    def witness(self) -> list[int]:
        if self.cycle is not None:
            return list(self.cycle)
        if self.non_edge is not None:
            return list(self.non_edge)
        return []

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "witness": self.witness,
            "length": self.length,
            "family": self.family,
            "graph6": self.graph6,
            "probes": self.probes,
        }


def check_saturated(g: Graph, family: CycleFamily) -> SaturationVerdict:
    """Decide saturation; on failure report the first counter-witness.

    A contained family cycle (shortest length first) takes precedence over a
    non-maximal pair; non-edges are scanned in lexicographic order.
    """
    g6 = encode_graph6(g).decode("ascii")
    key = str(family)
    hit = forbidden_cycle(g, family)
    if hit is not None:
        length, cyc = hit
        return SaturationVerdict(CONTAINS_FORBIDDEN, key, g6, 0, length=length, cycle=tuple(cyc))
    lengths = family.truncate(g.n) if g.n >= 1 else ()
    closing = closing_pairs(g, lengths)
    full = (1 << g.n) - 1
    probes = 0
    for u in range(g.n):
        for w in iter_bits(full & ~g.adj[u] & ~((1 << (u + 1)) - 1)):
            probes += 1
            if not closing[u] >> w & 1:
                if creates_forbidden_cycle(g, u, w, family) is not None:
                    raise WitnessError(f"sweep and pair search disagree on ({u}, {w})")
                return SaturationVerdict(NOT_MAXIMAL, key, g6, probes, non_edge=(u, w))
    return SaturationVerdict(SATURATED, key, g6, probes)
