"""Exact sat(n, C_I) by edge-ordered enumeration with isomorphism rejection.

Graphs are generated level by level (level m = m edges) by canonical
augmentation: a child ``P + e`` is kept only if deleting the last edge of the
child's canonical form gives back a graph isomorphic to ``P``.  Every
isomorphism class then has exactly one parent class, so duplicates can only
arise among children of the same parent and a per-parent set removes them.

Only family-free graphs are expanded; a graph containing a forbidden cycle
cannot have a free supergraph, and every free graph's canonical parent is free.
A level's graphs are tested for saturation when they are connected; the first
level with a saturated graph is sat(n, C_I).
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Optional

from .canon import canonical_key
from .families import CycleFamily, parse_family
from .graph import Graph, GraphError, component_mask, decode_graph6, encode_graph6
from .saturation import WitnessError, check_saturated, closing_pairs

log = logging.getLogger(__name__)


@dataclass
class Budget:
    max_edges: Optional[int] = None
    timeout: Optional[float] = None  # seconds


@dataclass
class SearchResult:
    n: int
    family: str
    mode: str
    value: Optional[int]
    lower_bound: int
    exhaustive: bool
    witnesses: list[str] = field(default_factory=list)
    graphs_enumerated: int = 0
    saturation_checks: int = 0
    wall_time: float = 0.0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "family": self.family,
            "mode": self.mode,
            "value": self.value,
            "lower_bound": self.lower_bound,
            "exhaustive": self.exhaustive,
            "witnesses": list(self.witnesses),
            "counters": {
                "graphs_enumerated": self.graphs_enumerated,
                "saturation_checks": self.saturation_checks,
                "wall_time": round(self.wall_time, 6),
            },
        }


def _relabel(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = adj[v]
        out = 0
        while row:
            low = row & -row
            out |= 1 << pos[low.bit_length() - 1]
            row ^= low
        rows.append(out)
    return tuple(rows)


def _last_edge(adj: tuple[int, ...]) -> tuple[int, int]:
    """Final edge in graph6 bit order: largest column j, then largest row i < j."""
    for j in range(len(adj) - 1, 0, -1):
        low = adj[j] & ((1 << j) - 1)
        if low:
            return low.bit_length() - 1, j
    raise GraphError("graph has no edges")


def _connected(adj: tuple[int, ...]) -> bool:
    g = Graph(len(adj), adj)
    return component_mask(g, 0) == (1 << g.n) - 1


def _free_pairs(adj: tuple[int, ...], lengths: tuple[int, ...]) -> list[tuple[int, int]]:
    g = Graph(len(adj), adj)
    n = g.n
    closing = closing_pairs(g, lengths)
    full = (1 << n) - 1
    out = []
    for u in range(n):
        rest = full & ~adj[u] & ~((1 << (u + 1)) - 1) & ~closing[u]
        while rest:
            low = rest & -rest
            out.append((u, low.bit_length() - 1))
            rest ^= low
    return out


def _children(adj: tuple[int, ...], parent_key: int, pairs: list[tuple[int, int]]) -> list[tuple[int, tuple[int, ...]]]:
    seen: set[int] = set()
    out = []
    for u, v in pairs:
        rows = list(adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        key, order = canonical_key(tuple(rows))
        if key in seen:
            continue
        cadj = _relabel(tuple(rows), order)
        i, j = _last_edge(cadj)
        reduced = list(cadj)
        reduced[i] &= ~(1 << j)
        reduced[j] &= ~(1 << i)
        if canonical_key(tuple(reduced))[0] == parent_key:
            seen.add(key)
            out.append((key, cadj))
    return out


def _scan_chunk(args):
    """Phase A for a slice of a level: open pairs per parent and saturation flags."""
    lengths, parents, stop_at_first = args
    out = []
    for key, adj in parents:
        pairs = _free_pairs(adj, lengths)
        connected = _connected(adj)
        saturated = connected and not pairs
        out.append((key, pairs, connected, saturated))
        if saturated and stop_at_first:
            break
    return out


def _expand_chunk(args):
    """Phase B for a slice of a level: canonical children of each parent."""
    items = args
    out = []
    for key, adj, pairs in items:
        out.extend(_children(adj, key, pairs))
    return out


def _chunks(seq: list, k: int) -> list[list]:
    if k <= 1 or len(seq) <= 1:
        return [seq]
    size = -(-len(seq) // k)
    return [seq[i:i + size] for i in range(0, len(seq), size)]


class _Runner:
    def __init__(self, jobs: int):
        self.jobs = max(1, jobs)
        self.pool = ProcessPoolExecutor(self.jobs) if self.jobs > 1 else None

    def map(self, fn, tasks):
        if self.pool is None:
            return [fn(t) for t in tasks]
        return list(self.pool.map(fn, tasks))

    def close(self):
        if self.pool is not None:
            self.pool.shutdown()


def _levels(n: int, lengths: tuple[int, ...], runner: _Runner):
    """Yield ``(m, level)``; ``level`` is a key-sorted list of ``(key, canonical rows)``.

    The caller drives expansion by sending the per-parent open pairs back in.
    """
    empty = tuple([0] * n)
    level = [(canonical_key(empty)[0], empty)]
    m = 0
    while level:
        pairs_by_parent = yield m, level
        if pairs_by_parent is None:
            return
        items = [(key, adj, pairs) for (key, adj), pairs in zip(level, pairs_by_parent)]
        parts = runner.map(_expand_chunk, _chunks(items, runner.jobs * 4))
        level = sorted((c for part in parts for c in part), key=lambda t: t[0])
        m += 1


def compute_sat(
    n: int,
    family: CycleFamily | str,
    budget: Optional[Budget] = None,
    mode: str = "value",
    jobs: int = 1,
) -> SearchResult:
    """Smallest edge count of a saturated n-vertex graph for ``family``.

    ``mode="value"`` stops at the first witness; ``mode="full"`` finishes the
    level and returns every minimum saturated graph up to isomorphism.  If the
    budget trips first, ``exhaustive`` is False and only ``lower_bound`` is
    meaningful.
    """
    fam = parse_family(family) if isinstance(family, str) else family
    if n < 1:
        raise ValueError("n must be >= 1")
    if mode not in ("value", "full"):
        raise ValueError("mode must be 'value' or 'full'")
    budget = budget or Budget()
    lengths = fam.truncate(n)
    start = time.monotonic()
    deadline = start + budget.timeout if budget.timeout is not None else None
    runner = _Runner(jobs)
    result = SearchResult(n, str(fam), mode, None, 0, False)
    try:
        gen = _levels(n, lengths, runner)
        m, level = next(gen)
        while True:
            result.graphs_enumerated += len(level)
            if budget.max_edges is not None and m > budget.max_edges:
                result.lower_bound = m
                break
            if deadline is not None and time.monotonic() > deadline:
                result.lower_bound = m
                break
            stop_first = mode == "value"
            if runner.pool is None:
                scanned = []
                for item in level:
                    scanned.extend(_scan_chunk((lengths, [item], False)))
                    if stop_first and scanned[-1][3]:
                        break
                    if deadline is not None and time.monotonic() > deadline:
                        break
            else:
                parts = runner.map(_scan_chunk, [(lengths, c, stop_first) for c in _chunks(level, runner.jobs * 4)])
                scanned = [row for part in parts for row in part]
            result.saturation_checks += sum(1 for row in scanned if row[2])
            found = [row[0] for row in scanned if row[3]]
            timed_out = len(scanned) < len(level) and not (stop_first and found)
            if found:
                result.value = result.lower_bound = m
                keys = set(found)
                witnesses = [adj for key, adj in level if key in keys]
                if stop_first:
                    witnesses = witnesses[:1]
                result.witnesses = sorted(encode_graph6(Graph(n, adj)).decode("ascii") for adj in witnesses)
                result.exhaustive = not timed_out
                break
            if timed_out:
                result.lower_bound = m
                break
            log.debug("n=%d family=%s level m=%d: %d graphs, none saturated", n, fam, m, len(level))
            try:
                m, level = gen.send([row[1] for row in scanned])
            except StopIteration:
                # unreachable: a maximal free graph always exists at or below C(n, 2) edges
                raise RuntimeError("enumeration ended without a saturated graph")
    finally:
        runner.close()
    result.wall_time = time.monotonic() - start
    problems = verify_result(result)
    if problems:
        raise WitnessError("; ".join(problems))
    return result


def verify_result(result: SearchResult) -> list[str]:
    """Re-check every witness of a result; return a list of discrepancies."""
    fam = parse_family(result.family)
    problems = []
    for g6 in result.witnesses:
        g = decode_graph6(g6)
        verdict = check_saturated(g, fam)
        if not verdict.saturated:
            problems.append(f"{g6}: {verdict.status}")
        if result.value is not None and g.m != result.value:
            problems.append(f"{g6}: {g.m} edges, expected {result.value}")
    return problems


def enumerate_graphs(n: int, max_edges: Optional[int] = None, family: CycleFamily | str | None = None) -> Iterator[Graph]:
    """Every graph on n vertices (one per isomorphism class) with at most ``max_edges``
    edges, free of ``family`` if given, by increasing edge count."""
    if n < 1:
        raise ValueError("n must be >= 1")
    fam = parse_family(family) if isinstance(family, str) else family
    lengths = fam.truncate(n) if fam is not None else ()
    top = comb(n, 2) if max_edges is None else min(max_edges, comb(n, 2))
    runner = _Runner(1)
    gen = _levels(n, lengths, runner)
    m, level = next(gen)
    while True:
        for _, adj in level:
            yield Graph(n, adj)
        if m >= top:
            return
        try:
            m, level = gen.send([_free_pairs(adj, lengths) for _, adj in level])
        except StopIteration:
            return


def enumerate_connected(n: int, m: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected n-vertex m-edge graphs."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if m < n - 1:
        raise ValueError(f"a connected graph on {n} vertices needs at least {n - 1} edges")
    if m > comb(n, 2):
        raise ValueError(f"at most {comb(n, 2)} edges fit on {n} vertices")
    for g in enumerate_graphs(n, m):
        if g.m == m and _connected(g.adj):
            yield g
