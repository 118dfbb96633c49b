"""Canonical labeling by partition refinement and individualization.

The labeling explores every leaf of the individualize-refine tree that is not
ruled out by a known automorphism, and keeps the ordering whose upper-triangle
adjacency bits (graph6 column order) form the lexicographically least string.
Automorphisms come from two places: transpositions of twin vertices, found up
front, and pairs of leaves yielding identical adjacency strings.  A branch is
skipped only when a known automorphism fixing the current prefix pointwise maps
it onto an explored sibling, which keeps the result exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, encode_graph6


@dataclass(frozen=True)
class CanonicalForm:
    graph6: str
    order: tuple[int, ...]  # canonical vertex i is original vertex order[i]

    def graph(self, g: Graph) -> Graph:
        return g.relabel(list(self.order))


def refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbour counts into every cell until stable.

    New cells are ordered by their count signature, so the result commutes with
    relabeling.
    """
    while True:
        masks = []
        for c in cells:
            mk = 0
            for v in c:
                mk |= 1 << v
            masks.append(mk)
        out = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                row = adj[v]
                groups.setdefault(tuple((row & mk).bit_count() for mk in masks), []).append(v)
            if len(groups) == 1:
                out.append(c)
                continue
            split = True
            out.extend(groups[sig] for sig in sorted(groups))
        cells = out
        if not split:
            return cells


def _leaf_key(adj: tuple[int, ...], order: list[int]) -> int:
    n = len(order)
    key = 0
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            key = (key << 1) | (row >> order[i] & 1)
    return key


def _twin_generators(adj: tuple[int, ...], n: int) -> list[list[int]]:
    gens = []
    claimed = 0
    for u in range(n):
        if claimed >> u & 1:
            continue
        for v in range(u + 1, n):
            if claimed >> v & 1:
                continue
            ubit, vbit = 1 << u, 1 << v
            if adj[u] & ~vbit == adj[v] & ~ubit:
                perm = list(range(n))
                perm[u], perm[v] = v, u
                gens.append(perm)
                claimed |= vbit
    return gens


class _Labeler:
    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.n = len(adj)
        self.auts: list[list[int]] = _twin_generators(adj, self.n)
        self.best_key = -1
        self.best_order: list[int] = []
        self.first_key = -1
        self.first_order: list[int] = []

    def _record_aut(self, src: list[int], dst: list[int]) -> None:
        perm = [0] * self.n
        for a, b in zip(src, dst):
            perm[a] = b
        if perm != list(range(self.n)):
            self.auts.append(perm)

    def _leaf(self, order: list[int]) -> None:
        key = _leaf_key(self.adj, order)
        if self.best_key < 0:
            self.best_key = self.first_key = key
            self.best_order = self.first_order = order
            return
        if key == self.first_key:
            self._record_aut(self.first_order, order)
        elif key == self.best_key:
            self._record_aut(self.best_order, order)
        elif key < self.best_key:
            self.best_key, self.best_order = key, order

    def _orbit_roots(self, prefix: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for perm in self.auts:
            if any(perm[p] != p for p in prefix):
                continue
            for x, y in enumerate(perm):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        return [find(x) for x in range(self.n)]

    def search(self, cells: list[list[int]], prefix: list[int]) -> None:
        cells = refine(self.adj, cells)
        if len(cells) == self.n:
            self._leaf([c[0] for c in cells])
            return
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        cell = cells[idx]
        explored_roots: set[int] = set()
        seen_auts = -1
        roots: list[int] = []
        for v in cell:
            if len(self.auts) != seen_auts:
                seen_auts = len(self.auts)
                roots = self._orbit_roots(prefix)
                explored_roots = {roots[x] for x in explored_roots} if explored_roots else set()
            if roots[v] in explored_roots:
                continue
            explored_roots.add(roots[v])
            rest = [w for w in cell if w != v]
            self.search(cells[:idx] + [[v], rest] + cells[idx + 1:], prefix + [v])


def canonical_key(adj: tuple[int, ...]) -> tuple[int, list[int]]:
    """``(key, order)``: the least adjacency bit string as an integer, and the ordering
    achieving it.  Keys of graphs with equal vertex count coincide iff isomorphic."""
    n = len(adj)
    if n == 0:
        return 0, []
    lab = _Labeler(adj)
    lab.search([list(range(n))], [])
    return lab.best_key, lab.best_order


def canonical_order(adj: tuple[int, ...]) -> list[int]:
    return canonical_key(adj)[1]


def canonical_form(g: Graph) -> CanonicalForm:
    order = canonical_order(g.adj)
    return CanonicalForm(encode_graph6(g.relabel(order)).decode("ascii"), tuple(order))


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_order(g.adj))
