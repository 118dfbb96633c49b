"""Structural predicates for saturated graphs and the quarter-charge discharging ledger.

Charges are kept as integers in units of 1/4, so every transfer and total is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, encode_graph6, iter_bits


class DischargeError(ValueError):
    """A discharging rule has no well-defined donor for some vertex."""


# -- degree classes ----------------------------------------------------------------


@dataclass(frozen=True)
class DegreeClasses:
    degrees: tuple[int, ...]
    d1: frozenset[int]
    d2: frozenset[int]
    d3: frozenset[int]
    d2_0: frozenset[int]
    d2_1plus: frozenset[int]
    d2_1minus: frozenset[int]
    d2_2: frozenset[int]

    def d2_class(self, v: int) -> str | None:
        for name in ("d2_0", "d2_1plus", "d2_1minus", "d2_2"):
            if v in getattr(self, name):
                return name
        return None

    def to_json(self) -> dict:
        return {name: sorted(getattr(self, name))
                for name in ("d1", "d2", "d3", "d2_0", "d2_1plus", "d2_1minus", "d2_2")}


def degree_classes(g: Graph) -> DegreeClasses:
    deg = g.degrees()
    d2mask = 0
    for v, d in enumerate(deg):
        if d == 2:
            d2mask |= 1 << v
    by_count: dict[int, set[int]] = {0: set(), 1: set(), 2: set()}
    for v in iter_bits(d2mask):
        by_count[(g.adj[v] & d2mask).bit_count()].add(v)
    d2_2 = by_count[2]
    plus = {v for v in by_count[1] if any(w in d2_2 for w in iter_bits(g.adj[v] & d2mask))}
    return DegreeClasses(
        degrees=tuple(deg),
        d1=frozenset(v for v, d in enumerate(deg) if d == 1),
        d2=frozenset(iter_bits(d2mask)),
        d3=frozenset(v for v, d in enumerate(deg) if d == 3),
        d2_0=frozenset(by_count[0]),
        d2_1plus=frozenset(plus),
        d2_1minus=frozenset(by_count[1] - plus),
        d2_2=frozenset(d2_2),
    )


# -- degenerated paths ---------------------------------------------------------------


@dataclass(frozen=True)
class DegeneratedPath:
    vertices: tuple[int, ...]   # x_1 .. x_r, all of degree 2
    extension: tuple[int, ...]  # x_0 x_1 .. x_r x_{r+1}
    closed: bool                # x_0 == x_{r+1}

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "extension": list(self.extension), "closed": self.closed}


def degenerated_paths(g: Graph) -> tuple[list[DegeneratedPath], list[tuple[int, ...]]]:
    """Maximal degenerated paths, and separately the components of G[D_2] that are whole cycles.

    Each path is oriented from its smaller-labelled end; a single vertex lists its
    smaller outside neighbour first.
    """
    deg = g.degrees()
    d2mask = 0
    for v, d in enumerate(deg):
        if d == 2:
            d2mask |= 1 << v
    seen = 0
    paths, cycles = [], []
    for start in iter_bits(d2mask):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for x in iter_bits(frontier):
                nxt |= g.adj[x] & d2mask
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        members = list(iter_bits(comp))
        ends = [x for x in members if (g.adj[x] & d2mask).bit_count() < 2]
        if not ends:
            cyc = [members[0]]
            prev = -1
            while True:
                a, b = iter_bits(g.adj[cyc[-1]])
                nxt_v = a if a != prev else b
                if nxt_v == cyc[0]:
                    break
                prev = cyc[-1]
                cyc.append(nxt_v)
            cycles.append(tuple(cyc))
            continue
        walk = [min(ends)]
        while True:
            nxt_v = [w for w in iter_bits(g.adj[walk[-1]] & d2mask) if len(walk) < 2 or w != walk[-2]]
            if not nxt_v:
                break
            walk.append(nxt_v[0])
        inner = comp
        if len(walk) == 1:
            x0, x2 = sorted(iter_bits(g.adj[walk[0]]))
            ext = (x0, walk[0], x2)
        else:
            x0 = next(iter_bits(g.adj[walk[0]] & ~inner))
            xr1 = next(iter_bits(g.adj[walk[-1]] & ~inner))
            ext = (x0, *walk, xr1)
        paths.append(DegeneratedPath(tuple(walk), ext, ext[0] == ext[-1]))
    return paths, cycles


# -- neighbourhood structure -----------------------------------------------------------


def neighborhood_matching_violations(g: Graph) -> list[tuple[int, tuple[int, int, int]]]:
    """Vertices whose neighbourhood induces something other than a matching.

    Each entry is ``(v, (x, w, y))`` where ``x-w-y`` is a path inside N(v).
    """
    out = []
    for v in range(g.n):
        nb = g.adj[v]
        for w in iter_bits(nb):
            inside = g.adj[w] & nb
            if inside.bit_count() >= 2:
                x, y = list(iter_bits(inside))[:2]
                out.append((v, (x, w, y)))
                break
    return out


def _is_perfect_matching(g: Graph, mask: int) -> bool:
    return all((g.adj[x] & mask).bit_count() == 1 for x in iter_bits(mask))


def _in_induced_c6(g: Graph, p: DegeneratedPath) -> bool:
    ext = p.extension
    if p.closed:
        cyc = ext[:-1]
        if len(cyc) != 6:
            return False
        mask = sum(1 << x for x in cyc)
        return sum((g.adj[x] & mask).bit_count() for x in cyc) == 12
    if len(ext) > 6:
        return False
    need = 6 - (len(ext) - 1)  # edges from x_{r+1} back to x_0
    used = sum(1 << x for x in ext)
    start, goal = ext[-1], ext[0]

    def dfs(x: int, visited: int, rem: int) -> bool:
        if rem == 1:
            if not g.adj[x] >> goal & 1:
                return False
            return sum((g.adj[y] & visited).bit_count() for y in iter_bits(visited)) == 12
        for y in iter_bits(g.adj[x] & ~visited):
            if dfs(y, visited | (1 << y), rem - 1):
                return True
        return False

    if need < 1:
        return False
    if need == 1:
        return bool(g.adj[start] >> goal & 1) and sum(
            (g.adj[y] & used).bit_count() for y in iter_bits(used)) == 12
    return dfs(start, used, need)


def structural_probes(g: Graph) -> dict[str, bool]:
    """Descriptive yes/no checks of the structural statements proved for a smallest
    counterexample.  Ordinary graphs may fail any of them.

    Degenerated-path probes range over the paths reported by
    :func:`degenerated_paths`; components of G[D_2] that are whole cycles are
    not paths and are ignored.
    """
    cls = degree_classes(g)
    deg = cls.degrees
    paths, _ = degenerated_paths(g)
    leaves = sorted(cls.d1)
    leaf_mask = sum(1 << v for v in leaves)

    one_leaf = all((g.adj[v] & leaf_mask).bit_count() <= 1 for v in range(g.n))
    leaf_pm = all(_is_perfect_matching(g, g.adj[g.neighbors(u)[0]] & ~(1 << u)) for u in leaves)
    leaf_deg = all(deg[g.neighbors(u)[0]] >= 5 for u in leaves)
    short = all(p.length <= 2 for p in paths)
    no_tri = all(
        not (g.adj[a] & g.adj[b])
        for p in paths for a, b in zip(p.vertices, p.vertices[1:])
    )
    c6 = all(_in_induced_c6(g, p) for p in paths if p.length >= 1)

    weight_ok = True
    for v in range(g.n):
        if deg[v] <= 2 or g.adj[v] & leaf_mask:
            continue
        nb = g.neighbors(v)
        s_plus = sum(1 for w in nb if w in cls.d2_1plus)
        s_minus = sum(1 for w in nb if w in cls.d2_1minus)
        if 2 * s_plus + s_minus > 2:
            weight_ok = False
    return {
        "neighborhood_matching": not neighborhood_matching_violations(g),
        "one_leaf_per_vertex": one_leaf,
        "leaf_neighbor_perfect_matching": leaf_pm,
        "leaf_neighbor_degree_ge5": leaf_deg,
        "degenerated_paths_short": short,
        "short_degenerated_path_not_in_triangle": no_tri,
        "degenerated_path_in_induced_c6": c6,
        "degree2_neighbor_weight": weight_ok,
    }


# -- discharging -------------------------------------------------------------------------


@dataclass
class ChargeLedger:
    initial: list[int]          # quarters: 4*d(v) - 10
    final: list[int]            # quarters after R1-R4
    transfers: list[tuple[str, int, int, int]] = field(default_factory=list)  # (rule, donor, receiver, quarters)
    breakdown: dict[int, dict[str, int]] = field(default_factory=dict)

    @property
    def total_initial(self) -> Fraction:
        return Fraction(sum(self.initial), 4)

    @property
    def total_final(self) -> Fraction:
        return Fraction(sum(self.final), 4)

    def charge(self, v: int) -> Fraction:
        return Fraction(self.final[v], 4)

    def to_json(self) -> dict:
        return {
            "initial_quarters": list(self.initial),
            "final_quarters": list(self.final),
            "total_initial": str(self.total_initial),
            "total_final": str(self.total_final),
            "transfers": [{"rule": r, "from": a, "to": b, "quarters": q} for r, a, b, q in self.transfers],
            "breakdown": {str(v): row for v, row in sorted(self.breakdown.items())},
        }


def discharge_precondition_violations(g: Graph) -> list[str]:
    """Reasons why some degree-1 or degree-2 vertex may fail to end at charge 0.

    Empty exactly when: no degree-2 vertex with one degree-2 neighbour has a leaf as
    its other neighbour, every leaf hangs from a vertex of degree >= 3, and no two
    vertices with two degree-2 neighbours are adjacent.
    """
    cls = degree_classes(g)
    deg = cls.degrees
    out = []
    for v in sorted(cls.d2_1plus | cls.d2_1minus):
        other = [w for w in g.neighbors(v) if deg[w] != 2]
        if deg[other[0]] <= 2:
            out.append(f"vertex {v}: its only non-degree-2 neighbour {other[0]} is a leaf")
    for u in sorted(cls.d1):
        w = g.neighbors(u)[0]
        if deg[w] <= 2:
            out.append(f"leaf {u}: neighbour {w} has degree {deg[w]}")
    for v in sorted(cls.d2_2):
        for w in g.neighbors(v):
            if w > v and w in cls.d2_2:
                out.append(f"adjacent vertices {v} and {w} both have two degree-2 neighbours")
    return out


def discharge(g: Graph) -> ChargeLedger:
    """Start every vertex at d(v) - 5/2 and apply each rule once:

    R1  a degree-2 vertex with zero or two degree-2 neighbours takes 1/4 from each neighbour;
    R2  one in D_2^{1+} takes 3/4 from its neighbour of degree > 2;
    R3  one in D_2^{1-} takes 1/2 from its neighbour of degree > 2;
    R4  a leaf takes 3/2 from its neighbour.

    Raises :class:`DischargeError` when R2/R3 has no donor of degree > 2.
    """
    cls = degree_classes(g)
    deg = cls.degrees
    initial = [4 * d - 10 for d in deg]
    final = list(initial)
    transfers = []

    def move(rule: str, donor: int, receiver: int, q: int) -> None:
        final[donor] -= q
        final[receiver] += q
        transfers.append((rule, donor, receiver, q))

    for v in sorted(cls.d2_0 | cls.d2_2):
        for w in g.neighbors(v):
            move("R1", w, v, 1)
    for rule, group, q in (("R2", cls.d2_1plus, 3), ("R3", cls.d2_1minus, 2)):
        for v in sorted(group):
            donors = [w for w in g.neighbors(v) if deg[w] > 2]
            if len(donors) != 1:
                raise DischargeError(f"{rule} undefined at vertex {v}: no neighbour of degree more than 2")
            move(rule, donors[0], v, q)
    for u in sorted(cls.d1):
        move("R4", g.neighbors(u)[0], u, 6)

    leaf_mask = sum(1 << u for u in cls.d1)
    breakdown = {}
    for v in range(g.n):
        if deg[v] <= 2 or g.adj[v] & leaf_mask:
            continue
        nb = g.neighbors(v)
        breakdown[v] = {
            "r": sum(1 for w in nb if w in cls.d2_0),
            "s_plus": sum(1 for w in nb if w in cls.d2_1plus),
            "s_minus": sum(1 for w in nb if w in cls.d2_1minus),
            "t": sum(1 for w in nb if deg[w] != 2),
        }
    return ChargeLedger(initial, final, transfers, breakdown)


def probe_report(g: Graph) -> dict:
    paths, cycles = degenerated_paths(g)
    return {
        "graph6": encode_graph6(g).decode("ascii"),
        "classes": degree_classes(g).to_json(),
        "degenerated_paths": [p.to_json() for p in paths],
        "pure_cycles": [list(c) for c in cycles],
        "matching_violations": [{"vertex": v, "path": list(p)} for v, p in neighborhood_matching_violations(g)],
        "probes": structural_probes(g),
    }
