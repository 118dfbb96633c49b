"""Generators for the named graphs and the table of known saturation formulas.

Labeling contract
-----------------
Friendship graphs F_k and their pendant extensions F_k^+:
    hub ``a`` = 0, triangle ``i`` (1-based) is ``b_i = 2i-1``, ``c_i = 2i``;
    pendant vertices come next in the order a', b_1', c_1', b_2', c_2', ...,
    skipping any pendant removed by the Sat_n trim.

J-graphs J_{s,t}^{+r}:
    path ``x_1..x_s`` = 0..s-1, clique ``y_1..y_t`` = s..s+t-1, then the pendant
    of ``y_j`` (j <= r) at s+t+j-1.

Cycle(n) is 0-1-...-(n-1)-0; CycleWithPendant(n) is Cycle(n-1) plus the leaf
n-1 hanging from n-2.  Both coincide vertex-for-vertex with J_{n-1,1} and
J_{n-2,1}^{+1}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Optional

from .families import CycleFamily, parse_family
from .graph import Graph, build_graph


class ConstructionError(ValueError):
    pass


class FormulaRangeError(ValueError):
    """The requested n lies outside every range where a formula is known."""


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def sat45_value(n: int) -> int:
    """ceil(5n/4 - 3/2) in exact integer arithmetic."""
    return ceil_div(5 * n - 6, 4)


# -- friendship family ------------------------------------------------------------


def friendship_labels(k: int, pendants: bool = True, drop: tuple[str, ...] = ()) -> dict[str, int]:
    """Vertex names of F_k (or F_k^+ minus the pendants in ``drop``) under the contract."""
    if k < 0:
        raise ConstructionError("k must be >= 0")
    names = {"a": 0}
    for i in range(1, k + 1):
        names[f"b{i}"] = 2 * i - 1
        names[f"c{i}"] = 2 * i
    if pendants:
        nxt = 2 * k + 1
        order = ["a'"] + [f"{x}{i}'" for i in range(1, k + 1) for x in "bc"]
        for name in order:
            if name not in drop:
                names[name] = nxt
                nxt += 1
    return names


def _friendship_edges(k: int, names: dict[str, int]) -> list[tuple[int, int]]:
    edges = []
    for i in range(1, k + 1):
        b, c = names[f"b{i}"], names[f"c{i}"]
        edges += [(0, b), (0, c), (b, c)]
    for name, v in names.items():
        if name.endswith("'"):
            edges.append((names[name[:-1]], v))
    return edges


def friendship(k: int) -> Graph:
    names = friendship_labels(k, pendants=False)
    return build_graph(2 * k + 1, _friendship_edges(k, names))


def friendship_plus(k: int, drop: tuple[str, ...] = ()) -> Graph:
    names = friendship_labels(k, pendants=True, drop=drop)
    return build_graph(len(names), _friendship_edges(k, names))


def _sat_n_shape(n: int) -> tuple[int, tuple[str, ...]]:
    if n < 1:
        raise ConstructionError("Sat_n needs n >= 1")
    k, r = divmod(n, 4)
    if r == 0:
        return k, ("a'", "b1'")
    if r == 1:
        return k, ("a'",)
    if r == 2:
        return k, ()
    return k + 1, ("a'", "b1'", "c1'")


def sat_n_labels(n: int) -> dict[str, int]:
    k, drop = _sat_n_shape(n)
    return friendship_labels(k, pendants=True, drop=drop)


def sat_n(n: int) -> Graph:
    """The minimum {C4, C5}-saturated graph on n vertices: a trim of F_k^+ chosen by n mod 4."""
    k, drop = _sat_n_shape(n)
    g = friendship_plus(k, drop)
    assert g.n == n
    return g


# -- paths, cycles, stars, J-graphs -------------------------------------------------


def star(n: int) -> Graph:
    if n < 1:
        raise ConstructionError("star needs n >= 1")
    return build_graph(n, [(0, v) for v in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ConstructionError("cycle needs n >= 3")
    return build_graph(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ConstructionError("path needs n >= 1")
    return build_graph(n, [(v, v + 1) for v in range(n - 1)])


def cycle_with_pendant(n: int) -> Graph:
    if n < 4:
        raise ConstructionError("cycle with pendant needs n >= 4")
    return build_graph(n, [(v, (v + 1) % (n - 1)) for v in range(n - 1)] + [(n - 2, n - 1)])


def j_graph(s: int, t: int, r: int = 0) -> Graph:
    """J_{s,t}^{+r}: path x_1..x_s with both ends joined to all of a clique K_t,
    plus a pendant edge on each of y_1..y_r."""
    if s < 2 or t < 1 or not 0 <= r <= t:
        raise ConstructionError(f"J-graph needs s >= 2, t >= 1, 0 <= r <= t (got {s}, {t}, {r})")
    ys = list(range(s, s + t))
    edges = [(i, i + 1) for i in range(s - 1)]
    edges += [(x, y) for x in (0, s - 1) for y in ys]
    edges += [(ys[i], ys[j]) for i in range(t) for j in range(i + 1, t)]
    edges += [(ys[j], s + t + j) for j in range(r)]
    return build_graph(s + t + r, edges)


def progression_j_params(a: int, n: int) -> tuple[int, int, int]:
    """(s, t, r) of the J-graph that is saturated for {a*i + 2 : i >= 1} on n vertices."""
    if a < 2 or n < a + 1:
        raise ConstructionError("needs a >= 2 and n >= a + 1")
    k, r = divmod(n - 1, a)
    return a * (k - 1) + 2, a - 1, r


# -- spec objects ---------------------------------------------------------------


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    params: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind}({','.join(map(str, self.params))})"


_ARITY = {
    "Friendship": (1, 1),
    "FriendshipPlus": (1, 1),
    "SatN": (1, 1),
    "Star": (1, 1),
    "JGraph": (2, 3),
    "Cycle": (1, 1),
    "CycleWithPendant": (1, 1),
    "Path": (1, 1),
}


def parse_construction(text: str) -> ConstructionSpec:
    """Parse e.g. ``SatN(10)`` or ``JGraph(8,2,1)``."""
    m = re.fullmatch(r"\s*(\w+)\s*\(([^)]*)\)\s*", text)
    if not m or m.group(1) not in _ARITY:
        raise ConstructionError(f"unknown construction {text!r}; kinds: {', '.join(_ARITY)}")
    params = tuple(int(x) for x in m.group(2).split(",") if x.strip())
    lo, hi = _ARITY[m.group(1)]
    if not lo <= len(params) <= hi:
        raise ConstructionError(f"{m.group(1)} takes {lo}..{hi} parameters")
    return ConstructionSpec(m.group(1), params)


def generate(spec: ConstructionSpec) -> Graph:
    kind, p = spec.kind, spec.params
    if kind == "Friendship":
        return friendship(p[0])
    if kind == "FriendshipPlus":
        return friendship_plus(p[0])
    if kind == "SatN":
        return sat_n(p[0])
    if kind == "Star":
        return star(p[0])
    if kind == "JGraph":
        return j_graph(*p)
    if kind == "Cycle":
        return cycle(p[0])
    if kind == "CycleWithPendant":
        return cycle_with_pendant(p[0])
    if kind == "Path":
        return path(p[0])
    raise ConstructionError(f"unknown construction kind {kind!r}")


def construction_edge_count(spec: ConstructionSpec) -> int:
    """Closed-form edge count; range checks are those of :func:`generate`."""
    kind, p = spec.kind, spec.params
    if kind == "Friendship":
        if p[0] < 0:
            raise ConstructionError("k must be >= 0")
        return 3 * p[0]
    if kind == "FriendshipPlus":
        if p[0] < 0:
            raise ConstructionError("k must be >= 0")
        return 5 * p[0] + 1
    if kind == "SatN":
        if p[0] < 1:
            raise ConstructionError("Sat_n needs n >= 1")
        return sat45_value(p[0])
    if kind in ("Star", "Path"):
        if p[0] < 1:
            raise ConstructionError(f"{kind} needs n >= 1")
        return p[0] - 1
    if kind == "JGraph":
        s, t, r = (p + (0,))[:3]
        if s < 2 or t < 1 or not 0 <= r <= t:
            raise ConstructionError("J-graph needs s >= 2, t >= 1, 0 <= r <= t")
        return (s - 1) + 2 * t + comb(t, 2) + r
    if kind == "Cycle":
        if p[0] < 3:
            raise ConstructionError("cycle needs n >= 3")
        return p[0]
    if kind == "CycleWithPendant":
        if p[0] < 4:
            raise ConstructionError("cycle with pendant needs n >= 4")
        return p[0]
    raise ConstructionError(f"unknown construction kind {kind!r}")


# -- formula table ----------------------------------------------------------------

PROVEN = "proven"
CONJECTURED = "conjectured"
BOUNDS_ONLY = "bounds-only"


@dataclass(frozen=True)
class FormulaValue:
    family: str
    n: int
    value: Optional[int]
    status: str
    source: str
    lower: Optional[int] = None
    upper: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "value": self.value,
            "status": self.status,
            "source": self.source,
            "lower": self.lower,
            "upper": self.upper,
        }


@dataclass(frozen=True)
class FormulaEntry:
    """One row of the table.

    ``match`` recognizes the families the row covers; ``valid(fam, n)`` is the
    range of n copied from the source; ``evaluate(fam, n)`` returns either an
    exact value or a ``(lower, upper)`` pair for bounds-only rows.
    """

    key: str
    closed_form: str
    validity: str
    status: str
    source: str
    match: Callable[[CycleFamily], bool]
    valid: Callable[[CycleFamily, int], bool]
    evaluate: Callable[[CycleFamily, int], object]

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "closed_form": self.closed_form,
            "validity": self.validity,
            "status": self.status,
            "source": self.source,
        }


def _is(text: str) -> Callable[[CycleFamily], bool]:
    target = parse_family(text)
    return lambda fam: fam == target


def _single(fam: CycleFamily) -> Optional[int]:
    return fam.lengths[0] if fam.kind == "set" and len(fam.lengths) == 1 else None


def _strict_bounds(lo: Fraction, hi: Fraction) -> tuple[int, int]:
    """Integer range strictly between two rationals."""
    return int(lo // 1) + 1, ceil_div(hi.numerator, hi.denominator) - 1


FORMULAS: list[FormulaEntry] = [
    FormulaEntry(
        "{4,5}", "ceil(5n/4 - 3/2)", "n >= 1", PROVEN, "friendship-based construction, matching lower bound",
        _is("{4,5}"), lambda f, n: n >= 1, lambda f, n: sat45_value(n)),
    FormulaEntry(
        "{3}", "n - 1", "n >= 3", PROVEN, "classical triangle-saturation result",
        _is("{3}"), lambda f, n: n >= 3, lambda f, n: n - 1),
    FormulaEntry(
        "{4}", "floor((3n - 5)/2)", "n >= 5", PROVEN, "classical C4-saturation result",
        _is("{4}"), lambda f, n: n >= 5, lambda f, n: (3 * n - 5) // 2),
    FormulaEntry(
        "{5}", "ceil(10(n - 1)/7)", "n >= 21", PROVEN, "published C5-saturation result",
        _is("{5}"), lambda f, n: n >= 21, lambda f, n: ceil_div(10 * (n - 1), 7)),
    FormulaEntry(
        "{6}", "4n/3 - 2 <= sat <= (4n + 1)/3", "n >= 9", BOUNDS_ONLY, "published C6-saturation bounds",
        _is("{6}"), lambda f, n: n >= 9,
        lambda f, n: (ceil_div(4 * n - 6, 3), (4 * n + 1) // 3)),
    FormulaEntry(
        "{n}", "ceil(3n/2)", "cycle length equal to n, n = 17 or n >= 19", PROVEN,
        "published Hamiltonian-cycle saturation result",
        lambda f: (_single(f) or 0) >= 7,
        lambda f, n: _single(f) == n and (n == 17 or n >= 19),
        lambda f, n: ceil_div(3 * n, 2)),
    FormulaEntry(
        "{r}, r >= 7", "(1 + 1/(r+2))n - 1 < sat < (1 + 1/(r-4))n + C(r-4, 2)", "n >= 2r - 5",
        BOUNDS_ONLY, "published long-cycle saturation bounds",
        lambda f: (_single(f) or 0) >= 7,
        lambda f, n: n >= 2 * _single(f) - 5,
        lambda f, n: _strict_bounds(
            (1 + Fraction(1, _single(f) + 2)) * n - 1,
            (1 + Fraction(1, _single(f) - 4)) * n + comb(_single(f) - 4, 2))),
    FormulaEntry(
        "[4,inf)", "ceil(5n/4 - 3/2)", "n >= 1", PROVEN, "published result for cycles of length at least 4 or 5",
        _is("[4,inf)"), lambda f, n: n >= 1, lambda f, n: sat45_value(n)),
    FormulaEntry(
        "[5,inf)", "ceil(10(n - 1)/7)", "n >= 5", PROVEN, "published result for cycles of length at least 4 or 5",
        _is("[5,inf)"), lambda f, n: n >= 5, lambda f, n: ceil_div(10 * (n - 1), 7)),
    FormulaEntry(
        "[6,inf)", "ceil(3(n - 1)/2)", "n >= 10", PROVEN, "published result for cycles of length at least 6",
        _is("[6,inf)"), lambda f, n: n >= 10, lambda f, n: ceil_div(3 * (n - 1), 2)),
    FormulaEntry(
        "2Z+2", "n", "n >= 3", PROVEN, "odd cycle or odd cycle plus pendant, matching lower bound",
        _is("2Z+2"), lambda f, n: n >= 3, lambda f, n: n),
    FormulaEntry(
        "aZ+2, a >= 3", "n + C(a, 2) - 1", "n >= a + 1", CONJECTURED, "progression conjecture",
        lambda f: f.kind == "progression" and f.offset == 2 and f.step >= 3,
        lambda f, n: n >= f.step + 1, lambda f, n: n + comb(f.step, 2) - 1),
    FormulaEntry(
        "3Z+1", "ceil(5n/4 - 3/2)", "n >= 1", CONJECTURED, "3Z+1 conjecture",
        _is("3Z+1"), lambda f, n: n >= 1, lambda f, n: sat45_value(n)),
    FormulaEntry(
        "[4,r], r >= 5", "ceil(5n/4 - 3/2)", "n >= n(r), threshold unspecified", CONJECTURED,
        "[4,r] conjecture",
        lambda f: f.kind == "interval" and f.lo == 4 and f.hi >= 5,
        lambda f, n: False, lambda f, n: sat45_value(n)),
    FormulaEntry(
        "[5,r], r >= 5", "ceil(10(n - 1)/7)", "n >= n(r), threshold unspecified", CONJECTURED,
        "[5,r] conjecture",
        lambda f: (f.kind == "interval" and f.lo == 5) or f == parse_family("{5}"),
        lambda f, n: False, lambda f, n: ceil_div(10 * (n - 1), 7)),
]


def _value(entry: FormulaEntry, fam: CycleFamily, n: int, source: Optional[str] = None) -> FormulaValue:
    out = entry.evaluate(fam, n)
    src = source or entry.source
    if isinstance(out, tuple):
        lo, hi = out
        return FormulaValue(str(fam), n, None, entry.status, src, lower=lo, upper=hi)
    return FormulaValue(str(fam), n, out, entry.status, src, lower=out, upper=out)


def sat_formula(family: CycleFamily | str, n: int, via_truncation: bool = False) -> FormulaValue:
    """Look up sat(n, C_I) in the table.

    Families containing 3 always give n - 1; a family with no member in [3, n]
    forces the complete graph.  Everything else must match a row whose stated
    range covers n, otherwise :class:`FormulaRangeError`.  With
    ``via_truncation`` a row for a different family is also accepted when both
    families agree on [3, n], since only those lengths can occur.
    """
    fam = parse_family(family) if isinstance(family, str) else family
    if n < 1:
        raise FormulaRangeError("n must be >= 1")
    trunc = fam.truncate(n)
    if fam.contains(3):
        return FormulaValue(str(fam), n, n - 1, PROVEN, "a star is saturated; any saturated graph is connected", n - 1, n - 1)
    if not trunc:
        v = comb(n, 2)
        return FormulaValue(str(fam), n, v, PROVEN, "no member fits on n vertices", v, v)
    for entry in FORMULAS:
        if entry.match(fam) and entry.valid(fam, n):
            return _value(entry, fam, n)
    if via_truncation:
        for entry in FORMULAS:
            if entry.status != PROVEN:
                continue
            try:
                other = parse_family(entry.key)
            except ValueError:
                continue
            if other.truncate(n) == trunc and entry.valid(other, n):
                v = _value(entry, other, n, f"{entry.source}, via {entry.key} (same lengths up to n)")
                return FormulaValue(str(fam), n, v.value, v.status, v.source, v.lower, v.upper)
    ranges = [f"{e.key}: {e.validity}" for e in FORMULAS if e.match(fam)]
    if ranges:
        raise FormulaRangeError(f"n={n} outside the known range for {fam} ({'; '.join(ranges)})")
    raise FormulaRangeError(f"no formula known for {fam}")


def formula_table() -> list[dict]:
    return [e.to_json() for e in FORMULAS]
