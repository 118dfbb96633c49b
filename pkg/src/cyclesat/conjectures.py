"""Compare conjectured saturation numbers with exhaustive search at small n.

Rows only report; an asymptotic conjecture that disagrees at small n is not refuted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Optional

from .constructions import ceil_div, sat45_value
from .families import CycleFamily
from .search import Budget, compute_sat

AGREE = "agree"
DISAGREE = "disagree"
UNKNOWN = "unknown"


@dataclass
class ConjectureRow:
    n: int
    family: str
    conjectured: Optional[int]
    computed: Optional[int]
    lower_bound: int
    status: str

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass
class ConjectureReport:
    conjecture: int
    statement: str
    params: dict
    rows: list[ConjectureRow] = field(default_factory=list)
    skipped: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "conjecture": self.conjecture,
            "statement": self.statement,
            "params": dict(self.params),
            "rows": [r.to_json() for r in self.rows],
            "skipped": list(self.skipped),
        }


def _compare(n: int, fam: CycleFamily, conjectured: Optional[int], budget: Optional[Budget], jobs: int) -> ConjectureRow:
    res = compute_sat(n, fam, budget=budget, jobs=jobs)
    if res.value is None or conjectured is None:
        status = UNKNOWN
    else:
        status = AGREE if res.value == conjectured else DISAGREE
    return ConjectureRow(n, str(fam), conjectured, res.value, res.lower_bound, status)


def check_conjecture(
    conjecture: int,
    ns: Iterable[int],
    budget: Optional[Budget] = None,
    r: int = 6,
    s: int = 4,
    a: int = 2,
    jobs: int = 1,
) -> ConjectureReport:
    """Tabulate one of the five conjectures over ``ns``.

    1: sat(n, [4,r]) = ceil(5n/4 - 3/2)
    2: sat(n, [5,r]) = ceil(10(n-1)/7)
    3: sat(n, [s,r]) = sat(n, [s,inf))        (right side also by search)
    4: sat(n, 3Z+1) = ceil(5n/4 - 3/2)
    5: sat(n, aZ+2) = n + C(a,2) - 1,  n >= a + 1
    """
    ns = sorted(set(ns))
    if conjecture == 1:
        if r < 5:
            raise ValueError("conjecture 1 needs r >= 5")
        fam = CycleFamily.interval(4, r)
        report = ConjectureReport(1, f"sat(n, C_[4,{r}]) = ceil(5n/4 - 3/2) for large n", {"r": r})
        report.rows = [_compare(n, fam, sat45_value(n), budget, jobs) for n in ns]
    elif conjecture == 2:
        if r < 5:
            raise ValueError("conjecture 2 needs r >= 5")
        fam = CycleFamily.interval(5, r)
        report = ConjectureReport(2, f"sat(n, C_[5,{r}]) = ceil(10(n-1)/7) for large n", {"r": r})
        report.rows = [_compare(n, fam, ceil_div(10 * (n - 1), 7), budget, jobs) for n in ns]
    elif conjecture == 3:
        if s < 4 or r < s:
            raise ValueError("conjecture 3 needs s >= 4 and r >= s")
        fam = CycleFamily.interval(s, r)
        ray = CycleFamily.ray(s)
        report = ConjectureReport(3, f"sat(n, C_[{s},{r}]) = sat(n, C_[{s},inf)) for large n", {"s": s, "r": r})
        for n in ns:
            ref = compute_sat(n, ray, budget=budget, jobs=jobs)
            report.rows.append(_compare(n, fam, ref.value, budget, jobs))
    elif conjecture == 4:
        fam = CycleFamily.progression(3, 1)
        report = ConjectureReport(4, "sat(n, C_{3Z+1}) = ceil(5n/4 - 3/2)", {})
        report.rows = [_compare(n, fam, sat45_value(n), budget, jobs) for n in ns if n >= 1]
    elif conjecture == 5:
        if a < 2:
            raise ValueError("conjecture 5 needs a >= 2")
        fam = CycleFamily.progression(a, 2)
        report = ConjectureReport(5, f"sat(n, C_{{{a}Z+2}}) = n + C({a},2) - 1 for n >= {a + 1}", {"a": a})
        for n in ns:
            if n < a + 1:
                report.skipped.append(n)
                continue
            report.rows.append(_compare(n, fam, n + comb(a, 2) - 1, budget, jobs))
    else:
        raise ValueError(f"unknown conjecture id {conjecture}; expected 1..5")
    return report
