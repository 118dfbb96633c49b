"""Symbolic sets of forbidden cycle lengths.

Textual grammar (whitespace ignored)::

    {4,5}        finite set
    [4,9]        closed interval
    [5,inf)      ray, also "[5,+inf)" or "[5,∞)"
    2Z+2         {2i+2 : i >= 1}; "3Z+1", "3Z", "4Z-1" likewise

``str(family)`` is the canonical serialization and round-trips through
:func:`parse_family`.  Finite families print as an interval when they form a
contiguous run of three or more lengths, otherwise as a set.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class CycleFamily:
    kind: str  # "set" | "interval" | "ray" | "progression"
    lengths: tuple[int, ...] = ()
    lo: int = 0
    hi: int = 0
    step: int = 0
    offset: int = 0

    # -- constructors --------------------------------------------------------

    @staticmethod
    def finite(lengths) -> CycleFamily:
        vals = tuple(sorted(set(int(x) for x in lengths)))
        if not vals:
            raise FamilyError("a finite family needs at least one length")
        if vals[0] < 3:
            raise FamilyError(f"cycle length {vals[0]} < 3")
        if len(vals) >= 3 and vals[-1] - vals[0] == len(vals) - 1:
            return CycleFamily("interval", lo=vals[0], hi=vals[-1])
        return CycleFamily("set", lengths=vals)

    @staticmethod
    def interval(lo: int, hi: int) -> CycleFamily:
        if lo > hi:
            raise FamilyError(f"empty interval [{lo},{hi}]")
        return CycleFamily.finite(range(lo, hi + 1))

    @staticmethod
    def ray(lo: int) -> CycleFamily:
        if lo < 3:
            raise FamilyError(f"cycle length {lo} < 3")
        return CycleFamily("ray", lo=lo)

    @staticmethod
    def progression(step: int, offset: int) -> CycleFamily:
        """The set {step*i + offset : i >= 1}."""
        if step < 1:
            raise FamilyError("progression step must be >= 1")
        if step + offset < 3:
            raise FamilyError(f"smallest member {step + offset} < 3")
        if step == 1:
            return CycleFamily.ray(offset + 1)
        return CycleFamily("progression", step=step, offset=offset)

    # -- membership ------------------------------------------------------------

    def contains(self, length: int) -> bool:
        if length < 3:
            raise FamilyError(f"cycle length {length} < 3")
        if self.kind == "set":
            return length in self.lengths
        if self.kind == "interval":
            return self.lo <= length <= self.hi
        if self.kind == "ray":
            return length >= self.lo
        return length >= self.step + self.offset and (length - self.offset) % self.step == 0

    def min_length(self) -> int:
        if self.kind == "set":
            return self.lengths[0]
        if self.kind in ("interval", "ray"):
            return self.lo
        return self.step + self.offset

    def is_finite(self) -> bool:
        return self.kind in ("set", "interval")

    def truncate(self, n: int) -> tuple[int, ...]:
        """Members that fit on ``n`` vertices, i.e. the family intersected with [3, n]."""
        if n < 1:
            raise FamilyError("vertex count must be >= 1")
        return tuple(ell for ell in range(3, n + 1) if self.contains(ell))

    def __str__(self) -> str:
        if self.kind == "set":
            return "{" + ",".join(map(str, self.lengths)) + "}"
        if self.kind == "interval":
            return f"[{self.lo},{self.hi}]"
        if self.kind == "ray":
            return f"[{self.lo},inf)"
        if self.offset == 0:
            return f"{self.step}Z"
        sign = "+" if self.offset > 0 else "-"
        return f"{self.step}Z{sign}{abs(self.offset)}"

    @property
    def key(self) -> str:
        return str(self)


def contains_length(family: CycleFamily, length: int) -> bool:
    return family.contains(length)


def truncate(family: CycleFamily, n: int) -> tuple[int, ...]:
    return family.truncate(n)


_SET = re.compile(r"^\{(\d+(?:,\d+)*)\}$")
_INTERVAL = re.compile(r"^\[(\d+),(\d+)\]$")
_RAY = re.compile(r"^\[(\d+),\+?(?:inf|∞)\)$")
_PROG = re.compile(r"^(\d+)[Zz]([+-]\d+)?$")


def parse_family(text: str) -> CycleFamily:
    s = "".join(text.split())
    if m := _SET.match(s):
        return CycleFamily.finite(int(x) for x in m.group(1).split(","))
    if m := _INTERVAL.match(s):
        return CycleFamily.interval(int(m.group(1)), int(m.group(2)))
    if m := _RAY.match(s):
        return CycleFamily.ray(int(m.group(1)))
    if m := _PROG.match(s):
        offset = int(m.group(2)) if m.group(2) else 0
        return CycleFamily.progression(int(m.group(1)), offset)
    raise FamilyError(f"cannot parse cycle family {text!r}")
