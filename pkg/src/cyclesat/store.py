"""Append-only JSON-lines store of computed saturation numbers."""

from __future__ import annotations

import json
import logging
import os
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional

from . import __version__
from .families import CycleFamily, parse_family
from .graph import decode_graph6
from .saturation import check_saturated
from .search import SearchResult

log = logging.getLogger(__name__)

ENV_VAR = "SATDB"
DEFAULT_PATH = "satdb.jsonl"


def store_path(explicit: Optional[str] = None) -> Path:
    return Path(explicit or os.environ.get(ENV_VAR) or DEFAULT_PATH)


@dataclass
class ResultRecord:
    family: str
    n: int
    value: Optional[int]
    exhaustive: bool
    witnesses: list[str] = field(default_factory=list)
    mode: str = "value"
    lower_bound: int = 0
    version: str = __version__
    timestamp: float = 0.0
    wall_time: float = 0.0

    @classmethod
    def from_result(cls, res: SearchResult) -> ResultRecord:
        return cls(
            family=parse_family(res.family).key,
            n=res.n,
            value=res.value,
            exhaustive=res.exhaustive,
            witnesses=list(res.witnesses),
            mode=res.mode,
            lower_bound=res.lower_bound,
            timestamp=time.time(),
            wall_time=res.wall_time,
        )

    @classmethod
    def from_json(cls, data: dict) -> ResultRecord:
        rec = cls(**{k: data[k] for k in cls.__dataclass_fields__ if k in data})
        rec.family = parse_family(rec.family).key
        return rec

    def to_json(self) -> dict:
        return asdict(self)


def store_append(path: Path | str, record: ResultRecord) -> None:
    """Append one record as a single ``write`` on an O_APPEND descriptor."""
    line = (json.dumps(record.to_json(), sort_keys=True) + "\n").encode("utf-8")
    fd = os.open(str(path), os.O_WRONLY | os.O_APPEND | os.O_CREAT, 0o644)
    try:
        os.write(fd, line)
        os.fsync(fd)
    finally:
        os.close(fd)


def store_records(path: Path | str) -> Iterator[ResultRecord]:
    """Records in file order; unreadable lines are skipped with a warning."""
    p = Path(path)
    if not p.exists():
        return
    with p.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                yield ResultRecord.from_json(json.loads(line))
            except (ValueError, TypeError, KeyError) as exc:
                log.warning("%s:%d: skipping corrupt record (%s)", p, lineno, exc)


def store_query(path: Path | str, family: CycleFamily | str, n: int) -> Optional[ResultRecord]:
    """Newest exhaustive record for ``(family, n)``; newest of any kind if none is exhaustive."""
    key = (parse_family(family) if isinstance(family, str) else family).key
    best = fallback = None
    for rec in store_records(path):
        if rec.family == key and rec.n == n:
            fallback = rec
            if rec.exhaustive:
                best = rec
    return best or fallback


def merge_records(records: Iterable[ResultRecord]) -> list[ResultRecord]:
    """One record per key, preferring exhaustive ones, then the newest."""
    chosen: dict[tuple[str, int], ResultRecord] = {}
    for rec in records:
        key = (rec.family, rec.n)
        cur = chosen.get(key)
        if cur is None or (rec.exhaustive, rec.timestamp) >= (cur.exhaustive, cur.timestamp):
            chosen[key] = rec
    return [chosen[k] for k in sorted(chosen, key=lambda k: (k[0], k[1]))]


def reverify(path: Path | str) -> list[str]:
    """Re-run the saturation check on every stored witness; return discrepancies."""
    problems = []
    for rec in store_records(path):
        fam = parse_family(rec.family)
        for g6 in rec.witnesses:
            g = decode_graph6(g6)
            if g.n != rec.n:
                problems.append(f"{rec.family} n={rec.n}: witness {g6} has {g.n} vertices")
                continue
            verdict = check_saturated(g, fam)
            if not verdict.saturated:
                problems.append(f"{rec.family} n={rec.n}: witness {g6} is {verdict.status}")
            if rec.value is not None and g.m != rec.value:
                problems.append(f"{rec.family} n={rec.n}: witness {g6} has {g.m} edges, record says {rec.value}")
    return problems
