"""Length-by-length classification runs with checkpoint and resume.

Each length is produced from the complete class list one step shorter. The
roots are split round-robin into partitions; every root is augmented on its
own, and after each root the partition's progress and accepted codes are
written to the checkpoint file. Finished lengths live in the output
directory, so a resumed run reloads the last finished length, skips the
roots already done and ends with byte-identical files.
"""
from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterator, Sequence

from .augment import SearchNode, SearchStats, augment, make_node, split_round_robin
from .code import SelfDualCode
from .db import ClassDatabase, ClassRecord, database_path, from_records
from .errors import DatabaseError
from .verify import CheckResult, full_report

log = logging.getLogger(__name__)

CHECKPOINT_VERSION = 1
REPORT_NAME = "report.txt"


@dataclass
class PartitionState:
    index: int
    next_root: int = 0
    children: int = 0
    canonical: int = 0
    accepted: int = 0
    fast_rejects: int = 0
    records: list[str] = field(default_factory=list)

    def add(self, stats: SearchStats, records: Sequence[ClassRecord]) -> None:
        self.next_root += 1
        self.children += stats.children
        self.canonical += stats.canonical
        self.accepted += stats.accepted
        self.fast_rejects += stats.fast_rejects
        self.records.extend(_record_text(r) for r in records)


@dataclass
class RunCheckpoint:
    """Progress through one length; ``roots_id`` fingerprints the root file."""

    n: int
    roots_id: str
    parts: int
    partitions: list[PartitionState]
    version: int = CHECKPOINT_VERSION

    @classmethod
    def fresh(cls, n: int, roots_id: str, parts: int) -> RunCheckpoint:
        return cls(n, roots_id, parts, [PartitionState(i) for i in range(parts)])

    def save(self, path: str | os.PathLike) -> None:
        path = Path(path)
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_text(json.dumps(asdict(self), indent=1), encoding="utf-8")
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str | os.PathLike) -> RunCheckpoint:
        try:
            raw = json.loads(Path(path).read_text(encoding="utf-8"))
            if raw.get("version") != CHECKPOINT_VERSION:
                raise DatabaseError(f"unsupported checkpoint version {raw.get('version')}")
            parts = [PartitionState(**p) for p in raw["partitions"]]
            return cls(raw["n"], raw["roots_id"], raw["parts"], parts)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise DatabaseError(f"unreadable checkpoint {path}: {exc}") from exc

    def records(self, n: int) -> list[ClassRecord]:
        text = "".join(t for p in self.partitions for t in p.records)
        count = sum(len(p.records) for p in self.partitions)
        return ClassDatabase.loads(f"SDDB v1 n={n} k={n // 2} count={count}\n" + text).records

    def totals(self) -> SearchStats:
        return SearchStats(
            sum(p.children for p in self.partitions),
            sum(p.canonical for p in self.partitions),
            sum(p.accepted for p in self.partitions),
            sum(p.fast_rejects for p in self.partitions),
        )


def _record_text(rec: ClassRecord) -> str:
    return "\n".join([rec.header(), *rec.rows, ""]) + "\n"


def _augment_root(args) -> tuple[list[SearchNode], SearchStats]:
    root, k = args
    stats = SearchStats()
    return augment([root], k, stats=stats), stats


def _results(tasks: list, jobs: int) -> Iterator[tuple[list[SearchNode], SearchStats]]:
    # results come back in submission order, so per-partition progress is a prefix
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(_augment_root, tasks)
    else:
        for t in tasks:
            yield _augment_root(t)


def root_level() -> ClassDatabase:
    node = make_node(SelfDualCode.i2())
    return ClassDatabase(2, [ClassRecord.from_node(node)])


def next_length(roots: Sequence[SearchNode], roots_db: ClassDatabase, *,
                jobs: int = 1, parts: int | None = None,
                checkpoint: str | os.PathLike | None = None,
                on_progress: Callable[[RunCheckpoint], None] | None = None,
                ) -> tuple[ClassDatabase, list[SearchNode], SearchStats]:
    """Classify length ``roots_db.n + 2`` from the complete list at ``roots_db.n``."""
    n = roots_db.n + 2
    k = n // 2
    roots_id = roots_db.digest()
    parts = max(1, parts or jobs)
    state = None
    if checkpoint is not None and Path(checkpoint).exists():
        state = RunCheckpoint.load(checkpoint)
        started = any(p.next_root for p in state.partitions)
        if state.n != n or state.roots_id != roots_id or (not started and state.parts != parts):
            state = None
    if state is None:
        state = RunCheckpoint.fresh(n, roots_id, parts)
    chunks = split_round_robin(list(range(len(roots))), state.parts)
    pending = [(p, i) for p, chunk in enumerate(chunks)
               for i in chunk[state.partitions[p].next_root:]]
    # interleave partitions so that workers stay busy on all of them
    pending.sort(key=lambda pi: pi[1])
    nodes: list[SearchNode] = []
    tasks = [(roots[i], k) for _, i in pending]
    for (p, _), (found, stats) in zip(pending, _results(tasks, jobs)):
        nodes.extend(found)
        state.partitions[p].add(stats, [ClassRecord.from_node(x) for x in found])
        if checkpoint is not None:
            state.save(checkpoint)
        if on_progress is not None:
            on_progress(state)
    db = from_records(n, state.records(n))
    keys = [r.rows for r in db.records]
    if len(set(keys)) != len(keys):
        raise AssertionError(f"duplicate canonical forms at length {n}")
    if len(nodes) != len(db):
        # resumed: the nodes of earlier roots were not kept in memory
        nodes = [make_node(c) for c in db.codes()]
    else:
        by_rows = {tuple(node.code.gen.to_strings()): node for node in nodes}
        nodes = [by_rows[r.rows] for r in db.records]
    return db, nodes, state.totals()


def nodes_from_db(db: ClassDatabase) -> list[SearchNode]:
    return [make_node(c) for c in db.codes()]


def run(to_length: int, out_dir: str | os.PathLike, *, start: ClassDatabase | None = None,
        jobs: int = 1, checkpoint: str | os.PathLike | None = None,
        on_progress: Callable[[RunCheckpoint], None] | None = None,
        on_length: Callable[[ClassDatabase, SearchStats], None] | None = None,
        ) -> list[CheckResult]:
    """Write ``sdNN.sddb`` for every length up to ``to_length`` and a report.

    Lengths whose file already exists in ``out_dir`` are reused when a
    checkpoint is given, which is how an interrupted run resumes.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    db = start if start is not None else root_level()
    database_path(out, db.n).write_text(db.dumps(), encoding="utf-8")
    nodes: list[SearchNode] | None = None
    while db.n < to_length:
        n = db.n + 2
        target = database_path(out, n)
        if checkpoint is not None and target.exists() and _finished(checkpoint, n):
            db = ClassDatabase.load(target)
            nodes = None
            continue
        if nodes is None:
            nodes = nodes_from_db(db)
        db, nodes, stats = next_length(nodes, db, jobs=jobs, checkpoint=checkpoint,
                                       on_progress=on_progress)
        db.save(target)
        log.info("n=%d classes=%d children=%d canonical=%d fast_rejects=%d",
                 n, len(db), stats.children, stats.canonical, stats.fast_rejects)
        if checkpoint is not None:
            _mark_finished(checkpoint, n, db)
        if on_length is not None:
            on_length(db, stats)
    results = []
    first = start.n if start is not None else 2
    for n in range(first, to_length + 1, 2):
        results.extend(full_report(ClassDatabase.load(database_path(out, n)).records, n))
    (out / REPORT_NAME).write_text("".join(r.line() + "\n" for r in results), encoding="utf-8")
    return results


def _finished(checkpoint: str | os.PathLike, n: int) -> bool:
    path = Path(checkpoint)
    if not path.exists():
        return False
    state = RunCheckpoint.load(path)
    return state.n > n


def _mark_finished(checkpoint: str | os.PathLike, n: int, db: ClassDatabase) -> None:
    # an empty state for the next length records that ``n`` is complete
    RunCheckpoint.fresh(n + 2, db.digest(), 1).save(checkpoint)


__all__ = [
    "PartitionState",
    "RunCheckpoint",
    "next_length",
    "nodes_from_db",
    "root_level",
    "run",
]
