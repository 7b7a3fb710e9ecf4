"""Line-oriented class database files.

One file holds every class representative of a single length::

    SDDB v1 n=8 k=4 count=2
    # d=2 aut=384 w2=4 w4=6 w6=4 w8=1
    1000...
    ...
    <blank>

Each record header carries the minimum weight, the automorphism group order
and the numbers of codewords of weight 2, 4, 6 and 8, followed by the ``k``
generator rows. Records are written in ascending ``(d, rows)`` order, which
makes a file independent of how the search that produced it was split.
"""
from __future__ import annotations

import hashlib
import os
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .code import SelfDualCode
from .errors import DatabaseError, SDClassError
from .gf2 import BitMatrix

MAGIC = "SDDB v1"
_HEADER = re.compile(r"^SDDB v1 n=(\d+) k=(\d+) count=(\d+)$")
_RECORD = re.compile(r"^# d=(\d+) aut=(\d+) w2=(\d+) w4=(\d+) w6=(\d+) w8=(\d+)$")
TRACKED_WEIGHTS = (2, 4, 6, 8)


@dataclass(frozen=True)
class ClassRecord:
    n: int
    d: int
    aut_order: int
    counts: tuple[int, int, int, int]
    rows: tuple[str, ...]

    @property
    def k(self) -> int:
        return len(self.rows)

    @classmethod
    def from_code(cls, code: SelfDualCode, aut_order: int) -> ClassRecord:
        dist = code.weight_distribution
        counts = tuple(dist[w] if w < len(dist) else 0 for w in TRACKED_WEIGHTS)
        return cls(code.n, code.min_weight, int(aut_order), counts, tuple(code.gen.to_strings()))

    @classmethod
    def from_node(cls, node) -> ClassRecord:
        return cls.from_code(node.code, node.aut.order)

    def code(self) -> SelfDualCode:
        return SelfDualCode(BitMatrix.from_strings(list(self.rows)))

    def weight_count(self, w: int) -> int:
        if w in TRACKED_WEIGHTS:
            return self.counts[TRACKED_WEIGHTS.index(w)]
        dist = self.code().weight_distribution
        return dist[w] if w < len(dist) else 0

    def sort_key(self) -> tuple:
        return self.d, self.rows

    def header(self) -> str:
        w2, w4, w6, w8 = self.counts
        return f"# d={self.d} aut={self.aut_order} w2={w2} w4={w4} w6={w6} w8={w8}"


@dataclass
class ClassDatabase:
    n: int
    records: list[ClassRecord] = field(default_factory=list)

    @property
    def k(self) -> int:
        return self.n // 2

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def sorted(self) -> ClassDatabase:
        return ClassDatabase(self.n, sorted(self.records, key=ClassRecord.sort_key))

    def dumps(self) -> str:
        lines = [f"{MAGIC} n={self.n} k={self.k} count={len(self.records)}"]
        for rec in sorted(self.records, key=ClassRecord.sort_key):
            lines.append(rec.header())
            lines.extend(rec.rows)
            lines.append("")
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.dumps().encode()).hexdigest()

    def save(self, path: str | os.PathLike) -> Path:
        path = Path(path)
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_text(self.dumps(), encoding="utf-8")
        os.replace(tmp, path)
        return path

    @classmethod
    def loads(cls, text: str) -> ClassDatabase:
        lines = text.split("\n")
        m = _HEADER.match(lines[0].rstrip("\r")) if lines else None
        if m is None:
            raise DatabaseError("missing or malformed SDDB header")
        n, k, count = (int(g) for g in m.groups())
        if n != 2 * k:
            raise DatabaseError(f"header length {n} and dimension {k} disagree")
        records = []
        i = 1
        while i < len(lines):
            line = lines[i].rstrip("\r")
            if not line:
                i += 1
                continue
            rm = _RECORD.match(line)
            if rm is None:
                raise DatabaseError(f"line {i + 1}: expected a record header, got {line!r}")
            d, aut, *counts = (int(g) for g in rm.groups())
            rows = tuple(r.rstrip("\r") for r in lines[i + 1:i + 1 + k])
            if len(rows) < k or any(len(r) != n or set(r) - {"0", "1"} for r in rows):
                raise DatabaseError(f"line {i + 2}: record needs {k} rows of {n} bits")
            records.append(ClassRecord(n, d, aut, tuple(counts), rows))
            i += 1 + k
        if len(records) != count:
            raise DatabaseError(f"header announces {count} records, found {len(records)}")
        return cls(n, records)

    @classmethod
    def load(cls, path: str | os.PathLike) -> ClassDatabase:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise DatabaseError(f"cannot read {path}: {exc}") from exc
        return cls.loads(text)

    def codes(self) -> list[SelfDualCode]:
        """Parse every record; a record that is not self-dual is corruption."""
        out = []
        for idx, rec in enumerate(self.records):
            try:
                out.append(rec.code())
            except SDClassError as exc:
                raise DatabaseError(f"record {idx}: {exc}") from exc
        return out


def database_path(directory: str | os.PathLike, n: int) -> Path:
    return Path(directory) / f"sd{n:02d}.sddb"


def from_nodes(n: int, nodes: Iterable) -> ClassDatabase:
    return ClassDatabase(n, [ClassRecord.from_node(node) for node in nodes]).sorted()


def from_records(n: int, records: Sequence[ClassRecord]) -> ClassDatabase:
    return ClassDatabase(n, list(records)).sorted()


__all__ = [
    "ClassDatabase",
    "ClassRecord",
    "MAGIC",
    "database_path",
    "from_nodes",
    "from_records",
]
