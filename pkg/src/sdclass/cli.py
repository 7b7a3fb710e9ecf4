"""Command line entry point: ``sdclass gen | verify | stats``."""
from __future__ import annotations

import argparse
import logging
import os
import sys

from . import kernels
from .canonical import canonical_outcome
from .db import ClassDatabase
from .errors import DatabaseError, NonDivisor, SDClassError
from .pipeline import run
from .stats import report as stats_report
from .verify import full_report

log = logging.getLogger("sdclass")

DESK_LIMIT = 32
HARD_LIMIT = 40


def _jobs(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("SDCLASS_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise SystemExit(f"SDCLASS_JOBS must be an integer, got {env!r}")
    return 1


def cmd_gen(args) -> int:
    n = args.to_length
    if n % 2 or not 2 <= n <= HARD_LIMIT:
        print(f"error: --to-length must be even and between 2 and {HARD_LIMIT}", file=sys.stderr)
        return 2
    if n > DESK_LIMIT and not args.force:
        print(f"error: lengths above {DESK_LIMIT} need --force", file=sys.stderr)
        return 2
    start = None
    if args.from_db:
        try:
            start = ClassDatabase.load(args.from_db)
            start.codes()
        except DatabaseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        if start.n > n:
            print(f"error: start database has length {start.n} > {n}", file=sys.stderr)
            return 2
    jobs = _jobs(args.jobs)
    log.info("backend=%s jobs=%d", kernels.BACKEND, jobs)

    def on_length(db, stats):
        print(f"n={db.n} classes={len(db)} children={stats.children} "
              f"canonical={stats.canonical} fast_rejects={stats.fast_rejects}", flush=True)

    results = run(n, args.out, start=start, jobs=jobs, checkpoint=args.checkpoint,
                  on_length=on_length)
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"error: verification failed first at length {failed[0].n}", file=sys.stderr)
        return 1
    return 0


def verify_database(db: ClassDatabase) -> tuple[list[str], list[str]]:
    """Recheck every record; returns (problems, report lines)."""
    problems: list[str] = []
    seen: dict[tuple[str, ...], int] = {}
    for idx, rec in enumerate(db.records):
        try:
            code = rec.code()
        except SDClassError as exc:
            problems.append(f"record {idx}: {exc}")
            continue
        if code.n != db.n:
            problems.append(f"record {idx}: length {code.n} != {db.n}")
            continue
        if code.min_weight != rec.d:
            problems.append(f"record {idx}: d={rec.d} but computed {code.min_weight}")
        dist = code.weight_distribution
        counts = tuple(dist[w] if w < len(dist) else 0 for w in (2, 4, 6, 8))
        if counts != rec.counts:
            problems.append(f"record {idx}: weight counts {rec.counts} but computed {counts}")
        outcome = canonical_outcome(code)
        if outcome.aut.order != rec.aut_order:
            problems.append(f"record {idx}: aut={rec.aut_order} but computed {outcome.aut.order}")
        key = tuple(outcome.canon.gen.to_strings())
        if key in seen:
            problems.append(f"record {idx}: equivalent to record {seen[key]}")
        else:
            seen[key] = idx
    try:
        lines = [r.line() for r in full_report(db.records, db.n)]
    except NonDivisor as exc:
        problems.append(f"check failed: {exc}")
        return problems, []
    problems.extend(f"check failed: {line}" for line in lines if line.endswith("FAIL"))
    return problems, lines


def cmd_verify(args) -> int:
    try:
        db = ClassDatabase.load(args.db)
        problems, lines = verify_database(db)
    except (DatabaseError, SDClassError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for line in lines:
        print(line)
    for p in problems:
        print(p, file=sys.stderr)
    return 1 if problems else 0


def cmd_stats(args) -> int:
    try:
        db = ClassDatabase.load(args.db)
    except DatabaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for line in stats_report(db):
        print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sdclass",
                                     description="Classify binary self-dual codes.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate class databases up to a length")
    gen.add_argument("--to-length", type=int, required=True)
    gen.add_argument("--from", dest="from_db", help="start from this database file")
    gen.add_argument("--jobs", type=int, default=None,
                     help="worker processes (default: $SDCLASS_JOBS or 1)")
    gen.add_argument("--out", default="sddb", help="output directory (default: %(default)s)")
    gen.add_argument("--checkpoint", help="checkpoint file used to resume")
    gen.add_argument("--force", action="store_true", help=f"allow lengths above {DESK_LIMIT}")
    gen.set_defaults(func=cmd_gen)

    ver = sub.add_parser("verify", help="recheck a database and its mass formulas")
    ver.add_argument("--db", required=True)
    ver.set_defaults(func=cmd_verify)

    st = sub.add_parser("stats", help="summary statistics of a database")
    st.add_argument("--db", required=True)
    st.set_defaults(func=cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
