"""Command line interface of topzdd.

Build, inspect, verify and benchmark compressed ZDDs::

    topzdd build knapsack:A=100,W=100,C=500,seed=7 knapsack.tz
    topzdd stats knapsack.tz
    topzdd verify knapsack.tz
    topzdd bench knapsack.tz --steps 65536 --seed 0
    topzdd member knapsack.tz 1,5,9
    topzdd export nqueens:n=6 --out queens.txt
    topzdd suite --probes 10000

Exit codes are 0 on success, 2 on usage errors, 3 when a verification
fails, 4 on an unreadable container and 1 otherwise.
"""

__all__ = [
    "main",
    "build_parser",
]

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

from topzdd.TopZdd import TopZdd
from topzdd.ZddStore import ZddStore, write_family
from topzdd.build import compress_zdd
from topzdd.families import FamilySpec
from topzdd.query import traverse
from topzdd.utils import deps
from topzdd.utils.errors import ContainerFormatError
from topzdd.utils.suite import SUITE, SizeReport, TraverseReport, run_suite, size_report
from topzdd.utils.zddtest import zddtest

logger = logging.getLogger("topzdd")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_VERIFY = 3
EXIT_FORMAT = 4

# warm-up walk excluded from the reported average
WARMUP_STEPS = 1024


class VerifyFailure(Exception):
    pass


def _table(rows: Sequence[Sequence[object]], header: Sequence[str]) -> str:
    cells = [[str(h) for h in header]] + [[_fmt(v) for v in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(v.rjust(w) if i else v.ljust(w)
                       for i, (v, w) in enumerate(zip(row, widths))) for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _fmt(value: object) -> str:
    if isinstance(value, float):
        return f"{value:.4g}"
    return str(value)


def _emit(args, records: Iterable[dict], table: Optional[str]):
    if table is not None and not args.json:
        print(table)
    if args.json or args.command == "build":
        for record in records:
            print(json.dumps(record, sort_keys=True))


def _size_table(reports: Sequence[SizeReport], components: bool = False) -> str:
    rows = [(r.family or "-", r.n, r.c, r.naive_bytes, r.topzdd_bytes, r.ratio,
             r.build_seconds) for r in reports]
    text = _table(rows, ("family", "n", "c", "naive", "topzdd", "ratio", "build[s]"))
    if components:
        for r in reports:
            text += "\n\n" + _table(sorted(r.components.items()), ("component", "bytes"))
    return text


def _spec_and_path(args, second: str) -> Tuple[str, Optional[str]]:
    spec = args.spec or args.target
    if spec is None:
        raise argparse.ArgumentTypeError(f"{args.command}: a family spec is required")
    return spec, getattr(args, second) or getattr(args, f"{second}_pos")


def _rebuild(tz: TopZdd) -> Tuple[ZddStore, int]:
    if not tz.family:
        raise ValueError("container has no family description, cannot rebuild it")
    return FamilySpec.parse(tz.family).build()


# commands

def cmd_build(args) -> int:
    text, out = _spec_and_path(args, "out")
    spec = FamilySpec.parse(text)
    start = time.perf_counter()
    store, root = spec.build()
    tz, info = compress_zdd(store, root, family=str(spec))
    report = size_report(tz, str(spec), time.perf_counter() - start)
    if out is not None:
        tz.save(out)
    logger.info("height %d after %d rounds, %d T' vertices (%d dummies)",
                info.height, info.rounds, info.vertices, info.dummies)
    _emit(args, [report.as_dict()], _size_table([report]))
    return EXIT_OK


def cmd_stats(args) -> int:
    tz = TopZdd.load(args.file)
    tz.audit()
    report = size_report(tz)
    _emit(args, [report.as_dict()], _size_table([report], components=True))
    return EXIT_OK


def cmd_verify(args) -> int:
    target = args.spec or args.target
    if target is None:
        raise argparse.ArgumentTypeError("verify: a family spec or container is required")
    if Path(target).is_file():
        tz = TopZdd.load(target)
        store, root = _rebuild(tz)
    else:
        spec = FamilySpec.parse(target)
        store, root = spec.build()
        tz, _ = compress_zdd(store, root, family=str(spec))
        tz = TopZdd.from_bytes(tz.to_bytes())
    try:
        zddtest(tz, store, root, raiseerror=True, verb=args.verbose)
    except AssertionError as e:
        raise VerifyFailure(str(e)) from None
    _emit(args, [{"family": tz.family, "n": tz.n, "verified": True}],
          f"{tz.family or target}: verified {tz.n} nodes")
    return EXIT_OK


def cmd_bench(args) -> int:
    tz = TopZdd.load(args.file)
    traverse(tz, steps=min(args.steps, WARMUP_STEPS), seed=args.seed)
    compressed = traverse(tz, steps=args.steps, seed=args.seed)
    plain = float("nan")
    if tz.family:
        store, root = _rebuild(tz)
        traverse(store, steps=min(args.steps, WARMUP_STEPS), seed=args.seed, root=root)
        plain = traverse(store, steps=args.steps, seed=args.seed, root=root).us_per_step
    report = TraverseReport(family=tz.family, steps=compressed.steps, seed=args.seed,
                            us_per_step_topzdd=compressed.us_per_step,
                            us_per_step_zdd=plain)
    rows = [(report.family or "-", report.steps, report.seed,
             report.us_per_step_topzdd, report.us_per_step_zdd)]
    _emit(args, [report.as_dict()],
          _table(rows, ("family", "steps", "seed", "topzdd[us]", "zdd[us]")))
    return EXIT_OK


def _parse_set(tokens: Sequence[str]) -> List[int]:
    items = [tok for part in tokens for tok in part.replace(",", " ").split()]
    try:
        return [int(tok) for tok in items]
    except ValueError:
        raise ValueError(f"set elements must be integers, got {' '.join(tokens)!r}") from None


def cmd_member(args) -> int:
    tz = TopZdd.load(args.file)
    s = _parse_set(args.elements)
    found = tz.member(s)
    _emit(args, [{"family": tz.family, "set": s, "member": found}],
          "true" if found else "false")
    return EXIT_OK


def cmd_export(args) -> int:
    text, out = _spec_and_path(args, "out")
    store, root = FamilySpec.parse(text).build()
    if out is None:
        sets = store.enumerate(root, args.limit)
        sys.stdout.write(f"c={store.c}\n")
        sys.stdout.writelines(" ".join(map(str, s)) + "\n" for s in sets)
        return EXIT_OK
    count = write_family(out, store, root, limit=args.limit)
    logger.info("wrote %d sets to %s", count, out)
    return EXIT_OK


def cmd_suite(args) -> int:
    records = run_suite(args.families or SUITE, probes=args.probes, seed=args.seed)
    if not records:
        # non-root MPI rank
        return EXIT_OK
    rows = [(r["family"], r["n"], r["naive_bytes"], r["topzdd_bytes"], r["height"],
             r["max_depth"], r["verified"]) for r in records]
    _emit(args, records,
          _table(rows, ("family", "n", "naive", "topzdd", "height", "depth", "verified")))
    return EXIT_OK if all(r["verified"] for r in records) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="print JSON-lines records instead of tables")
    common.add_argument("-v", "--verbose", action="store_true",
                        help="log at INFO level regardless of TZDD_LOG")

    parser = argparse.ArgumentParser(prog="topzdd", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="build and compress a family")
    p.add_argument("target", nargs="?", help="family spec, e.g. powerset:A=64")
    p.add_argument("out_pos", nargs="?", metavar="out", help="container file to write")
    p.add_argument("--spec")
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("stats", parents=[common], help="size report of a container")
    p.add_argument("file")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", parents=[common],
                       help="compare a compressed family with its uncompressed ZDD")
    p.add_argument("target", nargs="?", help="family spec or container file")
    p.add_argument("--spec")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="random traversal benchmark")
    p.add_argument("file")
    p.add_argument("--steps", type=int, default=65536)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("member", parents=[common], help="membership of a set")
    p.add_argument("file")
    p.add_argument("elements", nargs="*", help="ascending elements, e.g. 1,4,7")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("export", parents=[common], help="write a family as text")
    p.add_argument("target", nargs="?", help="family spec")
    p.add_argument("out_pos", nargs="?", metavar="out", help="text file, stdout if absent")
    p.add_argument("--spec")
    p.add_argument("--out")
    p.add_argument("--limit", type=int, default=1 << 20,
                   help="refuse families with more sets")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("suite", parents=[common],
                       help="build and verify the desk-scale suite (MPI aware)")
    p.add_argument("families", nargs="*", help="family specs, the full suite if absent")
    p.add_argument("--probes", type=int, default=10000,
                   help="random nodes per family for the depth check")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else deps.log_level,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as e:
        parser.error(str(e))
    except VerifyFailure as e:
        logger.error("%s", e)
        return EXIT_VERIFY
    except ContainerFormatError as e:
        logger.error("%s", e)
        return EXIT_FORMAT
    except ValueError as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except Exception as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_ERROR
