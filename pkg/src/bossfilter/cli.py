"""Command-line front: hash, cmp, scan, bench, serve.

The three tuning flags (--t-cos, --t-euc, --capacity) are accepted both
before and after the subcommand. Each falls back to its environment
variable (BOSS_T_COS, BOSS_T_EUC, BOSS_CAPACITY) and then to the built-in
default; an explicit flag always wins.
"""

from __future__ import annotations

import argparse
import os
import sys

from .bench import run_bench
from .classifier import PerceptronModel
from .hashstore import DEFAULT_CAPACITY, StoreConfig, SubjectStore
from .pipeline import scan_corpus
from .proximity import (
    DEFAULT_T_COS,
    DEFAULT_T_EUC,
    ProximityParams,
    cosine,
    euclidean,
    proximity_flag,
)
from .server import serve
from .syllabifier import VECTOR_LEN, MalformedHashError, build_hash, hash_text, parse_hash

_ENV_NAMES = {"t_cos": "BOSS_T_COS", "t_euc": "BOSS_T_EUC", "capacity": "BOSS_CAPACITY"}


def _shared_flags() -> argparse.ArgumentParser:
    # default=SUPPRESS so an unset flag is absent from the namespace and the
    # env var can take over; the same parent serves the root and every
    # subcommand, letting the flag appear on either side of the subcommand.
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--t-cos", type=float, default=argparse.SUPPRESS, metavar="F",
        help=f"cosine threshold (default {DEFAULT_T_COS})",
    )
    parent.add_argument(
        "--t-euc", type=float, default=argparse.SUPPRESS, metavar="F",
        help=f"Euclidean threshold (default {DEFAULT_T_EUC})",
    )
    parent.add_argument(
        "--capacity", type=int, default=argparse.SUPPRESS, metavar="N",
        help=f"frequent-subject buffer capacity (default {DEFAULT_CAPACITY})",
    )
    return parent


def build_parser() -> argparse.ArgumentParser:
    shared = _shared_flags()
    parser = argparse.ArgumentParser(
        prog="boss",
        parents=[shared],
        description="Syllable-hash spam filtering for e-mail subject lines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hash", parents=[shared], help="print a subject's 189-character hash")
    p.add_argument("text", help="subject line")

    p = sub.add_parser("cmp", parents=[shared], help="compare two subjects or hash strings")
    p.add_argument("a")
    p.add_argument("b")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--text", action="store_true", help="treat both arguments as raw subjects")
    mode.add_argument(
        "--hash", dest="as_hash", action="store_true",
        help="treat both arguments as hash strings",
    )

    p = sub.add_parser("scan", parents=[shared], help="scan a corpus, one subject per line")
    p.add_argument("path", nargs="?", default="-", help="input file, or - for stdin (default)")
    p.add_argument("--out-dir", default=".", help="directory for histogram CSVs (default .)")

    p = sub.add_parser("bench", parents=[shared], help="deterministic throughput benchmark")
    p.add_argument("--n", type=int, default=10000, help="messages to generate (default 10000)")
    p.add_argument("--seed", type=int, default=42, help="generator seed (default 42)")

    p = sub.add_parser("serve", parents=[shared], help="run the line-protocol TCP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=7979)
    return parser


def _setting(args: argparse.Namespace, name: str, cast, fallback):
    value = getattr(args, name, None)
    if value is not None:
        return value
    env_name = _ENV_NAMES[name]
    raw = os.environ.get(env_name)
    if raw:
        try:
            return cast(raw)
        except ValueError:
            raise ValueError(f"{env_name}={raw!r} is not a valid {cast.__name__}") from None
    return fallback


def _looks_like_hash(value: str) -> bool:
    # Hash text is 189 chars in '0'..'~'; short all-digit strings are taken
    # as (malformed) hashes too so truncated hashes fail loudly instead of
    # being silently hashed as prose. --text / --hash override.
    if not value or any(c < "0" or c > "~" for c in value):
        return False
    return len(value) == VECTOR_LEN or value.isdigit()


def _cmp_vector(value: str, force_text: bool, force_hash: bool):
    if not force_text and (force_hash or _looks_like_hash(value)):
        return parse_hash(value)
    return build_hash(value)


def _cmd_cmp(args: argparse.Namespace, params: ProximityParams) -> int:
    try:
        v1 = _cmp_vector(args.a, args.text, args.as_hash)
        v2 = _cmp_vector(args.b, args.text, args.as_hash)
    except MalformedHashError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    c = cosine(v1, v2)
    flag = proximity_flag(v1, v2, params)
    cos_text = f"{c:.6f}" if c is not None else "-"
    print(f"cos={cos_text} euc={euclidean(v1, v2):.6f} flag={'true' if flag else 'false'}")
    return 0 if flag else 1


def _cmd_scan(args: argparse.Namespace, config: StoreConfig) -> int:
    store = SubjectStore(config)
    model = PerceptronModel()
    try:
        if args.path == "-":
            stats = scan_corpus(sys.stdin, store, model, out_dir=args.out_dir)
        else:
            with open(args.path, encoding="utf-8", errors="replace") as fh:
                stats = scan_corpus(fh, store, model, out_dir=args.out_dir)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(stats.summary_line())
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        params = ProximityParams(
            t_cos=_setting(args, "t_cos", float, DEFAULT_T_COS),
            t_euc=_setting(args, "t_euc", float, DEFAULT_T_EUC),
        )
        config = StoreConfig(capacity=_setting(args, "capacity", int, DEFAULT_CAPACITY), params=params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.command == "hash":
        print(hash_text(args.text))
        return 0
    if args.command == "cmp":
        return _cmd_cmp(args, params)
    if args.command == "scan":
        return _cmd_scan(args, config)
    if args.command == "bench":
        if args.n < 1:
            print("error: --n must be >= 1", file=sys.stderr)
            return 2
        report = run_bench(args.n, args.seed, config)
        print(report.counts_line())
        print(report.timing_line())
        return 0
    if args.command == "serve":
        try:
            serve(args.host, args.port, config)
        except KeyboardInterrupt:
            pass
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        return 0
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
