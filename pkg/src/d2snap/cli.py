"""Command line front end.

Reads HTML from a file or stdin, writes the downsampled snapshot to
stdout and nothing else there, so the output can be piped straight into
a prompt.  Diagnostics go to stderr.

Exit codes: 0 on success, 2 when a token budget could not be met (the
smallest snapshot is still printed), 1 for unusable input or arguments.
"""

from __future__ import annotations

import argparse
import importlib
import json
import sys

from .adaptive import downsample_to_budget, estimate_tokens
from .core import d2snap
from .dom import parse_html, serialize, serialize_pretty
from .errors import BudgetError, D2SnapError, ParseError
from .ground_truth import ground_truth_dump


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for budget
    # overruns here, so usage problems exit 1 instead.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _ratio(value: str) -> float:
    number = float(value)
    if not 0.0 <= number <= 1.0:
        raise argparse.ArgumentTypeError(
            f"value must be between 0 and 1, got {value}")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="d2snap",
        description="Downsample HTML into a compact DOM snapshot.")
    parser.add_argument("file", nargs="?", default="-",
                        help="input HTML file, '-' or omitted for stdin")
    parser.add_argument("-k", type=_ratio, default=None, metavar="K",
                        help="container merge ratio in [0, 1]")
    parser.add_argument("-l", type=_ratio, default=None, metavar="L",
                        help="sentence pruning ratio in [0, 1]")
    parser.add_argument("-m", type=_ratio, default=None, metavar="M",
                        help="attribute relevance threshold in [0, 1]")
    parser.add_argument("--linearize", action="store_true",
                        help="dissolve all containers (k to infinity)")
    parser.add_argument("--max-tokens", type=int, default=None, metavar="N",
                        help="pick parameters adaptively to fit N tokens")
    parser.add_argument("--max-iter", type=int, default=None, metavar="I",
                        help="adaptive attempts before giving up (default 5)")
    parser.add_argument("--annotate-uids", action="store_true",
                        help="tag interactive elements with data-uid")
    parser.add_argument("--estimator", default="heuristic", metavar="SPEC",
                        help="'heuristic' or module:attribute of a callable "
                             "mapping text to a token count")
    parser.add_argument("--stats", action="store_true",
                        help="print size statistics to stderr")
    parser.add_argument("--pretty", action="store_true",
                        help="indent the snapshot instead of minifying")
    parser.add_argument("--rounding", choices=("floor", "ceiling"),
                        default="floor",
                        help="rounding of fractional sentence counts")
    parser.add_argument("--split-colon", action="store_true",
                        help="treat ':' as a sentence terminal")
    parser.add_argument("--dump-ground-truth", action="store_true",
                        help="print the relevance tables as JSON and exit")
    parser.add_argument("--encoding", default=None,
                        help="input encoding (default: UTF-8, Latin-1 fallback)")
    return parser


def _load_estimator(spec: str, parser: argparse.ArgumentParser):
    if spec == "heuristic":
        return estimate_tokens
    module_name, sep, attr = spec.partition(":")
    if not sep or not module_name or not attr:
        parser.error(f"--estimator must be 'heuristic' or module:attribute, "
                     f"got {spec!r}")
    try:
        module = importlib.import_module(module_name)
        estimator = getattr(module, attr)
    except (ImportError, AttributeError) as exc:
        parser.error(f"cannot load estimator {spec!r}: {exc}")
    if not callable(estimator):
        parser.error(f"estimator {spec!r} is not callable")
    return estimator


def _read_input(path: str, parser: argparse.ArgumentParser) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as handle:
            return handle.read()
    except OSError as exc:
        parser.error(f"cannot read {path}: {exc}")
        raise AssertionError("unreachable")


def _print_stats(pairs: dict) -> None:
    for key, value in pairs.items():
        print(f"{key}={value}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    """Entry point; returns the exit code instead of raising SystemExit,
    so it can be driven in-process as well as from the console script."""
    try:
        return _main(argv)
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1


def _main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.dump_ground_truth:
        print(json.dumps(ground_truth_dump(), indent=2))
        return 0

    if args.max_tokens is not None:
        conflicts = [name for name, value in
                     (("-k", args.k), ("-l", args.l), ("-m", args.m))
                     if value is not None]
        if args.linearize:
            conflicts.append("--linearize")
        if conflicts:
            parser.error("--max-tokens picks parameters itself; "
                         "drop " + ", ".join(conflicts))
        if args.max_tokens < 1:
            parser.error("--max-tokens must be a positive integer")
    elif args.max_iter is not None:
        parser.error("--max-iter only applies together with --max-tokens")
    if args.max_iter is not None and args.max_iter < 1:
        parser.error("--max-iter must be a positive integer")

    estimator = _load_estimator(args.estimator, parser)
    raw = _read_input(args.file, parser)

    try:
        root = parse_html(raw, encoding=args.encoding)
    except ParseError as exc:
        print(f"d2snap: {exc}", file=sys.stderr)
        return 1

    render = serialize_pretty if args.pretty else serialize
    stats: dict = {"input_bytes": len(raw)}
    exit_code = 0

    try:
        if args.max_tokens is not None:
            result = downsample_to_budget(
                root, args.max_tokens,
                max_iterations=args.max_iter if args.max_iter is not None else 5,
                estimator=estimator,
                split_colon=args.split_colon,
                rounding=args.rounding,
                annotate=args.annotate_uids)
            snapshot = result.snapshot
            stats["iterations"] = result.iterations
            stats["k"], stats["l"], stats["m"] = (
                round(p, 6) for p in result.parameters)
        else:
            k = args.k if args.k is not None else 0.0
            l = args.l if args.l is not None else 0.0
            m = args.m if args.m is not None else 0.0
            snapshot = d2snap(root, k, l, m,
                              linearize=args.linearize,
                              split_colon=args.split_colon,
                              rounding=args.rounding,
                              annotate=args.annotate_uids)
            stats["k"], stats["l"], stats["m"] = k, l, m
    except BudgetError as exc:
        snapshot = exc.smallest
        stats["iterations"] = args.max_iter if args.max_iter is not None else 5
        print(f"d2snap: {exc}", file=sys.stderr)
        exit_code = 2
    except D2SnapError as exc:
        print(f"d2snap: {exc}", file=sys.stderr)
        return 1

    output = render(snapshot)
    sys.stdout.write(output if output.endswith("\n") else output + "\n")

    if args.stats:
        payload = output.encode("utf-8")
        stats["output_bytes"] = len(payload)
        stats["byte_ratio"] = (round(len(payload) / len(raw), 4)
                               if raw else 0.0)
        stats["estimated_tokens"] = estimator(serialize(snapshot))
        _print_stats(stats)
    return exit_code
