"""Command-line entry point: ``constlfu replay|generate|bench``.

Exit codes: 0 success, 1 data error (unreadable or malformed trace),
2 usage error. Output is plain JSON or trace text, never colourised, so
NO_COLOR needs no special handling.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .bench import DEFAULT_SIZES, BenchConfig, run_bench
from .errors import InvalidArgumentError
from .replay import POLICIES, replay
from .trace import TraceParseError, format_trace, gen_round_robin, gen_zipf, parse_trace


@dataclass
class CliConfig:
    subcommand: str
    policy: Optional[str] = None
    capacity: Optional[int] = None
    tiebreak: str = "fifo"
    trace: Optional[str] = None
    stdin: bool = False
    kind: Optional[str] = None
    keys: Optional[int] = None
    rounds: Optional[int] = None
    ops: Optional[int] = None
    exponent: float = 1.0
    seed: int = 0
    sizes: tuple[int, ...] = DEFAULT_SIZES
    ops_per_size: int = 20000
    output: Optional[str] = None
    extra: dict = field(default_factory=dict)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return value


def _size_list(text: str) -> tuple[int, ...]:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("expected a comma-separated list of sizes")
    return tuple(_positive_int(p.strip()) for p in parts)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="constlfu", description="Replay, generate and benchmark cache traces."
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("replay", help="replay a trace and print a JSON report")
    p.add_argument("--policy", required=True, choices=POLICIES)
    p.add_argument("--capacity", required=True, type=_positive_int)
    p.add_argument("--tiebreak", choices=("fifo", "lifo"), default="fifo")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--trace", metavar="FILE")
    source.add_argument("--stdin", action="store_true")
    p.add_argument("--json", dest="output", metavar="FILE")

    p = sub.add_parser("generate", help="write a synthetic trace")
    p.add_argument("--kind", required=True, choices=("round-robin", "zipf"))
    p.add_argument("--keys", required=True, type=_positive_int)
    p.add_argument("--rounds", type=_positive_int)
    p.add_argument("--ops", type=_positive_int)
    p.add_argument("--exponent", type=_positive_float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", metavar="FILE")

    p = sub.add_parser("bench", help="step-count benchmark, lfu vs lfu-heap")
    p.add_argument("--sizes", type=_size_list, default=DEFAULT_SIZES)
    p.add_argument("--ops-per-size", type=_positive_int, default=20000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--json", dest="output", metavar="FILE")
    return parser


def _write(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_replay(cfg: CliConfig) -> int:
    try:
        if cfg.stdin:
            events = parse_trace(sys.stdin)
        else:
            with open(cfg.trace, encoding="utf-8") as fh:
                events = parse_trace(fh)
    except TraceParseError as exc:
        print(f"constlfu: {cfg.trace or '<stdin>'}: {exc}", file=sys.stderr)
        return 1
    except (OSError, UnicodeDecodeError) as exc:
        print(f"constlfu: cannot read trace: {exc}", file=sys.stderr)
        return 1
    report = replay(cfg.policy, cfg.capacity, events, cfg.tiebreak)
    _write(json.dumps(report.to_dict(), indent=2) + "\n", cfg.output)
    return 0


def cmd_generate(cfg: CliConfig) -> int:
    if cfg.kind == "round-robin":
        events = gen_round_robin(cfg.keys, cfg.rounds)
    else:
        events = gen_zipf(cfg.keys, cfg.ops, cfg.exponent, cfg.seed)
    _write(format_trace(events), cfg.output)
    return 0


def cmd_bench(cfg: CliConfig) -> int:
    rows = run_bench(BenchConfig(sizes=cfg.sizes, ops_per_size=cfg.ops_per_size, seed=cfg.seed))
    _write(json.dumps(rows, indent=2) + "\n", cfg.output)
    return 0


def parse_config(parser: argparse.ArgumentParser, argv: Optional[Sequence[str]]) -> CliConfig:
    ns = vars(parser.parse_args(argv))
    cfg = CliConfig(**{k: v for k, v in ns.items() if k in CliConfig.__dataclass_fields__})
    if cfg.subcommand == "generate":
        if cfg.kind == "round-robin" and cfg.rounds is None:
            parser.error("--kind round-robin requires --rounds")
        if cfg.kind == "zipf" and cfg.ops is None:
            parser.error("--kind zipf requires --ops")
    return cfg


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    cfg = parse_config(parser, argv)
    handler = {"replay": cmd_replay, "generate": cmd_generate, "bench": cmd_bench}[cfg.subcommand]
    try:
        return handler(cfg)
    except InvalidArgumentError as exc:
        print(f"constlfu: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
