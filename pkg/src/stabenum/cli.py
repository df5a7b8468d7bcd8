"""Command-line frontend: parse, enumerate, verify, trace, generate, bench.

Exit codes: 0 on success, 1 for input or configuration errors (unreadable
files, parse errors, size guards, bad flags), 2 for internal violations
(invariant hook failures, verification mismatches, cross-engine count
mismatches).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from dataclasses import dataclass
from typing import Sequence

from . import label_enum, set_enum
from .formats import ParseDiagnostic, ParseError, parse_apx, parse_tgf, write_extensions
from .framework import Framework, UnknownArgument
from .generators import GenSpec, random_af
from .invariants import InvariantViolation
from .oracle import TooLarge, enumerate_bruteforce, is_stable
from .strategies import STRATEGIES, SearchStats

TASKS = ("EE-ST", "SE-ST", "CE-ST")
ENGINES = ("bruteforce", "set", "label")
FORMATS = ("apx", "tgf")


@dataclass
class RunConfig:
    task: str = "EE-ST"
    engine: str = "label"
    format: str | None = None  # None = auto-detect from the file extension
    order: str = "lex"
    check_invariants: bool = False
    trace: str | None = None
    verify: bool = False


def detect_format(source: str) -> str | None:
    if source.endswith(".apx"):
        return "apx"
    if source.endswith(".tgf"):
        return "tgf"
    return None


def _enumerate(
    config: RunConfig,
    f: Framework,
    stats: SearchStats | None = None,
    trace_events: list | None = None,
) -> tuple[int, list[tuple[int, ...]]]:
    """Run the configured engine; returns (count, collected extensions)."""
    limit = 1 if config.task == "SE-ST" else None
    if config.engine == "bruteforce":
        extensions = enumerate_bruteforce(f)
        if limit is not None:
            extensions = extensions[:limit]
        return len(extensions), extensions
    pick = STRATEGIES[config.order]
    extensions: list[tuple[int, ...]] = []
    kwargs = dict(
        pick=pick,
        sink=extensions.append,
        check_invariants=config.check_invariants,
        stats=stats,
        limit=limit,
    )
    if config.engine == "set":
        count = set_enum.enumerate_extensions(f, **kwargs)
    else:
        if trace_events is not None:
            kwargs["trace"] = trace_events.append
        count = label_enum.enumerate_extensions(f, **kwargs)
    return count, extensions


def execute(config: RunConfig, f: Framework) -> tuple[int, str]:
    """Enumerate on an already-built framework; returns (exit code, stdout)."""
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * f.n + 200))
    trace_events: list | None = [] if config.trace is not None else None
    try:
        count, extensions = _enumerate(config, f, trace_events=trace_events)
    except TooLarge as exc:
        print(f"stabenum: {config.engine} engine: {exc}", file=sys.stderr)
        return 1, ""
    except InvariantViolation as exc:
        print(f"stabenum: invariant violation: {exc}", file=sys.stderr)
        return 2, ""
    if config.verify:
        for ext in extensions:
            if not is_stable(f, ext):
                print(
                    f"stabenum: verification failed: reported set "
                    f"{[f.names[x] for x in ext]} is not stable",
                    file=sys.stderr,
                )
                return 2, ""
    if config.trace is not None:
        with open(config.trace, "w", encoding="utf-8") as handle:
            for event in trace_events or []:
                handle.write(json.dumps(event.as_dict()) + "\n")
    if config.task == "EE-ST":
        output = write_extensions(extensions, f.names)
    elif config.task == "SE-ST":
        output = write_extensions(extensions[:1], f.names, some=True)
    else:  # CE-ST
        output = write_extensions([], f.names, count=count)
    return 0, output


def run(config: RunConfig, text: str, source: str = "<input>") -> tuple[int, str]:
    """Parse ``text`` and enumerate; returns (exit code, stdout)."""
    fmt = config.format or detect_format(source)
    if fmt is None:
        print(
            f"stabenum: cannot detect format of {source!r}; pass --format",
            file=sys.stderr,
        )
        return 1, ""
    diagnostics: list[ParseDiagnostic] = []
    try:
        f = parse_apx(text, diagnostics) if fmt == "apx" else parse_tgf(text, diagnostics)
    except (ParseError, UnknownArgument) as exc:
        line = getattr(exc, "line", None)
        print(f"{source}:{line if line is not None else '?'}: {exc}", file=sys.stderr)
        return 1, ""
    for diag in diagnostics:
        print(f"{source}:{diag.line}: {diag.severity}: {diag.message}", file=sys.stderr)
    return execute(config, f)


def bench(
    base: GenSpec,
    seeds: Sequence[int],
    engines: Sequence[str],
    order: str = "lex",
) -> tuple[int, str]:
    """Time every (instance, engine) pair and cross-check reported counts."""
    lines: list[str] = []
    for seed in seeds:
        f = random_af(dataclasses.replace(base, seed=seed))
        counts: dict[str, int] = {}
        for engine in engines:
            config = RunConfig(task="CE-ST", engine=engine, order=order)
            stats = SearchStats()
            started = time.perf_counter()
            try:
                count, _ = _enumerate(config, f, stats=stats)
            except TooLarge as exc:
                print(f"stabenum: {engine} engine: {exc}", file=sys.stderr)
                return 1, "".join(line + "\n" for line in lines)
            elapsed = (time.perf_counter() - started) * 1000.0
            counts[engine] = count
            lines.append(
                f"seed={seed} n={base.n} p={base.p} engine={engine} "
                f"time_ms={elapsed:.3f} count={count} "
                f"branches={stats.branches} propagations={stats.propagations}"
            )
        if len(set(counts.values())) > 1:
            detail = ", ".join(f"{engine}={count}" for engine, count in counts.items())
            print(f"stabenum: count mismatch at seed {seed}: {detail}", file=sys.stderr)
            return 2, "".join(line + "\n" for line in lines)
    return 0, "".join(line + "\n" for line in lines)


def parse_gen(text: str) -> tuple[GenSpec, list[int]]:
    """Parse ``N,P,SEED[,selfloops]``; SEED may be a range ``A..B``."""
    parts = text.split(",")
    if len(parts) not in (3, 4):
        raise ValueError("--gen takes N,P,SEED[,selfloops]")
    n = int(parts[0])
    p = float(parts[1])
    if ".." in parts[2]:
        lo, hi = parts[2].split("..", 1)
        seeds = list(range(int(lo), int(hi) + 1))
        if not seeds:
            raise ValueError(f"empty seed range {parts[2]!r}")
    else:
        seeds = [int(parts[2])]
    allow = False
    if len(parts) == 4:
        if parts[3] != "selfloops":
            raise ValueError(f"unknown --gen option {parts[3]!r}")
        allow = True
    return GenSpec(n=n, p=p, allow_self_loops=allow, seed=seeds[0]), seeds


class _ArgumentParser(argparse.ArgumentParser):
    # exit 1 on usage errors; 2 is reserved for internal violations
    def error(self, message: str) -> None:  # pragma: no cover - thin wrapper
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="stabenum",
        description="Enumerate the stable extensions of an argumentation framework.",
    )
    parser.add_argument("input", nargs="?", help="framework file (.apx or .tgf)")
    parser.add_argument("--task", choices=TASKS, default="EE-ST",
                        help="enumerate all (EE-ST), find one (SE-ST) or count (CE-ST)")
    parser.add_argument("--engine", choices=ENGINES, default="label")
    parser.add_argument("--format", choices=FORMATS,
                        help="input format (default: by file extension)")
    parser.add_argument("--order", choices=tuple(STRATEGIES), default="lex",
                        help="branching argument selection")
    parser.add_argument("--verify", action="store_true",
                        help="re-check every reported extension against the definition")
    parser.add_argument("--check-invariants", action="store_true",
                        help="run the engine state assertions at every search state")
    parser.add_argument("--trace", metavar="PATH",
                        help="write one JSON trace event per search state (label engine)")
    parser.add_argument("--gen", metavar="N,P,SEED[,selfloops]",
                        help="generate a random framework instead of reading a file")
    parser.add_argument("--bench", action="store_true",
                        help="time the engines across the --gen seed range")
    parser.add_argument("--engines", default="set,label",
                        help="comma-separated engines compared by --bench")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    config = RunConfig(
        task=args.task,
        engine=args.engine,
        format=args.format,
        order=args.order,
        check_invariants=args.check_invariants,
        trace=args.trace,
        verify=args.verify,
    )
    if config.trace is not None and config.engine != "label":
        parser.error("--trace requires the label engine")

    if args.bench:
        if args.gen is None:
            parser.error("--bench requires --gen")
        engines = tuple(e.strip() for e in args.engines.split(",") if e.strip())
        for engine in engines:
            if engine not in ENGINES:
                parser.error(f"unknown engine {engine!r}")
        try:
            base, seeds = parse_gen(args.gen)
        except ValueError as exc:
            parser.error(str(exc))
        code, output = bench(base, seeds, engines, order=config.order)
    elif args.gen is not None:
        if args.input is not None:
            parser.error("pass either an input file or --gen, not both")
        try:
            base, seeds = parse_gen(args.gen)
        except ValueError as exc:
            parser.error(str(exc))
        if len(seeds) != 1:
            parser.error("seed ranges are only valid with --bench")
        code, output = execute(config, random_af(base))
    else:
        if args.input is None:
            parser.error("an input file (or --gen) is required")
        try:
            with open(args.input, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            print(f"stabenum: {exc}", file=sys.stderr)
            return 1
        code, output = run(config, text, source=args.input)
    sys.stdout.write(output)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
