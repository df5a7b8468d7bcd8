#!/usr/bin/env python3
"""Compare engine wall times across a grid of random instances.

Example:
    python3 scripts/bench_engines.py --n 10 14 --p 0.1 0.3 --seeds 1..20
"""

from __future__ import annotations

import argparse
import sys

from stabenum.cli import bench
from stabenum.generators import GenSpec


def seed_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[10, 14])
    parser.add_argument("--p", type=float, nargs="+", default=[0.1, 0.2, 0.3])
    parser.add_argument("--seeds", type=seed_range, default=seed_range("1..20"))
    parser.add_argument("--engines", default="set,label")
    parser.add_argument("--selfloops", action="store_true")
    parser.add_argument("--order", default="lex", choices=("lex", "max-out", "max-in"))
    args = parser.parse_args()

    engines = tuple(e.strip() for e in args.engines.split(","))
    for n in args.n:
        for p in args.p:
            base = GenSpec(n=n, p=p, allow_self_loops=args.selfloops)
            code, report = bench(base, args.seeds, engines, order=args.order)
            sys.stdout.write(report)
            if code != 0:
                return code
    return 0


if __name__ == "__main__":
    sys.exit(main())
