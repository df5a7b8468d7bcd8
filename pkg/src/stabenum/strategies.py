"""Branch-selection strategies and search bookkeeping shared by both engines."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .framework import Framework

PickStrategy = Callable[[Framework, Sequence[int]], int]


@dataclass
class SearchStats:
    branches: int = 0
    propagations: int = 0


def lowest_index(f: Framework, candidates: Sequence[int]) -> int:
    return min(candidates)


def max_out_degree(f: Framework, candidates: Sequence[int]) -> int:
    # ties broken towards the lowest index
    return max(candidates, key=lambda x: (len(f.succ[x]), -x))


def max_in_degree(f: Framework, candidates: Sequence[int]) -> int:
    return max(candidates, key=lambda x: (len(f.pred[x]), -x))


STRATEGIES: dict[str, PickStrategy] = {
    "lex": lowest_index,
    "max-out": max_out_degree,
    "max-in": max_in_degree,
}
