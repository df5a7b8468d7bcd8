"""Seeded framework generators for property tests and benchmarks."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .framework import Framework, build


class UnknownFamily(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one random instance; equal specs yield equal frameworks."""

    n: int
    p: float
    allow_self_loops: bool = False
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"attack probability {self.p} outside [0,1]")
        if self.n < 0:
            raise ValueError(f"negative argument count {self.n}")


def argument_names(n: int) -> list[str]:
    return [f"a{i}" for i in range(n)]


def random_af(spec: GenSpec) -> Framework:
    """One independent coin flip per ordered pair, row-major.

    The stream comes from ``random.Random(seed)`` (Mersenne Twister), whose
    output is identical across platforms and Python versions, so a spec is
    a complete, replayable description of the instance.
    """
    rng = random.Random(spec.seed)
    names = argument_names(spec.n)
    attacks = []
    for x in range(spec.n):
        for y in range(spec.n):
            if x == y and not spec.allow_self_loops:
                continue
            if rng.random() < spec.p:
                attacks.append((names[x], names[y]))
    return build(names, attacks)


def family(name: str, n: int) -> Framework:
    """Structured instances with known extension counts.

    ``cycle``: the directed n-cycle (none stable for odd n, two for even n);
    ``chain``: a directed path; ``two_cliques``: two groups of mutually
    attacking arguments, giving one extension per pair of picks.
    """
    if n < 1:
        raise ValueError(f"family size must be positive, got {n}")
    names = argument_names(n)
    if name == "cycle":
        attacks = [(names[i], names[(i + 1) % n]) for i in range(n)]
    elif name == "chain":
        attacks = [(names[i], names[i + 1]) for i in range(n - 1)]
    elif name == "two_cliques":
        half = (n + 1) // 2
        groups = (range(half), range(half, n))
        attacks = [
            (names[x], names[y])
            for group in groups
            for x in group
            for y in group
            if x != y
        ]
    else:
        raise UnknownFamily(f"unknown family {name!r}")
    return build(names, attacks)
