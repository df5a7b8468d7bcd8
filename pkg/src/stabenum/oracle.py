"""Ground-truth stability checks by direct application of the definition.

Everything here is deliberately naive: the enumerator walks the whole
powerset, so it only serves as the reference the real engines are tested
against.
"""

from __future__ import annotations

from typing import Iterable

from .framework import Framework

# 2**25 subset checks is the largest run we accept from a desk-scale oracle.
MAX_BRUTEFORCE_ARGS = 25
_MEMO_LIMIT = 20


class TooLarge(ValueError):
    """The framework exceeds the brute-force size guard."""


def is_stable(f: Framework, members: Iterable[int]) -> bool:
    """True iff ``members`` attack exactly the arguments outside the set."""
    s = set(members)
    attacked: set[int] = set()
    for x in s:
        attacked.update(f.succ[x])
    return attacked == set(range(f.n)) - s


def succ_masks(f: Framework) -> list[int]:
    """Per-argument bitmask of attack targets."""
    masks = [0] * f.n
    for x, y in f.attacks:
        masks[x] |= 1 << y
    return masks


def _mask_to_tuple(mask: int, n: int) -> tuple[int, ...]:
    return tuple(x for x in range(n) if (mask >> x) & 1)


def enumerate_bruteforce(f: Framework) -> list[tuple[int, ...]]:
    """Every stable extension, found by checking all subsets.

    Results are returned in lexicographic order of the sorted member
    tuples.  Raises :class:`TooLarge` beyond ``MAX_BRUTEFORCE_ARGS``.
    """
    n = f.n
    if n > MAX_BRUTEFORCE_ARGS:
        raise TooLarge(f"{n} arguments exceed the brute-force limit of {MAX_BRUTEFORCE_ARGS}")
    masks = succ_masks(f)
    full = (1 << n) - 1
    found: list[tuple[int, ...]] = []
    if n <= _MEMO_LIMIT:
        # attacked[m] reuses attacked[m without its lowest bit]
        attacked = [0] * (1 << n)
        for m in range(1, 1 << n):
            low = m & -m
            attacked[m] = attacked[m ^ low] | masks[low.bit_length() - 1]
        for m in range(1 << n):
            if attacked[m] == full ^ m:
                found.append(_mask_to_tuple(m, n))
    else:
        for m in range(1 << n):
            acc = 0
            rest = m
            while rest:
                low = rest & -rest
                acc |= masks[low.bit_length() - 1]
                rest ^= low
            if acc == full ^ m:
                found.append(_mask_to_tuple(m, n))
    found.sort()
    return found
