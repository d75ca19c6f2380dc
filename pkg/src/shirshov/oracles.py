"""Brute-force reference deciders.

These deliberately share no code with the fast paths they check: every
candidate factorisation is built explicitly and compared with ``lex_compare``.
They are used by the test-suite and by ``shirshov verify``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .words import Order, Word, lex_compare


def _decreasing(factors) -> bool:
    return all(lex_compare(x, y).order is Order.GREATER for x, y in zip(factors, factors[1:]))


def brute_n_divisible(word: Sequence[int], n: int) -> Optional[Tuple[int, ...]]:
    """Lexicographically least cut vector ``(c0, ..., cn)`` over all tilings, or None."""
    word = tuple(word)
    L = len(word)
    for starts in combinations(range(L), n):
        cuts = starts + (L,)
        if _decreasing([word[cuts[i]: cuts[i + 1]] for i in range(n)]):
            return cuts
    return None


def divisibility_profile(word: Sequence[int]) -> Dict[int, Tuple[int, ...]]:
    """Map every achievable n to its lexicographically least cut vector.

    Depth-first over factor starts in increasing order, pruning a branch as
    soon as two consecutive completed factors fail to decrease.  The first
    complete tiling met for a given n is therefore the least one.
    """
    word = tuple(word)
    L = len(word)
    found: Dict[int, Tuple[int, ...]] = {}

    def extend(starts):
        # close the last factor at L
        last = word[starts[-1]:]
        if len(starts) == 1 or lex_compare(word[starts[-2]: starts[-1]], last).order is Order.GREATER:
            found.setdefault(len(starts), tuple(starts) + (L,))
        for b in range(starts[-1] + 1, L):
            cur = word[starts[-1]: b]
            if len(starts) > 1 and lex_compare(word[starts[-2]: starts[-1]], cur).order is not Order.GREATER:
                continue
            extend(starts + [b])

    for a in range(L):
        extend([a])
    return found


def brute_strongly_n_divisible(
    word: Sequence[int], n: int, periods: Iterable[Sequence[int]], k: int
) -> Optional[Tuple[Tuple[int, ...], Tuple[Word, ...]]]:
    """Exhaustive strong-divisibility search over cut tuples and period choices."""
    word = tuple(word)
    Z = sorted({tuple(z) for z in periods})
    L = len(word)
    for starts in combinations(range(L), n):
        cuts = starts + (L,)
        fs = [word[cuts[i]: cuts[i + 1]] for i in range(n)]
        if not _decreasing(fs):
            continue
        options = [[z for z in Z if f[: k * len(z)] == z * k] for f in fs]

        def pick(i, used):
            if i == n:
                return ()
            for z in options[i]:
                if z not in used:
                    rest = pick(i + 1, used | {z})
                    if rest is not None:
                        return (z,) + rest
            return None

        chosen = pick(0, frozenset())
        if chosen is not None:
            return cuts, chosen
    return None


def brute_max_antichain_size(elements, related) -> int:
    """Largest subset with no two elements related either way (exponential)."""
    items = list(elements)
    for size in range(len(items), 0, -1):
        for combo in combinations(items, size):
            if all(not related(x, y) and not related(y, x) for x, y in combinations(combo, 2)):
                return size
    return 0
