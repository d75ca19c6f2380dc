"""n-divisibility and strong n-divisibility deciders.

A word ``W`` is n-divisible when ``W = W0 W1 ... Wn`` with ``W1 > W2 > ... > Wn``,
each comparison decided at a position where the two factors differ.  The
decider works on factor *starts*: factor ``i`` runs from its start to the next
start, and the pair ``(a, b)`` of consecutive starts is admissible exactly when
the suffixes at ``a`` and ``b`` first differ at an offset ``h`` inside both
factors with the letter at ``a + h`` larger.  Only the right end of the second
factor depends on the following start (it must reach past ``b + h``), which
keeps the table search at ``O(n |W|^2)``.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from .words import Word, format_word, is_primitive, lex_compare, Order


def lcp_table(word: Sequence[int]) -> List[List[int]]:
    """``table[a][b]`` is the length of the common prefix of the suffixes at a and b."""
    n = len(word)
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for a in range(n - 1, -1, -1):
        row, below = table[a], table[a + 1]
        wa = word[a]
        for b in range(n - 1, -1, -1):
            if wa == word[b]:
                row[b] = below[b + 1] + 1
    return table


@dataclass(frozen=True)
class Division:
    """A witness ``W = W0 W1 ... Wn`` stored as cut positions ``c0 <= c1 < ... < cn``."""

    word: Word
    cuts: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.cuts) - 1

    @property
    def head(self) -> Word:
        return self.word[: self.cuts[0]]

    @property
    def factors(self) -> List[Word]:
        c = self.cuts
        return [self.word[c[i]: c[i + 1]] for i in range(self.n)]

    @property
    def comparison_positions(self) -> List[Optional[int]]:
        fs = self.factors
        return [lex_compare(fs[i], fs[i + 1]).position for i in range(len(fs) - 1)]

    def is_valid(self) -> bool:
        return check_division(self.word, self.cuts)

    def to_record(self, alphabet=None) -> dict:
        return {
            "n": self.n,
            "cuts": list(self.cuts),
            "head": format_word(self.head, alphabet),
            "factors": [format_word(f, alphabet) for f in self.factors],
            "comparison_positions": self.comparison_positions,
        }


@dataclass(frozen=True)
class StrongDivision(Division):
    periods: Tuple[Word, ...] = ()
    exponent: int = 0

    def is_valid(self) -> bool:
        if not check_division(self.word, self.cuts):
            return False
        if len(set(self.periods)) != len(self.periods) or len(self.periods) != self.n:
            return False
        return all(f[: len(z) * self.exponent] == z * self.exponent
                   for f, z in zip(self.factors, self.periods))

    def to_record(self, alphabet=None) -> dict:
        rec = super().to_record(alphabet)
        rec["periods"] = [format_word(z, alphabet) for z in self.periods]
        rec["exponent"] = self.exponent
        return rec


def check_division(word: Sequence[int], cuts: Sequence[int]) -> bool:
    """Validate cut positions directly with :func:`lex_compare`."""
    word = tuple(word)
    if len(cuts) < 2 or cuts[-1] != len(word) or cuts[0] < 0:
        return False
    if any(cuts[i] >= cuts[i + 1] for i in range(len(cuts) - 1)):
        return False
    fs = [word[cuts[i]: cuts[i + 1]] for i in range(len(cuts) - 1)]
    return all(lex_compare(fs[i], fs[i + 1]).order is Order.GREATER for i in range(len(fs) - 1))


def division_from_factors(word: Sequence[int], spans: Sequence[Tuple[int, int]]) -> Division:
    """Turn disjoint left-to-right decreasing factors into a tiling witness.

    Gaps are absorbed into the factor on their left (and the leading gap into
    ``W0``); extending a factor to the right never changes a comparison that is
    already decided at a differing position.
    """
    word = tuple(word)
    starts = [a for a, _ in spans]
    for (a, e), (a2, _) in zip(spans, spans[1:]):
        if not (a < e <= a2):
            raise ValueError("factors must be nonempty, disjoint and ordered")
    return Division(word, tuple(starts) + (len(word),))


def _admissible(word, lcp, a, b):
    """Offset of the deciding letter when the factor at a beats the one at b, else None."""
    h = lcp[a][b]
    if h < b - a and b + h < len(word) and word[a + h] > word[b + h]:
        return h
    return None


def _reach_tables(word: Word, n: int, lcp) -> List[List[int]]:
    """``reach[r][a]``: largest next start for a factor at ``a`` followed by r-1 more (-1 if none)."""
    L = len(word)
    reach = [None, [L] * L]
    for r in range(2, n + 1):
        prev = reach[r - 1]
        row = [-1] * L
        for a in range(L):
            for b in range(L - 1, a, -1):
                h = _admissible(word, lcp, a, b)
                if h is not None and prev[b] >= b + h + 1:
                    row[a] = b
                    break
        reach.append(row)
        if max(row, default=-1) < 0:
            break
    return reach


def is_n_divisible(word: Sequence[int], n: int) -> Optional[Division]:
    """Return the witness with the lexicographically least cut vector, or None."""
    if n < 1:
        raise ValueError("n must be positive")
    word = tuple(word)
    L = len(word)
    if L < n:
        return None
    lcp = lcp_table(word)
    reach = _reach_tables(word, n, lcp)
    if len(reach) <= n:
        return None

    def step(r, a, b):
        # deciding offset when a factor at a (r factors left, r >= 2) can be followed by one at b
        if b >= L:
            return None
        h = _admissible(word, lcp, a, b)
        if h is None or reach[r - 1][b] < b + h + 1:
            return None
        return h

    starts = []
    a = next((a for a in range(L) if reach[n][a] >= 0), None)
    if a is None:
        return None
    starts.append(a)
    lower = a + 1
    for r in range(n, 1, -1):
        for b in range(lower, L):
            h = step(r, a, b)
            if h is not None:
                break
        else:  # pragma: no cover - the reach table guarantees a continuation
            raise AssertionError("inconsistent reach table")
        starts.append(b)
        a, lower = b, b + h + 1
    div = Division(word, tuple(starts) + (L,))
    assert div.is_valid()
    return div


def max_divisibility(word: Sequence[int]) -> int:
    """Largest n for which the word is n-divisible (0 for the empty word)."""
    word = tuple(word)
    L = len(word)
    if L == 0:
        return 0
    lcp = lcp_table(word)
    reach = _reach_tables(word, L, lcp)
    best = 0
    for r in range(1, len(reach)):
        if max(reach[r], default=-1) >= 0:
            best = r
    return best


def is_strongly_n_divisible(
    word: Sequence[int],
    n: int,
    periods: Iterable[Sequence[int]],
    k: Optional[int] = None,
) -> Optional[StrongDivision]:
    """Decide strong n-divisibility with respect to a set of primitive periods.

    Each factor ``Wi`` must begin with ``zi ** k`` for pairwise distinct
    ``zi`` taken from ``periods``; ``k`` defaults to ``2n``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    word = tuple(word)
    Z = sorted({tuple(z) for z in periods})
    if not Z:
        raise ValueError("period set is empty")
    for z in Z:
        if not is_primitive(z):
            raise ValueError(f"period {z} is not primitive")
    k = 2 * n if k is None else k
    if k < 1:
        raise ValueError("k must be positive")
    L = len(word)
    if len(Z) < n or L < n * k * min(len(z) for z in Z):
        return None

    cands: List[Tuple[int, Word]] = []
    for a in range(L):
        for z in Z:
            span = k * len(z)
            if a + span <= L and word[a: a + span] == z * k:
                cands.append((a, z))
    if len(cands) < n:
        return None
    positions = [a for a, _ in cands]
    lcp = lcp_table(word)

    @lru_cache(maxsize=None)
    def search(c: int, a: int, z: Word, lower: int, used: frozenset):
        lower = max(lower, a + k * len(z))
        if lower > L:
            return None
        if c == n:
            return ()
        used = used | {z}
        for idx in range(bisect_left(positions, lower), len(cands)):
            b, zb = cands[idx]
            if zb in used:
                continue
            h = _admissible(word, lcp, a, b)
            if h is None:
                continue
            rest = search(c + 1, b, zb, b + h + 1, used)
            if rest is not None:
                return ((b, zb),) + rest
        return None

    for a, z in cands:
        rest = search(1, a, z, a + 1, frozenset())
        if rest is not None:
            chosen = ((a, z),) + rest
            starts = tuple(p for p, _ in chosen)
            div = StrongDivision(word, starts + (L,), tuple(zz for _, zz in chosen), k)
            assert div.is_valid()
            return div
    return None
