"""Periodic factors of a word: power scans, selective heights, the forcing lemma.

A *run* of period ``t`` is a maximal interval on which ``W[p] == W[p + t]``.
Each run whose leading period is primitive yields one :class:`PowerOccurrence`
(its leftmost start, its period, and the number of whole periods it holds).
Any window of ``k + 1`` whole periods inside a run is itself a power ``z^m``
with ``m > k`` of a rotation of the period, which is what the selection
searches place.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .divisibility import Division, division_from_factors, is_n_divisible
from .words import Order, Word, cycle_key, format_word, is_primitive, lex_compare, rotate


@dataclass(frozen=True)
class PowerOccurrence:
    position: int
    period: Word
    exponent: int
    run_end: Optional[int] = None  # end of the enclosing periodic run, when known

    @property
    def length(self) -> int:
        return self.exponent * len(self.period)

    @property
    def end(self) -> int:
        return self.position + self.length

    @property
    def cycle(self) -> Word:
        return cycle_key(self.period)

    def factor(self) -> Word:
        return self.period * self.exponent

    def to_record(self, alphabet=None) -> dict:
        return {
            "position": self.position,
            "period": format_word(self.period, alphabet),
            "exponent": self.exponent,
            "length": self.length,
        }


@dataclass
class RepresentativeSet:
    """Disjoint power factors, one per word-cycle, numbered 1..t from the left."""

    occurrences: List[PowerOccurrence]
    threshold: int
    exhaustive: bool = True

    def __len__(self):
        return len(self.occurrences)

    def __iter__(self):
        return iter(self.occurrences)

    def __getitem__(self, i):
        return self.occurrences[i]

    @property
    def periods(self) -> List[Word]:
        return [o.period for o in self.occurrences]

    def is_valid(self, word: Sequence[int]) -> bool:
        word = tuple(word)
        occ = self.occurrences
        if any(word[o.position: o.end] != o.factor() for o in occ):
            return False
        if any(o.exponent <= self.threshold or not is_primitive(o.period) for o in occ):
            return False
        if any(x.end > y.position for x, y in zip(occ, occ[1:])):
            return False
        return len({o.cycle for o in occ}) == len(occ)

    def to_record(self, alphabet=None) -> dict:
        return {
            "threshold": self.threshold,
            "exhaustive": self.exhaustive,
            "representatives": [dict(index=i, **o.to_record(alphabet))
                                for i, o in enumerate(self.occurrences, start=1)],
        }


@dataclass
class ShirshovDecomposition:
    pieces: List[Tuple[str, object]] = field(default_factory=list)  # ("block", occ) | ("gap", word)

    @property
    def blocks(self) -> List[PowerOccurrence]:
        return [p for kind, p in self.pieces if kind == "block"]

    @property
    def gaps(self) -> List[Word]:
        return [p for kind, p in self.pieces if kind == "gap"]

    def concat(self) -> Word:
        out: Tuple[int, ...] = ()
        for kind, p in self.pieces:
            out += p.factor() if kind == "block" else p
        return out

    def to_record(self, alphabet=None) -> dict:
        return {
            "blocks": len(self.blocks),
            "gaps": len(self.gaps),
            "pieces": [
                {"block": p.to_record(alphabet)} if kind == "block" else {"gap": format_word(p, alphabet)}
                for kind, p in self.pieces
            ],
        }


def periodic_runs(word: Sequence[int], t: int) -> List[Tuple[int, int]]:
    """Maximal intervals ``[i, j)`` of length >= 2t on which the word has period t."""
    word = tuple(word)
    L = len(word)
    runs = []
    p = 0
    while p + t < L:
        if word[p] != word[p + t]:
            p += 1
            continue
        q = p
        while q + t < L and word[q] == word[q + t]:
            q += 1
        if q - p >= t:
            runs.append((p, q + t))
        p = q + 1
    return runs


def scan_powers(word: Sequence[int], t: int, k: int) -> List[PowerOccurrence]:
    """Maximal powers ``z^m`` with ``|z| = t``, z primitive and ``m > k``, left to right."""
    if t < 1 or k < 1:
        raise ValueError("t and k must be positive")
    word = tuple(word)
    out = []
    for i, j in periodic_runs(word, t):
        z = word[i: i + t]
        m = (j - i) // t
        if m > k and is_primitive(z):
            out.append(PowerOccurrence(i, z, m, run_end=j))
    return out


# -- selective heights -------------------------------------------------------

def _window_options(occurrences, k):
    """Per run: (earliest start, latest start, class) for a window of k+1 periods."""
    opts = []
    for o in occurrences:
        t = len(o.period)
        span = (k + 1) * t
        end = o.run_end if o.run_end is not None else o.end
        opts.append((o.position, end - span, o.cycle, span, o))
    return opts


def _select_windows(word, occurrences, k, node_budget=200_000):
    """Maximum set of disjoint windows with pairwise distinct classes.

    Branch and bound over the left-to-right order of the chosen windows: each
    chosen window is placed as early as the frontier allows, which never hurts
    later choices.  Returns (windows, exhaustive).
    """
    opts = sorted(_window_options(occurrences, k), key=lambda x: (x[0], x[1]))
    best: List = []
    nodes = 0
    exhausted = False

    def bound(frontier, used):
        return len({c for lo, hi, c, span, _ in opts if c not in used and hi >= max(frontier, lo)})

    def dfs(frontier, used, chosen):
        nonlocal best, nodes, exhausted
        nodes += 1
        if len(chosen) > len(best):
            best = list(chosen)
        if nodes > node_budget:
            exhausted = True
            return
        if len(chosen) + bound(frontier, used) <= len(best):
            return
        for lo, hi, c, span, o in opts:
            if c in used:
                continue
            s = max(frontier, lo)
            if s > hi:
                continue
            chosen.append((s, span, o))
            dfs(s + span, used | {c}, chosen)
            chosen.pop()
            if exhausted:
                return

    # greedy by earliest finishing window seeds the bound
    frontier, used = 0, set()
    while True:
        cand = [(max(frontier, lo) + span, max(frontier, lo), span, c, o)
                for lo, hi, c, span, o in opts if c not in used and max(frontier, lo) <= hi]
        if not cand:
            break
        fin, s, span, c, o = min(cand, key=lambda x: (x[0], x[1]))
        best.append((s, span, o))
        used.add(c)
        frontier = fin
    dfs(0, frozenset(), [])
    return best, not exhausted


def small_selective_height(word: Sequence[int], t: int, k: int,
                           node_budget: int = 200_000) -> Tuple[int, RepresentativeSet]:
    """Most disjoint powers ``z^m`` (``|z| = t``, ``m > k``) from pairwise distinct word-cycles."""
    word = tuple(word)
    occ = scan_powers(word, t, k)
    windows, exhaustive = _select_windows(word, occ, k, node_budget)
    windows = sorted(windows, key=lambda x: x[0])
    reps = []
    for i, (s, span, o) in enumerate(windows):
        # grow each window by whole periods while it stays in its run and clear of the next
        limit = windows[i + 1][0] if i + 1 < len(windows) else len(word)
        limit = min(limit, o.run_end if o.run_end is not None else o.end)
        reps.append(PowerOccurrence(s, word[s: s + t], (limit - s) // t))
    rs = RepresentativeSet(reps, threshold=k, exhaustive=exhaustive)
    assert rs.is_valid(word)
    return len(reps), rs


def extract_omega(word: Sequence[int], t: int, k: int, node_budget: int = 200_000) -> RepresentativeSet:
    """Representative set realising the small selective height."""
    return small_selective_height(word, t, k, node_budget)[1]


def large_selective_height(word: Sequence[int], t: int, k: int) -> int:
    """Longest left-to-right chain of disjoint powers whose neighbours are prefix-related.

    Two powers of length at least ``2t`` are prefix-related only when their
    periods are the *same word*, so a chain uses one period ``z`` throughout and
    the best chain packs as many disjoint ``z^(k+1)`` windows as possible.
    """
    word = tuple(word)
    L = len(word)
    span = (k + 1) * t
    best = 0
    for z in {word[p: p + t] for p in range(L - t + 1)}:
        if not is_primitive(z):
            continue
        target = z * (k + 1)
        count, p = 0, 0
        while p + span <= L:
            if word[p: p + span] == target:
                count += 1
                p += span
            else:
                p += 1
        best = max(best, count)
    return best


def brute_small_selective_height(word: Sequence[int], t: int, k: int) -> int:
    """Exhaustive reference: try every set of disjoint power windows directly."""
    word = tuple(word)
    L = len(word)
    windows = []
    for m in range(k + 1, L // t + 1):
        for p in range(L - m * t + 1):
            z = word[p: p + t]
            if is_primitive(z) and word[p: p + m * t] == z * m:
                windows.append((p, p + m * t, cycle_key(z)))
    best = 0

    def dfs(i, frontier, used, count):
        nonlocal best
        best = max(best, count)
        for j in range(i, len(windows)):
            a, e, c = windows[j]
            if a >= frontier and c not in used:
                dfs(j + 1, e, used | {c}, count + 1)

    windows.sort()
    dfs(0, 0, frozenset(), 0)
    return best


# -- forcing lemma -----------------------------------------------------------

def _aligned_runs(word, x, min_copies):
    """Maximal runs of whole copies of x: (start, copies, tail) with tail the next |x| letters."""
    word = tuple(word)
    t = len(x)
    out = []
    for i, j in periodic_runs(word, t):
        for s in range(i, min(i + t, j - t + 1)):
            if word[s: s + t] == x:
                p = (j - s) // t
                if p >= min_copies:
                    e = s + p * t
                    tail = word[e: e + t] if e + t <= len(word) else None
                    out.append((s, p, tail))
                break
    return out


def _lemma_pieces(word, x, n):
    """Pieces ``x^(j-1) v_j`` (or ``x^(n-j) v_j``) per the pigeonhole on tails."""
    t = len(x)
    runs = [(s, p, v) for s, p, v in _aligned_runs(word, x, n - 1) if v is not None]
    for bigger in (True, False):
        chosen = []
        frontier = 0
        for s, p, v in runs:
            if (lex_compare(v, x).order is Order.GREATER) != bigger:
                continue
            j = len(chosen) + 1
            copies = j - 1 if bigger else n - j
            if copies > p:
                continue
            end = s + p * t + t
            start = end - (copies + 1) * t
            if start < frontier:
                continue
            chosen.append((start, end))
            frontier = end
            if len(chosen) == n:
                return chosen
    return None


def _square_pieces(word, x, n):
    """Pieces from ``x^(2n)`` with ``|x| >= n``: a different rotation out of each ``x^2``."""
    t = len(x)
    if t < n:
        return None
    for s, p, _ in _aligned_runs(word, x, 2 * n):
        rots = sorted(range(t), key=lambda o: rotate(x, o), reverse=True)[:n]
        return [(s + 2 * i * t + o, s + 2 * i * t + o + t) for i, o in enumerate(rots)]
    return None


def forcing_check(word: Sequence[int], n: int) -> Optional[Division]:
    """n-division forced by repeated powers of one word-cycle, if detected.

    Two arguments are tried for every primitive period class: (a) ``2n - 1``
    disjoint powers with exponent above ``n``, each followed by a block ``v`` of
    the period's length, give ``n`` tails all above or all below the period
    and hence the decreasing pieces ``v1, x v2, ..., x^(n-1) vn`` (or the mirror
    image); (b) a power ``x^(2n)`` with ``|x| >= n`` contains ``n`` distinct
    rotations of ``x``, one per ``x^2``, in decreasing order.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    word = tuple(word)
    L = len(word)
    for t in range(1, L // (n + 1) + 1):
        occ = scan_powers(word, t, n)
        by_class: Dict[Word, List[PowerOccurrence]] = {}
        for o in occ:
            by_class.setdefault(o.cycle, []).append(o)
        for cls, group in sorted(by_class.items()):
            candidates = []
            if len(group) >= 2 * n - 1:
                for r in range(t):
                    candidates.append(_lemma_pieces(word, rotate(cls, r), n))
            for r in range(t):
                candidates.append(_square_pieces(word, rotate(cls, r), n))
            for spans in candidates:
                if spans is None:
                    continue
                div = division_from_factors(word, spans)
                if div.is_valid():
                    return div
    return None


def forcing_hypothesis(word: Sequence[int], n: int) -> bool:
    """True when some word-cycle has 2n-1 disjoint powers of exponent above n."""
    word = tuple(word)
    for t in range(1, len(word) // (n + 1) + 1):
        counts: Dict[Word, int] = {}
        for o in scan_powers(word, t, n):
            counts[o.cycle] = counts.get(o.cycle, 0) + 1
        if any(c >= 2 * n - 1 for c in counts.values()):
            return True
    return False


# -- decomposition -----------------------------------------------------------

def _power_at(word, pos, max_period, k):
    best = None
    L = len(word)
    for t in range(1, max_period + 1):
        z = word[pos: pos + t]
        if len(z) < t or not is_primitive(z):
            continue
        m = 0
        while word[pos + m * t: pos + (m + 1) * t] == z:
            m += 1
        if m > k and (best is None or m * t > best.length):
            best = PowerOccurrence(pos, z, m)
    return best


def shirshov_decompose(word: Sequence[int], n: int, k: int) -> ShirshovDecomposition:
    """Greedy split into periodic blocks (period shorter than n, exponent above k) and gaps."""
    if n < 2:
        raise ValueError("n must be at least 2")
    word = tuple(word)
    dec = ShirshovDecomposition()
    gap: List[int] = []
    pos = 0
    while pos < len(word):
        block = _power_at(word, pos, n - 1, k)
        if block is None:
            gap.append(word[pos])
            pos += 1
            continue
        if gap:
            dec.pieces.append(("gap", tuple(gap)))
            gap = []
        dec.pieces.append(("block", block))
        pos = block.end
    if gap:
        dec.pieces.append(("gap", tuple(gap)))
    return dec
