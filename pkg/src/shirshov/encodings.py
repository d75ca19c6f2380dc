"""Families of cycle classes, n-goodness, and the pair / pad encodings.

A family fixes an ordered list of primitive, pairwise non-conjugate words of
one length ``t``.  ``w(i, j)`` is the rotation of cycle ``i`` that starts at
its position ``j`` (both 1-based).  Words from different cycles are ordered by
``u < v`` iff ``u`` comes from an earlier cycle and is lexicographically
smaller.

Two antichain readings are offered:

* ``distinct_cycles=True``: members come from pairwise distinct cycles.  Such
  an antichain is a strictly decreasing run ``w(i1, .) > w(i2, .) > ...`` with
  ``i1 < i2 < ...``.
* ``distinct_cycles=False``: any set of pairwise unrelated words; several may
  share a cycle.

The family is n-good when its largest antichain has fewer than ``n`` members.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .dilworth import OccurrencePoset, min_chain_cover
from .words import (Order, Word, canonical_rotation, cycle_key, format_word, is_primitive,
                    lex_compare, lyndon_words, parse_word, rotate)

Member = Tuple[int, int]  # (cycle, position), both 1-based


@dataclass(frozen=True)
class CycleClassFamily:
    length: int
    alphabet: int
    cycles: Tuple[Word, ...]

    def __post_init__(self):
        keys = set()
        for c in self.cycles:
            if len(c) != self.length:
                raise ValueError(f"cycle {c} has length {len(c)}, expected {self.length}")
            if any(not 1 <= x <= self.alphabet for x in c):
                raise ValueError(f"cycle {c} leaves the alphabet 1..{self.alphabet}")
            if not is_primitive(c):
                raise ValueError(f"cycle {c} is not primitive")
            k = cycle_key(c)
            if k in keys:
                raise ValueError(f"cycle {c} repeats an earlier class")
            keys.add(k)

    @classmethod
    def of(cls, cycles: Sequence[Sequence[int]], alphabet: Optional[int] = None) -> "CycleClassFamily":
        cycles = tuple(tuple(c) for c in cycles)
        if not cycles:
            raise ValueError("a family needs at least one cycle")
        size = alphabet if alphabet is not None else max(max(c) for c in cycles)
        return cls(len(cycles[0]), size, cycles)

    def __len__(self):
        return len(self.cycles)

    def word(self, i: int, j: int) -> Word:
        return rotate(self.cycles[i - 1], j - 1)

    def members(self) -> List[Tuple[Member, Word]]:
        return [((i, j), self.word(i, j))
                for i in range(1, len(self.cycles) + 1) for j in range(1, self.length + 1)]

    def poset(self) -> Tuple[OccurrencePoset, List[Member]]:
        """Distinct rotations slotted by cycle; second item maps indices back to members."""
        pairs, index = [], []
        seen = set()
        for (i, j), u in self.members():
            if (i, u) not in seen:
                seen.add((i, u))
                pairs.append((i, u))
                index.append((i, j))
        return OccurrencePoset.from_pairs(pairs), index

    def to_record(self, chars: bool = False) -> dict:
        return {"length": self.length, "alphabet": self.alphabet,
                "cycles": [format_word(c) if chars and self.alphabet <= 26 else list(c) for c in self.cycles]}

    def to_json(self) -> str:
        return json.dumps(self.to_record())

    @classmethod
    def from_record(cls, rec: dict) -> "CycleClassFamily":
        cycles = [parse_word(c) if isinstance(c, str) else tuple(c) for c in rec["cycles"]]
        return cls(int(rec["length"]), int(rec["alphabet"]), tuple(tuple(c) for c in cycles))

    @classmethod
    def from_json(cls, text: str) -> "CycleClassFamily":
        return cls.from_record(json.loads(text))


def _less(u: Word, v: Word) -> bool:
    return lex_compare(u, v).order is Order.LESS


def _antichain_distinct(fam: CycleClassFamily) -> List[Member]:
    # longest run over increasing cycles of strictly decreasing words
    best: Dict[Member, Tuple[int, Optional[Member]]] = {}
    members = fam.members()
    for (i, j), u in members:
        top = (1, None)
        for (i2, j2), v in members:
            if i2 >= i:
                break
            if _less(u, v) and best[(i2, j2)][0] + 1 > top[0]:
                top = (best[(i2, j2)][0] + 1, (i2, j2))
        best[(i, j)] = top
    if not best:
        return []
    end = max(best, key=lambda m: (best[m][0], [-x for x in m]))
    out = []
    cur: Optional[Member] = end
    while cur is not None:
        out.append(cur)
        cur = best[cur][1]
    return out[::-1]


def _antichain_literal(fam: CycleClassFamily) -> List[Member]:
    """Per cycle take every distinct rotation in a window [low, bound); bounds only shrink."""
    rots = [sorted(set(rotate(c, s) for s in range(fam.length))) for c in fam.cycles]
    # state: upper bound (exclusive) on every later pick, None means unbounded
    states: Dict[Optional[Word], Tuple[int, list]] = {None: (0, [])}
    for i, words in enumerate(rots, start=1):
        nxt = dict(states)
        for bound, (size, picks) in states.items():
            allowed = [u for u in words if bound is None or _less(u, bound)]
            # choosing the lowest pick fixes the set: everything allowed at or above it
            for a, low in enumerate(allowed):
                chosen = allowed[a:]
                cand = (size + len(chosen), picks + [(i, u) for u in chosen])
                if low not in nxt or nxt[low][0] < cand[0]:
                    nxt[low] = cand
        states = nxt
    size, picks = max(states.values(), key=lambda s: s[0])
    pos = {}
    for i, u in picks:
        c = fam.cycles[i - 1]
        pos[(i, u)] = next(j for j in range(1, fam.length + 1) if rotate(c, j - 1) == u)
    return [(i, pos[(i, u)]) for i, u in picks]


def max_antichain(fam: CycleClassFamily, distinct_cycles: bool = True) -> List[Member]:
    """A largest antichain as (cycle, position) members."""
    return _antichain_distinct(fam) if distinct_cycles else _antichain_literal(fam)


def is_antichain(fam: CycleClassFamily, members: Sequence[Member], distinct_cycles: bool = True) -> bool:
    words = [(i, fam.word(i, j)) for i, j in members]
    if len(set(words)) != len(words):
        return False
    if distinct_cycles and len({i for i, _ in words}) != len(words):
        return False
    for a in range(len(words)):
        for b in range(len(words)):
            (ia, ua), (ib, ub) = words[a], words[b]
            if ia < ib and _less(ua, ub):
                return False
    return True


@dataclass
class Goodness:
    n: int
    good: bool
    antichain: List[Member]  # a largest one; a size >= n certificate when not good
    chains: Optional[List[List[Member]]] = None  # cover by fewer than n chains, literal reading only

    def to_record(self) -> dict:
        rec = {"n": self.n, "good": self.good, "max_antichain": len(self.antichain),
               "antichain": [list(m) for m in self.antichain]}
        if self.chains is not None:
            rec["chains"] = [[list(m) for m in ch] for ch in self.chains]
        return rec


def is_n_good(fam: CycleClassFamily, n: int, distinct_cycles: bool = True) -> Goodness:
    if n < 2:
        raise ValueError("n must be at least 2")
    anti = max_antichain(fam, distinct_cycles)
    good = len(anti) < n
    chains = None
    if good and not distinct_cycles:
        poset, index = fam.poset()
        cover = min_chain_cover(poset)
        chains = [[index[x] for x in ch] for ch in cover.chains()]
    return Goodness(n, good, anti, chains)


# encodings


def pair_encode(fam: CycleClassFamily, offset: int = 0) -> CycleClassFamily:
    """Fuse adjacent letter pairs (after rotating by ``offset``) into letters over l^2.

    The pair ``(a, b)`` becomes ``(a - 1) * l + b``, which keeps lexicographic order.
    """
    if fam.length % 2:
        raise ValueError("pair encoding needs an even length")
    if offset not in (0, 1):
        raise ValueError("pairs must be adjacent: offset is 0 or 1")
    l = fam.alphabet
    cycles = []
    for c in fam.cycles:
        r = rotate(c, offset)
        cycles.append(tuple((r[p] - 1) * l + r[p + 1] for p in range(0, len(r), 2)))
    return CycleClassFamily(fam.length // 2, l * l, tuple(cycles))


def pair_decode(fam: CycleClassFamily, l: int) -> CycleClassFamily:
    """Inverse of :func:`pair_encode` up to the rotation by ``offset``."""
    if fam.alphabet != l * l:
        raise ValueError(f"alphabet {fam.alphabet} is not {l}^2")
    cycles = []
    for c in fam.cycles:
        out: List[int] = []
        for x in c:
            out += [(x - 1) // l + 1, (x - 1) % l + 1]
        cycles.append(tuple(out))
    return CycleClassFamily(fam.length * 2, l, tuple(cycles))


def pair_encode_with_alignment(fam: CycleClassFamily, antichain: Sequence[Member]
                               ) -> Tuple[CycleClassFamily, int, List[Member]]:
    """Choose the pairing parity that keeps the most antichain members on pair starts.

    Returns the encoded family, the offset used and the members that map over.
    """
    odd = [m for m in antichain if m[1] % 2 == 1]
    even = [m for m in antichain if m[1] % 2 == 0]
    if len(odd) >= len(even):
        offset, kept = 0, [(i, (j + 1) // 2) for i, j in odd]
    else:
        offset, kept = 1, [(i, j // 2) for i, j in even]
    return pair_encode(fam, offset), offset, kept


def pad_encode(fam: CycleClassFamily, exponent: Optional[int] = None) -> CycleClassFamily:
    """Append copies of a fresh smallest letter up to length ``2^exponent``.

    The fresh letter is 1; every old letter moves up by one.
    """
    s = exponent if exponent is not None else max(0, (fam.length - 1).bit_length())
    target = 2 ** s
    if target < fam.length:
        raise ValueError(f"2^{s} = {target} is shorter than the cycle length {fam.length}")
    cycles = tuple(tuple(x + 1 for x in c) + (1,) * (target - fam.length) for c in fam.cycles)
    return CycleClassFamily(target, fam.alphabet + 1, cycles)


# search


@dataclass
class BethEstimate:
    t: int
    l: int
    n: int
    value: int
    family: Optional[CycleClassFamily]
    exhaustive: bool
    nodes: int

    def to_record(self) -> dict:
        return {"t": self.t, "l": self.l, "n": self.n, "lower_bound": self.value,
                "exhaustive": self.exhaustive, "nodes": self.nodes,
                "family": self.family.to_record() if self.family else None}


def beth_empirical(t: int, l: int, n: int, cap: Optional[int] = None, budget: int = 100_000,
                   distinct_cycles: bool = True) -> BethEstimate:
    """Largest n-good ordered family of length-t classes found by depth-first search.

    Goodness survives dropping the last cycle, so the search grows prefixes and
    backtracks as soon as one fails.  ``exhaustive`` is False when the node
    budget ran out before the search finished.
    """
    classes = [canonical_rotation(c) for c in lyndon_words(t, l)]
    limit = len(classes) if cap is None else min(cap, len(classes))
    best: List[Word] = []
    nodes = 0
    exhausted = False

    def good(seq):
        return is_n_good(CycleClassFamily(t, l, tuple(seq)), n, distinct_cycles).good

    def dfs(seq, remaining):
        nonlocal best, nodes, exhausted
        if len(seq) > len(best):
            best = list(seq)
        if len(best) >= limit or len(seq) + len(remaining) <= len(best):
            return
        for idx, c in enumerate(remaining):
            nodes += 1
            if nodes > budget:
                exhausted = True
                return
            seq.append(c)
            if good(seq):
                dfs(seq, remaining[:idx] + remaining[idx + 1:])
            seq.pop()
            if exhausted or len(best) >= limit:
                return

    dfs([], classes)
    fam = CycleClassFamily(t, l, tuple(best)) if best else None
    return BethEstimate(t, l, n, len(best), fam, not exhausted, nodes)
