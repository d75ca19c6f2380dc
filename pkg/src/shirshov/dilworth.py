"""Occurrence posets and Dilworth chain covers.

Elements are ``(slot, payload)`` pairs: ``u < v`` iff ``u`` sits in a strictly
earlier slot and its payload is lexicographically Less (at a differing
position) than ``v``'s.  Prefix-related payloads are never related.

The minimum chain cover comes from a maximum matching in the split bipartite
graph (left copy of ``u`` joined to right copy of ``v`` when ``u < v``); the
maximum antichain is read off the Konig vertex cover of the same matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .powers import RepresentativeSet
from .words import Order, Word, cyclic_shifts, format_word, lex_compare


@dataclass(frozen=True)
class OccurrencePoset:
    elements: Tuple[Tuple[int, Word], ...]

    @classmethod
    def from_pairs(cls, pairs) -> "OccurrencePoset":
        return cls(tuple((int(s), tuple(p)) for s, p in pairs))

    def __len__(self):
        return len(self.elements)

    def less(self, i: int, j: int) -> bool:
        (si, pi), (sj, pj) = self.elements[i], self.elements[j]
        return si < sj and lex_compare(pi, pj).order is Order.LESS

    def related(self, i: int, j: int) -> bool:
        return self.less(i, j) or self.less(j, i)

    def successors(self) -> List[List[int]]:
        n = len(self.elements)
        return [[j for j in range(n) if self.less(i, j)] for i in range(n)]

    def to_record(self, alphabet=None) -> dict:
        return {"elements": [{"slot": s, "payload": format_word(p, alphabet)} for s, p in self.elements]}


@dataclass(frozen=True)
class ChainColoring:
    """``colors[i]`` is the 1-based chain number of element ``i``."""

    poset: OccurrencePoset
    colors: Tuple[int, ...]

    @property
    def count(self) -> int:
        return max(self.colors, default=0)

    def chains(self) -> List[List[int]]:
        out: List[List[int]] = [[] for _ in range(self.count)]
        for i, c in enumerate(self.colors):
            out[c - 1].append(i)
        # order each chain by slot
        return [sorted(ch, key=lambda i: self.poset.elements[i][0]) for ch in out]

    def is_valid(self) -> bool:
        for chain in self.chains():
            if any(not self.poset.less(a, b) for a, b in zip(chain, chain[1:])):
                return False
        return True

    def to_record(self, alphabet=None) -> dict:
        return {
            "colors": self.count,
            "assignment": [
                {"slot": s, "payload": format_word(p, alphabet), "color": c}
                for (s, p), c in zip(self.poset.elements, self.colors)
            ],
        }


def _max_matching(succ: List[List[int]]) -> Tuple[List[int], List[int]]:
    """Augmenting-path matching; returns (match_left, match_right) with -1 for free."""
    n = len(succ)
    match_l = [-1] * n
    match_r = [-1] * n

    def augment(u, seen):
        for v in succ[u]:
            if v in seen:
                continue
            seen.add(v)
            if match_r[v] == -1 or augment(match_r[v], seen):
                match_l[u], match_r[v] = v, u
                return True
        return False

    for u in range(n):
        augment(u, set())
    return match_l, match_r


def max_antichain(poset: OccurrencePoset) -> List[int]:
    """Indices of a maximum antichain."""
    succ = poset.successors()
    match_l, match_r = _max_matching(succ)
    n = len(poset)
    # alternating reachability from free left vertices
    reach_l = set(u for u in range(n) if match_l[u] == -1)
    reach_r = set()
    stack = list(reach_l)
    while stack:
        u = stack.pop()
        for v in succ[u]:
            if v not in reach_r:
                reach_r.add(v)
                w = match_r[v]
                if w != -1 and w not in reach_l:
                    reach_l.add(w)
                    stack.append(w)
    antichain = [x for x in range(n) if x in reach_l and x not in reach_r]
    assert len(antichain) == n - sum(1 for v in match_l if v != -1)
    return antichain


def min_chain_cover(poset: OccurrencePoset) -> ChainColoring:
    """Partition into the fewest chains; colors follow the slot of each chain's minimum."""
    succ = poset.successors()
    match_l, match_r = _max_matching(succ)
    n = len(poset)
    heads = [u for u in range(n) if match_r[u] == -1]
    chains = []
    for h in heads:
        chain = [h]
        while match_l[chain[-1]] != -1:
            chain.append(match_l[chain[-1]])
        chains.append(chain)
    chains.sort(key=lambda ch: (poset.elements[ch[0]][0], ch[0]))
    colors = [0] * n
    for c, chain in enumerate(chains, start=1):
        for x in chain:
            colors[x] = c
    return ChainColoring(poset, tuple(colors))


class AntichainTooLarge(Exception):
    """An antichain of size >= n among the representatives' rotations.

    ``strong_witness`` holds the decreasing rotations from distinct
    representatives when the antichain provides n of them, which is exactly a
    strong n-divisibility certificate; it is None when several antichain
    members share a representative.
    """

    def __init__(self, antichain, poset, n, strong_witness=None):
        self.antichain = antichain
        self.poset = poset
        self.n = n
        self.strong_witness = strong_witness
        super().__init__(f"antichain of size {len(antichain)} >= n = {n}")

    def to_record(self, alphabet=None) -> dict:
        return {
            "antichain": [
                {"slot": self.poset.elements[i][0], "payload": format_word(self.poset.elements[i][1], alphabet)}
                for i in self.antichain
            ],
            "n": self.n,
            "strong_witness": self.strong_witness,
        }


def representative_poset(omega: RepresentativeSet) -> OccurrencePoset:
    """The distinct period-length factors of each representative, slotted by its index."""
    pairs = []
    for j, occ in enumerate(omega, start=1):
        for rot in cyclic_shifts(occ.period):
            pairs.append((j, rot))
    return OccurrencePoset.from_pairs(pairs)


def decreasing_run(poset: OccurrencePoset) -> List[int]:
    """Longest run with strictly increasing slots and strictly decreasing payloads."""
    order = sorted(range(len(poset)), key=lambda i: poset.elements[i][0])
    best: Dict[int, Tuple[int, int]] = {}
    for i in order:
        si, pi = poset.elements[i]
        top = (1, -1)
        for j in best:
            sj, pj = poset.elements[j]
            if sj < si and lex_compare(pj, pi).order is Order.GREATER and best[j][0] + 1 > top[0]:
                top = (best[j][0] + 1, j)
        best[i] = top
    if not best:
        return []
    cur = max(order, key=lambda i: best[i][0])
    run = []
    while cur != -1:
        run.append(cur)
        cur = best[cur][1]
    return run[::-1]


def color_representatives(omega: RepresentativeSet, n: int) -> ChainColoring:
    """Chain coloring with at most ``n - 1`` colors, or :class:`AntichainTooLarge`."""
    poset = representative_poset(omega)
    if len(poset) == 0:
        return ChainColoring(poset, ())
    anti = max_antichain(poset)
    if len(anti) >= n:
        run = decreasing_run(poset)
        witness = None
        if len(run) >= n:
            witness = [{"representative": poset.elements[i][0], "word": list(poset.elements[i][1])}
                       for i in run[:n]]
        raise AntichainTooLarge(sorted(anti), poset, n, witness)
    coloring = min_chain_cover(poset)
    assert coloring.count == len(anti)
    return coloring


def letter_colors(omega: RepresentativeSet, coloring: ChainColoring) -> List[List[int]]:
    """Per representative, the color of each period letter (color of the rotation it starts)."""
    lookup = {}
    for (slot, payload), c in zip(coloring.poset.elements, coloring.colors):
        lookup[(slot, payload)] = c
    out = []
    for j, occ in enumerate(omega, start=1):
        z = occ.period
        out.append([lookup[(j, z[i:] + z[:i])] for i in range(len(z))])
    return out
