"""Rauzy graphs of a single word and cycle counts along its trajectory."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .words import Word, format_word


class CycleCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class RauzyGraph:
    order: int
    vertices: Tuple[Word, ...]  # by first occurrence
    edges: Tuple[Tuple[Word, Word], ...]  # distinct, by first occurrence
    trajectory: Tuple[Tuple[Word, Word], ...]  # one edge per window step, |W| - r of them

    def successors(self) -> Dict[Word, List[Word]]:
        out: Dict[Word, List[Word]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            out[u].append(v)
        return out

    def walk(self) -> List[Word]:
        """Vertex sequence visited by the sliding window."""
        if not self.trajectory:
            return list(self.vertices[:1])
        return [self.trajectory[0][0]] + [v for _, v in self.trajectory]


def build_rauzy(word: Sequence[int], r: int) -> RauzyGraph:
    word = tuple(word)
    if r < 1:
        raise ValueError("order must be positive")
    if len(word) < r:
        raise ValueError(f"word of length {len(word)} is shorter than the order {r}")
    windows = [word[p: p + r] for p in range(len(word) - r + 1)]
    vertices = tuple(dict.fromkeys(windows))
    trajectory = tuple(zip(windows, windows[1:]))
    edges = tuple(dict.fromkeys(trajectory))
    return RauzyGraph(r, vertices, edges, trajectory)


def simple_cycles(g: RauzyGraph, max_len: int, cap: int = 100_000) -> List[Tuple[Word, ...]]:
    """Simple cycles with fewer than ``max_len`` edges, each listed once from its anchor.

    The anchor is the cycle's vertex that occurs first in the word.
    """
    rank = {v: i for i, v in enumerate(g.vertices)}
    succ = g.successors()
    cycles: List[Tuple[Word, ...]] = []

    def dfs(anchor, path, on_path):
        for v in succ[path[-1]]:
            if v == anchor:
                cycles.append(tuple(path))
                if len(cycles) > cap:
                    raise CycleCapExceeded(f"more than {cap} cycles of length < {max_len}")
            elif rank[v] > rank[anchor] and v not in on_path and len(path) + 1 < max_len:
                path.append(v)
                on_path.add(v)
                dfs(anchor, path, on_path)
                on_path.discard(v)
                path.pop()

    for anchor in g.vertices:
        if max_len > 1:
            dfs(anchor, [anchor], {anchor})
    return cycles


def cycle_traversals(g: RauzyGraph, cycle: Sequence[Word]) -> int:
    """Times the walk leaves the anchor and follows the whole cycle back to it."""
    walk = g.walk()
    L = len(cycle)
    target = list(cycle) + [cycle[0]]
    return sum(1 for p in range(len(walk) - L) if walk[p: p + L + 1] == target)


@dataclass
class CycleStats:
    order: int
    max_cycle_len: int
    threshold: int
    counts: List[Tuple[Tuple[Word, ...], int]]

    @property
    def over_threshold(self) -> List[Tuple[Tuple[Word, ...], int]]:
        return [(c, k) for c, k in self.counts if k > self.threshold]

    def to_record(self, alphabet=None) -> dict:
        return {
            "order": self.order,
            "max_cycle_len": self.max_cycle_len,
            "threshold": self.threshold,
            "cycles": [{"cycle": [format_word(v, alphabet) for v in c], "length": len(c), "traversals": k}
                       for c, k in self.counts],
            "over_threshold": len(self.over_threshold),
        }


def trajectory_cycle_stats(word: Sequence[int], r: int, max_cycle_len: int, threshold: int,
                           cap: int = 100_000) -> CycleStats:
    g = build_rauzy(word, r)
    cycles = simple_cycles(g, max_cycle_len, cap)
    counts = [(c, cycle_traversals(g, c)) for c in cycles]
    return CycleStats(r, max_cycle_len, threshold, counts)


def edge_multiplicities(g: RauzyGraph) -> Counter:
    return Counter(g.trajectory)


def to_dot(g: RauzyGraph, alphabet=None, name: str = "rauzy") -> str:
    mult = edge_multiplicities(g)
    lines = [f"digraph {name} {{"]
    for v in g.vertices:
        lines.append(f'  "{format_word(v, alphabet)}";')
    for u, v in g.edges:
        k = mult[(u, v)]
        lines.append(f'  "{format_word(u, alphabet)}" -> "{format_word(v, alphabet)}" '
                     f'[label="{k}", penwidth={1 + min(k, 10) / 2:.1f}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
