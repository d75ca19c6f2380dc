"""Color/letter graphs built from a colored representative set, and their audits.

Every vertex is a pair ``(color, letter)``.  Representative ``j`` contributes
edges of weight ``j`` joining its period letters, each letter colored by the
chain of the rotation that starts at it:

* period 2: one undirected edge (the ``gamma`` graph);
* period 3: a directed triangle, possibly parallel to earlier ones;
* period ``n - 1``: a directed cycle through one vertex of every color.

Audits return violations as data; a violation means the source set was not a
valid colored representative set, or that a counting step does not hold.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .bounds import beth2, beth3
from .dilworth import ChainColoring, letter_colors
from .powers import RepresentativeSet

Vertex = Tuple[int, int]  # (color, letter)
Edge = Tuple[Vertex, Vertex, int]  # (tail, head, weight)


@dataclass
class ProofGraph:
    kind: str  # "gamma" | "triangle" | "cycle"
    directed: bool
    edges: List[Edge]
    weights: int  # number of representatives t
    missing_weights: List[int] = field(default_factory=list)

    @property
    def vertices(self) -> List[Vertex]:
        seen = {}
        for u, v, _ in self.edges:
            seen.setdefault(u, None)
            seen.setdefault(v, None)
        return list(seen)

    def by_weight(self) -> Dict[int, List[Edge]]:
        out: Dict[int, List[Edge]] = defaultdict(list)
        for e in self.edges:
            out[e[2]].append(e)
        return dict(out)

    def to_record(self) -> dict:
        return {
            "kind": self.kind,
            "directed": self.directed,
            "weights": self.weights,
            "edges": [{"from": list(u), "to": list(v), "weight": j} for u, v, j in self.edges],
            "missing_weights": self.missing_weights,
        }


@dataclass
class Audit:
    ok: bool
    checks: Dict[str, object]
    violations: List[dict]

    def to_record(self) -> dict:
        return {"ok": self.ok, "checks": self.checks, "violations": self.violations}


def _colored_periods(omega: RepresentativeSet, coloring: ChainColoring, length: int):
    for occ in omega:
        if len(occ.period) != length:
            raise ValueError(f"expected periods of length {length}, got {occ.period}")
    colors = letter_colors(omega, coloring)
    return [list(zip(cs, occ.period)) for cs, occ in zip(colors, omega)]


def _cycle_edges(omega, coloring, length):
    edges = []
    for j, verts in enumerate(_colored_periods(omega, coloring, length), start=1):
        for p in range(length):
            edges.append((verts[p], verts[(p + 1) % length], j))
    return edges


def build_gamma(omega: RepresentativeSet, coloring: ChainColoring) -> ProofGraph:
    edges = []
    for j, (a, b) in enumerate(_colored_periods(omega, coloring, 2), start=1):
        edges.append((a, b) + (j,) if a <= b else (b, a, j))
    return ProofGraph("gamma", False, edges, len(omega))


def build_triangle_graph(omega: RepresentativeSet, coloring: ChainColoring) -> ProofGraph:
    return ProofGraph("triangle", True, _cycle_edges(omega, coloring, 3), len(omega))


def build_cycle_graph(omega: RepresentativeSet, coloring: ChainColoring) -> ProofGraph:
    if not len(omega):
        return ProofGraph("cycle", True, [], 0)
    t = len(omega[0].period)
    return ProofGraph("cycle", True, _cycle_edges(omega, coloring, t), len(omega))


def _pair_monotonicity(groups, key):
    """Consecutive edges of one color pair must grow coordinatewise, one coordinate strictly."""
    violations = []
    for pair, edges in sorted(groups.items()):
        edges = sorted(edges, key=lambda e: e[2])
        for e1, e2 in zip(edges, edges[1:]):
            (x1, y1), (x2, y2) = key(e1), key(e2)
            if not (x1 <= x2 and y1 <= y2 and (x1, y1) != (x2, y2)):
                violations.append({"check": "monotone letters", "color_pair": list(pair),
                                   "edges": [[list(e1[0]), list(e1[1]), e1[2]],
                                             [list(e2[0]), list(e2[1]), e2[2]]]})
    return violations


def _pair_audit(g: ProofGraph, l: int, n: int, total_bound: int) -> Audit:
    groups: Dict[Tuple[int, int], List[Edge]] = defaultdict(list)
    violations = []
    for u, v, j in g.edges:
        if u[0] == v[0]:
            violations.append({"check": "distinct colors", "edge": [list(u), list(v), j]})
        pair = (u[0], v[0]) if g.directed else tuple(sorted((u[0], v[0])))
        groups[pair].append((u, v, j) if g.directed or u[0] <= v[0] else (v, u, j))
    counts = {f"{a}-{b}": len(es) for (a, b), es in sorted(groups.items())}
    for pair, es in sorted(groups.items()):
        if len(es) > 2 * l - 1:
            violations.append({"check": "edges per color pair", "color_pair": list(pair),
                               "count": len(es), "bound": 2 * l - 1})
    violations += _pair_monotonicity(groups, key=lambda e: (e[0][1], e[1][1]))
    colors = {c for u, v, _ in g.edges for c in (u[0], v[0])}
    if len(g.edges) > total_bound:
        violations.append({"check": "total edges", "count": len(g.edges), "bound": total_bound})
    checks = {
        "edges": len(g.edges),
        "colors": len(colors),
        "colors_within_n_minus_1": len(colors) <= n - 1,
        "per_pair_counts": counts,
        "per_pair_bound": 2 * l - 1,
        "total_bound": total_bound,
    }
    return Audit(not violations, checks, violations)


def audit_gamma(g: ProofGraph, l: int, n: int) -> Audit:
    """Counting audit: at most 2l-1 edges per color pair and beth2(l, n) overall."""
    return _pair_audit(g, l, n, beth2(l, n) if n >= 3 else 0)


def check_triangle_lemma(g: ProofGraph) -> Optional[dict]:
    """First triangle of weight j whose three sides all carry other edges of smaller weight."""
    side_weights: Dict[Tuple[Vertex, Vertex], List[int]] = defaultdict(list)
    for u, v, j in g.edges:
        side_weights[(u, v)].append(j)
    for j, edges in sorted(g.by_weight().items()):
        others = []
        for u, v, _ in edges:
            smaller = sorted(w for w in side_weights[(u, v)] if w < j)
            if not smaller:
                break
            others.append(smaller[0])
        else:
            if all(w != j for w in others):
                return {"weight": j, "sides": [[list(u), list(v)] for u, v, _ in edges],
                        "other_weights": others}
    return None


def reduce_multiedges(g: ProofGraph) -> ProofGraph:
    """Keep only the smallest weight on each ordered vertex pair."""
    best: Dict[Tuple[Vertex, Vertex], int] = {}
    for u, v, j in g.edges:
        key = (u, v) if g.directed else tuple(sorted((u, v)))
        best[key] = min(j, best.get(key, j))
    edges = sorted(((u, v, j) for (u, v), j in best.items()), key=lambda e: (e[2], e[0], e[1]))
    present = {j for _, _, j in edges}
    missing = [j for j in range(1, g.weights + 1) if j not in present]
    return ProofGraph(g.kind, g.directed, edges, g.weights, missing)


def audit_triangle(g: ProofGraph, l: int, n: int) -> Audit:
    """Lemma check on ``g`` plus the counting audit on its reduction."""
    lemma = check_triangle_lemma(g)
    reduced = reduce_multiedges(g)
    audit = _pair_audit(reduced, l, n, beth3(l, n) if n >= 3 else 0)
    if lemma is not None:
        audit.violations.append({"check": "triangle lemma", **lemma})
    if reduced.missing_weights:
        audit.violations.append({"check": "weights survive reduction", "missing": reduced.missing_weights})
    audit.checks["reduced_edges"] = len(reduced.edges)
    audit.ok = not audit.violations
    return audit


def pi_potential(g: ProofGraph) -> Dict[int, int]:
    """Letter sum of each weight's cycle."""
    return {j: sum(u[1] for u, _, _ in edges) for j, edges in sorted(g.by_weight().items())}


def audit_cycle_graph(g: ProofGraph, l: int, n: int) -> Audit:
    """Potential audit for period-(n-1) cycles.

    Checks that every cycle meets each of the ``n - 1`` colors once, that no two
    weights share a vertex set, and the potential inequalities
    ``pi(1) > n-1``, ``pi(j+1) >= pi(j) + 1``, ``pi(j) <= (l-1)(n-1)`` and
    ``t <= (l-2)(n-1)``.
    """
    pi = pi_potential(g)
    groups = g.by_weight()
    violations = []
    vertex_sets = {}
    for j, edges in sorted(groups.items()):
        verts = frozenset(u for u, _, _ in edges)
        cols = sorted(u[0] for u, _, _ in edges)
        if cols != list(range(1, n)):
            violations.append({"check": "one vertex per color", "weight": j, "colors": cols})
        if verts in vertex_sets:
            violations.append({"check": "cycle lemma", "weights": [vertex_sets[verts], j]})
        vertex_sets.setdefault(verts, j)
    ws = sorted(pi)
    if ws and pi[ws[0]] <= n - 1:
        violations.append({"check": "pi(1) > n-1", "pi": pi[ws[0]]})
    for a, b in zip(ws, ws[1:]):
        if pi[b] < pi[a] + 1:
            violations.append({"check": "pi strictly increasing", "weights": [a, b], "pi": [pi[a], pi[b]]})
    cap = (l - 1) * (n - 1)
    for j in ws:
        if pi[j] > cap:
            violations.append({"check": "pi(j) <= (l-1)(n-1)", "weight": j, "pi": pi[j], "bound": cap})
    tbound = (l - 2) * (n - 1)
    if len(ws) > tbound:
        violations.append({"check": "t <= (l-2)(n-1)", "t": len(ws), "bound": tbound})
    checks = {"t": len(ws), "pi": {str(j): v for j, v in pi.items()}, "t_bound": tbound, "pi_cap": cap}
    return Audit(not violations, checks, violations)


def to_dot(g: ProofGraph, name: str = "G") -> str:
    arrow = "->" if g.directed else "--"
    lines = [f"{'digraph' if g.directed else 'graph'} {name} {{"]
    for k, i in sorted(g.vertices):
        lines.append(f'  "{k}:{i}" [label="{k}:{i}"];')
    for (k1, i1), (k2, i2), j in g.edges:
        lines.append(f'  "{k1}:{i1}" {arrow} "{k2}:{i2}" [label="{j}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
