"""The lower-bound construction: many distinct 2-letter periods, no long decreasing run.

Big step ``i`` joins the ``n`` letters ``i + s`` for the offsets
``s = 0, 2^(n-2), 2^(n-2) + 2^(n-3), ..., 2^(n-1) - 1`` pairwise, group by
group in the listed order; every joined pair ``(u, v)`` becomes a block
``(a_u a_v)^m``.  Offsets form a ruler with distinct differences, so no pair
repeats across big steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .bounds import beth2, psi_lower
from .dilworth import ChainColoring, max_antichain, representative_poset
from .divisibility import is_strongly_n_divisible
from .powers import PowerOccurrence, RepresentativeSet, small_selective_height
from .words import Word, cycle_key, primitive_words


@dataclass(frozen=True)
class PlanEdge:
    step: int
    group: int
    u: int
    v: int


@dataclass
class BigStepPlan:
    n: int
    l: int
    exponent: int
    edges: List[PlanEdge]

    @property
    def steps(self) -> List[int]:
        return sorted({e.step for e in self.edges})

    def blocks(self) -> List[Word]:
        return [(e.u, e.v) for e in self.edges]

    def word(self) -> Word:
        out: Tuple[int, ...] = ()
        for z in self.blocks():
            out += z * self.exponent
        return out

    def edges_unique(self) -> bool:
        pairs = [frozenset((e.u, e.v)) for e in self.edges]
        return len(set(pairs)) == len(pairs)

    def to_record(self) -> dict:
        return {"n": self.n, "l": self.l, "exponent": self.exponent,
                "edges": [{"step": e.step, "group": e.group, "u": e.u, "v": e.v} for e in self.edges]}


def step_offsets(n: int) -> List[int]:
    """0, 2^(n-2), 2^(n-2) + 2^(n-3), ..., 2^(n-1) - 1."""
    offs = [0]
    for e in range(n - 2, -1, -1):
        offs.append(offs[-1] + 2 ** e)
    return offs


def generate_extremal(n: int, l: int, exponent: Optional[int] = None) -> Tuple[Word, BigStepPlan]:
    if n < 4:
        raise ValueError("the construction needs n >= 4")
    if l <= 2 ** (n - 1):
        raise ValueError(f"needs l > 2^(n-1) = {2 ** (n - 1)}, got l = {l}")
    m = 2 * n + 1 if exponent is None else exponent
    if m <= 2 * n:
        raise ValueError("block exponent must exceed 2n")
    offs = step_offsets(n)
    edges = []
    for i in range(2, l - 2 ** (n - 1) + 2):
        for g in range(1, n):
            for a in range(g):
                edges.append(PlanEdge(i, g, offs[a] + i, offs[g] + i))
    plan = BigStepPlan(n, l, m, edges)
    return plan.word(), plan


def vertex_types(plan: BigStepPlan) -> Dict[Tuple[int, int], int]:
    """``(step, letter) -> number of smaller letters joined to it on that step``."""
    types: Dict[Tuple[int, int], int] = {}
    for e in plan.edges:
        types.setdefault((e.step, e.u), 0)
        types[(e.step, e.v)] = types.get((e.step, e.v), 0) + 1
    return types


def type_coloring(plan: BigStepPlan) -> Tuple[RepresentativeSet, ChainColoring]:
    """Color each block rotation by the type of its first letter on the block's step."""
    types = vertex_types(plan)
    L = 2 * plan.exponent
    omega = RepresentativeSet(
        [PowerOccurrence(idx * L, (e.u, e.v), plan.exponent) for idx, e in enumerate(plan.edges)],
        threshold=2 * plan.n,
    )
    poset = representative_poset(omega)
    step_of = {j: e.step for j, e in enumerate(plan.edges, start=1)}
    colors = tuple(types[(step_of[slot], payload[0])] + 1 for slot, payload in poset.elements)
    return omega, ChainColoring(poset, colors)


@dataclass
class ExtremalCertificate:
    n: int
    l: int
    measured_height: int
    witness: RepresentativeSet
    edge_count: int
    distinct_classes: int
    psi_lower: int
    edges_formula_listed: int  # n(n-1)/2 per big step: the listed pairs
    edges_formula_stated: int  # (n-2)(n-3)/2 per big step: the stated count
    beth2: int
    type_colors: int
    type_coloring_valid: bool
    max_antichain: int
    strong: Optional[dict]  # None when not checked
    strongly_divisible: Optional[bool]

    @property
    def height_at_least_psi(self) -> bool:
        return self.measured_height >= self.psi_lower

    def to_record(self) -> dict:
        return {
            "n": self.n, "l": self.l,
            "measured_height": self.measured_height,
            "edge_count": self.edge_count,
            "distinct_classes": self.distinct_classes,
            "psi_lower": self.psi_lower,
            "height_at_least_psi": self.height_at_least_psi,
            "edges_formula_listed": self.edges_formula_listed,
            "edges_formula_stated": self.edges_formula_stated,
            "beth2": self.beth2,
            "type_colors": self.type_colors,
            "type_coloring_valid": self.type_coloring_valid,
            "max_antichain": self.max_antichain,
            "strongly_divisible": self.strongly_divisible,
            "strong_witness": self.strong,
            "witness": self.witness.to_record(),
        }


def certify_extremal(word: Sequence[int], plan: BigStepPlan, n: int,
                     check_strong: bool = True) -> ExtremalCertificate:
    word = tuple(word)
    k = 2 * n
    h, omega = small_selective_height(word, 2, k)
    classes = {cycle_key(z) for z in plan.blocks()}
    steps = len(plan.steps)
    rep_set, coloring = type_coloring(plan)
    anti = max_antichain(representative_poset(omega)) if len(omega) else []
    strong = None
    flag = None
    if check_strong:
        periods = list(primitive_words(2, plan.l))
        div = is_strongly_n_divisible(word, n, periods, k)
        flag = div is not None
        strong = div.to_record() if div is not None else None
    return ExtremalCertificate(
        n=n, l=plan.l,
        measured_height=h, witness=omega,
        edge_count=len(plan.edges), distinct_classes=len(classes),
        psi_lower=psi_lower(n, plan.l),
        edges_formula_listed=steps * n * (n - 1) // 2,
        edges_formula_stated=steps * (n - 2) * (n - 3) // 2,
        beth2=beth2(plan.l, n),
        type_colors=coloring.count,
        type_coloring_valid=coloring.is_valid(),
        max_antichain=len(anti),
        strong=strong,
        strongly_divisible=flag,
    )
