"""Seeded verification suites shared by ``shirshov verify`` and the test-suite.

Each suite returns a :class:`SuiteResult` whose ``passed`` flag is the verdict
and whose ``details`` carry counts and the first few violations as JSON-ready
data.  ``scale="small"`` runs the full sizes; ``"tiny"`` cuts them down for
quick smoke runs.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, List

from . import bounds
from .dilworth import (AntichainTooLarge, OccurrencePoset, color_representatives, max_antichain,
                       min_chain_cover, representative_poset)
from .divisibility import is_n_divisible, is_strongly_n_divisible
from .encodings import CycleClassFamily, is_n_good, pad_encode, pair_encode
from .extremal import certify_extremal, generate_extremal
from .oracles import brute_max_antichain_size, divisibility_profile
from .powers import (PowerOccurrence, RepresentativeSet, forcing_check, forcing_hypothesis,
                     small_selective_height)
from .proof_graphs import _pair_audit, audit_cycle_graph, build_cycle_graph, build_gamma
from .rauzy import build_rauzy, trajectory_cycle_stats
from .words import format_word, lyndon_words, primitive_words, rotate

MAX_REPORTED = 5


@dataclass
class SuiteResult:
    name: str
    passed: bool
    cases: int
    seed: int
    seconds: float = 0.0
    violations: List[dict] = field(default_factory=list)
    details: Dict[str, object] = field(default_factory=dict)

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        extra = ", ".join(f"{k}={v}" for k, v in self.details.items() if isinstance(v, (int, float, str, bool)))
        return f"{verdict} {self.name}: {self.cases} cases, {len(self.violations)} violations" \
               f"{', ' + extra if extra else ''} ({self.seconds:.1f}s)"

    def to_record(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "cases": self.cases, "seed": self.seed,
                "seconds": round(self.seconds, 3), "violations": self.violations[:MAX_REPORTED],
                "violation_count": len(self.violations), "details": self.details}


def _timed(fn):
    def run(scale: str = "small", seed: int = 0) -> SuiteResult:
        if scale not in ("tiny", "small"):
            raise ValueError("scale is 'tiny' or 'small'")
        t0 = time.perf_counter()
        res = fn(scale, seed)
        res.seconds = time.perf_counter() - t0
        return res
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def _all_words(max_len: int, size: int):
    for L in range(1, max_len + 1):
        yield from product(range(1, size + 1), repeat=L)


# -- divisibility -----------------------------------------------------------------

@_timed
def divisibility_suite(scale: str, seed: int) -> SuiteResult:
    """DP decider against the exhaustive cut enumeration on every short word."""
    limits = [(10, 2), (8, 3)] if scale == "small" else [(7, 2), (5, 3)]
    bad, cases = [], 0
    for max_len, size in limits:
        for word in _all_words(max_len, size):
            cases += 1
            profile = divisibility_profile(word)
            for n in range(1, len(word) + 1):
                div = is_n_divisible(word, n)
                want = profile.get(n)
                got = div.cuts if div is not None else None
                if got != want:
                    bad.append({"word": format_word(word), "n": n, "dp": got, "oracle": want})
    return SuiteResult("divisibility", not bad, cases, seed, violations=bad)


# -- dilworth ---------------------------------------------------------------------

def random_poset(rng: random.Random, max_size: int = 12) -> OccurrencePoset:
    size = rng.randint(1, max_size)
    letters = rng.randint(2, 3)
    slots = rng.randint(1, 5)
    return OccurrencePoset.from_pairs(
        (rng.randint(1, slots), tuple(rng.randint(1, letters) for _ in range(rng.randint(1, 3))))
        for _ in range(size))


@_timed
def dilworth_suite(scale: str, seed: int) -> SuiteResult:
    """Chain cover size equals antichain size equals the exhaustive antichain size."""
    rng = random.Random(seed)
    count = 1000 if scale == "small" else 100
    bad = []
    for _ in range(count):
        p = random_poset(rng)
        cover = min_chain_cover(p)
        anti = max_antichain(p)
        brute = brute_max_antichain_size(range(len(p)), p.related)
        anti_ok = all(not p.related(a, b) for a in anti for b in anti)
        if not (cover.is_valid() and anti_ok and cover.count == len(anti) == brute):
            bad.append({"poset": p.to_record(), "cover": cover.count, "antichain": len(anti), "brute": brute})
    return SuiteResult("dilworth", not bad, count, seed, violations=bad)


# -- representative sets over 2-letter periods ------------------------------------

def power_block_word(rng: random.Random, l: int, max_len: int = 200) -> tuple:
    """Concatenated powers of 2-letter periods with short random spacers."""
    periods = list(primitive_words(2, l))
    word: tuple = ()
    while True:
        z = rng.choice(periods)
        block = z * rng.randint(7, 10)
        spacer = tuple(rng.randint(1, l) for _ in range(rng.choice([0, 0, 1, 2, 3])))
        if len(word) + len(block) + len(spacer) > max_len:
            break
        word += block + spacer
        if rng.random() < 0.12:
            break
    return word


@_timed
def theorem1_suite(scale: str, seed: int) -> SuiteResult:
    """Height and per-color-pair audit for words that are not strongly 3-divisible."""
    rng = random.Random(seed)
    count = 500 if scale == "small" else 60
    n, k = 3, 6
    bad = []
    stats = {"strongly_divisible": 0, "audited": 0, "shared_slot_antichains": 0}
    for _ in range(count):
        l = rng.choice([2, 3])
        word = power_block_word(rng, l)
        strong = is_strongly_n_divisible(word, n, primitive_words(2, l), k)
        if strong is not None:
            stats["strongly_divisible"] += 1
            continue
        stats["audited"] += 1
        h, omega = small_selective_height(word, 2, k)
        if h > bounds.beth2(l, n):
            bad.append({"word": format_word(word), "check": "height", "height": h, "bound": bounds.beth2(l, n)})
        try:
            coloring = color_representatives(omega, n)
        except AntichainTooLarge as exc:
            # colors may exceed n-1 here; the per-pair count is still audited
            stats["shared_slot_antichains"] += 1
            if exc.strong_witness is not None:
                bad.append({"word": format_word(word), "check": "antichain from distinct representatives",
                            "witness": exc.to_record()})
            coloring = min_chain_cover(representative_poset(omega))
        audit = _pair_audit(build_gamma(omega, coloring), l, n, bounds.beth2(l, n))
        for v in audit.violations:
            if v["check"] == "edges per color pair":
                bad.append({"word": format_word(word), **v})
    return SuiteResult("theorem1", not bad, count, seed, violations=bad, details=stats)


# -- period-(n-1) representative sets --------------------------------------------

def greedy_representative_set(rng: random.Random, n: int, l: int):
    """Add random (n-1)-classes while the rotations keep an antichain below n."""
    classes = lyndon_words(n - 1, l)
    rng.shuffle(classes)
    k = 2 * n
    chosen: List[tuple] = []
    for c in classes:
        trial = chosen + [rotate(c, rng.randrange(n - 1))]
        omega = _omega_of(trial, k)
        if len(max_antichain(representative_poset(omega))) < n:
            chosen = trial
    return _omega_of(chosen, k)


def _omega_of(periods, k) -> RepresentativeSet:
    pos, occ = 0, []
    for z in periods:
        occ.append(PowerOccurrence(pos, z, k + 1))
        pos += len(z) * (k + 1)
    return RepresentativeSet(occ, threshold=k)


@_timed
def theorem6_suite(scale: str, seed: int) -> SuiteResult:
    """Potential audit on colored period-(n-1) representative sets, n = 4, 5, l <= 5."""
    rng = random.Random(seed)
    per = 25 if scale == "small" else 3
    bad = []
    stats = {"sets": 0, "pi_increase_violations": 0, "t_bound_violations": 0,
             "certified_counterexamples": 0, "max_t": 0}
    worst: Dict[str, dict] = {}
    for n in (4, 5):
        for l in range(2, 6):
            for _ in range(per):
                omega = greedy_representative_set(rng, n, l)
                if not len(omega):
                    continue
                stats["sets"] += 1
                coloring = color_representatives(omega, n)
                audit = audit_cycle_graph(build_cycle_graph(omega, coloring), l, n)
                stats["max_t"] = max(stats["max_t"], audit.checks["t"])
                for v in audit.violations:
                    if v["check"] == "pi strictly increasing":
                        stats["pi_increase_violations"] += 1
                    elif v["check"] == "t <= (l-2)(n-1)":
                        stats["t_bound_violations"] += 1
                        # the realised word must itself be outside strong n-divisibility
                        word = sum((o.factor() for o in omega), ())
                        if is_strongly_n_divisible(word, n, primitive_words(n - 1, l)) is None:
                            stats["certified_counterexamples"] += 1
                        key = f"n={n},l={l}"
                        if key not in worst or worst[key]["t"] < v["t"]:
                            worst[key] = {"t": v["t"], "bound": v["bound"],
                                          "periods": [format_word(z) for z in omega.periods]}
                    else:
                        continue
                    bad.append({"n": n, "l": l, **v, "periods": [format_word(z) for z in omega.periods]})
    stats["worst_t_by_params"] = worst
    return SuiteResult("theorem6", not bad, stats["sets"], seed, violations=bad, details=stats)


# -- extremal construction ------------------------------------------------------

@_timed
def extremal_suite(scale: str, seed: int) -> SuiteResult:
    """n = 4 construction: height >= the lower-bound formula, distinct classes, l = 9 not strong."""
    ls = [9, 10, 11, 12] if scale == "small" else [9, 10]
    bad, certs = [], {}
    for l in ls:
        word, plan = generate_extremal(4, l)
        cert = certify_extremal(word, plan, 4, check_strong=True)
        rec = cert.to_record()
        rec.pop("witness")
        rec.pop("strong_witness")
        certs[str(l)] = rec
        if not cert.height_at_least_psi:
            bad.append({"l": l, "check": "height >= psi_lower", "height": cert.measured_height,
                        "psi_lower": cert.psi_lower})
        if cert.distinct_classes != cert.edge_count or not plan.edges_unique():
            bad.append({"l": l, "check": "distinct block classes"})
        if l == 9 and cert.strongly_divisible:
            bad.append({"l": l, "check": "not strongly 4-divisible"})
    return SuiteResult("extremal", not bad, len(ls), seed, violations=bad, details={"certificates": certs})


# -- encodings ------------------------------------------------------------------

def random_family(rng: random.Random, t: int, l: int, max_size: int = 5) -> CycleClassFamily:
    classes = lyndon_words(t, l)
    rng.shuffle(classes)
    chosen = [rotate(c, rng.randrange(t)) for c in classes[: rng.randint(1, min(max_size, len(classes)))]]
    return CycleClassFamily(t, l, tuple(chosen))


@_timed
def encodings_suite(scale: str, seed: int) -> SuiteResult:
    """Pair and pad encodings keep goodness, under both antichain readings."""
    rng = random.Random(seed)
    count = 500 if scale == "small" else 50
    bad = []
    stats = {"pair_checks": 0, "pad_checks": 0}
    for _ in range(count):
        fam = random_family(rng, rng.choice([2, 4]), 2)
        small = random_family(rng, 3, 2)
        for distinct in (True, False):
            for n in (2, 3, 4):
                if is_n_good(fam, n, distinct).good:
                    for offset in (0, 1):
                        stats["pair_checks"] += 1
                        enc = pair_encode(fam, offset)
                        if not is_n_good(enc, n, distinct).good:
                            bad.append({"lemma": "pair", "family": fam.to_record(), "n": n,
                                        "offset": offset, "distinct_cycles": distinct})
                if is_n_good(small, n, distinct).good:
                    stats["pad_checks"] += 1
                    padded = pad_encode(small, 2)
                    target = 4 * (n - 1) + 1
                    if not is_n_good(padded, target, distinct).good:
                        bad.append({"lemma": "pad", "family": small.to_record(), "n": n,
                                    "distinct_cycles": distinct})
    return SuiteResult("encodings", not bad, count, seed, violations=bad, details=stats)


# -- forcing lemma --------------------------------------------------------------

def forcing_word(rng: random.Random, n: int) -> tuple:
    """2n-1 powers of rotations of one primitive word, each ended by a breaking tail."""
    l = rng.randint(2, 3)
    t = rng.randint(1, 3)
    x = rng.choice(list(primitive_words(t, l)))
    word: tuple = ()
    for _ in range(2 * n - 1):
        z = rotate(x, rng.randrange(t))
        word += z * rng.randint(n + 1, n + 3)
        while True:
            tail = tuple(rng.randint(1, l) for _ in range(t + rng.randint(0, 2)))
            if tail[:t] != z:
                break
        word += tail
    return word


@_timed
def forcing_suite(scale: str, seed: int) -> SuiteResult:
    """Repeated conjugate powers force n-divisibility; so does x^(2n) with |x| >= n."""
    rng = random.Random(seed)
    count = 200 if scale == "small" else 30
    bad = []
    for i in range(count):
        n = 2 if i % 2 == 0 else 3
        word = forcing_word(rng, n)
        if not forcing_hypothesis(word, n):
            bad.append({"word": format_word(word), "n": n, "check": "construction has 2n-1 powers"})
            continue
        div = forcing_check(word, n)
        if div is None or not div.is_valid() or is_n_divisible(word, n) is None:
            bad.append({"word": format_word(word), "n": n, "check": "forced division"})
    squares = 0
    lengths = range(3, 6) if scale == "small" else range(3, 4)
    for t in lengths:
        for l in (2, 3):
            for x in primitive_words(t, l):
                for n in range(2, min(t, 3) + 1):
                    squares += 1
                    word = x * (2 * n)
                    div = forcing_check(word, n)
                    if div is None or not div.is_valid():
                        bad.append({"word": format_word(word), "n": n, "check": "x^(2n)"})
    return SuiteResult("forcing", not bad, count + squares, seed, violations=bad,
                       details={"constructions": count, "square_checks": squares})


# -- rauzy ------------------------------------------------------------------------

@_timed
def rauzy_suite(scale: str, seed: int) -> SuiteResult:
    """Trajectory length and edge count identities, and the (ab)^10 cycle count."""
    max_len = 12 if scale == "small" else 8
    bad, cases = [], 0
    for word in _all_words(max_len, 2):
        for r in (1, 2, 3):
            if len(word) < r:
                continue
            cases += 1
            g = build_rauzy(word, r)
            factors = {word[p: p + r + 1] for p in range(len(word) - r)}
            if len(g.trajectory) != len(word) - r or len(g.edges) != len(factors):
                bad.append({"word": format_word(word), "r": r})
    stats = trajectory_cycle_stats((1, 2) * 10, 2, 3, 3)
    two = [(c, k) for c, k in stats.counts if len(c) == 2]
    if len(two) != 1 or two[0][1] != 9:
        bad.append({"word": "(ab)^10", "check": "one 2-cycle traversed 9 times", "cycles": stats.to_record()})
    return SuiteResult("rauzy", not bad, cases + 1, seed, violations=bad)


# -- bounds -----------------------------------------------------------------------

GOLDEN = [
    ("beth2(3,4)", lambda: bounds.beth2(3, 4), 15),
    ("beth3(3,4)", lambda: bounds.beth3(3, 4), 30),
    ("beth_nminus1(4,5)", lambda: bounds.beth_nminus1(4, 5), 8),
    ("psi_lower(4,10)", lambda: bounds.psi_lower(4, 10), 2),
    ("height_lower(2,4)", lambda: bounds.height_lower(2, 4), 5),
    ("co1_bound(2,3,4)", lambda: bounds.co1_bound(2, 3, 4), 90),
]


@_timed
def bounds_suite(scale: str, seed: int) -> SuiteResult:
    """Golden values plus grid consistency between upper and lower bounds."""
    bad = []
    for name, fn, want in GOLDEN:
        got = fn()
        if got != want:
            bad.append({"bound": name, "got": got, "want": want})
    grid = 0
    for n in range(3, 8):
        for l in range(1, 40):
            grid += 1
            if bounds.co1_bound(2, l, n) != 2 * (n - 1) * bounds.beth2(l, n):
                bad.append({"check": "co1 = 2(n-1) beth2", "l": l, "n": n})
            if l > 2 ** (n - 1) and bounds.psi_lower(n, l) > bounds.beth2(l, n):
                bad.append({"check": "psi_lower <= beth2", "l": l, "n": n})
    return SuiteResult("bounds", not bad, len(GOLDEN) + grid, seed, violations=bad)


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "divisibility": divisibility_suite,
    "dilworth": dilworth_suite,
    "theorem1": theorem1_suite,
    "theorem6": theorem6_suite,
    "extremal": extremal_suite,
    "encodings": encodings_suite,
    "forcing": forcing_suite,
    "rauzy": rauzy_suite,
    "bounds": bounds_suite,
}
