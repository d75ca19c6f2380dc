"""Figures written next to the delimited reports.

Only file output: the Agg backend is selected before pyplot is imported, so
nothing here needs a display.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .extremal import certify_extremal, generate_extremal  # noqa: E402
from .rauzy import CycleStats  # noqa: E402
from .words import format_word  # noqa: E402


def extremal_sweep(n: int, ls: Iterable[int], check_strong: bool = False) -> list:
    rows = []
    for l in ls:
        word, plan = generate_extremal(n, l)
        cert = certify_extremal(word, plan, n, check_strong=check_strong)
        rows.append(cert)
    return rows


def plot_extremal(certs: Sequence, path) -> Path:
    """Measured height against the stated lower bound and the upper bound, by alphabet size."""
    path = Path(path)
    ls = [c.l for c in certs]
    fig, ax = plt.subplots(figsize=(5.5, 3.6))
    ax.plot(ls, [c.measured_height for c in certs], "o-", label="measured height")
    ax.plot(ls, [c.psi_lower for c in certs], "s--", label="stated lower bound")
    ax.plot(ls, [c.edges_formula_listed for c in certs], "x:", label="pairs listed per step")
    ax.plot(ls, [c.beth2 for c in certs], "^-.", label="upper bound beth2")
    ax.set_xlabel("alphabet size l")
    ax.set_ylabel("selective height")
    ax.set_title(f"extremal construction, n = {certs[0].n}" if certs else "extremal construction")
    ax.set_xticks(ls)
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_cycle_stats(stats: CycleStats, path, alphabet=None) -> Path:
    """Traversal count per short cycle, with the threshold drawn across."""
    path = Path(path)
    labels = ["->".join(format_word(v, alphabet) for v in c) for c, _ in stats.counts]
    counts = [k for _, k in stats.counts]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.5 * len(labels) + 2), 3.6))
    colors = ["tab:red" if k > stats.threshold else "tab:blue" for k in counts]
    ax.bar(range(len(counts)), counts, color=colors)
    ax.axhline(stats.threshold, color="k", lw=0.8, ls="--")
    ax.set_xticks(range(len(counts)))
    ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=7)
    ax.set_ylabel("traversals")
    ax.set_title(f"cycles of length < {stats.max_cycle_len}, order {stats.order}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
