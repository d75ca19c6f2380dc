"""``shirshov`` command line.

Exit status: 0 when the asked-for object exists (a division, a clean audit, a
passing suite), 1 when it does not, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import bounds as bnd
from . import proof_graphs as pg
from . import rauzy as rz
from .dilworth import AntichainTooLarge, color_representatives
from .divisibility import is_n_divisible, is_strongly_n_divisible
from .encodings import (CycleClassFamily, beth_empirical, is_n_good, pad_encode, pair_decode,
                        pair_encode)
from .extremal import certify_extremal, generate_extremal
from .powers import large_selective_height, small_selective_height
from .suites import SUITES
from .words import Alphabet, format_word, parse_word, primitive_words

FORMAT = "shirshov/1"
INLINE_LIMIT = 400  # longer generated words go to a file


class UsageError(Exception):
    pass


def _alphabet(spec: Optional[str]) -> Optional[Alphabet]:
    if spec is None:
        return None
    if spec.isdigit():
        return Alphabet(int(spec))
    return Alphabet.from_chars(spec)


def _read_word(args) -> tuple:
    if (args.word is None) == (args.file is None):
        raise UsageError("give exactly one of WORD or --file")
    if args.file is not None:
        lines = [ln for ln in Path(args.file).read_text(encoding="utf-8").splitlines() if ln.strip()]
        if len(lines) != 1:
            raise UsageError(f"{args.file}: expected one word, found {len(lines)} lines")
        text = lines[0]
    else:
        text = args.word
    return parse_word(text, _alphabet(args.alphabet))


def _size(word, args) -> int:
    a = _alphabet(args.alphabet)
    return a.size if a is not None else max(word, default=1)


class Out:
    """Collects a JSON payload and a text rendering, writes the one asked for."""

    def __init__(self, args, command: str):
        self.args = args
        self.payload = {"format": FORMAT, "command": command}
        self.text: List[str] = []
        self.dot: Optional[str] = None
        self.rows: Optional[List[dict]] = None

    def emit(self):
        fmt = self.args.format
        if fmt == "json":
            body = json.dumps(self.payload, indent=2, default=str) + "\n"
        elif fmt == "dot":
            if self.dot is None:
                raise UsageError("this command has no graph output")
            body = self.dot
        elif fmt == "csv":
            if self.rows is None:
                raise UsageError("this command has no table output")
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=list(self.rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(self.rows)
            body = buf.getvalue()
        else:
            body = "\n".join(self.text) + "\n"
        if self.args.output:
            Path(self.args.output).write_text(body, encoding="utf-8")
        else:
            sys.stdout.write(body)


# -- commands ------------------------------------------------------------------------

def cmd_divide(args, out: Out) -> int:
    word = _read_word(args)
    alpha = _alphabet(args.alphabet)
    if args.strong:
        k = args.exp if args.exp is not None else 2 * args.n
        periods = list(primitive_words(args.periods, _size(word, args)))
        div = is_strongly_n_divisible(word, args.n, periods, k)
    else:
        div = is_n_divisible(word, args.n)
    out.payload.update({"word": format_word(word, alpha), "n": args.n, "strong": args.strong,
                        "found": div is not None, "witness": div.to_record(alpha) if div else None})
    if div is None:
        out.text.append("none")
    else:
        if div.head:
            out.text.append(f"head {format_word(div.head, alpha)}")
        out.text.append(" > ".join(format_word(f, alpha) for f in div.factors))
        out.text.append(f"cuts {list(div.cuts)}  decided at {div.comparison_positions}")
        if args.strong:
            out.text.append("periods " + " ".join(format_word(z, alpha) for z in div.periods))
    return 0 if div is not None else 1


def cmd_height(args, out: Out) -> int:
    word = _read_word(args)
    alpha = _alphabet(args.alphabet)
    if args.large:
        h = large_selective_height(word, args.period_len, args.exp)
        out.payload.update({"kind": "large", "height": h})
        out.text.append(f"large selective height {h}")
    else:
        h, omega = small_selective_height(word, args.period_len, args.exp, args.budget)
        out.payload.update({"kind": "small", "height": h, "representatives": omega.to_record(alpha)})
        out.text.append(f"small selective height {h}" + ("" if omega.exhaustive else " (budget hit, lower bound)"))
        for i, o in enumerate(omega, start=1):
            out.text.append(f"  {i}: ({format_word(o.period, alpha)})^{o.exponent} at {o.position}")
        out.rows = [{"index": i, "position": o.position, "period": format_word(o.period, alpha),
                     "exponent": o.exponent} for i, o in enumerate(omega, start=1)] or None
    out.payload.update({"word": format_word(word, alpha), "period_len": args.period_len, "exp": args.exp})
    return 0 if h > 0 else 1


def cmd_omega(args, out: Out) -> int:
    word = _read_word(args)
    alpha = _alphabet(args.alphabet)
    t, n = args.period_len, args.n
    k = args.exp if args.exp is not None else 2 * n
    l = _size(word, args)
    _, omega = small_selective_height(word, t, k, args.budget)
    out.payload.update({"word": format_word(word, alpha), "n": n, "period_len": t, "exp": k,
                        "representatives": omega.to_record(alpha)})
    out.text.append(f"{len(omega)} representatives")
    try:
        coloring = color_representatives(omega, n)
    except AntichainTooLarge as exc:
        out.payload["antichain_too_large"] = exc.to_record(alpha)
        out.text.append(f"antichain of size {len(exc.antichain)} >= {n}; no coloring")
        return 1
    out.payload["coloring"] = coloring.to_record(alpha)
    out.text.append(f"{coloring.count} chains")
    if t == 2:
        graph = pg.build_gamma(omega, coloring)
        audit = pg.audit_gamma(graph, l, n)
    elif t == 3:
        graph = pg.build_triangle_graph(omega, coloring)
        audit = pg.audit_triangle(graph, l, n)
    elif t == n - 1:
        graph = pg.build_cycle_graph(omega, coloring)
        audit = pg.audit_cycle_graph(graph, l, n)
    else:
        out.text.append(f"no graph audit for period length {t} (use 2, 3 or n-1)")
        return 0
    out.payload.update({"graph": graph.to_record(), "audit": audit.to_record()})
    out.dot = pg.to_dot(graph)
    out.text.append(f"{graph.kind} graph: {len(graph.edges)} edges, audit {'ok' if audit.ok else 'FAILED'}")
    for v in audit.violations:
        out.text.append("  " + json.dumps(v))
    return 0 if audit.ok else 1


def cmd_rauzy(args, out: Out) -> int:
    word = _read_word(args)
    alpha = _alphabet(args.alphabet)
    g = rz.build_rauzy(word, args.order)
    stats = rz.trajectory_cycle_stats(word, args.order, args.max_cycle, args.threshold, args.budget)
    out.payload.update({
        "word": format_word(word, alpha), "order": args.order,
        "vertices": [format_word(v, alpha) for v in g.vertices],
        "edges": [[format_word(u, alpha), format_word(v, alpha)] for u, v in g.edges],
        "steps": len(g.trajectory), "cycles": stats.to_record(alpha),
    })
    out.dot = rz.to_dot(g, alpha)
    out.text.append(f"{len(g.vertices)} vertices, {len(g.edges)} edges, {len(g.trajectory)} steps")
    for c, k in stats.counts:
        flag = " *" if k > args.threshold else ""
        out.text.append(f"  {' -> '.join(format_word(v, alpha) for v in c)}: {k}{flag}")
    out.text.append(f"{len(stats.over_threshold)} cycles traversed more than {args.threshold} times")
    out.rows = [{"cycle": " ".join(format_word(v, alpha) for v in c), "length": len(c), "traversals": k}
                for c, k in stats.counts] or None
    if args.dot:
        Path(args.dot).write_text(out.dot, encoding="utf-8")
    if args.figure:
        from .report import plot_cycle_stats
        plot_cycle_stats(stats, args.figure, alpha)
    return 0


def cmd_extremal(args, out: Out) -> int:
    word, plan = generate_extremal(args.n, args.l, args.exp)
    cert = certify_extremal(word, plan, args.n, check_strong=not args.no_strong)
    text = format_word(word)
    out.payload.update({"plan": plan.to_record(), "blocks": len(plan.edges), "certificate": cert.to_record()})
    if args.word_file or len(word) > INLINE_LIMIT:
        path = Path(args.word_file or f"extremal_n{args.n}_l{args.l}.txt")
        path.write_text(text + "\n", encoding="utf-8")
        manifest = {"format": FORMAT, "file": str(path), "length": len(word), "n": args.n, "l": args.l,
                    "exponent": plan.exponent, "blocks": len(plan.edges)}
        path.with_suffix(".json").write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
        out.payload["word_file"] = str(path)
        out.text.append(f"word of length {len(word)} written to {path}")
    else:
        out.payload["word"] = text
        out.text.append(text)
    out.text.append(f"{len(plan.edges)} blocks over {len(plan.steps)} big steps")
    out.text.append(f"measured height {cert.measured_height} (lower bound formula {cert.psi_lower}, "
                    f"listed pairs {cert.edges_formula_listed}, upper bound {cert.beth2})")
    out.text.append(f"type coloring: {cert.type_colors} colors, valid {cert.type_coloring_valid}")
    if cert.strongly_divisible is not None:
        out.text.append(f"strongly {args.n}-divisible: {cert.strongly_divisible}")
    out.rows = [{"step": e.step, "group": e.group, "u": e.u, "v": e.v} for e in plan.edges]
    if args.figure:
        from .report import extremal_sweep, plot_extremal
        lo = 2 ** (args.n - 1) + 1
        plot_extremal(extremal_sweep(args.n, range(lo, max(args.l, lo + 3) + 1)), args.figure)
    return 0 if cert.height_at_least_psi else 1


def cmd_encode(args, out: Out) -> int:
    fam = CycleClassFamily.from_json(Path(args.family).read_text(encoding="utf-8"))
    distinct = not args.literal
    if args.kind == "pair":
        enc = pair_encode(fam, args.offset)
        target = args.n
        out.payload["decodes_back"] = pair_decode(enc, fam.alphabet).cycles == tuple(
            c[args.offset:] + c[:args.offset] for c in fam.cycles)
    else:
        enc = pad_encode(fam, args.s)
        target = enc.length * (args.n - 1) + 1
    before = is_n_good(fam, args.n, distinct)
    after = is_n_good(enc, target, distinct)
    out.payload.update({"kind": args.kind, "source": fam.to_record(), "encoded": enc.to_record(),
                        "source_goodness": before.to_record(), "encoded_goodness": after.to_record()})
    out.text.append(json.dumps(enc.to_record()))
    out.text.append(f"source {args.n}-good: {before.good} (largest antichain {len(before.antichain)})")
    out.text.append(f"encoded {target}-good: {after.good} (largest antichain {len(after.antichain)})")
    return 0 if (after.good or not before.good) else 1


def cmd_beth(args, out: Out) -> int:
    est = beth_empirical(args.t, args.l, args.n, args.cap, args.budget, not args.literal)
    out.payload.update(est.to_record())
    out.payload["ess_l4_bound"] = bnd.ess_l4_bound(args.t, args.l, args.n)
    out.text.append(f"lower bound {est.value} ({'exhaustive' if est.exhaustive else 'budget hit'}, "
                    f"{est.nodes} nodes)")
    if est.family is not None:
        out.text.append("family " + " ".join(format_word(c) for c in est.family.cycles))
    return 0


def cmd_bounds(args, out: Out) -> int:
    pairs = [(args.l, args.n)]
    if args.grid:
        pairs = [(l, n) for n in range(3, args.n + 1) for l in range(2, args.l + 1)]
    rows = []
    for l, n in pairs:
        for r in bnd.bound_table(l, n):
            rows.append({"l": l, "n": n, **{k: v for k, v in r.to_record().items() if k != "params"},
                         "params": " ".join(f"{k}={v}" for k, v in r.params.items())})
    out.payload["rows"] = rows
    out.rows = rows
    width = max(len(r["name"]) for r in rows)
    for r in rows:
        value = r["value"] if r["digits"] <= 40 else f"{r['value'][:12]}...({r['digits']} digits)"
        note = f"  [{r['note']}]" if r["note"] else ""
        out.text.append(f"l={r['l']} n={r['n']}  {r['name']:<{width}}  {value}{note}")
    return 0


def cmd_verify(args, out: Out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [SUITES[name](args.scale, args.seed) for name in names]
    out.payload.update({"scale": args.scale, "seed": args.seed, "suites": [r.to_record() for r in results]})
    for r in results:
        out.text.append(r.line())
        for v in r.violations[:3]:
            out.text.append("  " + json.dumps(v, default=str))
    out.rows = [{"suite": r.name, "passed": r.passed, "cases": r.cases, "violations": len(r.violations),
                 "seconds": round(r.seconds, 3)} for r in results]
    return 0 if all(r.passed for r in results) else 1


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "dot", "csv"], default="text")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=200_000, help="search node budget")

    wordarg = argparse.ArgumentParser(add_help=False)
    wordarg.add_argument("word", nargs="?", help="letters (abc...) or space-separated integers")
    wordarg.add_argument("--file", help="read the word from a file instead")
    wordarg.add_argument("--alphabet", help="letter characters, or the alphabet size")

    p = argparse.ArgumentParser(prog="shirshov", description="n-divisibility and selective height tools")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("divide", parents=[common, wordarg], help="find an n-division")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--strong", action="store_true")
    s.add_argument("--periods", type=int, default=2, help="period length for --strong")
    s.add_argument("--exp", type=int, help="power exponent for --strong (default 2n)")
    s.set_defaults(func=cmd_divide)

    s = sub.add_parser("height", parents=[common, wordarg], help="selective height")
    s.add_argument("--period-len", type=int, required=True)
    s.add_argument("--exp", type=int, required=True)
    s.add_argument("--large", action="store_true")
    s.set_defaults(func=cmd_height)

    s = sub.add_parser("omega", parents=[common, wordarg], help="representatives, coloring and graph audit")
    s.add_argument("--period-len", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--exp", type=int)
    s.set_defaults(func=cmd_omega)

    s = sub.add_parser("rauzy", parents=[common, wordarg], help="Rauzy graph and cycle counts")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--max-cycle", type=int, default=3)
    s.add_argument("--threshold", type=int, default=3)
    s.add_argument("--dot", help="also write the graph in DOT form here")
    s.add_argument("--figure", help="bar chart of cycle traversals (png/pdf/svg)")
    s.set_defaults(func=cmd_rauzy)

    s = sub.add_parser("extremal", parents=[common], help="lower-bound construction with certificate")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--exp", type=int)
    s.add_argument("--no-strong", action="store_true", help="skip the strong-divisibility check")
    s.add_argument("--word-file", help="write the generated word here (plus a .json manifest)")
    s.add_argument("--figure", help="height against bounds over a range of l")
    s.set_defaults(func=cmd_extremal)

    s = sub.add_parser("encode", parents=[common], help="pair or pad encode a family")
    s.add_argument("kind", choices=["pair", "pad"])
    s.add_argument("--family", required=True, help="family JSON file")
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--offset", type=int, default=0, help="pair start parity (pair)")
    s.add_argument("--s", type=int, help="pad to length 2^s (pad)")
    s.add_argument("--literal", action="store_true", help="allow same-cycle antichain members")
    s.set_defaults(func=cmd_encode)

    s = sub.add_parser("beth-search", parents=[common], help="search for large n-good families")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--cap", type=int)
    s.add_argument("--literal", action="store_true")
    s.set_defaults(func=cmd_beth)

    s = sub.add_parser("bounds", parents=[common], help="table of closed-form bounds")
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--grid", action="store_true", help="every 2 <= l' <= l, 3 <= n' <= n")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    s.add_argument("--scale", choices=["tiny", "small"], default="tiny")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Out(args, args.command)
    out.payload["seed"] = args.seed
    try:
        code = args.func(args, out)
        out.emit()
    except (UsageError, ValueError, OSError) as exc:
        print(f"shirshov {args.command}: {exc}", file=sys.stderr)
        return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
