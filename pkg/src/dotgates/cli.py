"""Command-line interface.

Exit status: 0 on success, 1 for an invalid hand or size, 2 for usage errors.
Relative ``--out`` and ``--figure`` paths are resolved against
``$DOTGATES_OUTPUT_DIR`` when it is set.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from dotgates import __version__
from dotgates.combinatorics import binomial, draw_ways, format_decimal, format_fraction
from dotgates.decomposition import count_winning, is_winning, winning_ways
from dotgates.enumeration import enumerate_hands, count_hands
from dotgates.gates import classify_all, triples_coverage, winning_tiles
from dotgates.report import Report, Section, ranks_text
from dotgates.tiles import NUM_RANKS, POOL_SIZE, HandError, dual, format_counts, format_hand, parse_hand

OUTPUT_DIR_ENV = "DOTGATES_OUTPUT_DIR"
LISTED_CLASS_LIMIT = 100

CLASSIFY_COLUMNS = """\
histogram section: gates, num_hands, total_ways, probability (exact, reduced),
  decimal (half-even). hands section: hand, gates, winning, missing, ways.
  Without --full, only gate classes with at most 100 hands are listed."""


def _resolve(path: str) -> Path:
    p = Path(path)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        _resolve(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _fraction_text(p: Fraction) -> str:
    return f"{p.numerator}/{p.denominator}"


def cmd_enumerate(args: argparse.Namespace) -> str:
    fmt = format_counts if args.format == "counts" else format_hand
    return "".join(fmt(h) + "\n" for h in enumerate_hands(args.size))


def cmd_check(args: argparse.Namespace) -> str:
    h = parse_hand(args.hand)
    d = is_winning(h)
    return "not winning\n" if d is None else f"winning\t{d}\n"


def cmd_gates(args: argparse.Namespace) -> str:
    w = winning_tiles(parse_hand(args.hand))
    return f"{ranks_text(w) or '-'}\t({len(w)} gates)\n"


def cmd_dual(args: argparse.Namespace) -> str:
    return format_hand(dual(parse_hand(args.hand))) + "\n"


def cmd_prob(args: argparse.Namespace) -> str:
    h = parse_hand(args.hand)
    return format_fraction(draw_ways(h), binomial(POOL_SIZE, h.size), args.places) + "\n"


def cmd_winning_count(args: argparse.Namespace) -> str:
    patterns, ways = winning_ways(args.size)
    total = count_hands(args.size)
    draws = binomial(POOL_SIZE, args.size)
    return (
        f"{patterns} / {total} patterns; probability "
        f"{format_decimal(Fraction(patterns, total), args.places)}\n"
        f"draw-weighted: {format_fraction(ways, draws, args.places)}\n"
    )


def cmd_classify(args: argparse.Namespace) -> str:
    cl = classify_all(args.size, args.jobs)
    hist = cl.histogram
    hist_rows = []
    for g in range(NUM_RANKS, -1, -1):
        p = hist.probability(g)
        hist_rows.append([g, hist.num_hands[g], hist.total_ways[g], _fraction_text(p), format_decimal(p, args.places)])
    listed = [
        r for r in cl.records
        if args.full or hist.num_hands[r.gates] <= LISTED_CLASS_LIMIT
    ]
    listed.sort(key=lambda r: (-r.gates, r.hand.counts))
    hand_rows = [
        [format_hand(r.hand), r.gates, list(sorted(r.winning)), list(r.missing), r.ways] for r in listed
    ]
    report = Report(
        "classify",
        {"size": args.size, "full": args.full, "places": args.places},
        [
            Section("histogram", ["gates", "num_hands", "total_ways", "probability", "decimal"], hist_rows),
            Section("hands", ["hand", "gates", "winning", "missing", "ways"], hand_rows),
        ],
    )
    if args.figure:
        from dotgates.plotting import plot_gate_histogram

        plot_gate_histogram(hist, _resolve(args.figure))
    return report.render(args.format)


def cmd_coverage_triples(args: argparse.Namespace) -> str:
    cov = triples_coverage(args.jobs)
    rows = [[list(t), realized] for t, realized in cov.items()]
    report = Report(
        "coverage-triples",
        {"size": 13, "excluded": sum(not v for v in cov.values())},
        [Section("triples", ["triple", "realized"], rows)],
    )
    return report.render(args.format)


def cmd_montecarlo(args: argparse.Namespace) -> str:
    from dotgates.montecarlo import RNG_NAME, McConfig, sample_gate_distribution

    cfg = McConfig(args.size, args.trials, args.seed)
    mc = sample_gate_distribution(cfg, args.jobs)
    rows = [
        [
            c.label,
            c.count,
            f"{c.frequency:.6f}",
            _fraction_text(c.exact),
            format_decimal(c.exact, args.places),
            f"{c.stderr:.6f}",
            "-" if c.z is None else f"{c.z:.3f}",
            c.flagged,
        ]
        for c in mc.classes
    ]
    report = Report(
        "montecarlo",
        {"size": cfg.size, "trials": cfg.trials, "seed": cfg.seed, "mode": cfg.mode, "places": args.places},
        [Section("classes", ["class", "count", "frequency", "exact", "decimal", "stderr", "z", "flagged"], rows)],
        rng=RNG_NAME,
    )
    if args.figure:
        from dotgates.plotting import plot_montecarlo

        plot_montecarlo(mc, _resolve(args.figure))
    return report.render(args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dotgates", description="Exhaustive analysis of dot-suit Mahjong hands.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, **kw) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, **kw)
        p.set_defaults(func=func)
        p.add_argument("--out", help="write output to this file instead of stdout")
        return p

    def report_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["tsv", "json"], default="tsv")
        p.add_argument("--jobs", type=int, default=1, help="worker processes (output does not depend on it)")

    p = add("enumerate", cmd_enumerate, "list every hand of a size, one per line, canonical order")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--format", choices=["digits", "counts"], default="digits")

    for name, func, text in [
        ("check", cmd_check, "decide whether a 3k+2 tile hand wins; print a witness"),
        ("gates", cmd_gates, "winning tiles of a 3k+1 tile hand"),
        ("dual", cmd_dual, "reflect ranks j -> 10-j"),
        ("prob", cmd_prob, "exact probability of drawing a hand pattern"),
    ]:
        p = add(name, func, text)
        p.add_argument("hand", help='digits ("1112345678999") or counts ("3,1,1,1,1,1,1,1,3")')
        if name == "prob":
            p.add_argument("--places", type=int, default=6)

    p = add(
        "classify",
        cmd_classify,
        "gate histogram over all hands of a size",
        epilog=CLASSIFY_COLUMNS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--size", type=int, default=13)
    p.add_argument("--full", action="store_true", help="list every hand, not only small gate classes")
    p.add_argument("--places", type=int, default=6)
    p.add_argument("--figure", help="also write a histogram figure (format from extension)")
    report_opts(p)

    p = add(
        "coverage-triples",
        cmd_coverage_triples,
        "which 3-rank winning sets occur among 13-tile hands",
        epilog="columns: triple (three ranks), realized (true/false)",
    )
    report_opts(p)

    p = add("winning-count", cmd_winning_count, "count winning hands of a 3k+2 size")
    p.add_argument("--size", type=int, default=14)
    p.add_argument("--places", type=int, default=5)

    p = add(
        "montecarlo",
        cmd_montecarlo,
        "sample random draws and compare with exact probabilities",
        epilog="columns: class, count, frequency, exact, decimal, stderr, z, flagged "
        "(z is '-' and flagged true when the expected count is below 10)",
    )
    p.add_argument("--size", type=int, default=13)
    p.add_argument("--trials", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--places", type=int, default=6)
    p.add_argument("--figure", help="also write a comparison figure")
    report_opts(p)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return 2
    try:
        _emit(args.func(args), args.out)
    except (HandError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
