"""Command-line front end.

Subcommands: ``stats``, ``cc``, ``motifs``, ``correlate``, ``hist`` and
``table1``.  Exit codes: 0 success, 2 usage error, 3 parse/preprocess
error, 4 computation error.  Output is plain text or CSV by default and a
single JSON document with ``--json``; plots are emitted as data plus a
generated plotting-script stub, never as images.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from fractions import Fraction

from . import _kernels
from .analysis import correlation_report, histogram_counts
from .coefficients import DEFINITIONS, CCRecord, CCReport, cc_all, _validate_definitions
from .core import Hypergraph, summary_stats
from .io import (
    ParseError,
    PreprocessError,
    PreprocessOptions,
    Provenance,
    parse_benson,
    parse_edgelist,
    preprocess,
)
from .motifs import (
    FIXTURE_NAMES,
    MotifCensus,
    MotifClass,
    Table1,
    canonical_fixtures,
    census_order3,
    table1_matrix,
)
from .oracle import naive_cc, naive_census

log = logging.getLogger(__name__)

_ORACLE_WARN_NODES = 50


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Input handling

def _resolve_benson(path: str) -> tuple[str, str]:
    if os.path.isdir(path):
        hits = sorted(name for name in os.listdir(path)
                      if name.endswith("-nverts.txt"))
        if len(hits) != 1:
            raise ParseError(
                f"{path}: expected exactly one *-nverts.txt, found {len(hits)}")
        prefix = os.path.join(path, hits[0][:-len("-nverts.txt")])
    elif path.endswith("-nverts.txt"):
        prefix = path[:-len("-nverts.txt")]
    else:
        prefix = path
    return f"{prefix}-nverts.txt", f"{prefix}-simplices.txt"


def _detect_format(path: str) -> str:
    if os.path.isdir(path):
        return "benson"
    if path.endswith("-nverts.txt") or os.path.exists(f"{path}-nverts.txt"):
        return "benson"
    return "edgelist"


def _load(args) -> tuple[Hypergraph, Provenance]:
    fmt = args.format
    if fmt == "auto":
        fmt = _detect_format(args.input)
    if fmt == "benson":
        nverts, simplices = _resolve_benson(args.input)
        raw = parse_benson(nverts, simplices)
    else:
        raw = parse_edgelist(args.input)
    opts = PreprocessOptions(drop_singletons=args.drop_singletons,
                             take_lcc=not args.no_lcc)
    return preprocess(raw, opts)


def _compute_report(h: Hypergraph, args, only=None) -> CCReport:
    defs = _validate_or_usage(only)
    if getattr(args, "oracle", False):
        if h.n_nodes > _ORACLE_WARN_NODES:
            log.warning("oracle evaluation on %d nodes may take very long",
                        h.n_nodes)
        records = [
            CCRecord(node=v, label=h.labels[v],
                     **{f"c_{d}": naive_cc(d, h, v) for d in defs})
            for v in range(h.n_nodes)
        ]
        return CCReport(records, defs)
    return cc_all(h, only=defs, threads=args.threads)


def _validate_or_usage(only) -> tuple[str, ...]:
    try:
        return _validate_definitions(only)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _out_path(args, name: str) -> str:
    os.makedirs(args.out, exist_ok=True)
    return os.path.join(args.out, name)


def _emit_json(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


# ---------------------------------------------------------------------------
# Subcommands

def _cmd_stats(args) -> int:
    h, prov = _load(args)
    stats = summary_stats(h)
    if args.out:
        with open(_out_path(args, "stats.csv"), "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            keys = list(stats.as_dict())
            writer.writerow(keys)
            writer.writerow([stats.as_dict()[k] for k in keys])
        with open(_out_path(args, "provenance.json"), "w") as f:
            json.dump(prov.as_dict(), f, indent=2)
            f.write("\n")
    if args.json:
        _emit_json({"stats": stats.as_dict(), "provenance": prov.as_dict()})
    else:
        for key, value in stats.as_dict().items():
            print(f"{key}: {value}")
        for key, value in prov.as_dict().items():
            print(f"provenance.{key}: {value}")
    return 0


def _cmd_cc(args) -> int:
    h, _prov = _load(args)
    report = _compute_report(h, args, only=args.only)
    if args.out:
        report.write_csv(_out_path(args, "cc.csv"))
        report.write_json(_out_path(args, "cc.json"))
    if args.json:
        _emit_json(report.to_json_dict())
        return 0
    if args.out:
        for d in report.definitions:
            print(f"average c_{d}: {report.averages[d]!r}")
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["node_label"] + [f"c_{d}" for d in report.definitions])
        for r in report.records:
            writer.writerow([r.label]
                            + [repr(r.value(d)) for d in report.definitions])
        writer.writerow(["__average__"]
                        + [repr(report.averages[d]) for d in report.definitions])
    return 0


def _cmd_motifs(args) -> int:
    h, _prov = _load(args)
    if args.oracle:
        if h.n_nodes > _ORACLE_WARN_NODES:
            log.warning("oracle census on %d nodes may take very long", h.n_nodes)
        counts = naive_census(h, rule=args.motif_induction)
        census = MotifCensus(
            counts={m: counts[m.value] for m in MotifClass},
            rule=args.motif_induction)
    else:
        census = census_order3(h, rule=args.motif_induction,
                               threads=args.threads)
    if args.out:
        census.write_csv(_out_path(args, "motifs.csv"))
        census.write_json(_out_path(args, "motifs.json"))
    if args.json:
        _emit_json({"rule": census.rule, "counts": census.as_dict(),
                    "triples_examined": census.triples_examined})
    else:
        for m in MotifClass:
            print(f"{m.name}: {census.counts[m]}")
        print(f"triples_examined: {census.triples_examined}")
    return 0


def _cmd_correlate(args) -> int:
    h, _prov = _load(args)
    report = _compute_report(h, args)
    corr = correlation_report(report)
    if args.out:
        _write_scatter_csv(report, _out_path(args, "scatter.csv"))
        with open(_out_path(args, "correlations.csv"), "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["pair", "pearson"])
            for key, value in corr.as_dict().items():
                writer.writerow([key, _corr_str(value)])
        _write_stub(_out_path(args, "plot_scatter.py"), _SCATTER_STUB)
    if args.json:
        _emit_json({"correlations": corr.as_dict(),
                    "n_nodes": h.n_nodes})
    else:
        for key, value in corr.as_dict().items():
            print(f"{key}: {_corr_str(value)}")
    return 0


def _cmd_hist(args) -> int:
    if args.bins < 1:
        raise UsageError("bin count must be >= 1")
    h, _prov = _load(args)
    report = _compute_report(h, args, only=args.only)
    rows = []
    for d in report.definitions:
        edges, counts = histogram_counts(report.column(d), bins=args.bins)
        for i, count in enumerate(counts):
            rows.append((d, float(edges[i]), float(edges[i + 1]), int(count)))
    header = ["definition", "bin_lo", "bin_hi", "count"]
    csv_rows = [(d, repr(lo), repr(hi), c) for (d, lo, hi, c) in rows]
    if args.out:
        with open(_out_path(args, "hist.csv"), "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(csv_rows)
        _write_stub(_out_path(args, "plot_hist.py"), _HIST_STUB)
    if args.json:
        _emit_json({
            "bins": args.bins,
            "histograms": {
                d: [{"bin_lo": lo, "bin_hi": hi, "count": c}
                    for (dd, lo, hi, c) in rows if dd == d]
                for d in report.definitions
            },
        })
    elif not args.out:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(csv_rows)
    return 0


def _cmd_table1(args) -> int:
    if getattr(args, "oracle", False):
        rows = ("opsahl", "zhou", "baseline", "proposed")
        fixtures = canonical_fixtures()
        values = tuple(
            tuple(naive_cc(d, h, root) for (_p, h, root) in fixtures)
            for d in rows
        )
        table = Table1(rows=rows, cols=FIXTURE_NAMES, values=values)
    else:
        table = table1_matrix()
    if args.out:
        table.write_csv(_out_path(args, "table1.csv"))
    if args.json:
        _emit_json({
            "columns": list(table.cols),
            "rows": {name: list(vals)
                     for name, vals in zip(table.rows, table.values)},
        })
        return 0
    width = 10
    print("definition".ljust(12) + "".join(c.rjust(width) for c in table.cols))
    for name, vals in zip(table.rows, table.values):
        print(name.ljust(12)
              + "".join(_fraction_str(v).rjust(width) for v in vals))
    print()
    print("definition".ljust(12)
          + "".join(c.rjust(width + 6) for c in table.cols))
    for name, vals in zip(table.rows, table.values):
        print(name.ljust(12)
              + "".join(f"{v:.12g}".rjust(width + 6) for v in vals))
    print()
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["definition"] + list(table.cols))
    for name, vals in zip(table.rows, table.values):
        writer.writerow([name] + [f"{v:.12g}" for v in vals])
    return 0


def _corr_str(value) -> str:
    return "undefined" if value is None else repr(value)


def _fraction_str(x: float) -> str:
    frac = Fraction(x).limit_denominator(1_000_000)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def _write_scatter_csv(report: CCReport, path) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["node_label"] + [f"c_{d}" for d in report.definitions])
        for r in report.records:
            writer.writerow([r.label]
                            + [repr(r.value(d)) for d in report.definitions])


def _write_stub(path, text: str) -> None:
    with open(path, "w") as f:
        f.write(text)


_SCATTER_STUB = '''#!/usr/bin/env python3
"""Scatter the prior coefficient definitions against the proposed one.

Usage: python plot_scatter.py scatter.csv out.png
"""
import csv
import sys

import matplotlib.pyplot as plt

def main():
    scatter_csv, out_png = sys.argv[1], sys.argv[2]
    cols = {}
    with open(scatter_csv) as f:
        for row in csv.DictReader(f):
            for key, val in row.items():
                if key != "node_label":
                    cols.setdefault(key, []).append(float(val))
    fig, axes = plt.subplots(1, 3, figsize=(12, 4), sharex=True, sharey=True)
    for ax, other in zip(axes, ("c_opsahl", "c_zhou", "c_baseline")):
        ax.scatter(cols["c_proposed"], cols[other], s=8, alpha=0.5)
        ax.set_xlabel("c_proposed")
        ax.set_ylabel(other)
    fig.tight_layout()
    fig.savefig(out_png, dpi=150)

if __name__ == "__main__":
    main()
'''

_HIST_STUB = '''#!/usr/bin/env python3
"""Plot the long-format histogram CSV produced by the hist subcommand.

Usage: python plot_hist.py hist.csv out.png
"""
import csv
import sys
from collections import defaultdict

import matplotlib.pyplot as plt

def main():
    hist_csv, out_png = sys.argv[1], sys.argv[2]
    data = defaultdict(list)
    with open(hist_csv) as f:
        for row in csv.DictReader(f):
            data[row["definition"]].append(
                (float(row["bin_lo"]), float(row["bin_hi"]), int(row["count"])))
    fig, ax = plt.subplots(figsize=(7, 4))
    for definition, rows in data.items():
        centers = [(lo + hi) / 2 for (lo, hi, _c) in rows]
        counts = [c for (_lo, _hi, c) in rows]
        ax.plot(centers, counts, marker="o", label=definition)
    ax.set_xlabel("clustering coefficient")
    ax.set_ylabel("nodes")
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_png, dpi=150)

if __name__ == "__main__":
    main()
'''


# ---------------------------------------------------------------------------
# Parser

def _add_input_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("input", help="dataset path (file, directory or prefix)")
    sub.add_argument("--format", choices=("auto", "benson", "edgelist"),
                     default="auto", help="input format (default: auto-detect)")
    sub.add_argument("--drop-singletons", action="store_true",
                     help="drop size-1 hyperedges during preprocessing")
    sub.add_argument("--no-lcc", action="store_true",
                     help="keep all components instead of the largest")


def _add_common_options(sub: argparse.ArgumentParser, oracle: bool = True) -> None:
    sub.add_argument("--json", action="store_true",
                     help="print a machine-readable JSON document")
    sub.add_argument("--out", metavar="DIR",
                     help="directory for CSV/JSON output files")
    sub.add_argument("--threads", type=int, default=1,
                     help="worker threads for per-node computations")
    if oracle:
        sub.add_argument("--oracle", action="store_true",
                         help="use the brute-force reference implementations")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercc",
        description="Hypergraph clustering coefficients, motif censuses "
                    "and dataset statistics.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s 0.1.0 ({_kernels.BACKEND} kernels)")
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("stats", help="dataset statistics and provenance")
    _add_input_options(s)
    _add_common_options(s, oracle=False)
    s.set_defaults(func=_cmd_stats)

    s = subs.add_parser("cc", help="per-node clustering coefficients")
    _add_input_options(s)
    s.add_argument("--only", metavar="DEFS",
                   help="comma-separated subset of "
                        f"{{{','.join(DEFINITIONS)}}}")
    _add_common_options(s)
    s.set_defaults(func=_cmd_cc)

    s = subs.add_parser("motifs", help="order-3 motif census")
    _add_input_options(s)
    s.add_argument("--motif-induction", choices=("subset", "intersect"),
                   default="subset",
                   help="which hyperedges shape a triple (default: subset)")
    _add_common_options(s)
    s.set_defaults(func=_cmd_motifs)

    s = subs.add_parser("correlate",
                        help="correlations of the definitions plus scatter data")
    _add_input_options(s)
    _add_common_options(s)
    s.set_defaults(func=_cmd_correlate)

    s = subs.add_parser("hist", help="coefficient histograms on [0, 1]")
    _add_input_options(s)
    s.add_argument("--bins", type=int, default=20,
                   help="number of equal bins on [0, 1] (default: 20)")
    s.add_argument("--only", metavar="DEFS",
                   help="comma-separated subset of definitions")
    _add_common_options(s)
    s.set_defaults(func=_cmd_hist)

    s = subs.add_parser("table1",
                        help="reference 4 x 7 coefficient matrix on the "
                             "rooted order-3 fixtures")
    _add_common_options(s)
    s.set_defaults(func=_cmd_table1)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, PreprocessError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # computation failure
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
