"""Command-line harness: dataset ingestion, precision experiments, alpha
sweeps, and format conversion.

Exit codes: 0 success, 1 usage error, 2 data/parse error, 3 runtime error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import re
import sys
from pathlib import Path

from . import __version__
from .errors import ParseError, WeaktiesError
from .experiment import (alpha_sweep, find_optimal_alpha, parse_grid,
                         run_realizations)
from .graph import build_graph
from .indices import Family, IndexSpec
from .ingest import (load_records, newman_coauthorship_weights, parse_papers,
                     read_text)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_RUNTIME = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let grid specs like -1.5:1.5:0.05 parse as values, not flags
        self._negative_number_matcher = re.compile(
            r"^-\d+(\.\d+)?(:.*)?$")

    def error(self, message):
        raise _UsageError(message)


def _sha256_file(path: Path) -> str:
    h = hashlib.sha256()
    with path.open("rb") as f:
        for chunk in iter(lambda: f.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()


def _add_common(p: _Parser) -> None:
    p.add_argument("--data", required=True, help="dataset file path")
    p.add_argument("--format", required=True,
                   choices=["pajek", "edgelist", "papers"],
                   help="dataset file format")
    p.add_argument("--index", required=True, choices=["cn", "aa", "ra"],
                   help="similarity family")
    p.add_argument("--runs", type=int, default=100,
                   help="number of split realizations (default 100)")
    p.add_argument("--top", "-L", dest="L", type=int, default=100,
                   help="precision cutoff L (default 100)")
    p.add_argument("--probe-fraction", type=float, default=0.1,
                   help="held-out edge fraction (default 0.1)")
    p.add_argument("--seed", type=int, default=0, help="master RNG seed")
    p.add_argument("--output-format", choices=["csv", "json"], default="csv")
    p.add_argument("--verify-counts", metavar="N,M",
                   help="assert node,edge counts after load")
    p.add_argument("--threads", type=int, default=1,
                   help="worker threads for realizations (0 = auto)")


def _build_parser() -> _Parser:
    parser = _Parser(prog="weakties",
                     description="Link prediction on weighted networks with "
                                 "local similarity indices")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="run the split/rank/precision "
                            "protocol for one index")
    _add_common(p_eval)
    p_eval.add_argument("--mode", choices=["unweighted", "weighted"],
                        default="unweighted")
    p_eval.add_argument("--alpha", type=float, default=1.0,
                        help="weight exponent for --mode weighted "
                             "(default 1.0)")
    p_eval.add_argument("--output", default="weakties_report.csv",
                        help="report file path")

    p_sweep = sub.add_parser("sweep", help="sweep the weight exponent and "
                             "locate the optimum")
    _add_common(p_sweep)
    p_sweep.add_argument("--grid", default="-1.5:1.5:0.05",
                         help="alpha grid as min:max:step "
                              "(default -1.5:1.5:0.05)")
    p_sweep.add_argument("--output", default="weakties_sweep.csv",
                         help="curve file path")
    p_sweep.add_argument("--plot", nargs="?", const="", default=None,
                         metavar="PATH",
                         help="also render the precision-vs-alpha figure "
                              "(default path: output with .png suffix)")
    p_sweep.add_argument("--no-plot", action="store_true",
                         help="suppress figure rendering")

    p_conv = sub.add_parser("convert", help="convert any input format to a "
                            "canonical weighted edge list")
    p_conv.add_argument("--input", required=True)
    p_conv.add_argument("--format", required=True,
                        choices=["pajek", "edgelist", "papers"])
    p_conv.add_argument("--output", required=True)
    return parser


def _load_graph(args):
    path = Path(args.data)
    labels, records = load_records(path, args.format)
    g = build_graph(records, labels=labels)
    print(f"dataset: {path}")
    print(f"sha256: {_sha256_file(path)}")
    print(f"nodes: {g.node_count}  edges: {g.edge_count}")
    if args.verify_counts:
        try:
            want_n, want_m = (int(v) for v in args.verify_counts.split(","))
        except ValueError:
            raise _UsageError(
                f"--verify-counts expects N,M, got {args.verify_counts!r}")
        if (g.node_count, g.edge_count) != (want_n, want_m):
            raise WeaktiesError(
                f"count mismatch: expected {want_n} nodes / {want_m} edges, "
                f"loaded {g.node_count} / {g.edge_count}")
    return g


def _banner(args, extra: str = "") -> None:
    cfg = (f"index={args.index} runs={args.runs} L={args.L} "
           f"probe_fraction={args.probe_fraction} seed={args.seed} "
           f"threads={args.threads}")
    print(f"config: {cfg}{extra}")


def _mode_fields(spec: IndexSpec) -> tuple[str, str]:
    if spec.weighted:
        return "weighted", f"{spec.alpha:.6f}"
    return "unweighted", ""


def _write_report(report, args) -> None:
    mode, alpha = _mode_fields(report.spec)
    row = {
        "index": report.spec.family.value,
        "mode": mode,
        "alpha": alpha,
        "L": report.L,
        "n_runs": report.n_runs,
        "probe_fraction": f"{report.probe_fraction:.6f}",
        "seed": report.master_seed,
        "mean_precision": f"{report.mean:.6f}",
        "std_precision": f"{report.std:.6f}",
    }
    out = Path(args.output)
    if args.output_format == "csv":
        with out.open("w", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=list(row),
                                    lineterminator="\n")
            writer.writeheader()
            writer.writerow(row)
    else:
        with out.open("w", newline="") as f:
            json.dump(row, f, indent=2)
            f.write("\n")


def _write_curve(curve, args) -> None:
    rows = [{
        "alpha": f"{alpha:.6f}",
        "mean_precision": f"{rep.mean:.6f}",
        "std_precision": f"{rep.std:.6f}",
        "n_runs": rep.n_runs,
    } for alpha, rep in zip(curve.grid, curve.reports)]
    out = Path(args.output)
    if args.output_format == "csv":
        with out.open("w", newline="") as f:
            writer = csv.DictWriter(
                f, fieldnames=["alpha", "mean_precision", "std_precision",
                               "n_runs"], lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
    else:
        with out.open("w", newline="") as f:
            json.dump(rows, f, indent=2)
            f.write("\n")


def _parenthetical(mean: float, std: float) -> str:
    return f"{mean:.3f}({round(std * 1000)})"


def cmd_eval(args) -> int:
    g = _load_graph(args)
    if args.mode == "weighted":
        spec = IndexSpec(Family(args.index), args.alpha)
    else:
        spec = IndexSpec(Family(args.index))
    _banner(args, extra=f" mode={args.mode}"
            + (f" alpha={args.alpha:g}" if args.mode == "weighted" else ""))
    report = run_realizations(g, spec, args.runs, args.L,
                              args.probe_fraction, args.seed,
                              n_workers=args.threads)
    _write_report(report, args)
    print(f"{spec.describe()} precision: "
          f"{_parenthetical(report.mean, report.std)}")
    print(f"report written to {args.output}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    g = _load_graph(args)
    try:
        grid = parse_grid(args.grid)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    _banner(args, extra=f" grid={args.grid}")
    curve = alpha_sweep(g, Family(args.index), grid, args.runs, args.L,
                        args.probe_fraction, args.seed,
                        n_workers=args.threads)
    _write_curve(curve, args)
    a_star, p_star = find_optimal_alpha(curve)
    print(f"optimal alpha: {a_star:.2f}  precision: {p_star:.3f}")
    print(f"curve written to {args.output}")
    if not args.no_plot:
        from .plotting import plot_sweep
        plot_path = (Path(args.plot) if args.plot
                     else Path(args.output).with_suffix(".png"))
        plot_sweep(curve, plot_path,
                   title=f"{Path(args.data).name} / {args.index.upper()}")
        print(f"figure written to {plot_path}")
    return EXIT_OK


def cmd_convert(args) -> int:
    path = Path(args.input)
    if args.format == "papers":
        records = list(newman_coauthorship_weights(
            parse_papers(read_text(path))))
        labels = None
    else:
        labels, records = load_records(path, args.format)
    g = build_graph(records, labels=labels)
    rows = sorted((min(g.labels[x], g.labels[y]),
                   max(g.labels[x], g.labels[y]), w)
                  for x, y, w in g.edges())
    with Path(args.output).open("w", newline="") as f:
        for a, b, w in rows:
            f.write(f"{a}\t{b}\t{w:.12g}\n")
    print(f"wrote {len(rows)} edges to {args.output}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "eval":
            return cmd_eval(args)
        if args.command == "sweep":
            return cmd_sweep(args)
        return cmd_convert(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, FileNotFoundError, OSError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except WeaktiesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - defensive
        print(f"runtime error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
