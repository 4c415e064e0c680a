"""Command-line front end: ``spinpst analyze | trace | verify``.

Exit codes: 0 success, 2 when the network is not layer-regular from the
chosen reference vertex, 1 for any other failure (including usage errors).
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .documents import dump_report, load_document
from .errors import QuotientClosureViolation, SpinNetworkError
from .fidelity import DEFAULT_TOLERANCE, amplitude, default_window, pst_search, trace
from .network import SpinNetwork, build_demo
from .oracle import amplitude_full
from .spectral import gauss_measure
from .stratification import reduce, stratify

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_LAYER_REGULAR = 2

AGREEMENT_TOLERANCE = 1e-9
RESIDUAL_SAMPLES = 64


def analyze_network(net: SpinNetwork, t_max: Optional[float] = None,
                    tolerance: float = DEFAULT_TOLERANCE) -> dict:
    """Run stratify -> reduce -> measure -> PST search -> oracle cross-check."""
    strat = stratify(net)
    j = reduce(net)
    m = gauss_measure(j)
    window = default_window(m) if t_max is None else t_max
    cert = pst_search(j, m, window, tolerance)

    times = np.append(np.linspace(0.0, window, RESIDUAL_SAMPLES), cert.time)
    quotient = amplitude(j, m, j.depth, times)
    full = amplitude_full(net, times, layer=j.depth)
    residual = float(np.max(np.abs(quotient - full)))

    return {
        "network": {
            "vertices": net.vertex_count,
            "edges": net.edge_count,
            "reference": net.reference,
            "scale": net.scale,
            "adjacency_mode": net.adjacency_mode,
        },
        "strata_sizes": list(strat.sizes),
        "omega": list(j.omega),
        "alpha": list(j.alpha),
        "measure": {"atoms": m.atoms.tolist(), "weights": m.weights.tolist()},
        "pst": {
            "time": cert.time,
            "deficit": cert.deficit,
            "achieved": cert.achieved,
            "target_is_single_vertex": cert.target_is_single_vertex,
            "target_layer": j.depth,
            "search_window": window,
            "tolerance": cert.tolerance,
        },
        "oracle_residual": residual,
    }


def verify_network(net: SpinNetwork, trials: int, seed: int, t_max: Optional[float] = None) -> dict:
    """Quotient-vs-oracle agreement on the antipodal layer at seeded random times."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    j = reduce(net)
    m = gauss_measure(j)
    window = 2.0 * math.pi if t_max is None else t_max
    times = np.random.default_rng(seed).uniform(0.0, window, trials)
    diff = np.abs(amplitude(j, m, j.depth, times) - amplitude_full(net, times, layer=j.depth))
    worst = int(np.argmax(diff))
    return {
        "trials": trials,
        "seed": seed,
        "target_layer": j.depth,
        "target_layer_size": j.layer_sizes[-1],
        "max_residual": float(diff[worst]),
        "worst_time": float(times[worst]),
        "passed": bool(diff[worst] <= AGREEMENT_TOLERANCE),
    }


def write_trace_csv(tr, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["t", "re_f", "im_f", "abs_f"])
    for t, f in zip(tr.times, tr.amplitudes):
        writer.writerow([_fmt(t), _fmt(f.real), _fmt(f.imag), _fmt(abs(f))])


def _fmt(x: float) -> str:
    return f"{float(x) + 0.0:.12g}"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spinpst", description="Perfect state transfer analysis of spin networks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def network_args(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--demo", help="builder name: chain:N, hypercube:d, w-network, "
                                        "tree7, tree16, star5, circulant6")
        src.add_argument("--input", type=Path, help="network document (JSON)")
        p.add_argument("--reference", type=int, help="override the reference vertex")
        p.add_argument("--scale", type=float, help="override the global coupling scale")

    p = sub.add_parser("analyze", help="Jacobi reduction, spectral measure and PST certificate")
    network_args(p)
    p.add_argument("--t-max", type=float, help="search window (default: spectral period)")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p.add_argument("--out", type=Path, help="also write the report here")

    p = sub.add_parser("trace", help="sample the antipodal amplitude to CSV")
    network_args(p)
    p.add_argument("--t-start", type=float, default=0.0)
    p.add_argument("--t-end", "--t-max", dest="t_end", type=float,
                   help="end of the window (default: spectral period)")
    p.add_argument("--samples", type=int, default=1001)
    p.add_argument("--out", type=Path, help="CSV path (default: stdout)")

    p = sub.add_parser("verify", help="check quotient amplitudes against full-space evolution")
    network_args(p)
    p.add_argument("--trials", type=_positive_int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--t-max", type=float, help="sample times from [0, t_max] (default 2 pi)")
    return parser


def _resolve_network(args) -> SpinNetwork:
    net = build_demo(args.demo) if args.demo else load_document(args.input)
    if args.reference is not None:
        net = net.with_reference(args.reference)
    if args.scale is not None:
        net = net.with_scale(args.scale)
    return net


def _run(args) -> int:
    net = _resolve_network(args)
    if args.command == "analyze":
        text = dump_report(analyze_network(net, args.t_max, args.tolerance))
        sys.stdout.write(text)
        if args.out is not None:
            args.out.write_text(text, encoding="utf-8")
        return EXIT_OK

    if args.command == "trace":
        j = reduce(net)
        m = gauss_measure(j)
        t_end = default_window(m) if args.t_end is None else args.t_end
        tr = trace(j, m, j.depth, args.t_start, t_end, args.samples)
        if args.out is None:
            write_trace_csv(tr, sys.stdout)
        else:
            buf = io.StringIO()
            write_trace_csv(tr, buf)
            try:
                args.out.write_text(buf.getvalue(), encoding="utf-8")
            except OSError as exc:
                raise OSError(f"cannot write {args.out}: {exc.strerror or exc}") from None
        return EXIT_OK

    result = verify_network(net, args.trials, args.seed, args.t_max)
    sys.stdout.write(dump_report(result))
    if not result["passed"]:
        print(f"verify: residual {result['max_residual']:.3e} at t = {result['worst_time']:.12g} "
              f"exceeds {AGREEMENT_TOLERANCE:g}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    try:
        return _run(args)
    except QuotientClosureViolation as exc:
        print(f"QuotientClosureViolation: {exc}", file=sys.stderr)
        return EXIT_NOT_LAYER_REGULAR
    except (SpinNetworkError, ValueError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
