"""Command-line interface.

Per-graph results are line-oriented TSV (grep-able); sweep summaries are a
single JSON object (machine-parsable).  Exit codes: 0 success / no
violations, 1 violations found by verify, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .claims import CLAIM_IDS, minimal_order_search, verify_range
from .cycles import circumference, longest_geodesic_cycle
from .enumeration import (
    MAX_GENERATED_N,
    connected_canonical_forms,
    graphs_from_lines,
    read_graph6_stream,
)
from .families import cycle_graph, extremal_graph, multi_sun, sun_graph, tightness_witness
from .graphs import Graph6Error, to_graph6
from .metrics import metric_profile

_ANALYZE_HEADER = "#graph6\tn\trad\tdiam\tcircumference\tgeodesic_cycle"


def _input_stream(spec: str):
    if spec == "-":
        return graphs_from_lines(sys.stdin, "stdin")
    return read_graph6_stream(spec)


def _cmd_analyze(args) -> int:
    figures_dir = args.figures
    if figures_dir:
        from . import viz

        os.makedirs(figures_dir, exist_ok=True)
    print(_ANALYZE_HEADER)
    for idx, g in enumerate(_input_stream(args.input)):
        profile = metric_profile(g)
        rep = circumference(g)
        geo = longest_geodesic_cycle(g)
        row = (
            to_graph6(g),
            str(g.n),
            str(profile.radius),
            str(profile.diameter),
            "-" if rep is None else str(rep.length),
            "-" if geo is None else str(geo.length),
        )
        print("\t".join(row))
        if figures_dir:
            name = os.path.join(figures_dir, f"graph_{idx:04d}.png")
            viz.render_graph(
                g,
                name,
                title=f"n={g.n} rad={profile.radius} diam={profile.diameter}",
            )
    return 0


_FAMILIES = {
    "cycle": (cycle_graph, ("n",)),
    "sun": (sun_graph, ("m", "k")),
    "extremal": (extremal_graph, ("r", "d")),
    "witness": (tightness_witness, ("r",)),
    "multisun": (multi_sun, ("m", "k", "t")),
}


def _cmd_construct(args) -> int:
    builder, params = _FAMILIES[args.family]
    g = builder(*[getattr(args, p) for p in params])
    print(to_graph6(g))
    if args.figure:
        from . import viz

        label = " ".join(f"{p}={getattr(args, p)}" for p in params)
        viz.render_graph(g, args.figure, title=f"{args.family} {label}")
    return 0


def _cmd_enumerate(args) -> int:
    for s in connected_canonical_forms(args.n):
        print(s)
    return 0


def _cmd_verify(args) -> int:
    report = verify_range(
        args.claim,
        max_n=args.max_n,
        input_path=args.input,
        workers=args.workers,
    )
    if args.plot:
        from . import viz

        viz.render_verification(report, args.plot)
    print(json.dumps(report.to_json(), indent=2))
    return 1 if report.violated else 0


def _cmd_minorder(args) -> int:
    result = minimal_order_search(args.r, args.d, cap=args.cap)
    print(json.dumps(result.to_json(), indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclebound",
        description="Exact radius/diameter/circumference analysis, extremal "
        "constructions, and exhaustive claim verification for connected graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="per-graph TSV of metric and cycle invariants")
    p.add_argument("--input", default="-", help="graph6 file, or - for stdin (default)")
    p.add_argument("--figures", metavar="DIR", help="also render one PNG per graph")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("construct", help="emit one family member as graph6")
    fam = p.add_subparsers(dest="family", required=True)
    spec = {
        "cycle": ("the cycle C_n", [("--n", "n")]),
        "sun": ("cycle C_m with one length-k ray per cycle vertex", [("--m", "m"), ("--k", "k")]),
        "extremal": ("radius r, diameter d, circumference exactly 4r-2d", [("--r", "r"), ("--d", "d")]),
        "witness": ("order 3r-1, radius r, no geodesic cycle of length 2r or 2r+1", [("--r", "r")]),
        "multisun": ("cycle C_m with t length-k rays per cycle vertex", [("--m", "m"), ("--k", "k"), ("--t", "t")]),
    }
    for family, (help_text, options) in spec.items():
        fp = fam.add_parser(family, help=help_text)
        for flag, dest in options:
            fp.add_argument(flag, dest=dest, type=int, required=True)
        fp.add_argument("--figure", metavar="FILE", help="also render the graph")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("enumerate", help="all connected isomorphism classes on n vertices")
    p.add_argument("--n", type=int, required=True, help=f"order, 1..{MAX_GENERATED_N}")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="sweep one claim over a graph universe")
    p.add_argument("--claim", choices=CLAIM_IDS, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--max-n", type=int, help="generated universe bound")
    src.add_argument("--input", help="graph6 file universe")
    p.add_argument("--plot", metavar="FILE", help="also render per-order verdict bars")
    p.add_argument("--workers", type=int, help="override CYCLEBOUND_THREADS")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("minorder", help="minimal order attaining a radius/diameter pair")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--cap", type=int, default=9, help="largest order to scan (default 9)")
    p.set_defaults(func=_cmd_minorder)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, ValueError, OSError) as exc:
        print(f"cyclebound: error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
