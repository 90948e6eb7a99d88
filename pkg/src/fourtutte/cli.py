"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 size guard.
Graph arguments are file paths, ``-`` for stdin, or ``builtin:NAME``.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import corpus, oracles
from .errors import InputError, SizeGuardError
from .expansions import tutte_bivariate, theorem_main_lhs, theorem_main_rhs
from .fourientation import Fourientation, export_dot, las_vergnas_sum
from .graph import fmt_edges, members, parse_graph
from .phi import TIEBREAKS, full_activities, phi_fibers
from .subgraph import gordon_traldi_sum
from .verify import CHECK_NAMES, Case, VerificationReport, run_case

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3

EXPANSIONS = ("gordon-traldi", "las-vergnas", "fourientation-lhs", "fourientation-rhs")


def load_graph(spec):
    """``(name, graph, labels)`` from a path, ``-`` or ``builtin:NAME``."""
    if spec.startswith("builtin:"):
        name = spec.split(":", 1)[1]
        return (name, *corpus.builtin(name))
    if spec == "-":
        return ("stdin", *parse_graph(sys.stdin.read()))
    try:
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {spec}: {exc.strerror}") from None
    return (spec, *parse_graph(text))


def parse_fourientation(text, g):
    if len(text) != g.p:
        raise InputError(f"fourientation {text!r} has length {len(text)}, graph has {g.p} edges")
    return Fourientation.from_string(text)


def _guard(args, default):
    return args.max_edges if args.max_edges is not None else default


def _emit(args, text_out, json_obj):
    if args.format == "json":
        print(json.dumps(json_obj, separators=(",", ":")) if not isinstance(json_obj, str) else json_obj)
    else:
        print(text_out)


def cmd_tutte(args):
    _, g, _ = load_graph(args.graph)
    t = tutte_bivariate(g, _guard(args, 20))
    _emit(args, t.to_text(), t.to_json())
    return EXIT_OK


def cmd_expand(args):
    _, g, lab = load_graph(args.graph)
    which = args.which
    if which == "gordon-traldi":
        p = gordon_traldi_sum(g, _guard(args, 16))
    elif which == "las-vergnas":
        p = las_vergnas_sum(g, _guard(args, 13))
    elif which == "fourientation-lhs":
        p = theorem_main_lhs(g)
    else:
        p = theorem_main_rhs(g, lab, _guard(args, 10))
    _emit(args, p.to_text(), p.to_json())
    return EXIT_OK


def cmd_count(args):
    _, g, lab = load_graph(args.graph)
    n = oracles.named_count(g, args.which, lab, args.max_edges)
    _emit(args, str(n), {"graph": args.graph, "class": args.which, "count": n})
    return EXIT_OK


def _activity_text(g, o, fa):
    lines = [f"fourientation {o.to_string(g)}", f"phi {fmt_edges(fa.phi)}",
             f"I {fmt_edges(fa.I)}", f"L {fmt_edges(fa.L)}"]
    for k in ("i_plus", "i_minus", "i_u", "i_b", "l_plus", "l_minus", "l_u", "l_b"):
        lines.append(f"{k} {fmt_edges(getattr(fa, k))}")
    return "\n".join(lines)


def cmd_phi(args):
    _, g, lab = load_graph(args.graph)
    if args.fibers:
        fibers = phi_fibers(g, lab)
        rows = [{"S": members(s), "fourientations": v} for s, v in fibers.items()]
        # fibers are JSON in either format
        print(json.dumps(rows, separators=(",", ":")))
        return EXIT_OK
    if args.fourientation is None:
        raise InputError("phi needs --fourientation or --fibers")
    o = parse_fourientation(args.fourientation, g)
    fa = full_activities(g, o, lab)
    _emit(args, _activity_text(g, o, fa), {"fourientation": o.to_string(g), **fa.to_dict()})
    return EXIT_OK


def cmd_verify(args):
    specs = args.graphs or [f"builtin:{n}" for n in corpus.ACCEPTANCE_CORPUS]
    only = set(args.checks.split(",")) if args.checks else None
    if only and only - set(CHECK_NAMES):
        raise InputError(f"unknown checks: {', '.join(sorted(only - set(CHECK_NAMES)))}")
    report = VerificationReport()
    for spec in specs:
        name, g, lab = load_graph(spec)
        case = Case(name, g, lab, seed=args.seed, tiebreak=args.mutate or "reference")
        run_case(case, only, report, args.max_edges)
    if args.format == "json":
        print(report.to_json(args.timing))
    else:
        sys.stdout.write(report.to_text(args.timing))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_export_dot(args):
    _, g, _ = load_graph(args.graph)
    o = parse_fourientation(args.fourientation, g)
    sys.stdout.write(export_dot(g, o, styled=not args.plain))
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--max-edges", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="fourtutte", parents=[common],
                                     description="Fourientation activities and Tutte polynomial expansions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tutte", parents=[common], help="print T_G(x, y)")
    p.add_argument("graph")
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("expand", parents=[common], help="print an activity expansion")
    p.add_argument("graph")
    p.add_argument("which", choices=EXPANSIONS)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("count", parents=[common], help="count a class by direct enumeration")
    p.add_argument("graph")
    p.add_argument("which", choices=oracles.COUNT_CLASSES)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("phi", parents=[common], help="phi and activities of a fourientation, or all fibers")
    p.add_argument("graph")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--fourientation", help="status string over + - u b")
    g.add_argument("--fibers", action="store_true")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("graphs", nargs="*", help="graph files or builtin:NAME (default: builtin corpus)")
    p.add_argument("--checks", help=f"comma-separated subset of: {', '.join(CHECK_NAMES)}")
    p.add_argument("--mutate", choices=[t for t in TIEBREAKS if t != "reference"],
                   help="replace the phi tiebreak (mutation test hook)")
    p.add_argument("--timing", action="store_true", help="include wall times (output no longer byte-stable)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", parents=[common], help="DOT drawing of a fourientation")
    p.add_argument("graph")
    p.add_argument("fourientation")
    p.add_argument("--plain", action="store_true", help="no colour or dash styling")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    # shared flags may appear before or after the subcommand
    for name, default in (("format", "text"), ("seed", 0), ("max_edges", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
