"""
Command line interface.

    schubtorus analyze-msv 3412
    schubtorus analyze-kl --v 123456 --w 245163 --graphs
    schubtorus census kl --n 5 --v-class all --jobs 4
    schubtorus verify no-complexity-one-msv --n 7
    schubtorus export-graph gvw --v 2143 --w 4231 --format dot

Exit codes: 0 success or PASS, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import sys

from .census import THEOREMS, V_CLASSES, kl_census, msv_census, verify
from .digraph import to_dot
from .errors import InconsistencyError, SchubTorusError
from .jsonio import canonical
from .kl import analyze_kl, graph_Gamma, graph_G, graph_tilde_Gamma, graph_tilde_G
from .msv import analyze_msv, graph_Gw
from .perm import parse_permutation

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _perm(text: str):
    try:
        return parse_permutation(text)
    except SchubTorusError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if k < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {k}")
    return k


def _nonnegative(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if k < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {k}")
    return k


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="also write the output to PATH")
    common.add_argument("--verbose", action="store_true", help="progress and timing on stderr")

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "dot"), default="json")

    p = _Parser(prog="schubtorus", description=(
        "Torus actions on matrix Schubert and Kazhdan-Lusztig varieties: "
        "diagrams, weight cones, graphs and complexity."))
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze-msv", parents=[common, fmt],
                       help="invariants of the matrix Schubert variety of w")
    a.add_argument("w", type=_perm)

    k = sub.add_parser("analyze-kl", parents=[common, fmt],
                       help="invariants of the Kazhdan-Lusztig variety KL_{v,w}")
    k.add_argument("--v", type=_perm, required=True)
    k.add_argument("--w", type=_perm, required=True)
    k.add_argument("--graphs", action="store_true", help="include the four graphs")

    c = sub.add_parser("census", parents=[common], help="complexity histogram over S_n")
    c.add_argument("family", choices=("msv", "kl"))
    c.add_argument("--n", type=_positive, required=True)
    c.add_argument("--v-class", choices=V_CLASSES, default="all")
    c.add_argument("--jobs", type=_positive, default=1)

    ids = ", ".join(THEOREMS)
    v = sub.add_parser("verify", parents=[common], help="check a statement exhaustively",
                       description=f"Statements: {ids}.")
    v.add_argument("theorem")
    v.add_argument("--n", type=_positive, required=True)
    v.add_argument("--jobs", type=_positive, default=1)
    v.add_argument("--samples", type=_nonnegative, default=None,
                   help="random extra cases where the statement supports them")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--v-class", choices=V_CLASSES, default=None)

    e = sub.add_parser("export-graph", parents=[common, fmt],
                       help="one graph as DOT or JSON")
    e.add_argument("kind", choices=("gw", "gvw", "gamma"))
    e.add_argument("--w", type=_perm, required=True)
    e.add_argument("--v", type=_perm)
    e.add_argument("--tilde", action="store_true", help="the graph before removing decomposable edges")
    return p


def _emit(text: str, args) -> None:
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _log(args, msg: str) -> None:
    if args.verbose:
        print(msg, file=sys.stderr)


def _cmd_analyze_msv(args) -> int:
    r = analyze_msv(args.w)
    text = to_dot(r.graph, "Gw") if args.format == "dot" else canonical(r.to_json())
    _emit(text, args)
    return EXIT_OK


def _cmd_analyze_kl(args) -> int:
    r = analyze_kl(args.v, args.w)
    if args.format == "dot":
        text = r.dot("G")
    else:
        text = canonical(r.to_json(graphs=args.graphs))
    _emit(text, args)
    return EXIT_OK


def _cmd_export_graph(args) -> int:
    if args.kind == "gw":
        if args.v is not None or args.tilde:
            raise UsageError("export-graph gw takes only --w")
        g, name = graph_Gw(args.w), "Gw"
    else:
        if args.v is None:
            raise UsageError(f"export-graph {args.kind} needs --v")
        if args.kind == "gvw":
            g, name = ((graph_tilde_G(args.v, args.w), "G_tilde") if args.tilde
                       else (graph_G(args.v, args.w), "G"))
        else:
            g, name = ((graph_tilde_Gamma(args.v, args.w), "Gamma_tilde") if args.tilde
                       else (graph_Gamma(args.v, args.w), "Gamma"))
    text = to_dot(g, name) if args.format == "dot" else canonical(g.to_json())
    _emit(text, args)
    return EXIT_OK


def _report(result, args) -> int:
    _log(args, f"{result.task} n={result.n}: {result.verdict}, {result.count} cases"
               f" + {result.sample_count} samples in {result.elapsed:.2f}s")
    _emit(canonical(result.to_json()), args)
    return EXIT_OK if result.passed else EXIT_FAIL


def _cmd_census(args) -> int:
    if args.family == "msv":
        result = msv_census(args.n, jobs=args.jobs)
    else:
        result = kl_census(args.n, args.v_class, jobs=args.jobs)
    return _report(result, args)


def _cmd_verify(args) -> int:
    result = verify(args.theorem, args.n, jobs=args.jobs, samples=args.samples,
                    seed=args.seed, v_class=args.v_class)
    return _report(result, args)


_COMMANDS = {
    "analyze-msv": _cmd_analyze_msv,
    "analyze-kl": _cmd_analyze_kl,
    "census": _cmd_census,
    "verify": _cmd_verify,
    "export-graph": _cmd_export_graph,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except InconsistencyError as exc:
        print(f"schubtorus: internal cross-check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except SchubTorusError as exc:
        print(f"schubtorus: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())
