"""`dom` command line: invariant solving, product construction, theorem sweeps.

Exit codes are a stable contract: 0 success, 1 usage error, 2 parse
error, 3 desk-scale limit exceeded, 4 counterexample found.
"""

from __future__ import annotations

import argparse
import json
import sys

from .formats import (
    GraphFormatError,
    certificate_to_dict,
    emit_certificate,
    emit_report,
    parse_edgelist,
    parse_graph6,
    write_graph6,
)
from .graphs import Graph, LimitExceededError, corona, join
from .harness import THEOREMS, sweep
from .solver import KINDS, solve

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_LIMITS = 3
EXIT_COUNTEREXAMPLE = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the CLI contract wants 1
    def error(self, message):
        raise _UsageError(message)


def _read_graph(args, value: str | None) -> Graph:
    """Resolve one graph operand: inline graph6, file path, or '-' (stdin)."""
    fmt = getattr(args, "format", "graph6")
    if value is None:
        raise _UsageError("missing graph input")
    if value == "-":
        text = sys.stdin.read()
    elif fmt == "edgelist" or getattr(args, "edgelist", None):
        with open(value) as f:
            text = f.read()
        return parse_edgelist(text)
    else:
        text = value
    if fmt == "edgelist":
        return parse_edgelist(text)
    return parse_graph6(text.strip())


def _graph_operand(args) -> Graph:
    if getattr(args, "graph6", None) is not None:
        return parse_graph6(args.graph6)
    if getattr(args, "edgelist", None) is not None:
        with open(args.edgelist) as f:
            return parse_edgelist(f.read())
    if getattr(args, "input", None):
        return _read_graph(args, args.input)
    text = sys.stdin.read()
    if getattr(args, "format", "graph6") == "edgelist":
        return parse_edgelist(text)
    return parse_graph6(text.strip())


def _cmd_invariant(args) -> int:
    g = _graph_operand(args)
    res = solve(g, args.kind, args.allow_equal_replacements)
    if args.json:
        doc = {
            "kind": args.kind,
            "graph6": write_graph6(g),
            "value": res.value,
            "nonexistent": res.nonexistent,
        }
        if args.certificate:
            doc["certificate"] = certificate_to_dict(res.certificate)
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print("nonexistent" if res.nonexistent else res.value)
        if args.certificate:
            print(emit_certificate(res.certificate))
    return EXIT_OK


def _cmd_build(args) -> int:
    g = _read_graph(args, args.left)
    h = _read_graph(args, args.right)
    if args.op == "join":
        print(write_graph6(join(g, h)))
    else:
        gh, layout = corona(g, h)
        if args.layout:
            print(f"# corona layout: g_order={layout.g_order} h_order={layout.h_order}")
            print("# copy vertex j of H^a has id g_order + a*h_order + j")
        print(write_graph6(gh))
    return EXIT_OK


def _cmd_verify(args) -> int:
    kwargs = dict(
        max_order=args.max_order,
        mode=args.mode,
        allow_equal_replacements=args.allow_equal_replacements,
        sample=args.sample,
        seed=args.seed,
        jobs=args.jobs,
    )
    if args.theorem == "thm3.8":
        if args.pg is None or args.ph is None:
            raise _UsageError("thm3.8 requires --pg and --ph")
        kwargs.update(pg=args.pg, ph=args.ph)
    report = sweep(args.theorem, **kwargs)
    if args.json:
        print(emit_report(report))
    else:
        print(
            f"{report.theorem}: {report.checked} checked, {report.skipped} skipped, "
            f"{len(report.counterexamples)} counterexamples "
            f"({report.elapsed:.2f}s)"
        )
        for ce in report.counterexamples:
            print(f"  COUNTEREXAMPLE operands={list(ce.operands)} "
                  f"expected={ce.expected} got={ce.got}")
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def build_parser() -> _Parser:
    parser = _Parser(prog="dom", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariant", help="compute one domination invariant")
    p_inv.add_argument("--kind", choices=KINDS, required=True)
    p_inv.add_argument("--graph6", help="inline graph6 string")
    p_inv.add_argument("--edgelist", help="path to an edge-list file")
    p_inv.add_argument("--input", help="graph6 string or '-' for stdin")
    p_inv.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p_inv.add_argument("--certificate", action="store_true")
    p_inv.add_argument("--allow-equal-replacements", action="store_true",
                       dest="allow_equal_replacements")
    p_inv.add_argument("--json", action="store_true")
    p_inv.set_defaults(func=_cmd_invariant)

    p_build = sub.add_parser("build", help="construct a join or corona product")
    p_build.add_argument("op", choices=("join", "corona"))
    p_build.add_argument("left", help="first operand (graph6, or path with --format edgelist)")
    p_build.add_argument("right", help="second operand")
    p_build.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p_build.add_argument("--layout", action="store_true",
                         help="print the corona layout as comment lines")
    p_build.set_defaults(func=_cmd_build)

    p_ver = sub.add_parser("verify", help="sweep a theorem over an instance family")
    p_ver.add_argument("theorem", choices=THEOREMS)
    p_ver.add_argument("--max-order", type=int, default=4, dest="max_order")
    p_ver.add_argument("--pg", type=int, help="order of G operands (thm3.8)")
    p_ver.add_argument("--ph", type=int, help="order of H operands (thm3.8)")
    p_ver.add_argument("--mode", choices=("statement", "proof", "both"), default="both")
    p_ver.add_argument("--allow-equal-replacements", action="store_true",
                       dest="allow_equal_replacements")
    p_ver.add_argument("--sample", type=int,
                       help="sweep a seeded random family of N instances "
                            "instead of exhaustive enumeration")
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--jobs", type=int, default=1,
                       help="worker cap; output order is deterministic regardless")
    p_ver.add_argument("--json", action="store_true")
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphFormatError, FileNotFoundError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except LimitExceededError as e:
        print(f"limit exceeded: {e}", file=sys.stderr)
        return EXIT_LIMITS


if __name__ == "__main__":
    sys.exit(main())
