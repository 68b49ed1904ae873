"""Command-line front end: ``uassoc <command> ...``.

Every command writes deterministic output (canonical ordering, fixed seed)
to stdout or to ``-o FILE``.  Errors go to stderr as a single line
``uassoc: error[<kind>]: <message>`` and set the exit status:

=====  ==========================================
  2    bad flags or arguments
  3    invalid point input
  4    d o d != 0 or no passing sign convention
  5    input/output failure
=====  ==========================================
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from . import chain as ch
from . import homology as hm
from . import points as pt
from . import trees as tr

EXIT_USAGE = 2
EXIT_POINT = 3
EXIT_SIGN = 4
EXIT_IO = 5


class CliError(Exception):
    def __init__(self, kind: str, message: str, code: int):
        super().__init__(message)
        self.kind = kind
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would print usage and exit 2
        raise CliError("usage", message, EXIT_USAGE)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _prime(text: str) -> int:
    p = _nonneg(text)
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise argparse.ArgumentTypeError(f"modulus must be prime, got {p}")
    return p


def _convention(text: str) -> ch.SignConvention:
    try:
        return ch.SignConvention.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _tree(text: str) -> tr.Tree:
    try:
        return tr.parse_tree(text)
    except tr.TreeSyntaxError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# ------------------------------------------------------------- commands

def cmd_trees(args) -> str:
    if args.cells:
        if args.max_corks is None:
            raise CliError("usage", "--cells needs --max-corks", EXIT_USAGE)
        found = tr.enumerate_cell_trees(args.leaves, args.max_corks, allow_white=True)
        found.sort(key=ch.sort_key)
    else:
        corks = args.corks if args.corks is not None else 0
        if args.max_corks is not None:
            raise CliError("usage", "--max-corks applies to --cells", EXIT_USAGE)
        if args.action == "count":
            return f"{tr.count_binary(args.leaves, corks)}\n"
        found = tr.enumerate_binary(args.leaves, corks)
    if args.action == "count":
        return f"{len(found)}\n"
    texts = [tr.serialize_tree(t) for t in found]
    if args.format == "text":
        return "".join(t + "\n" for t in texts)
    return _dump(texts)


def _read_point(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError("io", f"cannot read {path}: {exc.strerror}", EXIT_IO) from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError("point", f"{path}: invalid JSON ({exc.msg})", EXIT_POINT) from None
    try:
        return pt.point_from_dict(data)
    except pt.InvalidPointError as exc:
        raise CliError("point", f"{path}: {exc}", EXIT_POINT) from None


def cmd_point(args) -> str:
    pts = [_read_point(f) for f in args.files]
    if args.action == "normalize":
        return _dump(pt.normal_form(pts[0]).to_dict())
    if args.action == "equivalent":
        return _dump(pt.equivalent(*pts))
    try:
        result = pt.compose_point(pts[0], args.slot, pts[1])
    except IndexError as exc:
        raise CliError("usage", str(exc), EXIT_USAGE) from None
    return _dump(result.to_dict())


def cmd_chain(args) -> str:
    conv = args.convention
    if args.action == "diff":
        if args.tree is None:
            raise CliError("usage", "chain diff needs --tree", EXIT_USAGE)
        try:
            x = ch.diff_tree(args.tree, conv)
        except ch.InvalidCellTreeError as exc:
            raise CliError("usage", str(exc), EXIT_USAGE) from None
        if args.mod:
            x = x.reduce(args.mod)
        return x.to_json() + "\n"
    if args.action == "d2check":
        try:
            report = ch.validate_sign_convention(args.max_weight)
        except ch.SignConventionError as exc:
            raise CliError("sign", str(exc), EXIT_SIGN) from None
        except ValueError as exc:
            raise CliError("usage", str(exc), EXIT_USAGE) from None
        rows = []
        bad = 0
        for g in ch.generators(args.max_weight):
            ok = not ch.d_squared(g, conv)
            bad += not ok
            rows.append({"generator": str(g), "tree": tr.serialize_tree(g.tree),
                         "degree": g.degree, "passes": ok})
        out = {"convention": conv.label(), "passes": bad == 0,
               "generators": rows, "validation": report.to_dict()}
        if bad:
            args.exit_code = EXIT_SIGN
        return _dump(out)
    # axioms
    fails = ch.axiom_violations(random.Random(args.seed), args.trials, conv)
    out = {"seed": args.seed, "trials": args.trials, "convention": conv.label(),
           "failures": fails, "passes": not any(fails.values())}
    if not out["passes"]:
        args.exit_code = EXIT_SIGN
    return _dump(out)


def cmd_homology(args) -> str:
    try:
        return _dump(hm.report(args.arity, args.max_corks, args.convention, args.mod))
    except hm.ChainComplexError as exc:
        raise CliError("d2", str(exc), EXIT_SIGN) from None


def cmd_export(args) -> str:
    try:
        c = hm.build_complex(args.arity, args.max_corks, args.convention)
    except hm.ChainComplexError as exc:
        raise CliError("d2", str(exc), EXIT_SIGN) from None
    if args.format == "dot":
        return hm.graph_to_dot(c)
    return hm.graph_to_json(c)


# --------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    conv = _Parser(add_help=False)
    conv.add_argument("--convention", type=_convention, default="validated",
                      help="sign convention: printed, printed-m0, validated or a 7-bit vector")

    p = _Parser(prog="uassoc", description="Unital associahedra: trees, points, chains, homology.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("trees", parents=[common], help="enumerate or count trees")
    t.add_argument("action", choices=("enum", "count"))
    t.add_argument("--leaves", type=_nonneg, required=True)
    t.add_argument("--corks", type=_nonneg)
    t.add_argument("--max-corks", type=_nonneg)
    kind = t.add_mutually_exclusive_group()
    kind.add_argument("--binary", action="store_true", help="binary trees with black corks (default)")
    kind.add_argument("--cells", action="store_true", help="cell trees with black and white corks")
    t.add_argument("--format", choices=("json", "text"), default="json")
    t.set_defaults(func=cmd_trees)

    q = sub.add_parser("point", help="normalize, compose or compare points")
    qsub = q.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for action, files, text in (("normalize", ["file"], "canonical representative"),
                                ("compose", ["left", "right"], "operadic composition"),
                                ("equivalent", ["left", "right"], "same class?")):
        a = qsub.add_parser(action, parents=[common], help=text)
        a.add_argument("files", nargs=len(files), metavar=tuple(files),
                       help="JSON point files ('-' for stdin)")
        if action == "compose":
            a.add_argument("--slot", type=_nonneg, required=True)
        a.set_defaults(func=cmd_point)

    c = sub.add_parser("chain", parents=[common, conv], help="differential and sign checks")
    c.add_argument("action", choices=("diff", "d2check", "axioms"))
    c.add_argument("--tree", type=_tree)
    c.add_argument("--max-weight", type=_nonneg, default=8)
    c.add_argument("--mod", type=_prime)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--trials", type=_nonneg, default=200)
    c.set_defaults(func=cmd_chain)

    h = sub.add_parser("homology", parents=[common, conv], help="f-vector and homology of K^u_{n,m}")
    h.add_argument("--arity", type=_nonneg, required=True)
    h.add_argument("--max-corks", type=_nonneg, default=0)
    h.add_argument("--mod", type=_prime)
    h.set_defaults(func=cmd_homology)

    e = sub.add_parser("export", parents=[common, conv], help="face graph as DOT or JSON")
    e.add_argument("--arity", type=_nonneg, required=True)
    e.add_argument("--max-corks", type=_nonneg, default=0)
    e.add_argument("--format", choices=("dot", "json"), default="dot")
    e.set_defaults(func=cmd_export)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.exit_code = 0
        text = args.func(args)
        if args.output:
            try:
                with open(args.output, "w", encoding="utf-8") as fh:
                    fh.write(text)
            except OSError as exc:
                raise CliError("io", f"cannot write {args.output}: {exc.strerror}", EXIT_IO) from None
        else:
            sys.stdout.write(text)
        return args.exit_code
    except CliError as exc:
        sys.stderr.write(f"uassoc: error[{exc.kind}]: {exc}\n")
        return exc.code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
