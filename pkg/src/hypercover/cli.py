"""Command-line front end: symmetric bases, theorem checks and automorphism groups.

Exit codes: 0 success (including a NOT-EXISTS answer), 1 a mathematical check
failed, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import graphio
from .quadratic import FormType, standard_form
from .symmetric_basis import MAX_BRUTE_FORCE_DIM, brute_force_symmetric_basis, construct_symmetric_basis
from .symmetry import (
    CHECK_GROUPS,
    automorphism_group,
    cycle_notation,
    is_2_arc_transitive,
    is_vertex_transitive,
    verify_main_theorem,
)
from .symmetry.certificates import MAX_VERIFY_R
from .cayley import symmetric_cayley_graph

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2
DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def _form_type(text: str) -> FormType:
    try:
        return FormType.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown form type {text!r} (use hyperbolic/elliptic or +/-)") from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", choices=("json", "table"), default=argparse.SUPPRESS, help="output format (default json)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help=f"seed for randomised steps (default {DEFAULT_SEED})")
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS, help="worker threads (search runs sequentially; recorded only)")

    parser = argparse.ArgumentParser(prog="hypercover", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", parents=[common], help="symmetric basis of the standard form of given rank and type")
    p.add_argument("r", type=_positive)
    p.add_argument("type", type=_form_type, metavar="TYPE", help="hyperbolic (+) or elliptic (-)")
    p.add_argument("--method", choices=("construct", "brute"), default="construct")

    p = sub.add_parser("verify", parents=[common], help="check Γ(r) = Cay(G, S) for symmetric generators")
    p.add_argument("r", type=_positive)
    p.add_argument("--checks", choices=sorted(CHECK_GROUPS), default="all")
    p.add_argument("--export-graph", metavar="PATH", help="write Γ(r) in graph6 to PATH")

    p = sub.add_parser("aut", parents=[common], help="automorphism group of a graph read from a file")
    p.add_argument("path")
    p.add_argument("--format", choices=("graph6", "edges", "json"), default="graph6")
    return parser


def _emit(payload: dict, table: str, fmt: str) -> None:
    if fmt == "table":
        print(table)
    else:
        print(json.dumps(payload, indent=2))


def cmd_basis(args) -> int:
    t: FormType = args.type
    if args.method == "brute":
        if 2 * args.r > MAX_BRUTE_FORCE_DIM:
            raise UsageError(f"--method=brute supports 2r <= {MAX_BRUTE_FORCE_DIM}")
        result = brute_force_symmetric_basis(standard_form(args.r, t))
    else:
        if args.r > 32:
            raise UsageError("r must be at most 32")
        result = construct_symmetric_basis(args.r, t)
    head = {"command": "basis", "r": args.r, "type": t.value, "method": args.method}
    if not result:
        _emit({**head, "exists": False, "reason": result.reason}, f"NOT-EXISTS: {result.reason}", args.out)
        return EXIT_OK
    table = f"symmetric basis, r = {args.r}, {t.value} ({args.method})\n" + result.table()
    _emit({**head, "exists": True, **result.to_json()}, table, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if not 1 <= args.r <= MAX_VERIFY_R:
        raise UsageError(f"verify supports 1 <= r <= {MAX_VERIFY_R}")
    t0 = time.perf_counter()
    report = verify_main_theorem(args.r, CHECK_GROUPS[args.checks], seed=args.seed)
    if args.export_graph:
        try:
            with open(args.export_graph, "w", encoding="ascii") as fh:
                fh.write(graphio.to_graph6(symmetric_cayley_graph(args.r)) + "\n")
        except OSError as exc:
            raise UsageError(f"cannot write {args.export_graph}: {exc}") from None
    payload = {
        "command": "verify",
        "inputs": {"r": args.r, "checks": args.checks, "seed": args.seed, "threads": args.threads},
        **report.to_json(),
        "seconds": round(time.perf_counter() - t0, 4),
    }
    lines = [f"verify r = {args.r} ({args.checks})"]
    for c in report.checks:
        lines.append(f"  {'PASS' if c.ok else 'FAIL'}  {c.name:<8} {c.detail}  [{c.seconds:.3f}s]")
        if c.witness:
            lines.append(f"        witness: {c.witness}")
    lines.append("all checks passed" if report.ok else "some checks FAILED")
    _emit(payload, "\n".join(lines), args.out)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_aut(args) -> int:
    try:
        graph = graphio.read_graph(args.path, args.format)
    except (OSError, UnicodeDecodeError, ValueError) as exc:
        raise UsageError(f"cannot read {args.path}: {exc}") from None
    result = automorphism_group(graph)
    group = result.group
    vt = is_vertex_transitive(graph, group)
    try:
        two_at = is_2_arc_transitive(graph, group)
    except ValueError:
        two_at = None
    payload = {
        "command": "aut",
        "n": graph.n,
        "edges": graph.num_edges,
        "order": result.order,
        "generators": [cycle_notation(g) for g in result.generators],
        "vertex_transitive": vt,
        "two_arc_transitive": two_at,
        "seconds": round(result.stats.seconds, 4),
    }
    lines = [
        f"n = {graph.n}, m = {graph.num_edges}",
        f"|Aut| = {result.order}",
        f"vertex-transitive: {vt}",
        f"2-arc-transitive: {'n/a' if two_at is None else two_at}",
        "generators:",
    ] + [f"  {cycle_notation(g)}" for g in result.generators]
    _emit(payload, "\n".join(lines), args.out)
    return EXIT_OK


COMMANDS = {"basis": cmd_basis, "verify": cmd_verify, "aut": cmd_aut}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("out", "json"), ("seed", DEFAULT_SEED), ("threads", 1)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"hypercover {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
