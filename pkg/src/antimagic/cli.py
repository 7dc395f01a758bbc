"""Command-line entry point.

Exit codes: 0 success, 1 predicate false (not antimagic, no clique, no
witness), 2 usage or parse error, 3 precondition failure, 4 search budget
or oracle cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .cliques import (
    CliqueError,
    PreconditionError,
    SearchBudgetExceeded,
    check_preconditions,
    dominating_clique,
    find_dominating_cliques,
    parse_clique,
)
from .generators import (
    BarrusSpec,
    GenerationError,
    InstanceSpec,
    TARGETS,
    gen_barrus,
    gen_precondition_instance,
)
from .graph import GraphFormatError, format_graph, parse_graph
from .labelling import (
    LabellingError,
    format_labelling,
    format_report,
    make_report,
    parse_labelling,
)
from .oracle import OracleCapExceeded, brute_force_antimagic, min_c
from .theorem4 import label_theorem4
from .theorem5 import label_theorem5

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_PRECONDITION, EXIT_LIMIT = 0, 1, 2, 3, 4
CLIQUE_TAG = "# clique:"


class UsageError(Exception):
    pass


def _read(path: str, stdin_used: list[bool]) -> str:
    if path == "-":
        if stdin_used[0]:
            raise UsageError("stdin ('-') can be used for only one input")
        stdin_used[0] = True
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _embedded_clique(text: str) -> list[int] | None:
    for line in text.splitlines():
        if line.strip().startswith(CLIQUE_TAG):
            return parse_clique(line.strip()[len(CLIQUE_TAG):])
    return None


def _labelling_rows(labels) -> list[list[int]]:
    return [[u, v, lab] for (u, v), lab in sorted(labels.items())]


def _cmd_label(args, out) -> int:
    text = _read(args.graph, [False])
    g = parse_graph(text)
    members = parse_clique(args.clique) if args.clique is not None else _embedded_clique(text)
    if members is None:
        raise UsageError("no clique given: pass --clique or include a '# clique:' line")
    kq = dominating_clique(g, members)

    if args.method == "t4":
        res = label_theorem4(g, kq, strict=args.strict)
        labels, c = res.labelling.labels, 0
        extra = {"gamma": res.certificate.gamma_value}
        trace = [s.to_line() for s in res.trace]
    else:
        res = label_theorem5(g, kq)
        labels, c = res.labelling.labels, res.c_used
        extra = {}
        trace = res.trace.to_lines()
    report = make_report(g, labels, c, **extra)

    if args.json:
        payload = {"method": args.method, "clique": list(kq.members),
                   "labelling": _labelling_rows(labels), **report.to_dict()}
        if args.trace:
            payload["trace"] = trace
        json.dump(payload, out)
        out.write("\n")
    else:
        out.write(format_labelling(labels))
        out.write(format_report(report))
        if args.trace:
            out.writelines(f"trace: {line}\n" for line in trace)
    return EXIT_OK if report.antimagic else EXIT_FALSE


def _cmd_verify(args, out) -> int:
    stdin_used = [False]
    g = parse_graph(_read(args.graph, stdin_used))
    labels = parse_labelling(_read(args.labelling, stdin_used), g)
    if len(labels) != g.m:
        raise LabellingError(f"labelling covers {len(labels)} of {g.m} edges")
    report = make_report(g, labels, args.c)
    if args.json:
        json.dump(report.to_dict(), out)
        out.write("\n")
    else:
        out.write(format_report(report))
    return EXIT_OK if report.antimagic else EXIT_FALSE


def _cmd_find_clique(args, out) -> int:
    g = parse_graph(_read(args.graph, [False]))
    kmax = args.kmax if args.kmax is not None else g.n
    found = find_dominating_cliques(g, args.kmin, kmax, budget=args.budget)
    if args.json:
        rows = []
        for kq in found:
            row: dict[str, object] = {"clique": list(kq.members)}
            if args.check:
                row["preconditions"] = check_preconditions(g, kq).to_dict()
            rows.append(row)
        json.dump(rows, out)
        out.write("\n")
    else:
        for kq in found:
            line = str(kq)
            if args.check:
                rep = check_preconditions(g, kq)
                line += (f"  theorem4={'yes' if rep.theorem4_ok else 'no'}"
                         f" theorem5={'yes' if rep.theorem5_ok else 'no'}"
                         f" alpha={rep.alpha} beta={rep.beta}")
            out.write(line + "\n")
    return EXIT_OK if found else EXIT_FALSE


def _cmd_oracle(args, out) -> int:
    g = parse_graph(_read(args.graph, [False]))
    if args.min_c is not None:
        res = min_c(g, args.min_c, m_cap=args.cap)
    else:
        res = brute_force_antimagic(g, args.c, m_cap=args.cap)
    if args.json:
        payload: dict[str, object] = {
            "found": res.found,
            "c_used": res.c_used,
            "search_space_size": res.search_space_size,
            "labelling": _labelling_rows(res.witness.labels) if res.witness else None,
        }
        json.dump(payload, out)
        out.write("\n")
    elif res.found:
        out.write(format_labelling(res.witness))
        out.write(format_report(make_report(g, res.witness, res.c_used)))
    else:
        out.write("none\n")
    return EXIT_OK if res.found else EXIT_FALSE


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _cmd_generate(args, out) -> int:
    if args.family == "barrus":
        g, kq = gen_barrus(BarrusSpec(args.a_size, args.b_size, args.c_size,
                                      args.a_prob, args.c_prob, args.seed))
    else:
        if args.n is None or args.k is None:
            raise UsageError("--family precond needs --n and --k")
        g, kq = gen_precondition_instance(InstanceSpec(args.n, args.k, args.p, args.seed, args.target))
    if args.json:
        json.dump({"n": g.n, "edges": [list(e) for e in g.edges], "clique": list(kq.members)}, out)
        out.write("\n")
    else:
        out.write(format_graph(g))
        out.write(f"{CLIQUE_TAG} {kq}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antimagic",
        description="Antimagic labellings of graphs with a dominating clique.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("label", help="label a graph constructively")
    p.add_argument("graph", help="edge-list file, or '-' for stdin")
    p.add_argument("--method", choices=("t4", "t5"), required=True)
    p.add_argument("--clique", help="space-separated clique vertices (default: '# clique:' line)")
    p.add_argument("--strict", action="store_true", help="refuse inputs outside the hypothesis (t4)")
    p.add_argument("--trace", action="store_true", help="append the construction trace")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_label)

    p = sub.add_parser("verify", help="check a labelling")
    p.add_argument("graph")
    p.add_argument("labelling")
    p.add_argument("--c", type=int, default=0, help="slack C (default 0)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("find-clique", help="list dominating cliques")
    p.add_argument("graph")
    p.add_argument("--kmin", type=int, default=1)
    p.add_argument("--kmax", type=int)
    p.add_argument("--budget", type=int, default=10**7)
    p.add_argument("--check", action="store_true", help="also report labeller preconditions")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_find_clique)

    p = sub.add_parser("oracle", help="brute-force search for a witness")
    p.add_argument("graph")
    p.add_argument("--c", type=int, default=0)
    p.add_argument("--cap", type=int, default=10, help="refuse graphs with more edges")
    p.add_argument("--min-c", type=int, metavar="CMAX", help="find the smallest C <= CMAX instead")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("generate", help="emit a seeded instance")
    p.add_argument("--family", choices=("barrus", "precond"), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--a-size", type=int, default=0)
    p.add_argument("--b-size", type=int, default=4)
    p.add_argument("--c-size", type=int, default=0)
    p.add_argument("--a-prob", type=_fraction, default=Fraction(0))
    p.add_argument("--c-prob", type=_fraction, default=Fraction(0))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=_fraction, default=Fraction(0), help="extra edge probability")
    p.add_argument("--target", choices=TARGETS, default="theorem4")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_generate)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (SearchBudgetExceeded, OracleCapExceeded) as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except PreconditionError as exc:
        print(f"precondition failure: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (UsageError, GraphFormatError, LabellingError, CliqueError, GenerationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
