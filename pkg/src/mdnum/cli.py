"""``md`` command line: compute, verify, gen, decide-half, survey, bound."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import families as fam
from .census import connected_graphs
from .coloring import emit_coloring, emit_colored, first_unseparated_pair, parse_colored, separation_certificate
from .decide import decide_half
from .errors import ContractError, NotMDColoring, ParseError, ResourceError, StructureError
from .graph import Graph, emit_edge_list
from .graph6 import encode_graph6, parse_graph6, read_graph6_lines
from .solver import SolverConfig, md_exact
from .survey import CHECKS, epsilon_bound, run_survey

OK, NO, INPUT, RESOURCE = 0, 1, 2, 3


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ContractError(f"cannot read {path}: {exc.strerror}") from None


def _edge_text(text: str) -> str:
    """Edge-list text for either an edge-list file or a single graph6 line."""
    body = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if body and not body[0].split()[0] == "n":
        if len(body) != 1:
            raise ParseError("graph6 input must hold exactly one graph here")
        return emit_edge_list(parse_graph6(body[0].strip()))
    return text


def load_graph(path: str) -> Graph:
    return parse_colored(_edge_text(_read(path)))[0]


def cmd_compute(args) -> int:
    g = load_graph(args.graph)
    res = md_exact(g, SolverConfig(budget=args.budget))
    text = emit_coloring(g, res.witness)
    print(f"md {res.md}")
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return OK


def cmd_verify(args) -> int:
    g, col = parse_colored(emit_edge_list(load_graph(args.graph)) + _read(args.coloring))
    if col is None:
        raise ParseError("coloring file has no 'e <index> <color>' lines")
    pair = first_unseparated_pair(separation_certificate(g, col))
    if pair is None:
        print(f"ok: MD coloring with {col.k} colors")
        return OK
    print(f"not MD: no monochromatic edge-cut separates {pair[0]} and {pair[1]}")
    return NO


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x)


def _spec(args):
    f, p = args.family, args.params
    need = {"cycle": 1, "complete": 1, "path": 1, "star": 1, "kbip": 2, "theta": 3, "kr-box-path": 2}
    if f in need and len(p) != need[f]:
        raise ContractError(f"{f} takes {need[f]} integer parameter(s)")
    p = [int(x) for x in p] if f != "umbrella" else p
    if f == "cycle":
        return fam.Cycle(p[0])
    if f == "complete":
        return fam.Complete(p[0])
    if f == "path":
        return fam.Path(p[0])
    if f == "star":
        return fam.CompleteBipartite(1, p[0])
    if f == "kbip":
        return fam.CompleteBipartite(p[0], p[1])
    if f == "theta":
        return fam.Theta(*p)
    if f == "kr-box-path":
        return fam.KrBoxPath(*p)
    if f == "multipath":
        return fam.MultiPath(tuple(p))
    if f == "umbrella":
        if len(p) != 2:
            raise ContractError("umbrella takes two comma lists: spoke sizes and rim sizes")
        return fam.Umbrella(_ints(p[0]), _ints(p[1]))
    if f == "afamily":
        if not p:
            raise ContractError("afamily takes n followed by removed pairs i j ...")
        n, rest = p[0], p[1:]
        if len(rest) % 2:
            raise ContractError("removed pairs need an even number of indices")
        return fam.AFamily(n, tuple(zip(rest[::2], rest[1::2])), args.reading)
    raise ContractError(f"unknown family {f}")


def cmd_gen(args) -> int:
    cg = fam.generate(_spec(args))
    print(f"# {cg.provenance}; md {cg.claimed_md}")
    if args.emit == "graph6":
        print(encode_graph6(cg.graph))
        sys.stdout.write(emit_coloring(cg.graph, cg.coloring))
    else:
        sys.stdout.write(emit_colored(cg.graph, cg.coloring))
    return OK


def cmd_decide(args) -> int:
    g = load_graph(args.graph)
    rep = decide_half(g, overlap=args.overlap, theorem_only=args.theorem_only)
    print("\n".join(rep.lines()))
    if rep.certificate_coloring is not None and args.certificate:
        Path(args.certificate).write_text(emit_coloring(g, rep.certificate_coloring))
    return OK if rep.verdict else NO


def cmd_survey(args) -> int:
    checks = tuple(c.strip() for c in args.check.split(",")) if args.check else CHECKS
    skipped = []
    if args.enumerate is not None:
        graphs = list(connected_graphs(args.enumerate))
    elif args.source:
        graphs = []
        for no, line, got in read_graph6_lines(_read(args.source).splitlines()):
            if isinstance(got, ParseError):
                skipped.append(f"line {no} ({line}): {got}")
            else:
                graphs.append(got)
    else:
        raise ContractError("survey needs a graph6 file or --enumerate n")
    rep = run_survey(graphs, checks, budget=args.budget, jobs=args.jobs, skipped=skipped)
    out = "\n".join(rep.lines()) + "\n"
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)
    return NO if rep.counterexamples else OK


def cmd_bound(args) -> int:
    b = epsilon_bound(Fraction(args.epsilon))
    print(f"C({b.epsilon}) = {b.c_value} ~ {float(b.c_value):.6f}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="md", description="Monochromatic disconnection numbers.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact md with a witness coloring")
    p.add_argument("graph")
    p.add_argument("--out", help="write the witness coloring here")
    p.add_argument("--budget", type=int, default=SolverConfig.budget)
    p.set_defaults(run=cmd_compute)

    p = sub.add_parser("verify", help="check an edge coloring is MD")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("gen", help="certified family member")
    p.add_argument("family", choices=["cycle", "complete", "path", "star", "kbip", "theta", "multipath",
                                      "umbrella", "afamily", "kr-box-path"])
    p.add_argument("params", nargs="*")
    p.add_argument("--emit", choices=["edgelist", "graph6"], default="edgelist")
    p.add_argument("--reading", choices=["strict", "broad"], default="strict")
    p.set_defaults(run=cmd_gen)

    p = sub.add_parser("decide-half", help="is md = floor(n/2)?")
    p.add_argument("graph")
    p.add_argument("--overlap", choices=["edge", "vertex"], default="edge")
    p.add_argument("--theorem-only", action="store_true")
    p.add_argument("--certificate", help="write the extremal coloring here on yes")
    p.set_defaults(run=cmd_decide)

    p = sub.add_parser("survey", help="census survey as JSON lines")
    p.add_argument("source", nargs="?")
    p.add_argument("--enumerate", type=int)
    p.add_argument("--check", help=f"comma list from {','.join(CHECKS)}")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=SolverConfig.budget)
    p.add_argument("--out")
    p.set_defaults(run=cmd_survey)

    p = sub.add_parser("bound", help="C(epsilon) for epsilon*n-connected graphs")
    p.add_argument("--epsilon", required=True)
    p.set_defaults(run=cmd_bound)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return RESOURCE
    except (ParseError, ContractError, StructureError, NotMDColoring, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT


if __name__ == "__main__":
    sys.exit(main())
