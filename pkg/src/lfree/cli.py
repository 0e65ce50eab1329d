"""Command-line front-end: one subcommand per library operation.

Every successful invocation writes a single JSON object to stdout (exit 0).
Counts and rational values are emitted as decimal/fraction strings since
they routinely exceed machine words; witnesses are sorted integer lists.
Usage problems exit 2; domain errors (bad preconditions, malformed files)
exit 1 with the message on stderr.  LFREE_SEED provides a default seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bounds, count, gadget, hypergraph, setcore, solve
from .equation import enumerate_nontrivial_solutions, parse_equation
from .setcore import load_set


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _default_seed() -> int:
    return int(os.environ.get("LFREE_SEED", "0"))


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="lfree",
                                  description="solution-free subset toolkit")
    top.add_argument("--oracle-cap", type=int, default=setcore.ORACLE_CAP,
                     help="max set size for brute-force subcommands")
    sub = top.add_subparsers(dest="command", required=True)

    def cmd(name, *, eq=True, set_file=False, graph=False, help=None):
        p = sub.add_parser(name, help=help)
        if eq:
            p.add_argument("--eq", required=True, help="equation spec or named shortcut")
        if set_file:
            p.add_argument("--set", required=True, dest="set_path", help="set file")
        if graph:
            p.add_argument("--graph", required=True, dest="graph_path")
        return p

    cmd("check", set_file=True, help="is the set L-free?")
    p = cmd("decide", set_file=True, help="L-free subset of size k?")
    p.add_argument("-k", type=int, required=True)
    cmd("max", set_file=True, help="largest L-free subset")
    p = cmd("epsilon", set_file=True, help="L-free subset with >= eps*|A| elements?")
    p.add_argument("--eps", type=_fraction, required=True)
    p = cmd("extend-decide", set_file=True, help="L-free k-subset containing B?")
    p.add_argument("--contain", required=True, help="set file with B")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--fpt-by-k", action="store_true",
                   help="use the |B|-threshold algorithm instead of the engine")
    p = cmd("count", set_file=True, help="exact count of L-free k-subsets")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--contain", help="optional set file: count supersets of B")
    p = cmd("count-approx", set_file=True, help="randomised approximate count")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--eps", type=_fraction, required=True)
    p.add_argument("--delta", type=_fraction, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=None, help="override the sample count")
    cmd("gadget", graph=True, help="digit-encode a uniform hypergraph")
    cmd("to-hitting-set", set_file=True, help="hitting-set instance of (eq, A)")
    p = cmd("np-instance", graph=True, help="hardness instance from a hypergraph")
    p.add_argument("-s", type=int, required=True, help="hitting-set budget")
    p = cmd("interval", help="guaranteed solution-free tail interval of [1..n]")
    p.add_argument("-n", type=int, required=True)
    cmd("lambda", help="density lower bound of the equation")
    p = cmd("construct", set_file=True, help="L-free subset larger than lambda*|Z|")
    p.add_argument("--seed", type=int, default=None)
    p = cmd("extend-set", set_file=True, help="grow the set with solution-inert elements")
    p.add_argument("-t", type=int, required=True, help="number of elements to add")
    p = cmd("epsilon-instance", set_file=True, help="density-threshold instance builder")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--eps", type=_fraction, required=True)
    p.add_argument("--anchor", help="anchor set file (needed when k > eps*|A|)")
    p.add_argument("--anchor-density", type=_fraction, help="exact density eps' of the anchor")
    cmd("cliques", graph=True, help="multicolour cliques via interpolation")
    p = cmd("oracle", set_file=True, help="brute-force max (or count with -k)")
    p.add_argument("-k", type=int, default=None)
    return top


def _witness(outcome: solve.SolveOutcome) -> dict:
    doc: dict = {"answer": "yes" if outcome.answer else "no",
                 "method": outcome.method,
                 "stats": {k: str(v) for k, v in outcome.stats.items()}}
    if outcome.witness is not None:
        doc["witness"] = list(outcome.witness)
    return doc


def _run(args, params: dict) -> dict:
    eq = parse_equation(args.eq) if getattr(args, "eq", None) else None
    cmdname = args.command

    if cmdname == "check":
        A = load_set(args.set_path)
        sols = enumerate_nontrivial_solutions(eq, A)
        doc = {"answer": "yes" if not sols else "no"}
        if sols:
            doc["counterexample"] = list(sols[0])
        return doc
    if cmdname == "decide":
        return _witness(solve.decide(eq, load_set(args.set_path), args.k))
    if cmdname == "max":
        out = solve.max_lfree(eq, load_set(args.set_path))
        doc = _witness(out)
        doc["value"] = str(len(out.witness))
        return doc
    if cmdname == "epsilon":
        return _witness(solve.decide_epsilon(eq, load_set(args.set_path), args.eps))
    if cmdname == "extend-decide":
        A = load_set(args.set_path)
        B = load_set(args.contain)
        fn = solve.extension_fpt_by_k if args.fpt_by_k else solve.decide_extension
        return _witness(fn(eq, A, B, args.k))
    if cmdname == "count":
        A = load_set(args.set_path)
        B = load_set(args.contain) if args.contain else ()
        res = count.count_exact(eq, A, args.k, B)
        return {"value": str(res.value), "kind": res.kind}
    if cmdname == "count-approx":
        A = load_set(args.set_path)
        seed = args.seed if args.seed is not None else _default_seed()
        params["seed"] = seed
        ap = count.ApproxParams(args.eps, args.delta, seed, args.samples)
        res = count.count_fptras(eq, A, args.k, ap)
        doc = {"value": str(res.value), "kind": res.kind}
        if res.kind == "estimate":
            doc["samples"] = str(res.meta["t"])
            doc["hits"] = str(res.meta["t1"])
        return doc
    if cmdname == "gadget":
        H = hypergraph.load_hypergraph(args.graph_path)
        g = gadget.build_gadget(eq, H)
        return {"d": str(g.d),
                "vertex_numbers": list(g.vertex_numbers),
                "edge_numbers": list(g.edge_numbers),
                "set": list(g.union)}
    if cmdname == "to-hitting-set":
        A = load_set(args.set_path)
        H, imap = hypergraph.to_hitting_set_instance(eq, A)
        return {"n": H.n, "edges": [list(e) for e in H.edges],
                "elements": list(imap.elements)}
    if cmdname == "np-instance":
        H = hypergraph.load_hypergraph(args.graph_path)
        A, k = gadget.np_instance(H, args.s, eq)
        return {"set": list(A), "k": str(k)}
    if cmdname == "interval":
        return {"set": list(bounds.lfree_interval(eq, args.n))}
    if cmdname == "lambda":
        return {"value": str(bounds.lambda_of(eq).lambda_)}
    if cmdname == "construct":
        Z = load_set(args.set_path)
        seed = args.seed if args.seed is not None else _default_seed()
        params["seed"] = seed
        witness = bounds.construct_large_lfree(eq, Z, seed=None if seed == 0 else seed,
                                               cap=args.oracle_cap)
        return {"witness": list(witness), "value": str(len(witness))}
    if cmdname == "extend-set":
        A = load_set(args.set_path)
        xs, c, _ = eq.y_form_parts()
        if sum(xs) == c:
            B = bounds.extend_geometric(eq, A, args.t)
        else:
            B = bounds.extend_disjoint(eq, A, len(A) + args.t)
        return {"set": list(B)}
    if cmdname == "epsilon-instance":
        A = load_set(args.set_path)
        anchor = None
        if args.anchor:
            if args.anchor_density is None:
                raise ValueError("--anchor requires --anchor-density")
            anchor = (load_set(args.anchor), args.anchor_density)
        B = bounds.epsilon_instance(eq, A, args.k, args.eps, anchor,
                                    cap=args.oracle_cap)
        return {"set": list(B)}
    if cmdname == "cliques":
        G, classes = count.load_coloured_graph(args.graph_path)
        res = count.count_multicolour_cliques(G, classes, eq)
        return {"value": str(res.value), "q": str(res.meta["q"])}
    if cmdname == "oracle":
        A = load_set(args.set_path)
        if args.k is None:
            size, witness = setcore.brute_force_max_lfree(eq, A, cap=args.oracle_cap)
            return {"value": str(size), "witness": list(witness)}
        n = setcore.brute_force_count_lfree(eq, A, args.k, cap=args.oracle_cap)
        return {"value": str(n)}
    raise AssertionError(f"unhandled subcommand {cmdname}")


def run(argv) -> tuple[int, str]:
    """Execute one invocation; returns (exit code, stdout text)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else 2), ""
    params = {}
    for key, value in sorted(vars(args).items()):
        if key == "command" or value is None:
            continue
        params[key] = str(value) if isinstance(value, Fraction) else value
    try:
        doc = _run(args, params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1, ""
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1, ""
    doc["params"] = {k: v for k, v in sorted(params.items())}
    return 0, json.dumps(doc, sort_keys=True)


def main(argv=None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
