"""Command-line entry point.

Exit codes: 0 success, 1 definitive negative answer, 2 search budget
exhausted, 3 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import dags, diag
from .errors import BudgetExceeded, ImplicitGraphError, ParseError, UnsupportedFragment, UsageError
from .graph6 import iter_graph6_lines, parse_graph6, write_graph6
from .graphs import enumerate_graphs, family_fig1
from .logic import (equivalent, evaluate, from_clauses, parse_formula, semantic_signature, to_dnf,
                    to_nnf_lt, to_text, weak_orders)
from .schemes import (BitScheme, LogicalScheme, get_decoder, interval_number, lambda_foqf,
                      member_bitscheme, member_logical, union_scheme)
from .schemes.search import DEFAULT_BUDGET

EXIT_OK, EXIT_NO, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read_source(text: str) -> str:
    """``-`` reads stdin, ``@path`` reads a file, anything else is taken literally."""
    if text == "-":
        return sys.stdin.read()
    if text.startswith("@"):
        return _read_file(text[1:])
    return text


def _read_file(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _formula(args, text_attr="formula", file_attr="formula_file", k=None):
    text = getattr(args, text_attr, None)
    path = getattr(args, file_attr, None)
    if (text is None) == (path is None):
        raise UsageError("give exactly one of --formula and --formula-file")
    return parse_formula(_read_source(text) if text is not None else _read_file(path), k=k)


def _graph(args):
    if (args.graph is None) == (args.graph_file is None):
        raise UsageError("give exactly one of --graph and --graph-file")
    if args.graph is not None:
        return parse_graph6(_read_source(args.graph).strip())
    graphs = list(iter_graph6_lines(_read_file(args.graph_file).splitlines()))
    if not graphs:
        raise UsageError(f"no graph found in {args.graph_file}")
    return graphs[0]


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _labels_payload(n, k, labels):
    return {"n": n, "k": k, "labels": [list(lab) if not isinstance(lab, str) else lab for lab in labels]}


# --- commands ---

def cmd_eval(args):
    phi = _formula(args)
    try:
        values = tuple(int(x) for x in args.assignment.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"assignment must be comma-separated integers, got {args.assignment!r}") from None
    result = evaluate(phi, args.universe, values)
    _emit(args, {"formula": str(phi), "universe": args.universe, "assignment": list(values),
                 "holds": result}, ["true" if result else "false"])
    return EXIT_OK if result else EXIT_NO


def cmd_member(args):
    g = _graph(args)
    if args.decoder is not None:
        if args.formula is not None or args.formula_file is not None:
            raise UsageError("give either a decoder or a formula, not both")
        scheme = BitScheme(get_decoder(args.decoder), args.c)
        witness = member_bitscheme(scheme, g, args.budget)
        k = 1
    else:
        scheme = LogicalScheme(_formula(args), args.c)
        witness = member_logical(scheme, g, args.budget)
        k = scheme.k
    if witness is None:
        _emit(args, {"n": g.n, "member": False}, ["not a member"])
        return EXIT_NO
    payload = _labels_payload(g.n, k, witness)
    _emit(args, payload, [json.dumps(payload, sort_keys=True)])
    return EXIT_OK


def cmd_lambda(args):
    g = _graph(args)
    found = lambda_foqf(g, args.kmax, args.budget)
    if found is None:
        _emit(args, {"n": g.n, "kmax": args.kmax, "lambda": None}, [f"lambda > {args.kmax}"])
        return EXIT_NO
    k, (labels, ds) = found
    payload = {"n": g.n, "kmax": args.kmax, "lambda": k, "labels": [list(x) for x in labels],
               "dags": [dags.format_dag(d) for d in ds]}
    _emit(args, payload, [f"lambda = {k}", "labels: " + json.dumps([list(x) for x in labels])]
          + [dags.format_dag(d) for d in ds])
    return EXIT_OK


def cmd_interval_number(args):
    g = _graph(args)
    found = interval_number(g, args.kmax, args.budget)
    if found is None:
        _emit(args, {"n": g.n, "kmax": args.kmax, "interval_number": None}, [f"interval number > {args.kmax}"])
        return EXIT_NO
    k, model = found
    payload = {"n": g.n, "kmax": args.kmax, "interval_number": k,
               "model": [[list(iv) for iv in ivs] for ivs in model]}
    _emit(args, payload, [f"interval number = {k}"]
          + [f"{v}: " + " ".join(f"[{a},{b}]" for a, b in ivs) for v, ivs in enumerate(model, start=1)])
    return EXIT_OK


def cmd_compile(args):
    phi = _formula(args)
    ds = dags.formula_to_dags(phi)
    _emit(args, {"k": phi.k, "dags": [dags.format_dag(d) for d in ds]}, [dags.format_dag(d) for d in ds])
    return EXIT_OK


def cmd_dag2clause(args):
    d = dags.parse_dag(_read_source(args.dag), args.k)
    clause = dags.dag_to_clause(d)
    text = to_text(clause.to_formula().body)
    _emit(args, {"k": d.k, "clause": text}, [text])
    return EXIT_OK


def cmd_canon(args):
    d = dags.closure_canon(dags.parse_dag(_read_source(args.dag), args.k))
    _emit(args, {"k": d.k, "dag": dags.format_dag(d)}, [dags.format_dag(d)])
    return EXIT_OK


def cmd_equiv(args):
    a = parse_formula(_read_source(args.left), k=args.k)
    b = parse_formula(_read_source(args.right), k=args.k)
    result = equivalent(a, b)
    _emit(args, {"equivalent": result}, ["equivalent" if result else "not equivalent"])
    return EXIT_OK if result else EXIT_NO


def cmd_union(args):
    a = parse_formula(_read_source(args.left), k=args.k)
    b = parse_formula(_read_source(args.right), k=args.k)
    u = union_scheme(a, b)
    _emit(args, {"k": u.k, "formula": to_text(u.body)}, [to_text(u.body)])
    return EXIT_OK


def cmd_weak_orders(args):
    orders = weak_orders(args.m)
    _emit(args, {"m": args.m, "count": len(orders), "orders": [str(w) for w in orders]},
          [str(w) for w in orders])
    return EXIT_OK


def cmd_family(args):
    g = family_fig1(args.i)
    _emit(args, {"i": args.i, "n": g.n, "graph6": write_graph6(g)}, [write_graph6(g)])
    return EXIT_OK


def cmd_graphs_enum(args):
    codes = [write_graph6(g) for g in enumerate_graphs(args.n, args.directed)]
    _emit(args, {"n": args.n, "directed": args.directed, "count": len(codes), "graphs": codes}, codes)
    return EXIT_OK


def cmd_diag_build(args):
    registry = diag.DecoderRegistry.parse(args.registry, args.policy)
    dclass = diag.build_diag_class(registry, args.nmax, args.directed, args.budget)
    report = diag.verify_diagonal(dclass, registry, args.budget)
    if args.json:
        print(diag.diag_json(dclass, report))
    else:
        for e in dclass.entries:
            g6 = "-" if e.graph is None else write_graph6(e.graph)
            print(f"n={e.n} tau={e.tau} decoder={e.decoder} z={e.z} {e.status} {g6}")
        for c in report.checks:
            print(f"({c['clause']}) n={c['n']}: {'ok' if c['ok'] else 'FAILED'} {c['detail']}")
    return EXIT_OK if report.ok else EXIT_NO


def cmd_g6(args):
    texts = [_read_source(t).strip() for t in args.graphs]
    out, payload = [], []
    for t in texts:
        g = parse_graph6(t)
        back = write_graph6(g)
        payload.append({"input": t, "n": g.n, "directed": g.directed,
                        "edges": [list(e) for e in (sorted(g.edges) if g.directed else g.undirected_edges())],
                        "graph6": back, "roundtrip": back == t.removeprefix(">>graph6<<")})
        out.append(back)
    _emit(args, {"graphs": payload}, out)
    return EXIT_OK if all(p["roundtrip"] for p in payload) else EXIT_NO


def cmd_selfcheck(args):
    """Seeded random checks of the core equivalences; prints one line per check."""
    from .schemes import graph_of_labeling, normalize_labeling

    rng = random.Random(args.seed)
    results = []

    def rand_formula(k):
        atoms = [f"x{rng.randint(1, 2 * k)} {rng.choice(['<', '=', '<=', '!='])} x{rng.randint(1, 2 * k)}"
                 for _ in range(rng.randint(1, 4))]
        text = atoms[0]
        for a in atoms[1:]:
            text = f"({text}) {rng.choice(['&', '|', '->'])} {'!' if rng.random() < 0.3 else ''}({a})"
        return parse_formula(text, k=k)

    agree = 0
    trials = args.trials
    for _ in range(trials):
        k = rng.randint(1, 2)
        phi = rand_formula(k)
        n = rng.randint(1, 5)
        lab = [tuple(rng.randint(1, n ** 3) for _ in range(k)) for _ in range(n)]
        scheme = LogicalScheme(phi, 3)
        flat = from_clauses(to_dnf(to_nnf_lt(phi)), k)
        same = graph_of_labeling(scheme, lab).same_edges(graph_of_labeling(scheme, normalize_labeling(lab)))
        same &= graph_of_labeling(scheme, lab).same_edges(graph_of_labeling(LogicalScheme(flat, 3), lab))
        ds = dags.formula_to_dags(phi)
        union = set()
        for d in ds:
            union |= dags.graph_of_dag(d, lab).edges
        same &= union == graph_of_labeling(scheme, lab).edges
        same &= semantic_signature(phi) == semantic_signature(flat)
        agree += same
    results.append(("random formulas: normalization, DNF, k-DAG union", agree, trials))
    ok = agree == trials
    payload = {"seed": args.seed, "checks": [{"name": n, "passed": a, "trials": t} for n, a, t in results]}
    _emit(args, payload, [f"{'PASS' if a == t else 'FAIL'} {n}: {a}/{t}" for n, a, t in results])
    return EXIT_OK if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search budget in evaluations")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    parser = _Parser(prog="implicit-graphs", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def formula_args(p):
        p.add_argument("--formula", help="formula text, @file or - for stdin")
        p.add_argument("--formula-file", help="file with formula text")

    def graph_args(p):
        p.add_argument("--graph", help="graph6/digraph6 string, @file or - for stdin")
        p.add_argument("--graph-file", help="file of graph6 lines; the first graph is used")

    p = sub.add_parser("eval", parents=[common], help="evaluate a formula on an assignment")
    formula_args(p)
    p.add_argument("--universe", type=int, required=True)
    p.add_argument("--assignment", required=True, help="comma-separated values for x1..x2k")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("member", parents=[common], help="membership of a graph in a scheme")
    formula_args(p)
    p.add_argument("--decoder", help="built-in bit-string decoder instead of a formula")
    p.add_argument("--c", type=int, default=1)
    graph_args(p)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("lambda", parents=[common], help="least k with a k-number order labeling")
    graph_args(p)
    p.add_argument("--kmax", type=int, default=2)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("interval-number", parents=[common], help="least number of intervals per vertex")
    graph_args(p)
    p.add_argument("--kmax", type=int, default=3)
    p.set_defaults(func=cmd_interval_number)

    p = sub.add_parser("compile", parents=[common], help="compile a formula to k-DAGs")
    formula_args(p)
    p.set_defaults(func=cmd_compile)

    for name, func, text in (("dag2clause", cmd_dag2clause, "convert a k-DAG to a clause"),
                             ("canon", cmd_canon, "transitive-closure form of a k-DAG")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("dag", help="k-DAG text, @file or - for stdin")
        p.add_argument("--k", type=int)
        p.set_defaults(func=func)

    for name, func, text in (("equiv", cmd_equiv, "semantic equivalence of two formulas"),
                             ("union", cmd_union, "formula representing both schemes")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("left")
        p.add_argument("right")
        p.add_argument("--k", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("weak-orders", parents=[common], help="list weak orders on m positions")
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_weak_orders)

    p = sub.add_parser("family", parents=[common], help="graph i of the 4-cycle bouquet family")
    p.add_argument("i", type=int)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("graphs", parents=[common], help="graph enumeration")
    gsub = p.add_subparsers(dest="graphs_command", parser_class=_Parser)
    gsub.required = True
    q = gsub.add_parser("enum", parents=[common], help="one graph per isomorphism class")
    q.add_argument("n", type=int)
    q.add_argument("--directed", action="store_true")
    q.set_defaults(func=cmd_graphs_enum)

    p = sub.add_parser("diag", parents=[common], help="diagonalization class")
    dsub = p.add_subparsers(dest="diag_command", parser_class=_Parser)
    dsub.required = True
    q = dsub.add_parser("build", parents=[common], help="build and verify the class")
    q.add_argument("--registry", default="all,eq,lt", help="comma-separated decoder names")
    q.add_argument("--nmax", type=int, default=diag.DEFAULT_NMAX)
    q.add_argument("--policy", choices=("modulo", "empty"), default="modulo")
    q.add_argument("--directed", action="store_true")
    q.set_defaults(func=cmd_diag_build)

    p = sub.add_parser("g6", parents=[common], help="parse and re-emit graph6 strings")
    p.add_argument("graphs", nargs="+")
    p.set_defaults(func=cmd_g6)

    p = sub.add_parser("selfcheck", parents=[common], help="seeded random consistency checks")
    p.add_argument("--trials", type=int, default=50)
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, UsageError, UnsupportedFragment) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ImplicitGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
