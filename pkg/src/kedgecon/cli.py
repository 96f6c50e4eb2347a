"""Command-line interface over MGRAPH files.

Exit codes: 0 success, 1 a checked claim failed (counterexample), 2 input
or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .connectivity import global_edge_connectivity, is_exactly_k_edge_connected, is_k_edge_connected
from .decomposition import decompose, scan_witnesses, theorem_witnesses
from .errors import BadUsage, ClaimViolation, GraphError, ParseError
from .harness import EnumSpec, enumerate_multigraphs, random_k_edge_connected, verify_propositions, verify_theorem
from .minimality import is_edge_minimal, reduce_to_edge_minimal
from .multigraph import Multigraph, format_mgraph, parse_mgraph
from .quotient import check_quotient_properties, quotient_graph

FORMAT_VERSION = 1


def read_graph(source: str) -> Multigraph:
    """Read MGRAPH text, or a JSON report carrying an ``mgraph`` field."""
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            raise BadUsage(f"cannot read {source}: {exc.strerror}") from None
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON input: {exc.msg}", exc.lineno) from None
        if not isinstance(doc, dict) or "mgraph" not in doc:
            raise ParseError("JSON input has no 'mgraph' field")
        text = doc["mgraph"]
    return parse_mgraph(text)


def _k_set(text: str) -> tuple[int, ...]:
    try:
        ks = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k set {text!r}") from None
    if not ks or any(k < 1 for k in ks):
        raise argparse.ArgumentTypeError("k set must be nonempty with every k >= 1")
    return ks


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _cmd_analyze(args, g):
    lam = global_edge_connectivity(g)
    rep = is_edge_minimal(g, args.k)
    out = {
        "n": g.n,
        "m": g.m,
        "degrees": g.degrees(),
        "edge_connectivity": lam,
        "k": args.k,
        "k_edge_connected": is_k_edge_connected(g, args.k),
        "exactly_k_edge_connected": is_exactly_k_edge_connected(g, args.k),
        "minimality": rep.to_json(),
    }
    text = [
        f"n={g.n} m={g.m} lambda={lam}",
        f"exactly {args.k}-edge-connected: {out['exactly_k_edge_connected']}",
        f"edge-minimal: {rep.is_minimal} violating={list(rep.violating_edges)}",
    ]
    return out, text, 0


def _cmd_minimize(args, g):
    h, removed = reduce_to_edge_minimal(g, args.k)
    out = {"k": args.k, "removed": removed, "n": h.n, "m": h.m, "mgraph": format_mgraph(h)}
    return out, [format_mgraph(h).rstrip()], 0


def _cmd_quotient(args, g):
    q = quotient_graph(g, args.k)
    out = {"k": args.k, "quotient": q.to_json(), "mgraph": format_mgraph(q.graph)}
    code = 0
    text = [f"classes={[list(c) for c in q.partition.classes]}", f"degrees={q.graph.degrees()}"]
    if is_edge_minimal(g, args.k).is_minimal:
        report = check_quotient_properties(g, args.k)
        out["checks"] = report.to_json()
        text.append("checks: " + ", ".join(f"{c}={'ok' if f == 0 else 'FAIL'}" for c, (p, f) in sorted(report.claims.items())))
        code = 0 if report.ok else 1
    return out, text, code


def _cmd_decompose(args, g):
    tree = decompose(g, args.k)
    leaves = list(tree.leaves())
    out = {"k": args.k, "tree": tree.to_json(), "leaves": len(leaves)}
    text = [f"leaves={len(leaves)}"] + [f"leaf n={lf.graph.n} degrees={lf.graph.degrees()}" for lf in leaves]
    return out, text, 0


def _cmd_witness(args, g):
    tw = theorem_witnesses(g, args.k)
    sw = scan_witnesses(g, args.k)
    out = {"k": args.k, "constructive": tw.to_json(), "scan": sw.to_json()}
    return out, [f"witnesses={list(tw.witnesses)} scan={list(sw.witnesses)}"], 0


def _spec_from(args) -> EnumSpec:
    try:
        return EnumSpec(
            n_max=args.n_max,
            m_max=args.m_max,
            mult_max=args.mult_max,
            k_set=args.k_set,
            require_connected=not args.allow_disconnected,
        )
    except ValueError as exc:
        raise BadUsage(str(exc)) from None


def _cmd_verify(args, _):
    spec = _spec_from(args)
    report = verify_theorem(spec, jobs=args.jobs)
    if not args.theorem_only:
        report = report.merge(verify_propositions(spec, jobs=args.jobs))
    out = report.to_json()
    text = [f"graphs_examined={report.graphs_examined}"] + [
        f"{c}: {p} passed, {f} failed" for c, (p, f) in sorted(report.claims.items())
    ]
    return out, text, 0 if report.ok else 1


def _cmd_gen(args, _):
    if args.enumerate:
        graphs = list(enumerate_multigraphs(_spec_from(args)))
    else:
        if args.n is None or args.k is None:
            raise BadUsage("gen needs -n and -k (or --enumerate)")
        if args.n < 2:
            raise BadUsage("-n must be >= 2")
        graphs = [random_k_edge_connected(args.n, args.k, args.seed)]
    texts = [format_mgraph(h) for h in graphs]
    return {"graphs": texts}, ["".join(texts).rstrip()], 0


COMMANDS = {
    "analyze": (_cmd_analyze, "connectivity and minimality summary"),
    "minimize": (_cmd_minimize, "greedy reduction to an edge-minimal subgraph"),
    "quotient": (_cmd_quotient, "contract the (k+1)-classes and check the quotient"),
    "decompose": (_cmd_decompose, "split tree of an exactly k-edge-connected graph"),
    "witness": (_cmd_witness, "degree-k witness vertices of an edge-minimal graph"),
    "verify": (_cmd_verify, "exhaustive verification over enumerated graphs"),
    "gen": (_cmd_gen, "generate random or enumerated graphs as MGRAPH"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kedgecon", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("json", "text"), default="text" if name == "gen" else "json")
        if name in ("verify", "gen"):
            p.add_argument("--n-max", type=int, default=6)
            p.add_argument("--m-max", type=int, default=9)
            p.add_argument("--mult-max", type=int, default=3)
            p.add_argument("--k-set", type=_k_set, default=(1, 2, 3))
            p.add_argument("--allow-disconnected", action="store_true")
        if name == "verify":
            p.add_argument("--jobs", type=_positive, default=1)
            p.add_argument("--theorem-only", action="store_true")
        elif name == "gen":
            p.add_argument("-n", type=int)
            p.add_argument("-k", type=_positive)
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--enumerate", action="store_true")
        else:
            p.add_argument("-k", type=_positive, required=True)
            p.add_argument("input", nargs="?", default="-")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        g = read_graph(args.input) if hasattr(args, "input") else None
        out, text, code = handler(args, g)
    except ClaimViolation as exc:
        payload = {"format": FORMAT_VERSION, "command": args.command, "claim": exc.claim, "detail": exc.detail}
        if exc.graph is not None:
            payload["graph_mgraph"] = format_mgraph(exc.graph)
        print(json.dumps(payload, indent=2))
        return 1
    except GraphError as exc:
        print(f"kedgecon: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        out = {"format": FORMAT_VERSION, "command": args.command, **out}
        print(json.dumps(out, indent=2))
    else:
        print("\n".join(text))
    return code


if __name__ == "__main__":
    sys.exit(main())
