"""Command-line front end.

Exit codes: 0 = a verdict was computed (including "positive", "none" and
failed reports), 1 = usage or input error, 2 = a resource cap was hit
(search cap, node budget, memory cap).  JSON output is the stable surface;
text output is human-oriented and may change.  Randomized subcommands
require an explicit --seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions, containment, core, decider


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _ids(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(tok) for tok in text.split(",")]


def _load_spec(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


class _Parser(argparse.ArgumentParser):
    # Usage problems are exit code 1; argparse defaults to 2, which is
    # reserved for resource caps here.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_threads(parser) -> None:
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker hint for parallel-capable operations; results never depend on it",
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="turanzero", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decide", help="decide whether the uniform Turán density is zero")
    p.add_argument("graph", help=".3g file")
    p.add_argument("--cap", type=int, default=decider.DEFAULT_SEARCH_CAP)
    p.add_argument("--format", choices=("json", "text"), default="text")
    _add_threads(p)
    p.set_defaults(handler=_cmd_decide)

    p = sub.add_parser("decide21", help="decide a (2,1)-type instance over its pair part")
    p.add_argument("graph", help=".3g file")
    p.add_argument("--A", required=True, type=_ids, help="comma-separated pair-part ids")
    p.add_argument("--B", required=True, type=_ids, help="comma-separated apex-part ids")
    p.add_argument("--cap", type=int, default=decider.DEFAULT_SEARCH_CAP)
    p.add_argument("--format", choices=("json", "text"), default="text")
    _add_threads(p)
    p.set_defaults(handler=_cmd_decide21)

    p = sub.add_parser("gamma", help="auxiliary pair-part graph of a (2,1)-type instance")
    p.add_argument("graph")
    p.add_argument("--A", required=True, type=_ids)
    p.add_argument("--B", required=True, type=_ids)
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.set_defaults(handler=_cmd_gamma)

    p = sub.add_parser("extract", help="connected positive witness of a (2,1)-type instance")
    p.add_argument("graph")
    p.add_argument("--A", required=True, type=_ids)
    p.add_argument("--B", required=True, type=_ids)
    p.add_argument("--cap", type=int, default=decider.DEFAULT_SEARCH_CAP)
    p.set_defaults(handler=_cmd_extract)

    p = sub.add_parser("contain", help="search a host for a copy of a pattern")
    p.add_argument("host", help="host .3g file or construction spec .json")
    p.add_argument("pattern", help="pattern .3g file")
    p.add_argument("--budget", type=int, default=containment.DEFAULT_BUDGET)
    p.add_argument("--format", choices=("json", "text"), default="json")
    _add_threads(p)
    p.set_defaults(handler=_cmd_contain)

    gen = sub.add_parser("gen", help="seeded generators")
    gensub = gen.add_subparsers(dest="generator", required=True, parser_class=_Parser)

    p = gensub.add_parser("bipartite", help="arc-based (2,1)-type construction")
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--q", required=True, type=int)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--realize", metavar="OUT.3g", help="also write the explicit 3-graph")
    p.set_defaults(handler=_cmd_gen_bipartite)

    p = gensub.add_parser("tripartite", help="cyclic three-part composition")
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--q", required=True, type=int)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--realize", metavar="OUT.3g")
    p.set_defaults(handler=_cmd_gen_tripartite)

    p = gensub.add_parser("eh", help="random tournament cyclic-triangle hypergraph")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--realize", metavar="OUT.3g")
    p.set_defaults(handler=_cmd_gen_eh)

    p = gensub.add_parser("spade", help="3-graph grown under a consistent forced coloring")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--realize", metavar="OUT.3g")
    p.set_defaults(handler=_cmd_gen_spade)

    verify = sub.add_parser("verify", help="verifiers")
    versub = verify.add_subparsers(dest="check", required=True, parser_class=_Parser)

    p = versub.add_parser("codegree", help="exact codegree minima of a bipartite spec")
    p.add_argument("spec", help="construction spec .json")
    _add_threads(p)
    p.set_defaults(handler=_cmd_verify_codegree)

    p = sub.add_parser("density", help="sampled induced densities of random subsets")
    p.add_argument("graph", help=".3g file")
    p.add_argument("--gamma", required=True, type=float)
    p.add_argument("--samples", required=True, type=int)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--csv", metavar="OUT.csv", help="also write per-sample rows")
    _add_threads(p)
    p.set_defaults(handler=_cmd_density)

    return parser


def _cmd_decide(args) -> int:
    h = core.read_3g(args.graph)
    decision = decider.decide_uniform_turan_zero(h, cap=args.cap)
    if args.format == "json":
        _emit(decider.decision_to_json_dict(decision))
    else:
        print(f"verdict: {decision.verdict}")
        print(f"searched nodes: {decision.searched}")
        if decision.certificate is not None:
            print(f"enumeration: {' '.join(map(str, decision.certificate.enumeration))}")
            for (u, v), color in sorted(decision.certificate.coloring.items()):
                print(f"  {u} {v} {color}")
    return 0


def _cmd_decide21(args) -> int:
    h = core.read_3g(args.graph)
    p = core.make_partition21(args.A, args.B)
    decision = decider.decide_21(h, p, cap=args.cap)
    if args.format == "json":
        _emit(decider.decision_to_json_dict(decision))
    else:
        print(f"verdict: {decision.verdict}")
        print(f"searched nodes: {decision.searched}")
        if decision.witness_labeling is not None:
            pairs = ", ".join(
                f"{v}->{t + 1}" for t, v in enumerate(decision.witness_labeling.order)
            )
            print(f"pair-part labeling: {pairs}")
    return 0


def _cmd_gamma(args) -> int:
    h = core.read_3g(args.graph)
    p = core.make_partition21(args.A, args.B)
    g = decider.gamma_graph(h, p)
    if args.dot:
        sys.stdout.write(decider.graph_to_dot(g))
    else:
        _emit(
            {
                "vertices": sorted(g.vertices),
                "edges": [list(e) for e in sorted(g.edges)],
            }
        )
    return 0


def _cmd_extract(args) -> int:
    h = core.read_3g(args.graph)
    p = core.make_partition21(args.A, args.B)
    pair_part, apex_part = decider.extract_connected_witness(h, p, cap=args.cap)
    _emit({"A": sorted(pair_part), "B": sorted(apex_part)})
    return 0


def _cmd_contain(args) -> int:
    if args.host.endswith(".json"):
        host = constructions.host_from_spec(_load_spec(args.host))
    else:
        host = core.read_3g(args.host)
    pattern = core.read_3g(args.pattern)
    result = containment.contains(host, pattern, budget=args.budget)
    if args.format == "json":
        payload = {"status": result.status, "nodes": result.nodes, "embedding": None}
        if result.embedding is not None:
            payload["embedding"] = [
                [v, result.embedding.mapping[v]] for v in sorted(result.embedding.mapping)
            ]
        _emit(payload)
    else:
        if result.embedding is not None:
            pairs = ", ".join(
                f"{v}->{result.embedding.mapping[v]}"
                for v in sorted(result.embedding.mapping)
            )
            print(f"found: {pairs}")
        else:
            print(result.status)
    return 2 if result.status == containment.BUDGET_EXHAUSTED else 0


def _maybe_realize(args, graph_builder) -> None:
    if args.realize:
        core.write_3g(graph_builder(), args.realize)


def _cmd_gen_bipartite(args) -> int:
    c = constructions.build_bipartite(args.k, args.q, args.seed)
    _maybe_realize(args, lambda: constructions.realize(c))
    _emit(
        {
            "kind": "bipartite",
            "k": c.k,
            "q": c.q,
            "seed": c.seed,
            "r": c.r,
            "n": c.n,
            "generator": constructions.GENERATOR_NAME,
        }
    )
    return 0


def _cmd_gen_tripartite(args) -> int:
    c = constructions.build_bipartite(args.k, args.q, args.seed)
    _maybe_realize(args, lambda: constructions.build_tripartite(c))
    _emit(
        {
            "kind": "tripartite",
            "k": c.k,
            "q": c.q,
            "seed": c.seed,
            "r": c.r,
            "n": c.n,
            "vertices": 3 * c.n,
            "generator": constructions.GENERATOR_NAME,
        }
    )
    return 0


def _cmd_gen_eh(args) -> int:
    h = constructions.erdos_hajnal(args.n, args.seed)
    if args.realize:
        core.write_3g(h, args.realize)
    _emit(
        {
            "kind": "erdos_hajnal",
            "n": args.n,
            "seed": args.seed,
            "edges": len(h.edges),
            "generator": constructions.GENERATOR_NAME,
        }
    )
    return 0


def _cmd_gen_spade(args) -> int:
    h, cert = constructions.random_zero_instance(args.n, args.m, args.seed)
    if args.realize:
        core.write_3g(h, args.realize)
    _emit(
        {
            "kind": "spade",
            "n": args.n,
            "m": args.m,
            "seed": args.seed,
            "accepted": len(h.edges),
            "generator": constructions.GENERATOR_NAME,
            "certificate": {
                "enumeration": list(cert.enumeration),
                "coloring": [[u, v, color] for (u, v), color in sorted(cert.coloring.items())],
            },
        }
    )
    return 0


def _cmd_verify_codegree(args) -> int:
    spec = constructions.parse_construction_spec(_load_spec(args.spec))
    if spec["kind"] != "bipartite":
        raise ValueError("verify codegree expects a bipartite construction spec")
    c = constructions.build_bipartite(spec["k"], spec["q"], spec["seed"])
    report = constructions.verify_codegrees(c)
    _emit(report.to_json_dict())
    return 0


def _cmd_density(args) -> int:
    h = core.read_3g(args.graph)
    report = constructions.uniform_density_report(h, args.gamma, args.samples, args.seed)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(report.to_csv())
    _emit(report.to_json_dict())
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse signals usage errors and --help
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.handler(args)
    except (decider.SearchCapExceeded, constructions.MemoryCapExceeded) as exc:
        print(f"turanzero: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"turanzero: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
