"""Command-line front end.

    hlnet gen hypercube n=3 --format json
    hlnet f 5 2
    hlnet kappa --topology hypercube:n=5 --g 2 --mode exact
    hlnet verify thm-cor k=5
    hlnet decompose 2 0

Exit codes: 0 verified or definitive, 1 refuted, 2 usage error, 3 I/O
error, 4 budget-bounded outcome.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import extra, group, topology, verify
from .graph import CompactGraph, components, neighborhood
from .report import VERIFIED, Stopwatch, dumps

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_IO, EXIT_BOUNDED = 0, 1, 2, 3, 4
GRAPH_SCHEMA = "hlnet/graph/v1"
OUTPUT_DIR_ENV = "HLNET_OUTPUT_DIR"

log = logging.getLogger("hlnet")


class UsageError(Exception):
    pass


# -- graph documents ------------------------------------------------------------

def graph_document(G: CompactGraph, spec: str) -> dict:
    return {"schema": GRAPH_SCHEMA, "spec": spec, "order": G.order,
            "labels": [G.label(v) for v in range(G.order)], "edges": [list(e) for e in G.edges()]}


def render_graph(G: CompactGraph, spec: str, fmt: str) -> str:
    if fmt == "json":
        return dumps(graph_document(G, spec))
    if fmt == "edgelist":
        return "".join(f"{u} {v}\n" for u, v in G.edges())
    lines = [f"graph {json.dumps(spec)} {{"]
    lines += [f"  {v} [label={json.dumps(G.label(v))}];" for v in range(G.order)]
    lines += [f"  {u} -- {v};" for u, v in G.edges()]
    return "\n".join(lines) + "\n}\n"


def load_graph(path: str) -> tuple[CompactGraph, str]:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not JSON: {exc}") from exc
    try:
        G = CompactGraph.from_edges(doc["order"], [tuple(e) for e in doc["edges"]], doc.get("labels"))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path} is not a graph document: {exc}") from exc
    return G, doc.get("spec", path)


def _spec_text(topo: str, tokens: list[str]) -> str:
    if tokens:
        sep = "," if ":" in topo else ":"
        return topo + sep + ",".join(tokens)
    return topo


# -- output ---------------------------------------------------------------------

def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from exc
    log.info("wrote %s", path)


# -- commands -------------------------------------------------------------------

def cmd_gen(args) -> int:
    spec = topology.parse_spec(_spec_text(args.topology, args.params))
    G = spec.build()
    _emit(render_graph(G, spec.canonical(), args.format), args.output)
    return EXIT_OK


def cmd_f(args) -> int:
    if args.n < 1:
        raise UsageError("n must be positive")
    if args.table:
        _emit(" ".join(str(extra.f_value(args.n, g)) for g in range(args.n + 1)) + "\n", args.output)
        return EXIT_OK
    if args.g is None:
        raise UsageError("give G or --table")
    if args.g < 0:
        raise UsageError("g must be non-negative")
    _emit(f"{extra.f_value(args.n, args.g)}\n", args.output)
    return EXIT_OK


def _star_certificate(spec: topology.TopologySpec, G: CompactGraph, g: int) -> extra.CutsetCertificate:
    if spec.family == "gamma":
        k, l = spec.params["k"], spec.params["l"]
    elif spec.family == "delta":
        k, l = topology.delta_shape(spec.params["n"])
    else:
        raise UsageError("star-upper needs a gamma or delta topology")
    sweep = extra.min_star_neighborhood(G, k, l, g)
    budget = {"leafSets": sweep.leaf_sets, "starLeafSets": sweep.star_leaf_sets}
    if sweep.minimum is None:
        return extra.CutsetCertificate("star-upper", g, None, search_budget=budget, status="bounded")
    gens = group.generating_set(k, l)
    A = G.vertex_set([0] + [gens.elements[gens.index_of(name)].index() for name in sweep.leaves])
    S = neighborhood(G, A)
    sizes = [len(p) for p in components(G, S)]
    cert = extra.CutsetCertificate("star-upper", g, sweep.minimum, cutset=S, small_side=A,
                                   component_sizes=sizes, search_budget=budget)
    cert.extra = {"leaves": list(sweep.leaves), "histogram": {str(a): b for a, b in sweep.histogram.items()},
                  "validCutset": len(sizes) >= 2 and min(sizes) >= g + 1, "f": extra.f_value(3 * k + l, g)}
    return cert


def cmd_kappa(args) -> int:
    if (args.topology is None) == (args.graph is None):
        raise UsageError("give exactly one of --topology and --graph")
    if args.g < 0:
        raise UsageError("--g must be non-negative")
    if args.topology is not None:
        spec = topology.parse_spec(args.topology)
        name = spec.canonical()
        if args.mode == "exact" and spec.family != "compose" and 2 ** spec.dimension > extra.EXACT_ORDER_LIMIT \
                and not args.force:
            raise UsageError(f"exact search on {2 ** spec.dimension} vertices needs --force")
        G = spec.build()
    else:
        spec = None
        G, name = load_graph(args.graph)
    with Stopwatch() as sw:
        if args.mode == "exact":
            try:
                cert = extra.exact_extra_connectivity(G, args.g, args.max_cardinality, args.threads, args.force)
            except extra.SearchRefused as exc:
                raise UsageError(f"{exc}; pass --force") from exc
        elif args.mode == "upper":
            cert = extra.upper_bound_by_small_side(G, args.g, args.size_cap)
        else:
            if spec is None:
                raise UsageError("star-upper needs --topology")
            cert = _star_certificate(spec, G, args.g)
    doc = {"spec": name, "mode": args.mode} | cert.to_dict(G)
    if args.timing:
        doc["elapsedMillis"] = round(sw.ms, 3)
    _emit(dumps(doc), args.output)
    return EXIT_BOUNDED if cert.bounded else EXIT_OK


def _key_values(tokens: list[str]) -> dict[str, str]:
    out = {}
    for tok in tokens:
        key, eq, val = tok.partition("=")
        if not eq or not key:
            raise UsageError(f"expected key=value, got {tok!r}")
        out[key.lower()] = val
    return out


def cmd_verify(args) -> int:
    if args.list or args.claim is None:
        for cid, claim in verify.CLAIMS.items():
            keys = " ".join(f"{k}=" for k in claim.params)
            sys.stdout.write(f"{cid:24} {claim.summary}  [{keys}]\n")
        return EXIT_OK if args.list else EXIT_USAGE
    if args.claim not in verify.CLAIMS:
        raise UsageError(f"unknown claim {args.claim!r}; see 'hlnet verify --list'")
    try:
        report = verify.run_claim(args.claim, _key_values(args.params), args.threads)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc
    _emit(report.to_json(args.timing), args.output)
    return EXIT_OK if report.status == VERIFIED else (EXIT_BOUNDED if report.status == "bounded" else EXIT_REFUTED)


def cmd_decompose(args) -> int:
    try:
        report = topology.hl_decompose(args.k, args.l, args.b)
    except group.NotIndexTwoError as exc:
        raise UsageError(str(exc)) from exc
    _emit(report.to_json(args.timing), args.output)
    return EXIT_OK if report.ok else EXIT_REFUTED


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hlnet", description="HL-network topologies and g-extra connectivity.")
    p.add_argument("-v", "--verbose", action="count", default=0, help="progress on stderr (-vv for debug)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, timing=True):
        sp.add_argument("-o", "--output", help=f"output file (relative paths resolve under ${OUTPUT_DIR_ENV})")
        if timing:
            sp.add_argument("--timing", action="store_true", help="include elapsedMillis (breaks byte-identity)")

    g = sub.add_parser("gen", help="generate a topology")
    g.add_argument("topology", help="family or canonical spec, e.g. hypercube or gamma:k=1,l=0")
    g.add_argument("params", nargs="*", help="key=value parameters")
    g.add_argument("--format", choices=("json", "dot", "edgelist"), default="json")
    common(g, timing=False)
    g.set_defaults(func=cmd_gen)

    f = sub.add_parser("f", help="evaluate f_n(g) = n(g+1) - g(g+3)/2")
    f.add_argument("n", type=int)
    f.add_argument("g", type=int, nargs="?")
    f.add_argument("--table", action="store_true", help="print f_n(0..n)")
    common(f, timing=False)
    f.set_defaults(func=cmd_f)

    k = sub.add_parser("kappa", help="g-extra connectivity certificate")
    k.add_argument("--topology")
    k.add_argument("--graph", help="graph JSON document")
    k.add_argument("--g", type=int, required=True)
    k.add_argument("--mode", choices=("exact", "upper", "star-upper"), default="exact")
    k.add_argument("--max-cardinality", type=int)
    k.add_argument("--size-cap", type=int)
    k.add_argument("--threads", type=int, help="worker count (results do not depend on it)")
    k.add_argument("--force", action="store_true", help="allow exact search above 64 vertices")
    common(k)
    k.set_defaults(func=cmd_kappa)

    v = sub.add_parser("verify", help="check a claim; --list shows identifiers",
                       epilog="claims: " + ", ".join(verify.CLAIMS))
    v.add_argument("claim", nargs="?")
    v.add_argument("params", nargs="*", help="key=value, ranges as 1..10, topology lists separated by ';'")
    v.add_argument("--list", action="store_true")
    v.add_argument("--threads", type=int)
    common(v)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("decompose", help="split Gamma_{k,l} into two cosets joined by a matching")
    d.add_argument("k", type=int)
    d.add_argument("l", type=int)
    d.add_argument("--b", help="generator to drop, e.g. b1 or c2 (default b_k, or c_l when k = 0)")
    common(d)
    d.set_defaults(func=cmd_decompose)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, topology.SpecError) as exc:
        parser.exit(EXIT_USAGE, f"hlnet: error: {exc}\n")
    except OSError as exc:
        sys.stderr.write(f"hlnet: I/O error: {exc}\n")
        return EXIT_IO
    except ValueError as exc:
        parser.exit(EXIT_USAGE, f"hlnet: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
