"""Command-line interface: reproducible runs with JSON reports on stdout.

Logs go to stderr so reports compose in pipelines. Exit codes: 0 success,
1 negative verdict (query answered "no" / search did not produce the asked
structure), 2 usage or input error. Every report carries the graph hash,
seeds, parameters, and mode flags; replaying a command on the same input
reproduces the payload bit-identically (wall time lives outside the
payload).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from .certify import (
    ExpansionMode,
    certify_alpha_exact,
    certify_heuristic,
    check_separator_bound,
    find_separator,
)
from .extraction import (
    HypothesisViolation,
    expander_from_separator_bound,
    extract_expander_or_witness,
    extract_from_locally_sparse,
    prune_small_set_expander,
    prune_to_expander,
    supercritical_pipeline,
)
from .generators import GenSpec, gen
from .graph import Graph, VertexSet, diameter
from .io import graph_hash, load_graph, serialize_graph, write_dot
from .minors import ccl_bruteforce, clique_minor, embed_or_separate, validate_minor
from .paths_cycles import (
    cycle_lengths_family,
    cycle_spectrum_bruteforce,
    long_cycle,
    long_path,
    path_in_color_class,
)
from .seeding import derive_seed, substream
from .spectral import (
    cheeger_exact,
    expansion_lower_bound_regular,
    spectrum,
    sweep_cut,
    verify_cheeger,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def to_jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        if math.isinf(obj):
            return "infinite"
        return obj
    if isinstance(obj, Fraction):
        return {"exact": f"{obj.numerator}/{obj.denominator}", "value": float(obj)}
    if isinstance(obj, VertexSet):
        return list(obj)
    if isinstance(obj, Graph):
        return {"n": obj.n, "edges": obj.num_edges, "hash": graph_hash(obj)}
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {
            f.name: to_jsonable(getattr(obj, f.name))
            for f in dataclasses.fields(obj)
        }
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return to_jsonable(float(obj))
    return str(obj)


def emit(command: str, payload: dict, *, graph: Graph | None = None,
         seed=None, parameters: dict | None = None, mode: str | None = None,
         started: float | None = None) -> None:
    report = {
        "command": command,
        "version": __version__,
        "graph_hash": graph_hash(graph) if graph is not None else None,
        "seed": seed,
        "mode": mode,
        "parameters": to_jsonable(parameters or {}),
        "result": to_jsonable(payload),
        "wall_time_s": round(time.perf_counter() - started, 6) if started else None,
    }
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _dot_out(args, g: Graph, highlight_edges=(), fill=(), colors=None) -> None:
    if getattr(args, "dot", None):
        Path(args.dot).write_text(
            write_dot(g, highlight_edges=highlight_edges,
                      fill_vertices=fill, vertex_colors=colors)
        )
        log(f"wrote DOT to {args.dot}")


def _path_edges(path):
    return list(zip(path, path[1:]))


def cmd_gen(args) -> int:
    started = time.perf_counter()
    params = {}
    for key in ("n", "p", "d", "a", "b", "size", "count"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    spec = GenSpec(args.kind, params, seed=args.seed)
    g = gen(spec)
    text = serialize_graph(g)
    if args.out:
        Path(args.out).write_text(text)
        emit("gen", {"path": args.out, "n": g.n, "edges": g.num_edges,
                     "spec": json.loads(spec.to_json())},
             graph=g, seed=args.seed, parameters=params, started=started)
    else:
        sys.stdout.write(text)
    _dot_out(args, g)
    return EXIT_OK


def cmd_certify(args) -> int:
    started = time.perf_counter()
    g = load_graph(args.input)
    if args.upto is not None:
        mode = ExpansionMode.up_to_k(args.upto)
    elif args.sizes:
        lo, hi = (int(x) for x in args.sizes.split(":"))
        mode = ExpansionMode.index_set(range(lo, hi + 1))
    else:
        mode = ExpansionMode.half()
    if args.mode == "exact":
        rep = certify_alpha_exact(g, mode)
    else:
        rep = certify_heuristic(g)
    verdict = None
    if args.alpha is not None:
        verdict = rep.is_alpha_expander(args.alpha)
    payload = {
        "mode": rep.mode,
        "exhaustive": rep.exhaustive,
        "alpha_star": rep.alpha_star,
        "interval": [rep.alpha_lo, rep.alpha_hi],
        "witness": rep.witness,
        "alpha_query": args.alpha,
        "verdict": "unknown" if verdict is None and args.alpha is not None else verdict,
    }
    emit("certify", payload, graph=g, parameters={"alpha": args.alpha},
         mode=args.mode, started=started)
    if rep.witness is not None:
        _dot_out(args, g, fill=list(rep.witness))
    return EXIT_NEGATIVE if verdict is False else EXIT_OK


def cmd_separator(args) -> int:
    started = time.perf_counter()
    g = load_graph(args.input)
    sep = find_separator(g, mode=args.mode)
    if sep is None:
        emit("separator", {"found": False}, graph=g, mode=args.mode, started=started)
        return EXIT_NEGATIVE
    payload = {
        "found": True,
        "size": sep.size,
        "s": sep.s,
        "a": sep.a,
        "b": sep.b,
    }
    if args.mode == "exact" and g.n <= 22 and g.n >= 1:
        rep = certify_alpha_exact(g)
        payload["expansion_bound_ok"] = check_separator_bound(g, sep, rep)
        payload["alpha_star"] = rep.alpha_star
    emit("separator", payload, graph=g, mode=args.mode, started=started)
    _dot_out(args, g, fill=list(sep.s))
    return EXIT_OK


def cmd_spectral(args) -> int:
    started = time.perf_counter()
    g = load_graph(args.input)
    summary = spectrum(g)
    payload = {"summary": summary}
    if g.is_regular and g.n >= 2 and g.num_edges:
        payload["regular_expansion_bound"] = expansion_lower_bound_regular(g)
    if g.n <= 22 and g.num_edges:
        rep = cheeger_exact(g)
        payload["cheeger"] = {"h": rep.h, "i": rep.i, "h_cut": rep.h_cut,
                              "i_cut": rep.i_cut}
        payload["cheeger_inequality"] = verify_cheeger(g)
    if g.n >= 2 and g.is_connected():
        payload["sweep_cut"] = sweep_cut(g)
        _dot_out(args, g, fill=list(payload["sweep_cut"].cut_set))
    emit("spectral", payload, graph=g, started=started)
    return EXIT_OK


def cmd_extract(args) -> int:
    started = time.perf_counter()
    g = load_graph(args.input)
    finder = args.mode
    try:
        if args.op == "prune":
            trace = prune_to_expander(g, Fraction(args.alpha).limit_denominator(10**9),
                                      finder=finder)
            payload = {"op": "prune", "trace": trace}
        elif args.op == "small-sets":
            trace = prune_small_set_expander(
                g, args.k, Fraction(args.alpha).limit_denominator(10**9), finder=finder
            )
            payload = {"op": "small-sets", "trace": trace}
        elif args.op == "separator-bound":
            trace = expander_from_separator_bound(
                g, Fraction(args.beta).limit_denominator(10**9), finder=finder
            )
            payload = {"op": "separator-bound", "trace": trace}
        elif args.op == "locally-sparse":
            res = extract_from_locally_sparse(
                g, args.c1, args.c2, args.beta, mode=finder
            )
            payload = {"op": "locally-sparse", "result": res}
        else:  # dichotomy
            res = extract_expander_or_witness(g, args.c1, args.c2, args.beta)
            payload = {"op": "dichotomy", "result": res}
    except HypothesisViolation as exc:
        emit("extract", {"op": args.op, "hypothesis_violation": str(exc),
                         "witness": exc.witness},
             graph=g, mode=finder, started=started)
        return EXIT_NEGATIVE
    emit("extract", payload, graph=g, mode=finder, started=started)
    return EXIT_OK


def cmd_longpath(args) -> int:
    started = time.perf_counter()
    g = load_graph(args.input)
    sigma = None
    if args.sigma_seed is not None:
        sigma = tuple(substream(args.sigma_seed, 0).permutation(g.n).tolist())
    res = long_path(g, args.k, args.ell, sigma=sigma)
    emit("longpath", res, graph=g, seed=args.sigma_seed,
         parameters={"k": args.k, "ell": args.ell}, started=started)
    if res.kind == "path":
        _dot_out(args, g, highlight_edges=_path_edges(res.vertices))
        return EXIT_OK
    _dot_out(args, g, fill=list(res.witness))
    return EXIT_NEGATIVE


def cmd_longcycle(args) -> int:
    started = time.perf_counter()
    g = load_graph(args.input)
    res = long_cycle(g, args.k, args.ell)
    emit("longcycle", res, graph=g, parameters={"k": args.k, "ell": args.ell},
         started=started)
    if res.kind == "cycle":
        vs = res.cycle.vertices
        _dot_out(args, g, highlight_edges=_path_edges(vs) + [(vs[-1], vs[0])])
        return EXIT_OK
    _dot_out(args, g, fill=list(res.witness))
    return EXIT_NEGATIVE


def cmd_cyclelengths(args) -> int:
    started = time.perf_counter()
    g = load_graph(args.input)
    res = cycle_lengths_family(g, args.eps, root=args.root)
    emit("cyclelengths", res, graph=g,
         parameters={"eps": args.eps, "root": args.root}, started=started)
    if res.status == "ok" and res.cycles:
        edges = []
        for c in res.cycles:
            edges += _path_edges(c.vertices) + [(c.vertices[-1], c.vertices[0])]
        _dot_out(args, g, highlight_edges=edges)
        return EXIT_OK
    return EXIT_NEGATIVE


def cmd_ramsey_demo(args) -> int:
    started = time.perf_counter()
    r, n_target = args.r, args.n_target
    big_n = args.n_vertices or 25 * r * n_target
    c_factor = args.c_factor
    p = args.p if args.p is not None else min(1.0, c_factor * r * math.log(r) / big_n)
    g = gen(GenSpec("gnp", {"n": big_n, "p": p}, seed=derive_seed(args.seed, 0)))
    rng = substream(args.seed, 1)
    colors = rng.integers(0, r, size=g.num_edges)
    classes = [[] for _ in range(r)]
    for e, c in zip(g.edges, colors):
        classes[int(c)].append(e)
    majority = max(range(r), key=lambda c: len(classes[c]))
    e0 = classes[majority]
    avg_degree = 2 * g.num_edges / g.n
    rep = path_in_color_class(g, e0, r=r, d=avg_degree, n_target=n_target)
    payload = {
        "n_vertices": big_n,
        "p": p,
        "c_factor": c_factor,
        "edges": g.num_edges,
        "majority_class": majority,
        "majority_size": len(e0),
        "avg_degree": avg_degree,
        "report": rep,
    }
    emit("ramsey-demo", payload, graph=g, seed=args.seed,
         parameters={"r": r, "n_target": n_target}, started=started)
    return EXIT_OK if rep.kind == "path" else EXIT_NEGATIVE


def cmd_minor(args) -> int:
    started = time.perf_counter()
    g = load_graph(args.input)
    h = load_graph(args.target)
    res = embed_or_separate(g, h, args.alpha, allow_oversized=args.allow_oversized)
    emit("minor", res, graph=g,
         parameters={"alpha": args.alpha, "target_n": h.n,
                     "target_edges": h.num_edges},
         started=started)
    if res.kind == "embedding" and getattr(args, "dot", None):
        palette = ["lightblue", "lightcoral", "palegreen", "khaki", "plum",
                   "orange", "cyan", "salmon"]
        colors = {}
        for i, bs in enumerate(res.embedding.branch_sets):
            for v in bs:
                colors[v] = palette[i % len(palette)]
        _dot_out(args, g, colors=colors)
    return EXIT_OK


def cmd_clique_minor(args) -> int:
    started = time.perf_counter()
    g = load_graph(args.input)
    res = clique_minor(
        g, alpha=args.alpha, seed=args.seed, b=args.b, k=args.k,
        beta=args.beta, walk_length=args.walk_length,
        pad_dummy_targets=not args.no_dummies,
    )
    emit("clique-minor", res, graph=g, seed=args.seed,
         parameters={"alpha": args.alpha, "b": args.b, "k": args.k,
                     "beta": args.beta},
         started=started)
    if res.kind == "minor" and getattr(args, "dot", None):
        palette = ["lightblue", "lightcoral", "palegreen", "khaki", "plum"]
        colors = {}
        for i, bs in enumerate(res.embedding.branch_sets):
            for v in bs:
                colors[v] = palette[i % len(palette)]
        _dot_out(args, g, colors=colors)
    return EXIT_OK if res.kind == "minor" else EXIT_NEGATIVE


def cmd_pipeline(args) -> int:
    started = time.perf_counter()
    rep = supercritical_pipeline(args.n, args.eps, args.seed, p=args.p)
    emit("pipeline", rep, seed=args.seed,
         parameters={"n": args.n, "eps": args.eps, "p": args.p}, started=started)
    return EXIT_OK if rep.success else EXIT_NEGATIVE


def cmd_oracle(args) -> int:
    started = time.perf_counter()
    g = load_graph(args.input)
    if args.which == "cycle-spectrum":
        payload = {"lengths": sorted(cycle_spectrum_bruteforce(g))}
    elif args.which == "ccl":
        payload = {"ccl": ccl_bruteforce(g)}
    elif args.which == "cheeger":
        rep = cheeger_exact(g)
        payload = {"h": rep.h, "i": rep.i}
    elif args.which == "expansion":
        payload = {"report": certify_alpha_exact(g)}
    elif args.which == "diameter":
        payload = {"diameter": diameter(g)}
    else:
        raise ValueError(f"unknown oracle {args.which!r}")
    emit("oracle", payload, graph=g, parameters={"which": args.which},
         started=started)
    return EXIT_OK


REPORT_SCHEMAS = {
    "certify": {
        "mode": "half | index_set[...] | up_to_k(k)",
        "exhaustive": "bool; heuristic reports never claim exactness",
        "alpha_star": "{exact, value} | 'infinite' | null (heuristic)",
        "interval": "[lower bound, upper bound] on the worst expansion ratio",
        "witness": "vertex list attaining the worst ratio",
        "verdict": "true | false | 'unknown' for the queried alpha",
    },
    "separator": {
        "size": "|S| of the best separator found",
        "a/s/b": "the partition, sides within floor(2n/3)",
        "expansion_bound_ok": "separator-size inequality check (exact mode)",
    },
    "spectral": {
        "summary": "adjacency eigenvalues, mu values, lambda1/2, mu1",
        "cheeger": "exact h and i with witnessed cuts (desk scale)",
        "sweep_cut": "cut set, crossing edges, edge/vertex ratios",
    },
    "extract": {
        "trace": "deleted sets, union, survivor, threshold, finder",
        "result": "locally-sparse extraction or expander/witness dichotomy",
    },
    "longpath": {"kind": "path | witness", "vertices": "path vertex sequence"},
    "longcycle": {"kind": "cycle | violation", "cycle": "cyclic vertex sequence"},
    "cyclelengths": {
        "status": "ok | inapplicable",
        "lengths": "pairwise distinct validated cycle lengths",
        "max_consecutive_gap": "empirical gap statistic over the family",
    },
    "ramsey-demo": {"report": "color-class path search outcome"},
    "minor": {"kind": "embedding | separator", "embedding": "branch sets per target vertex"},
    "clique-minor": {"kind": "minor | failure", "evidence": "edge-count ledger on failure"},
    "pipeline": {"stages": "giant, trim, gates, extraction, success"},
    "oracle": {"which": "cycle-spectrum | ccl | cheeger | expansion | diameter"},
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expanders",
        description="Expansion certification, extraction, and expander structure tools",
    )
    parser.add_argument("--json-schema", action="store_true",
                        help="print the report schemas and exit")
    sub = parser.add_subparsers(dest="command")

    def add_common(p, with_input=True, with_mode=True):
        if with_input:
            p.add_argument("input", help="edge-list file, or - for stdin")
        if with_mode:
            p.add_argument("--mode", choices=["exact", "heuristic"],
                           default="exact")
        p.add_argument("--dot", help="write a DOT rendering highlighting the result")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("--kind", required=True,
                   choices=["gnp", "random_regular", "complete_bipartite",
                            "clique_union", "path", "cycle"])
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--d", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--size", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the edge list here and report JSON on stdout")
    p.add_argument("--dot")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("certify", help="certify vertex expansion")
    add_common(p)
    p.add_argument("--alpha", type=float)
    p.add_argument("--upto", type=int, help="restrict to sets of size at most k")
    p.add_argument("--sizes", help="restrict to sizes LO:HI")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("separator", help="find a minimum separator")
    add_common(p)
    p.set_defaults(func=cmd_separator)

    p = sub.add_parser("spectral", help="spectrum, Cheeger quantities, sweep cut")
    add_common(p, with_mode=False)
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("extract", help="extract an expanding subgraph")
    add_common(p)
    p.add_argument("--op", default="dichotomy",
                   choices=["prune", "small-sets", "separator-bound",
                            "locally-sparse", "dichotomy"])
    p.add_argument("--alpha", type=float)
    p.add_argument("--k", type=int)
    p.add_argument("--beta", type=float)
    p.add_argument("--c1", type=float)
    p.add_argument("--c2", type=float)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("longpath", help="DFS long path or witness")
    add_common(p, with_mode=False)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--sigma-seed", type=int, help="randomize the vertex priority")
    p.set_defaults(func=cmd_longpath)

    p = sub.add_parser("longcycle", help="long cycle or hypothesis violation")
    add_common(p, with_mode=False)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_longcycle)

    p = sub.add_parser("cyclelengths", help="family of distinct cycle lengths")
    add_common(p, with_mode=False)
    p.add_argument("--eps", type=float, default=0.25)
    p.add_argument("--root", type=int, default=0)
    p.set_defaults(func=cmd_cyclelengths)

    p = sub.add_parser("ramsey-demo", help="desk-scale monochromatic path experiment")
    p.add_argument("--r", type=int, default=2, help="number of colors")
    p.add_argument("--n-target", type=int, default=12)
    p.add_argument("--n-vertices", type=int)
    p.add_argument("--c-factor", type=float, default=6.0)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dot")
    p.set_defaults(func=cmd_ramsey_demo)

    p = sub.add_parser("minor", help="embed a target graph or find a separator")
    add_common(p, with_mode=False)
    p.add_argument("--target", required=True, help="edge-list file for the target")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--allow-oversized", action="store_true")
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("clique-minor", help="complete minor via walk hitting sets")
    add_common(p, with_mode=False)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--b", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--beta", type=float)
    p.add_argument("--walk-length", type=int)
    p.add_argument("--no-dummies", action="store_true")
    p.set_defaults(func=cmd_clique_minor)

    p = sub.add_parser("pipeline", help="supercritical random-graph pipeline")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, help="override the sampling probability")
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("oracle", help="desk-scale brute-force oracles")
    add_common(p, with_mode=False)
    p.add_argument("--which", required=True,
                   choices=["cycle-spectrum", "ccl", "cheeger", "expansion",
                            "diameter"])
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.json_schema:
        json.dump(REPORT_SCHEMAS, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
        return EXIT_OK
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        log(f"error: {exc}")
        return EXIT_ERROR
    except RuntimeError as exc:
        log(f"error: {exc}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
