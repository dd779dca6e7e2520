"""Command-line interface.

Verbs: build, info, spectrum, toughness, bounds, connectivity, verify.
Graph arguments accept either a path to a graph text file or a family
specifier like "petersen", "lattice:v=4", or
"complement(point-graph(gq-w:q=3))".

Exit codes: 0 success, 1 a verification check failed, 2 usage error,
3 a search budget ran out before the answer was certain (partial result).
Rational values are printed as "p/q" strings in json and csv output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .connectivity import edge_connectivity, max_independent_set, vertex_connectivity
from .core import Graph, read_graph, regularity, to_text, write_graph
from .families import GeneralizedQuadrangle, graph_from_spec, structure_from_spec
from .spectral import spectrum, srg_check
from .suite import CHECK_IDS, PROFILES, check_one, run_suite
from .toughness import bounds, classify_minimizers, toughness_exact

THREADS_ENV = "TOUGHGRAPH_THREADS"


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(f"{THREADS_ENV} must be an integer, got {raw!r}")
    return max(1, value)


def _load_graph(arg: str) -> Graph:
    if os.path.exists(arg):
        return read_graph(arg)
    return graph_from_spec(arg)


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _jsonable(value):
    if isinstance(value, Fraction):
        return _frac(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit(args, payload: dict | None, text: str, csv_rows=None) -> None:
    """Write the chosen rendering of a result to --output or stdout."""
    if args.format == "json":
        out = json.dumps(_jsonable(payload), indent=2) + "\n"
    elif args.format == "csv":
        rows = csv_rows if csv_rows is not None else [payload]
        buf = io.StringIO()
        keys = list(rows[0])
        writer = csv.DictWriter(buf, fieldnames=keys)
        writer.writeheader()
        for row in rows:
            writer.writerow({
                k: json.dumps(_jsonable(v)) if isinstance(v, (list, tuple, dict))
                else _jsonable(v)
                for k, v in row.items()
            })
        out = buf.getvalue()
    else:
        out = text if text.endswith("\n") else text + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _common(sub):
    sub.add_argument("--format", "-f", choices=("text", "json", "csv"), default="text")
    sub.add_argument("--output", "-o", default=None, help="write the report here")


def _cmd_build(args) -> int:
    g = graph_from_spec(args.spec)
    if args.out:
        write_graph(g, args.out)
        _emit(args, {"spec": args.spec, "path": args.out, "n": g.n,
                     "edges": g.edge_count()},
              f"wrote {args.out}: n={g.n}, m={g.edge_count()}")
    else:
        payload = {"spec": args.spec, "n": g.n, "edges": g.edge_count(),
                   "text": to_text(g)}
        _emit(args, payload, to_text(g))
    return 0


def _cmd_info(args) -> int:
    obj = structure_from_spec(args.spec)
    if isinstance(obj, GeneralizedQuadrangle):
        s, t = obj.order
        payload = {
            "spec": args.spec,
            "kind": "generalized-quadrangle",
            "order": [s, t],
            "points": obj.num_points,
            "lines": len(obj.lines),
            "points_per_line": s + 1,
            "lines_per_point": t + 1,
        }
        text = (
            f"generalized quadrangle of order ({s},{t}): {obj.num_points} points, "
            f"{len(obj.lines)} lines\n"
            "use point-graph(...) / complement(point-graph(...)) for its graphs"
        )
        _emit(args, payload, text)
        return 0
    g = obj
    params = srg_check(g)
    payload = {
        "spec": args.spec,
        "kind": "graph",
        "n": g.n,
        "edges": g.edge_count(),
        "regular": regularity(g),
        "strongly_regular": None if params is None else
        [params.n, params.k, params.lam, params.mu],
    }
    lines = [f"graph on {g.n} vertices with {g.edge_count()} edges"]
    reg = regularity(g)
    lines.append(f"regular of degree {reg}" if reg is not None else "not regular")
    if params is not None:
        lines.append(
            f"strongly regular ({params.n},{params.k},{params.lam},{params.mu})"
        )
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_spectrum(args) -> int:
    g = _load_graph(args.graph)
    sp = spectrum(g, group_tol=args.group_tol)
    params = srg_check(g)
    payload = {
        "graph": args.graph,
        "n": g.n,
        "eigenvalues": [round(v, 10) for v in sp.eigenvalues],
        "grouped": [[round(v, 10), m] for v, m in sp.grouped],
        "strongly_regular": None if params is None else
        [params.n, params.k, params.lam, params.mu],
    }
    lines = ["grouped spectrum:"]
    lines.extend(f"  {v:+.6f}  x{m}" for v, m in sp.grouped)
    if params is not None:
        lines.append(
            f"strongly regular ({params.n},{params.k},{params.lam},{params.mu})"
        )
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_toughness(args) -> int:
    g = _load_graph(args.graph)
    if args.bounds:
        return _emit_bounds(args, g)
    cert = toughness_exact(
        g,
        budget=args.budget,
        want_minimizers=args.minimizers,
        threads=args.threads,
    )
    payload = {
        "graph": args.graph,
        "n": g.n,
        "value": cert.value,
        "witness": list(cert.witness),
        "components": cert.components,
        "exhaustive": cert.exhaustive,
        "evaluations": cert.evaluations,
    }
    lines = [f"toughness = {cert.value}" if cert.exhaustive
             else f"toughness <= {cert.value} (budget exhausted, partial search)"]
    lines.append(f"witness: remove {list(cert.witness)} "
                 f"leaving {cert.components} components")
    if args.minimizers and cert.minimizers is not None:
        report = classify_minimizers(g, cert.minimizers)
        payload["minimizers"] = [list(s) for s in cert.minimizers]
        payload["classification"] = {
            "vertex-neighborhood": report.neighborhoods,
            "mis-complement": report.mis_complements,
            "both": report.both,
            "other": report.other,
        }
        lines.append(f"{len(cert.minimizers)} optimal sets "
                     f"({report.neighborhoods} neighborhood, "
                     f"{report.mis_complements} complement, "
                     f"{report.both} both, {report.other} other)")
    _emit(args, payload, "\n".join(lines))
    return 0 if cert.exhaustive else 3


def _emit_bounds(args, g: Graph) -> int:
    b = bounds(g)
    payload = {
        "graph": args.graph,
        "n": b.n,
        "k": b.k,
        "lambda2": round(b.lambda2, 10),
        "lambda_min": round(b.lambda_min, 10),
        "lambda_abs": round(b.lambda_abs, 10),
        "alon_lower": round(b.alon_lower, 10),
        "brouwer_lower": round(b.brouwer_lower, 10),
        "tau_lower": b.tau_lower if isinstance(b.tau_lower, Fraction)
        else round(b.tau_lower, 10),
        "liu_chen_one_tough": b.liu_chen_one_tough,
        "theta_one_tough": b.theta_one_tough,
        "hoffman_upper": b.hoffman_upper,
        "neighborhood_upper": b.neighborhood_upper,
    }
    lines = [
        f"{b.k}-regular on {b.n} vertices; "
        f"lambda2 = {b.lambda2:.6f}, lambda_min = {b.lambda_min:.6f}",
        f"lower bounds: eigenvalue {b.alon_lower:.6f}, "
        f"ratio-minus-two {b.brouwer_lower:.6f}, certified {b.tau_lower}",
        f"1-tough by parity condition: {b.liu_chen_one_tough}; "
        f"by threshold condition: {b.theta_one_tough}",
    ]
    if b.hoffman_upper is not None:
        lines.append(f"upper bound from independence: {b.hoffman_upper}")
    if b.neighborhood_upper is not None:
        lines.append(f"upper bound from a neighborhood cut: {b.neighborhood_upper}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_bounds(args) -> int:
    return _emit_bounds(args, _load_graph(args.graph))


def _cmd_connectivity(args) -> int:
    g = _load_graph(args.graph)
    kappa, vcut = vertex_connectivity(g)
    lam, ecut = edge_connectivity(g)
    mis = max_independent_set(g)
    payload = {
        "graph": args.graph,
        "n": g.n,
        "vertex_connectivity": kappa,
        "vertex_cut": None if vcut is None else list(vcut),
        "edge_connectivity": lam,
        "edge_cut": [list(e) for e in ecut],
        "alpha": mis.alpha,
        "independent_set": list(mis.witness),
    }
    lines = [
        f"vertex connectivity {kappa}" +
        (f", cut {list(vcut)}" if vcut is not None else " (complete graph)"),
        f"edge connectivity {lam}, cut {[list(e) for e in ecut]}",
        f"independence number {mis.alpha}, witness {list(mis.witness)}",
    ]
    _emit(args, payload, "\n".join(lines))
    return 0


def _parse_check_args(items) -> dict:
    params = {}
    for item in items or ():
        key, eq, val = item.partition("=")
        if not eq:
            raise SystemExit(f"check parameter {item!r} must look like key=value")
        if val.lower() in ("true", "false"):
            params[key] = val.lower() == "true"
        else:
            try:
                params[key] = int(val)
            except ValueError:
                params[key] = val
    return params


def _cmd_verify(args) -> int:
    if args.check:
        report = check_one(args.check, profile=args.profile,
                           **_parse_check_args(args.args))
    else:
        report = run_suite(
            args.profile,
            budget=args.budget,
            threads=args.threads,
            max_n=args.max_n,
        )
    rows = [
        {"check": r.check, "instance": r.instance, "status": r.status,
         "detail": r.detail, "notes": "; ".join(r.notes)}
        for r in report.results
    ]
    _emit(args, report.to_json(), report.to_text(), csv_rows=rows)
    return report.exit_code


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="toughgraph",
        description="exact graph toughness, spectra, and the verification suite",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("build", help="construct a catalog graph and print or save it")
    p.add_argument("spec", help='family specifier, e.g. "lattice:v=4"')
    p.add_argument("--out", default=None, help="write the graph file here")
    _common(p)
    p.set_defaults(func=_cmd_build)

    p = subs.add_parser("info", help="family metadata without heavy computation")
    p.add_argument("spec")
    _common(p)
    p.set_defaults(func=_cmd_info)

    p = subs.add_parser("spectrum", help="eigenvalues with multiplicity grouping")
    p.add_argument("graph", help="graph file or family specifier")
    p.add_argument("--group-tol", type=float, default=1e-6)
    _common(p)
    p.set_defaults(func=_cmd_spectrum)

    p = subs.add_parser("toughness", help="exact toughness (or --bounds)")
    p.add_argument("graph")
    p.add_argument("--bounds", action="store_true",
                   help="report spectral/connectivity bounds instead of solving")
    p.add_argument("--budget", type=int, default=10**9)
    p.add_argument("--threads", type=int, default=_default_threads(),
                   help=f"worker threads (default from ${THREADS_ENV})")
    p.add_argument("--minimizers", action="store_true",
                   help="enumerate and classify every optimal set")
    _common(p)
    p.set_defaults(func=_cmd_toughness)

    p = subs.add_parser("bounds", help="spectral and connectivity bounds")
    p.add_argument("graph")
    _common(p)
    p.set_defaults(func=_cmd_bounds)

    p = subs.add_parser("connectivity", help="connectivity and independence facts")
    p.add_argument("graph")
    _common(p)
    p.set_defaults(func=_cmd_connectivity)

    p = subs.add_parser("verify", help="run the verification suite")
    p.add_argument("--profile", choices=sorted(PROFILES), default="desk")
    p.add_argument("--check", choices=sorted(CHECK_IDS), default=None,
                   help="run a single check id")
    p.add_argument("--args", nargs="*", default=None, metavar="KEY=VAL",
                   help="instance parameters for --check")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None,
                   help="override the profile's instance-size ceiling")
    _common(p)
    p.set_defaults(func=_cmd_verify)

    args = parser.parse_args(argv)
    if args.command == "verify" and args.threads is None:
        env = os.environ.get(THREADS_ENV)
        if env is not None:
            args.threads = _default_threads()
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        parser.exit(2, f"error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
