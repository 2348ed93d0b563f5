"""Command-line interface: ``hypersimplex {stats,sample,uniformity,spectrum,decompose,walk-diag,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource/cap error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import contextmanager

from . import core_graph, sampler, spectral, structure, verify
from .core_graph import GraphParams
from .errors import SamplerError, SizeCapError, UndersampledError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
VERIFY_D_MAX_CAP = 12


class UsageError(Exception):
    pass


def _dump_json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _dump_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


@contextmanager
def _output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _params(args) -> GraphParams:
    if args.d is None or args.k is None:
        raise UsageError("--d and --k are required")
    try:
        return GraphParams(args.d, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _closed_form_params(p: GraphParams) -> tuple[GraphParams, str | None]:
    """Parameters in the k <= d/2 regime plus an isomorphism note when they differ."""
    if p.in_regime:
        return p, None
    q, _ = core_graph.complement_params(p)
    return q, f"{p} is isomorphic to {q} (coordinate complement)"


def cmd_stats(args) -> tuple[str, int]:
    p = _params(args)
    q, note = _closed_form_params(p)
    doc = {
        "d": p.d,
        "k": p.k,
        "regime": p.regime,
        "vertices": core_graph.vertex_count(p),
        "degree": core_graph.degree(p),
        "edges": core_graph.edge_count(p),
        "diameter": core_graph.diameter(p) if p.in_regime else None,
        "clique_number": structure.clique_number(q),
        "isomorphic_to": None if note is None else {"d": q.d, "k": q.k},
        "notes": [],
    }
    if note:
        doc["notes"].append(
            f"{note}; diameter is stated for k <= d/2 only, the isomorphic graph has diameter "
            f"{core_graph.diameter(q)}"
        )
    if args.format == "json":
        return _dump_json(doc), EXIT_OK
    fields = ["d", "k", "regime", "vertices", "degree", "edges", "diameter", "clique_number"]
    if args.format == "csv":
        rows = [[f, "" if doc[f] is None else doc[f]] for f in fields]
        return _dump_csv(["field", "value"], rows), EXIT_OK
    lines = [f"graph          {p}", f"regime         {p.regime}"]
    for f in fields[3:]:
        value = doc[f]
        if f == "diameter" and value is None:
            value = f"n/a (k > d/2; {p} ≅ {q}, whose diameter is {core_graph.diameter(q)})"
        lines.append(f"{f:<15}{value}")
    lines += [f"note           {n}" for n in doc["notes"]]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_sample(args) -> tuple[str, int]:
    p = _params(args)
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    steps_source = "given"
    steps = args.steps
    if steps is None:
        steps = sampler.default_steps(p, args.lazy)
        steps_source = "default"
    config = sampler.WalkConfig(p, args.seed, steps, args.lazy, args.rule)
    start = args.start or "canonical"
    try:
        samples = sampler.sample_subsets(config, args.n, start, workers=args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    def emit(v):
        return str(v) if args.emit == "bits" else sampler.format_subset(v)

    if args.format == "json":
        doc = {
            "d": p.d,
            "k": p.k,
            "seed": args.seed,
            "steps": steps,
            "steps_source": steps_source,
            "lazy": args.lazy,
            "rule": args.rule,
            "samples": [emit(v) for v in samples],
        }
        return _dump_json(doc), EXIT_OK
    if args.format == "csv":
        return _dump_csv(["sample", "subset"], [[i, emit(v)] for i, v in enumerate(samples)]), EXIT_OK
    lines = []
    if steps_source == "default":
        lines.append(
            f"# steps={steps} (default walk length ceil(ln(C(d,k)/{sampler.DEFAULT_EPSILON})/gap), "
            "a heuristic, not a guarantee)"
        )
    lines += [emit(v) for v in samples]
    return "".join(line + "\n" for line in lines), EXIT_OK


def cmd_uniformity(args) -> tuple[str, int]:
    p = _params(args)
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    try:
        samples = [
            sampler.parse_sample(line, p)
            for line in text.splitlines()
            if line.strip() and not line.lstrip().startswith("#")
        ]
        report = sampler.uniformity_test(samples, args.significance)
    except UndersampledError as exc:
        raise UsageError(str(exc)) from exc
    except ValueError as exc:
        raise UsageError(f"bad sample line: {exc}") from exc
    doc = {"d": p.d, "k": p.k, **report.to_dict()}
    code = EXIT_OK if report.passed else EXIT_FAIL
    if args.format == "json":
        return _dump_json(doc), code
    if args.format == "csv":
        return _dump_csv(list(doc), [list(doc.values())]), code
    verdict = "pass" if report.passed else "fail"
    return (
        f"chi-square {report.statistic:.4f} on {report.dof} dof, p = {report.p_value:.4g}, "
        f"{report.n_samples} samples: {verdict} at significance {report.significance:g}\n"
    ), code


def cmd_spectrum(args) -> tuple[str, int]:
    p = _params(args)
    q, note = _closed_form_params(p)
    doc = spectral.spectrum_report(q)
    doc["d"], doc["k"] = p.d, p.k
    code = EXIT_OK
    err = None
    if args.verify:
        try:
            rep = spectral.verify_spectrum(q, args.tol)
            doc["verification"] = {
                "pass": rep.passed,
                "tol": args.tol,
                "max_deviation": rep.max_deviation,
                "mismatches": rep.mismatches,
            }
            if not rep.passed:
                code = EXIT_FAIL
        except SizeCapError as exc:
            err = f"cannot verify: {exc}"
            code = EXIT_CAP
    if args.format == "json":
        out = _dump_json(doc)
    elif args.format == "csv":
        out = _dump_csv(
            ["j", "eigenvalue", "multiplicity"],
            [[e["j"], e["eigenvalue"], e["multiplicity"]] for e in doc["entries"]],
        )
    else:
        lines = [f"spectrum of {p}" + (f"  [{note}]" if note else ""), "j  eigenvalue  multiplicity"]
        lines += [f"{e['j']:<3}{e['eigenvalue']:>10}  {e['multiplicity']:>12}" for e in doc["entries"]]
        lines.append(f"cheeger bounds: {doc['lower']} <= expansion <= {doc['upper']:.6f} (gap {doc['gap']})")
        if "verification" in doc:
            v = doc["verification"]
            verdict = "pass" if v["pass"] else "FAIL"
            lines.append(f"numeric check: {verdict}, max deviation {v['max_deviation']:.3e} (tol {v['tol']:g})")
            lines += [f"  {m}" for m in v["mismatches"]]
        out = "\n".join(lines) + "\n"
    if err:
        print(err, file=sys.stderr)
    return out, code


def _tree_lines(node: structure.DecompositionNode, indent: int = 0) -> list[str]:
    pad = "  " * indent
    head = f"{pad}G({node.d},{node.k}): {node.vertex_count} vertices, {node.edge_count} edges"
    if node.is_leaf:
        return [head + " [leaf]"]
    ones, zeros = node.children
    ok = "ok" if node.identity_holds() else "VIOLATED"
    head += (
        f"; pivot {node.pivot} -> parts {ones.vertex_count}/{zeros.vertex_count}, "
        f"links {node.linking_edge_count}; identity {node.edge_count}="
        f"{zeros.edge_count}+{ones.edge_count}+{node.linking_edge_count} {ok}"
    )
    out = [head]
    for c in node.children:
        out += _tree_lines(c, indent + 1)
    return out


def cmd_decompose(args) -> tuple[str, int]:
    p = _params(args)
    if args.depth < 1:
        raise UsageError("--depth must be at least 1")
    tree = structure.recursive_decomposition(p, args.depth)
    code = EXIT_OK if all(n.identity_holds() for n in tree.walk()) else EXIT_FAIL
    if args.format == "json":
        return _dump_json(tree.to_dict()), code
    if args.format == "csv":
        rows = [
            [n.d, n.k, "" if n.pivot is None else n.pivot, n.vertex_count, n.edge_count,
             "" if n.linking_edge_count is None else n.linking_edge_count, len(n.children)]
            for n in tree.walk()
        ]
        header = ["d", "k", "pivot", "vertex_count", "edge_count", "linking_edge_count", "children"]
        return _dump_csv(header, rows), code
    return "\n".join(_tree_lines(tree)) + "\n", code


def cmd_walk_diag(args) -> tuple[str, int]:
    p = _params(args)
    try:
        tvs = sampler.tv_evolution(p, args.start or "canonical", args.max_t, args.lazy)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rows = [{"t": t, "tv": tv} for t, tv in enumerate(tvs)]
    if args.format == "json":
        return _dump_json({"d": p.d, "k": p.k, "lazy": args.lazy, "rows": rows}), EXIT_OK
    if args.format == "csv":
        return _dump_csv(["t", "tv"], [[r["t"], r["tv"]] for r in rows]), EXIT_OK
    return "".join(f"{r['t']}\t{r['tv']:.12e}\n" for r in rows), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    if args.d_max < 2:
        raise UsageError("--d-max must be at least 2")
    if args.d_max > VERIFY_D_MAX_CAP:
        raise SizeCapError(f"--d-max is capped at {VERIFY_D_MAX_CAP}")
    records = verify.run_suite(args.d_max)
    summary = verify.summarize(records)
    failed = [r for r in records if not r.passed]
    if failed:
        print(json.dumps(failed[0].to_dict()), file=sys.stderr)
    code = EXIT_FAIL if failed else EXIT_OK
    if args.format == "json":
        doc = {
            "d_max": args.d_max,
            "pass": not failed,
            "summary": summary,
            "records": [r.to_dict() for r in records],
        }
        return _dump_json(doc), code
    if args.format == "csv":
        return _dump_csv(
            ["check", "pass", "fail"], [[c, s["pass"], s["fail"]] for c, s in summary.items()]
        ), code
    lines = [f"{'check':<22}{'pass':>6}{'fail':>6}"]
    lines += [f"{c:<22}{s['pass']:>6}{s['fail']:>6}" for c, s in summary.items()]
    lines.append(f"{len(records) - len(failed)}/{len(records)} checks passed for d <= {args.d_max}")
    return "\n".join(lines) + "\n", code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, help="dimension (number of coordinates)")
    common.add_argument("--k", type=int, help="number of ones per vertex")
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--output", metavar="FILE", help="write to FILE instead of stdout")

    parser = argparse.ArgumentParser(prog="hypersimplex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("stats", parents=[common], help="closed-form graph statistics")

    s = sub.add_parser("sample", parents=[common], help="random k-subsets by random walk")
    s.add_argument("--n", type=int, default=1, help="number of subsets")
    s.add_argument("--steps", type=int, help="walk length (default: spectral heuristic)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--lazy", action="store_true")
    s.add_argument("--rule", choices=list(sampler.STEP_RULES), default="rejection-pair")
    s.add_argument("--emit", choices=["indices", "bits"], default="indices")
    s.add_argument("--start", help="start vertex as a 0/1 string (default: first k ones)")
    s.add_argument("--workers", type=int, default=1)

    u = sub.add_parser("uniformity", parents=[common], help="chi-square test of samples")
    u.add_argument("--input", help="sample file (default stdin)")
    u.add_argument("--significance", type=float, default=0.001)

    sp = sub.add_parser("spectrum", parents=[common], help="eigenvalues and Cheeger bounds")
    sp.add_argument("--verify", action="store_true", help="confirm with a numeric eigensolve")
    sp.add_argument("--tol", type=float, default=1e-8)

    dp = sub.add_parser("decompose", parents=[common], help="recursive Pascal decomposition")
    dp.add_argument("--depth", type=int, default=1)

    w = sub.add_parser("walk-diag", parents=[common], help="exact TV distance to uniform")
    w.add_argument("--max-t", type=int, default=20)
    w.add_argument("--lazy", action="store_true")
    w.add_argument("--start", help="start vertex as a 0/1 string")

    v = sub.add_parser("verify", parents=[common], help="oracle cross-check suite")
    v.add_argument("--d-max", type=int, default=6)
    return parser


COMMANDS = {
    "stats": cmd_stats,
    "sample": cmd_sample,
    "uniformity": cmd_uniformity,
    "spectrum": cmd_spectrum,
    "decompose": cmd_decompose,
    "walk-diag": cmd_walk_diag,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SizeCapError, SamplerError) as exc:
        print(f"{parser.prog} {args.command}: {exc}", file=sys.stderr)
        return EXIT_CAP
    with _output(args.output) as fh:
        fh.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
