"""Command line: solve, sweep, gen, check, report."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict
from pathlib import Path

from ..generators import CorpusSpec, build_corpus, named_graph
from ..graph import Graph
from ..graph6 import Graph6Error, parse_graph6, to_graph6
from ..machinery import (check_fact_T_dominating, check_fact_T_dset, check_fact_U_literal,
                         claim_decompose, compute_T, compute_U, component_reduce,
                         independentize, peel_U_iterative, theorem_check)
from ..solvers import BudgetExceeded, SolveBudget, gamma_exact, i_exact, min_internal_edges_dset, reed_bound
from ..structure import verify_lemma_disjoint
from ..verdict import PreconditionError, Verdict
from .findings import PROPERTIES, ResultCache, RunConfig, dumps
from .report import report_from_cache
from .sweep import format_summary, run_sweep

EXIT_OK, EXIT_BLOCKING, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="graph6 file, or - for stdin")
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cache", help="findings cache (JSONL)")
    p.add_argument("--peel-policy", choices=("deg3", "any"), default="deg3")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("-v", "--verbose", action="store_true")


def _corpus_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=("exhaustive", "random", "named", "gadget_chain", "file"),
                   default="exhaustive")
    p.add_argument("--n", type=int)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--names", default="", help="comma-separated named graphs")
    p.add_argument("--k", default="", help="comma-separated chain lengths")
    p.add_argument("--disconnected", action="store_true", help="allow disconnected random graphs")


def _corpus_spec(a) -> CorpusSpec:
    if a.mode == "file" and not a.input:
        raise UsageError("--mode file needs --input")
    return CorpusSpec(
        mode=a.mode, n=a.n, n_min=a.n_min, n_max=a.n_max, count=a.count, seed=a.seed,
        names=tuple(x for x in a.names.split(",") if x),
        k_values=tuple(int(x) for x in a.k.split(",") if x),
        connected=not a.disconnected, path=a.input if a.mode == "file" else None)


def _budget(a) -> SolveBudget:
    return SolveBudget(a.budget_nodes, a.budget_seconds)


def _read_lines(source: str) -> list[str]:
    fh = sys.stdin if source == "-" else open(source, encoding="ascii")
    try:
        return [ln.strip() for ln in fh if ln.strip()]
    finally:
        if fh is not sys.stdin:
            fh.close()


def _graph_arg(text: str) -> Graph:
    try:
        return named_graph(text)
    except KeyError:
        return parse_graph6(text)


def _graphs(a) -> list[tuple[str, Graph]]:
    out = [(s, _graph_arg(s)) for s in getattr(a, "graphs", []) or []]
    if a.input:
        out += [(s, parse_graph6(s)) for s in _read_lines(a.input)]
    if not out:
        raise UsageError("no input graph (give a name/graph6 or --input)")
    return out


def _vertex_list(text: str | None) -> list[int] | None:
    if text is None:
        return None
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def _edge_list(text: str | None) -> list[tuple[int, int]]:
    out = []
    for part in (text or "").replace(" ", "").split(","):
        if part:
            a, b = part.split("-")
            out.append((int(a), int(b)))
    return out


def _emit(a, payload: dict, text: str) -> None:
    print(dumps(payload) if a.format == "json" else text)


# ------------------------------------------------------------------ commands


def cmd_solve(a) -> int:
    budget = _budget(a)
    for label, g in _graphs(a):
        gam, ind = gamma_exact(g, budget), i_exact(g, budget)
        bound = reed_bound(g.n)
        payload = {"graph6": to_graph6(g), "n": g.n, "gamma": gam.to_json(), "i": ind.to_json(),
                   "bound": bound, "within_bound": gam.size <= bound}
        text = (f"{label}: n={g.n} gamma={gam.size} i={ind.size} bound={bound}\n"
                f"  d-set {list(gam.vertices)} (internal edges {gam.internal_edges})\n"
                f"  independent d-set {list(ind.vertices)}\n"
                f"  gamma {'<=' if gam.size <= bound else '>'} ceil(n/3)")
        _emit(a, payload, text)
    return EXIT_OK


def _load_config(a) -> RunConfig:
    if a.config:
        cfg = RunConfig.from_json(json.loads(Path(a.config).read_text()))
        return RunConfig(**{**cfg.__dict__, "workers": a.workers})
    props = tuple(p for p in a.properties.split(",") if p) if a.properties else PROPERTIES
    inj = None
    if a.inject_x is not None:
        inj = {"x": _vertex_list(a.inject_x), "u_subset": [list(e) for e in _edge_list(a.inject_u)]}
    return RunConfig(corpus=(_corpus_spec(a),), properties=props, node_limit=a.budget_nodes,
                     time_limit=a.budget_seconds, peel_policy=a.peel_policy,
                     max_dsets=a.max_dsets, seed=a.seed, fact_u_injection=inj, workers=a.workers)


def cmd_sweep(a) -> int:
    try:
        cfg = _load_config(a)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    cache = ResultCache(a.cache)
    for lineno, msg in cache.errors:
        print(f"warning: cache line {lineno} unreadable: {msg}", file=sys.stderr)
    result = run_sweep(cfg, cache)
    if a.output:
        with open(a.output, "w", encoding="utf-8") as fh:
            for f in result.findings:
                fh.write(f.to_line() + "\n")
    if a.format == "json":
        print(dumps({"config_hash": cfg.config_hash(), "summary": result.summary,
                     "cache_hits": result.cache_hits, "graphs_evaluated": result.graphs_evaluated,
                     "blocking_violations": len(result.blocking_violations),
                     "budget_errors": result.budget_errors}))
    else:
        print(f"config {cfg.config_hash()}")
        print(format_summary(result))
    return result.exit_code


def cmd_gen(a) -> int:
    for item in build_corpus(_corpus_spec(a)):
        print(to_graph6(item.graph))
    return EXIT_OK


def _verdict_text(v: Verdict) -> str:
    return f"{v.status.value}" + (f" ({v.reason})" if v.reason else "")


def cmd_check(a) -> int:
    budget = _budget(a)
    g = _graph_arg(a.graph)
    x = _vertex_list(a.x)
    if x is None and a.kind not in ("theorem", "reduce"):
        x = list(min_internal_edges_dset(g, budget).vertices)
    kind = a.kind
    if kind == "lemma":
        from ..solvers import DominationCertificate

        v = verify_lemma_disjoint(g, DominationCertificate.certify(g, x), budget)
        _emit(a, {"kind": kind, "x": x, **v.to_json()}, _verdict_text(v))
    elif kind == "claim":
        d = claim_decompose(g, x, a.peel_policy, budget)
        payload = {"kind": kind, **d.to_json()}
        text = [f"X={list(d.x)} policy={d.policy}",
                f"peel: {[e.args() for e in d.peel.trace.steps]}",
                f"T1={list(d.t1)} T2={list(d.t2)} T'={list(d.t_prime)} Y={list(d.y)}"]
        text += [f"component {list(c.vertices)}: {c.shape}, Y part {list(c.y_part)}, "
                 f"dominated={c.dominated}" for c in d.components]
        text += [f"anomaly: {s}" for s in d.anomalies]
        text.append("Claim-holds" if d.claim_holds else "Claim-fails")
        _emit(a, payload, "\n".join(text))
    elif kind == "independentize":
        r = independentize(g, x)
        text = f"{r.status}: {list(r.vertices)}"
        for m in r.moves:
            text += f"\n  {m.kind} on edge {list(m.edge)}: -{m.removed}" + (f" +{m.added}" if m.added is not None else "")
        _emit(a, {"kind": kind, **r.to_json()}, text)
    elif kind == "fact-u":
        u = _edge_list(a.u) if a.u else sorted(compute_U(g, x).pairs())
        v = check_fact_U_literal(g, x, u, budget)
        _emit(a, {"kind": kind, **v.to_json()}, _verdict_text(v) + f" {v.witness.get('undominated', '')}")
    elif kind in ("fact-t-dom", "fact-t-dset"):
        s = _vertex_list(a.s)
        if s is None:
            s = sorted(compute_T(g, x).members)
        fn = check_fact_T_dominating if kind == "fact-t-dom" else check_fact_T_dset
        v = fn(g, x, s, budget)
        _emit(a, {"kind": kind, **v.to_json()}, _verdict_text(v))
    elif kind == "peel":
        p = peel_U_iterative(g, x, a.peel_policy)
        _emit(a, {"kind": kind, "trace": p.trace.to_json(), "rules": list(p.rules),
                  "always_dominated": p.always_dominated, "result_graph6": to_graph6(p.graph)},
              f"deleted {[e.args() for e in p.trace.steps]} rules {list(p.rules)}; "
              f"dominated throughout: {p.always_dominated}")
    elif kind == "theorem":
        v = theorem_check(g, budget)
        _emit(a, {"kind": kind, **v.to_json()}, _verdict_text(v))
    elif kind == "reduce":
        y = x if x is not None else list(gamma_exact(g, budget).vertices)
        r = component_reduce(g, y)
        _emit(a, {"kind": kind, **r.to_json()},
              f"B={to_graph6(r.graph)} Y_j={sorted(r.y)} steps={len(r.steps)}")
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown check {kind}")
    return EXIT_OK


def cmd_report(a) -> int:
    path = a.path or a.cache
    if not path:
        raise UsageError("report needs a cache path")
    if not Path(path).exists():
        raise UsageError(f"no such cache {path}")
    files, errors = report_from_cache(path, a.out_dir)
    for lineno, msg in errors:
        print(f"cache line {lineno}: {msg}", file=sys.stderr)
    if a.format == "json":
        print(dumps({"files": sorted(files), "errors": errors}))
    else:
        print(files["report.md"], end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubicdom", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="exact gamma and i with certificates")
    _common(s)
    s.add_argument("graphs", nargs="*", help="graph names or graph6 strings")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("sweep", help="run property checks over a corpus")
    _common(s)
    _corpus_flags(s)
    s.add_argument("--properties", default="", help=f"comma list from {','.join(PROPERTIES)}")
    s.add_argument("--max-dsets", type=int, default=64)
    s.add_argument("--inject-x", help="fact_u_literal: fixed X, e.g. 0,2")
    s.add_argument("--inject-u", help="fact_u_literal: fixed U', e.g. 0-1,1-2")
    s.add_argument("--config", help="RunConfig JSON file (overrides corpus flags)")
    s.add_argument("--output", help="write findings JSONL here")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("gen", help="emit graph6 corpus")
    _common(s)
    _corpus_flags(s)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("check", help="run one checker with its trace")
    _common(s)
    s.add_argument("kind", choices=("lemma", "claim", "independentize", "fact-u", "fact-t-dom",
                                    "fact-t-dset", "peel", "theorem", "reduce"))
    s.add_argument("graph", help="graph name or graph6")
    s.add_argument("--x", help="vertex set, e.g. 1,2 (default: minimum-internal-edge d-set)")
    s.add_argument("--u", help="edge subset for fact-u, e.g. 0-1,1-2")
    s.add_argument("--s", help="vertex subset of T(X) for fact-t-*")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("report", help="CSV and Markdown tables from a cache")
    _common(s)
    s.add_argument("path", nargs="?", help="cache JSONL (or use --cache)")
    s.add_argument("--out-dir")
    s.set_defaults(func=cmd_report)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return a.func(a)
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, Graph6Error, PreconditionError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
