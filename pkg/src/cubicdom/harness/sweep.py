"""Sweep orchestration: corpus -> per-graph property checks -> findings."""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..canon import canonical_key
from ..generators import build_corpus
from ..graph6 import parse_graph6, to_graph6
from ..solvers import BudgetExceeded, SolveBudget
from .findings import BLOCKING, Finding, ResultCache, RunConfig
from .properties import CHECKS, GraphContext

log = logging.getLogger(__name__)


@dataclass
class SweepResult:
    findings: list[Finding]
    cache_hits: int = 0
    graphs_evaluated: int = 0
    duplicates: int = 0
    budget_errors: int = 0
    summary: dict = field(default_factory=dict)

    @property
    def blocking_violations(self) -> list[Finding]:
        return [f for f in self.findings if f.blocking_violation]

    @property
    def exit_code(self) -> int:
        if self.blocking_violations:
            return 1
        if self.budget_errors:
            return 3
        return 0


def _evaluate(job: tuple) -> list[dict]:
    """Worker entry point; plain data in and out so it pickles cleanly."""
    graph6, key, props, cfg_json, chash = job
    cfg = RunConfig.from_json(cfg_json)
    g = parse_graph6(graph6)
    ctx = GraphContext(g, SolveBudget(cfg.node_limit, cfg.time_limit), cfg.max_dsets,
                       cfg.peel_policy, cfg.fact_u_injection)
    out = []
    for prop in props:
        try:
            verdict, certs = CHECKS[prop](ctx)
            stats = {"solver_nodes": ctx.solver_nodes}
        except BudgetExceeded as exc:
            verdict, certs, stats = "NotApplicable", {"error": f"budget: {exc}"}, {"budget_exceeded": True}
        certs = {**certs, "input_graph6": graph6}
        out.append(Finding(key, prop, verdict, certs, stats, chash).to_json())
    return out


def summarize(findings: list[Finding]) -> dict[str, dict[str, int]]:
    table: dict[str, Counter] = {}
    for f in findings:
        table.setdefault(f.property_id, Counter())[f.verdict] += 1
    return {p: {v: c[v] for v in ("Holds", "Violated", "NotApplicable")} for p, c in sorted(table.items())}


def run_sweep(cfg: RunConfig, cache: ResultCache | None = None) -> SweepResult:
    cache = cache if cache is not None else ResultCache(None)
    chash = cfg.config_hash()
    items = [it for spec in cfg.corpus for it in build_corpus(spec)]
    seen: set[str] = set()
    jobs = []
    slots: list[tuple[str, str]] = []
    duplicates = 0
    for it in items:
        key = canonical_key(it.graph)
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        slots += [(key, p) for p in cfg.properties]
        missing = [p for p in cfg.properties if cache.get((key, p, chash)) is None]
        if missing:
            jobs.append((to_graph6(it.graph), key, missing, cfg.to_json(), chash))
    hits = len(slots) - sum(len(j[2]) for j in jobs)
    log.info("sweep %s: %d graphs, %d cached findings, %d graphs to evaluate",
             chash, len(seen), hits, len(jobs))
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            batches = list(pool.map(_evaluate, jobs, chunksize=1))
    else:
        batches = [_evaluate(j) for j in jobs]
    fresh = [Finding.from_json(d) for batch in batches for d in batch]
    cache.append(fresh)
    findings = [cache.get((key, p, chash)) for key, p in slots]
    budget_errors = sum(1 for f in fresh if f.solver_stats.get("budget_exceeded"))
    return SweepResult(findings, hits, len(jobs), duplicates, budget_errors, summarize(findings))


def format_summary(result: SweepResult) -> str:
    lines = [f"{'property':<18} {'Holds':>7} {'Violated':>9} {'N/A':>7}  blocking"]
    for prop, row in result.summary.items():
        lines.append(f"{prop:<18} {row['Holds']:>7} {row['Violated']:>9} {row['NotApplicable']:>7}"
                     f"  {'yes' if prop in BLOCKING else 'no'}")
    lines.append(f"graphs evaluated: {result.graphs_evaluated}, cache hits: {result.cache_hits}, "
                 f"duplicates skipped: {result.duplicates}, budget errors: {result.budget_errors}")
    return "\n".join(lines)
