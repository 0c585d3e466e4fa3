"""Per-graph property checks.  Each check returns (verdict, certificates)."""

from __future__ import annotations

from dataclasses import asdict
from functools import cached_property

from ..graph import DeleteEdge, Graph, apply_edit
from ..graph6 import to_graph6
from ..machinery import (check_fact_T_dominating, check_fact_T_dset, check_fact_U_literal,
                         claim_decompose, compute_T, compute_U, independentize,
                         peel_U_iterative, theorem_check)
from ..solvers import (DominationCertificate, SolveBudget, brute_force_gamma, brute_force_i,
                       enumerate_min_dsets, gamma_exact, i_exact, reed_bound)
from ..structure import find_claw, find_double_star, has_adjacent_deg3_pair, verify_lemma_disjoint
from ..verdict import PreconditionError

ORACLE_MAX_N = 20


class GraphContext:
    """Lazily shared solver results for one graph."""

    def __init__(self, g: Graph, budget: SolveBudget, max_dsets: int, peel_policy: str,
                 fact_u_injection: dict | None = None):
        self.g = g
        self.budget = budget
        self.max_dsets = max_dsets
        self.peel_policy = peel_policy
        self.fact_u_injection = fact_u_injection
        self.solver_nodes = 0

    @cached_property
    def cubic(self) -> bool:
        return self.g.is_cubic() and self.g.is_connected()

    @cached_property
    def gamma(self) -> DominationCertificate:
        c = gamma_exact(self.g, self.budget)
        self.solver_nodes += c.nodes
        return c

    @cached_property
    def indep(self) -> DominationCertificate:
        c = i_exact(self.g, self.budget)
        self.solver_nodes += c.nodes
        return c

    @cached_property
    def all_dsets(self) -> list[DominationCertificate]:
        return enumerate_min_dsets(self.g, self.budget, gamma=self.gamma.size)

    @cached_property
    def dsets(self) -> list[DominationCertificate]:
        return self.all_dsets[:self.max_dsets]

    @cached_property
    def min_ie_dsets(self) -> list[DominationCertificate]:
        low = min(c.internal_edges for c in self.all_dsets)
        return [c for c in self.all_dsets if c.internal_edges == low][:self.max_dsets]

    def dset_note(self, which: list) -> dict:
        return {"dsets_checked": len(which), "dsets_total": len(self.all_dsets)}


def _gi(ctx: GraphContext) -> dict:
    return {"gamma": ctx.gamma.to_json(), "i": ctx.indep.to_json(), "n": ctx.g.n}


def check_oracle_agreement(ctx: GraphContext):
    if ctx.g.n > ORACLE_MAX_N:
        return "NotApplicable", {"reason": f"n > {ORACLE_MAX_N}"}
    bg, bi = brute_force_gamma(ctx.g), brute_force_i(ctx.g)
    certs = {**_gi(ctx), "brute_gamma": bg.to_json(), "brute_i": bi.to_json()}
    ok = bg.size == ctx.gamma.size and bi.size == ctx.indep.size
    return ("Holds" if ok else "Violated"), certs


def check_reed_bound(ctx: GraphContext):
    if not ctx.cubic:
        return "NotApplicable", {"reason": "not a connected cubic graph"}
    bound = reed_bound(ctx.g.n)
    certs = {**_gi(ctx), "bound": bound}
    if ctx.gamma.size <= bound:
        return "Holds", certs
    if ctx.g.n <= ORACLE_MAX_N:
        certs["brute_gamma"] = brute_force_gamma(ctx.g).to_json()
    return "Violated", certs


def check_theorem(ctx: GraphContext):
    if not ctx.cubic:
        return "NotApplicable", {"reason": "not a connected cubic graph"}
    v = theorem_check(ctx.g, ctx.budget, ctx.gamma, ctx.indep)
    return v.status.value, {**_gi(ctx), "bound": reed_bound(ctx.g.n), "branch": v.reason}


def check_prop_a(ctx: GraphContext):
    claw = find_claw(ctx.g)
    if claw:
        return "NotApplicable", {"claw": asdict(claw)}
    ok = ctx.gamma.size == ctx.indep.size
    return ("Holds" if ok else "Violated"), _gi(ctx)


def check_prop_b(ctx: GraphContext):
    star = find_double_star(ctx.g)
    pair = has_adjacent_deg3_pair(ctx.g)
    certs = {"double_star": asdict(star) if star else None,
             "adjacent_deg3_pair": asdict(pair) if pair else None,
             "divergence": star is None and pair is not None}
    if star:
        return "NotApplicable", certs
    certs.update(_gi(ctx))
    return ("Holds" if ctx.gamma.size == ctx.indep.size else "Violated"), certs


def check_lemma(ctx: GraphContext):
    results = []
    for x in ctx.min_ie_dsets:
        v = verify_lemma_disjoint(ctx.g, x, ctx.budget)
        results.append((x, v))
        if v.status.value == "Violated":
            return "Violated", {"x": list(x.vertices), **v.witness, **ctx.dset_note(ctx.min_ie_dsets)}
    applicable = [x for x, v in results if v.status.value == "Holds"]
    note = ctx.dset_note(ctx.min_ie_dsets)
    if applicable:
        return "Holds", {"applicable": len(applicable), **note}
    reason = results[0][1].reason if results else "no d-sets"
    return "NotApplicable", {"reason": reason, **note}


def check_fact_u(ctx: GraphContext):
    inj = ctx.fact_u_injection
    if inj:
        x = inj["x"]
        u_subset = [tuple(e) for e in inj["u_subset"]]
        try:
            v = check_fact_U_literal(ctx.g, x, u_subset, ctx.budget)
        except PreconditionError as exc:
            return "NotApplicable", {"reason": str(exc), "injected": True}
        return v.status.value, {**v.witness, "injected": True, "graph6": to_graph6(ctx.g)}
    probes = 0
    for x in ctx.dsets:
        u = compute_U(ctx.g, x)
        by_vertex: dict[int, list] = {}
        for a, b, _ in u.edges:
            for end in (a, b):
                by_vertex.setdefault(end, []).append((a, b))
        subsets = [sorted(u.pairs())] + [by_vertex[v] for v in sorted(by_vertex) if v not in x.vertices]
        for sub in subsets:
            if not sub:
                continue
            probes += 1
            v = check_fact_U_literal(ctx.g, x, sub, ctx.budget, ctx.gamma.size)
            if v.status.value == "Violated":
                return "Violated", {**v.witness, "graph6": to_graph6(ctx.g), "probes": probes}
    if not probes:
        return "NotApplicable", {"reason": "U(X) empty for every d-set"}
    return "Holds", {"probes": probes, **ctx.dset_note(ctx.dsets)}


def check_peel_safety(ctx: GraphContext):
    steps = 0
    for x in ctx.dsets:
        for a, b in sorted(compute_U(ctx.g, x).pairs()):
            h, _ = apply_edit(ctx.g, DeleteEdge(a, b))
            if not h.dominates(x.vertices):
                return "Violated", {"x": list(x.vertices), "single_edge": [a, b],
                                    "graph6": to_graph6(ctx.g)}
        peel = peel_U_iterative(ctx.g, x, ctx.peel_policy)
        steps += len(peel.trace.steps)
        if not peel.always_dominated:
            k = peel.dominated_after_each.index(False)
            return "Violated", {"x": list(x.vertices), "failed_step": k,
                                "trace": peel.trace.to_json("Violated")}
    return "Holds", {"peel_steps": steps, **ctx.dset_note(ctx.dsets)}


def _s_choices(tset) -> list[tuple[int, ...]]:
    members = sorted(tset.members)
    out = [(v,) for v in members]
    if len(members) > 1:
        out.append(tuple(members))
    return out


def check_fact_2_2(ctx: GraphContext):
    checked = 0
    for y in ctx.dsets:
        for s in _s_choices(compute_T(ctx.g, y.vertices)):
            v = check_fact_T_dominating(ctx.g, y.vertices, s, ctx.budget, ctx.gamma.size)
            checked += 1
            if v.status.value == "Violated":
                return "Violated", {**v.witness, "graph6": to_graph6(ctx.g)}
    if not checked:
        return "NotApplicable", {"reason": "T(Y) empty for every d-set"}
    return "Holds", {"instances": checked, **ctx.dset_note(ctx.dsets)}


def check_fact_2_3(ctx: GraphContext):
    holds = violated = skipped = 0
    first_violation = None
    for y in ctx.dsets:
        for s in _s_choices(compute_T(ctx.g, y.vertices)):
            try:
                v = check_fact_T_dset(ctx.g, y.vertices, s, ctx.budget)
            except PreconditionError:
                skipped += 1
                continue
            if v.status.value == "Holds":
                holds += 1
            else:
                violated += 1
                if first_violation is None:
                    first_violation = v.witness
    certs = {"holds": holds, "violated": violated, "precondition_failed": skipped,
             **ctx.dset_note(ctx.dsets)}
    if first_violation:
        return "Violated", {**certs, "example": first_violation, "graph6": to_graph6(ctx.g)}
    if not holds:
        return "NotApplicable", certs
    return "Holds", certs


def check_claim(ctx: GraphContext):
    if not ctx.cubic:
        return "NotApplicable", {"reason": "not a connected cubic graph"}
    runs = []
    for x in ctx.min_ie_dsets:
        runs.append(claim_decompose(ctx.g, x, ctx.peel_policy, ctx.budget, ctx.gamma.size))
    certs = {
        "runs": len(runs),
        "claim_holds": sum(r.claim_holds for r in runs),
        "max_degree_le_2": sum(r.max_degree_le_2 for r in runs),
        "accounting_ok": sum(r.vertex_accounting_ok and r.edge_accounting_ok for r in runs),
        "y_dominates": sum(r.y_dominates for r in runs),
        "anomalies": sum(len(r.anomalies) for r in runs),
        "surplus": [r.surplus for r in runs],
        "first": runs[0].to_json(),
        **ctx.dset_note(ctx.min_ie_dsets),
    }
    bad = next((r for r in runs if not (r.claim_holds and r.y_dominates and r.vertex_accounting_ok
                                         and r.edge_accounting_ok)), None)
    if bad:
        certs["failure"] = bad.to_json()
        return "Violated", certs
    return "Holds", certs


def check_independentize(ctx: GraphContext):
    """Blocking contract: on a double-star-free graph every minimum-‖X‖ d-set
    is made independent at size γ = i; every stuck run carries an adjacent
    degree-3 pair.  Stuck runs from other d-sets are counted, not failed."""
    star_free = find_double_star(ctx.g) is None
    optimal = {x.vertices for x in ctx.min_ie_dsets}
    successes = stuck = stuck_local = 0
    for x in ctx.dsets + [x for x in ctx.min_ie_dsets if x not in ctx.dsets]:
        res = independentize(ctx.g, x)
        base = {"x": list(x.vertices), "result": res.to_json(), "double_star_free": star_free,
                "graph6": to_graph6(ctx.g)}
        if res.succeeded:
            successes += 1
            if res.certificate.size > x.size:
                return "Violated", {**base, "reason": "output larger than input"}
            if res.certificate.size == ctx.gamma.size and ctx.indep.size != ctx.gamma.size:
                return "Violated", {**base, **_gi(ctx), "reason": "i_exact disagrees with success"}
            continue
        stuck += 1
        if res.witness is None:
            return "Violated", {**base, "reason": "stuck without adjacent degree-3 pair"}
        if star_free:
            if x.vertices in optimal:
                return "Violated", {**base, "reason": "stuck on a double-star-free graph"}
            stuck_local += 1
    certs = {"succeeded": successes, "stuck": stuck, "double_star_free": star_free,
             "stuck_star_free_non_optimal": stuck_local, **ctx.dset_note(ctx.dsets)}
    if star_free:
        certs.update(_gi(ctx))
    return "Holds", certs


CHECKS = {
    "oracle_agreement": check_oracle_agreement,
    "reed_bound": check_reed_bound,
    "theorem_2_1": check_theorem,
    "prop_a": check_prop_a,
    "prop_b": check_prop_b,
    "lemma_2_1": check_lemma,
    "fact_u_literal": check_fact_u,
    "peel_safety": check_peel_safety,
    "fact_2_2": check_fact_2_2,
    "fact_2_3": check_fact_2_3,
    "claim_2_1": check_claim,
    "independentize": check_independentize,
}
