"""Executable graph transformations around a dominating set.

Edge classification U(X), iterative peeling, the T(Y) candidate set and the
G(S) replacement, the decomposition into path/cycle components, the
component reduction and the exchange procedure that makes a minimum
dominating set independent.  Every transformation emits a replayable
``TransformTrace``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .graph import (AddEdge, DeleteEdge, DeleteVertices, Graph, GraphEdit,
                    SubdivideEdge, apply_edit, connected_components, edit_to_json,
                    induced_subgraph, replay)
from .graph6 import parse_graph6, to_graph6
from .solvers import (UNLIMITED, DominationCertificate, SolveBudget, gamma_exact,
                      i_exact, reed_bound)
from .structure import AdjacentPairWitness, has_adjacent_deg3_pair
from .verdict import PreconditionError, Verdict

RULE_RANK = {"i": 0, "ii": 1, "iii": 2}
PEEL_POLICIES = ("deg3", "any")


@dataclass(frozen=True)
class TransformTrace:
    graph6: str
    steps: tuple[GraphEdit, ...]

    def replay(self) -> Graph:
        return replay(parse_graph6(self.graph6), self.steps)

    def to_json(self, verdict: str | None = None) -> dict:
        return {"graph6": self.graph6, "steps": [edit_to_json(e) for e in self.steps],
                "verdict": verdict}


def _as_set(x: DominationCertificate | Iterable[int]) -> frozenset[int]:
    if isinstance(x, DominationCertificate):
        return frozenset(x.vertices)
    return frozenset(x)


def _require_min_dset(g: Graph, xs: frozenset[int], budget: SolveBudget, what: str,
                      gamma: int | None = None) -> int:
    if not g.dominates(xs):
        raise PreconditionError(f"{what} {sorted(xs)} does not dominate")
    if gamma is None:
        gamma = gamma_exact(g, budget).size
    if len(xs) != gamma:
        raise PreconditionError(f"{what} {sorted(xs)} has size {len(xs)}, gamma is {gamma}")
    return gamma


# ------------------------------------------------------------------ U(X)


@dataclass(frozen=True)
class UEdgeSet:
    edges: tuple[tuple[int, int, str], ...]  # (v1, v2, rule); for rule ii v1 is in X
    source: str
    x: frozenset[int]

    def pairs(self) -> set[tuple[int, int]]:
        return {(min(a, b), max(a, b)) for a, b, _ in self.edges}

    def rule_of(self, u: int, v: int) -> str | None:
        key = (min(u, v), max(u, v))
        for a, b, r in self.edges:
            if (min(a, b), max(a, b)) == key:
                return r
        return None


def classify_edge(g: Graph, xs: frozenset[int], u: int, v: int) -> tuple[int, int, str] | None:
    in_u, in_v = u in xs, v in xs
    if not in_u and not in_v:
        return (u, v, "i")
    if in_u and in_v:
        return (u, v, "iii")
    v1, v2 = (u, v) if in_u else (v, u)
    if any(z in xs for z in g.adj[v2] if z != v1):
        return (v1, v2, "ii")
    return None


def compute_U(g: Graph, x: DominationCertificate | Iterable[int]) -> UEdgeSet:
    xs = _as_set(x)
    out = []
    for u, v in g.edges():
        tagged = classify_edge(g, xs, u, v)
        if tagged:
            out.append(tagged)
    return UEdgeSet(tuple(out), to_graph6(g), xs)


@dataclass(frozen=True)
class PeelResult:
    graph: Graph
    trace: TransformTrace
    rules: tuple[str, ...]
    dominated_after_each: tuple[bool, ...]

    @property
    def always_dominated(self) -> bool:
        return all(self.dominated_after_each)


def _peel_candidates(g: Graph, xs: frozenset[int], policy: str) -> list[tuple[int, int, str]]:
    if policy not in PEEL_POLICIES:
        raise ValueError(f"unknown peel policy {policy!r}")
    cands = []
    for u, v in g.edges():
        if policy == "deg3" and len(g.adj[u]) != 3 and len(g.adj[v]) != 3:
            continue
        tagged = classify_edge(g, xs, u, v)
        if tagged:
            cands.append((u, v, tagged[2]))
    return cands


def peel_U_iterative(g: Graph, x: DominationCertificate | Iterable[int],
                     policy: str = "deg3") -> PeelResult:
    """Delete one U-edge at a time, reclassifying after each deletion, until
    no eligible edge is left.  ``deg3`` only deletes edges with an endpoint of
    current degree 3; ``any`` deletes every U-edge.  The next edge is the
    minimum of (rule, low id, high id)."""
    xs = _as_set(x)
    if not g.dominates(xs):
        raise PreconditionError(f"{sorted(xs)} does not dominate")
    start = to_graph6(g)
    steps: list[GraphEdit] = []
    rules: list[str] = []
    dominated: list[bool] = []
    while True:
        cands = _peel_candidates(g, xs, policy)
        if not cands:
            break
        u, v, rule = min(cands, key=lambda c: (RULE_RANK[c[2]], c[0], c[1]))
        edit = DeleteEdge(u, v, f"U-rule {rule}")
        g, _ = apply_edit(g, edit)
        steps.append(edit)
        rules.append(rule)
        dominated.append(g.dominates(xs))
    return PeelResult(g, TransformTrace(start, tuple(steps)), tuple(rules), tuple(dominated))


def check_fact_U_literal(g: Graph, x: DominationCertificate | Iterable[int],
                         u_subset: Iterable[tuple[int, int]],
                         budget: SolveBudget = UNLIMITED, gamma: int | None = None) -> Verdict:
    """Delete ``u_subset`` ⊆ U(X) simultaneously; X must still be a d-set."""
    xs = _as_set(x)
    _require_min_dset(g, xs, budget, "X", gamma)
    wanted = sorted({(min(a, b), max(a, b)) for a, b in u_subset})
    allowed = compute_U(g, xs).pairs()
    stray = [e for e in wanted if e not in allowed]
    if stray:
        raise PreconditionError(f"edges {stray} are not in U(X)")
    edits = tuple(DeleteEdge(a, b, "U' simultaneous") for a, b in wanted)
    h = replay(g, edits)
    trace = TransformTrace(to_graph6(g), edits)
    undominated = sorted(set(range(h.n)) - h.closed_neighborhood(xs))
    if undominated:
        return Verdict.violated("X no longer dominates G - U'", undominated=undominated,
                                x=sorted(xs), u_subset=[list(e) for e in wanted],
                                trace=trace.to_json("Violated"))
    best = gamma_exact(h, budget)
    if best.size < len(xs):
        return Verdict.violated("X dominates G - U' but is not minimum", smaller=list(best.vertices),
                                x=sorted(xs), u_subset=[list(e) for e in wanted],
                                trace=trace.to_json("Violated"))
    return Verdict.holds(x=sorted(xs), u_subset=[list(e) for e in wanted],
                         trace=trace.to_json("Holds"))


# ------------------------------------------------------------------ T(Y), G(S)


@dataclass(frozen=True)
class TSet:
    members: frozenset[int]
    b_map: dict[int, tuple[int, ...]]
    anchor: dict[int, int]


def compute_T(g: Graph, y: Iterable[int]) -> TSet:
    ys = frozenset(y)
    b_map: dict[int, tuple[int, ...]] = {}
    anchor: dict[int, int] = {}
    for t in sorted(ys):
        b = tuple(v for v in g.adj[t] if not (g.closed_neighborhood((v,)) - {t}) & ys)
        b_map[t] = b
        for v in b:
            anchor[v] = t
    return TSet(frozenset(anchor), b_map, anchor)


@dataclass(frozen=True)
class Replacement:
    v1: int
    t1: int
    subdivisions: tuple[tuple[int, int, int], ...]  # (v1, t2, w2)


@dataclass(frozen=True)
class ReplacementResult:
    graph: Graph
    replacements: tuple[Replacement, ...]
    trace: TransformTrace

    @property
    def new_vertices(self) -> int:
        return sum(len(r.subdivisions) for r in self.replacements)


def apply_replacement(g: Graph, y: Iterable[int], s: Iterable[int]) -> ReplacementResult:
    """Build G(S): for each v1 in S delete the edge to its anchor t1 and
    subdivide every other original edge v1t2 with a fresh vertex w2.

    An edge joining two members of S is subdivided once from each side.
    """
    ys = frozenset(y)
    ss = sorted(set(s))
    tset = compute_T(g, ys)
    bad = [v for v in ss if v not in tset.members]
    if bad:
        raise PreconditionError(f"vertices {bad} are not in T(Y)")
    start = to_graph6(g)
    original = g
    edits: list[GraphEdit] = []
    reps = []
    made: dict[tuple[int, int], int] = {}
    for v1 in ss:
        t1 = tset.anchor[v1]
        e = DeleteEdge(v1, t1, f"anchor edge of {v1}")
        g, _ = apply_edit(g, e)
        edits.append(e)
        subs = []
        for t2 in original.adj[v1]:
            if t2 == t1:
                continue
            other = made.get((t2, v1), t2)
            w2 = g.n
            e = SubdivideEdge(v1, other, w2, f"subdivide {v1}-{t2}")
            g, _ = apply_edit(g, e)
            edits.append(e)
            made[(v1, t2)] = w2
            subs.append((v1, t2, w2))
        reps.append(Replacement(v1, t1, tuple(subs)))
    return ReplacementResult(g, tuple(reps), TransformTrace(start, tuple(edits)))


def check_fact_T_dominating(g: Graph, y: Iterable[int], s: Iterable[int],
                            budget: SolveBudget = UNLIMITED, gamma: int | None = None) -> Verdict:
    ys, ss = frozenset(y), frozenset(s)
    _require_min_dset(g, ys, budget, "Y", gamma)
    rep = apply_replacement(g, ys, ss)
    h = rep.graph
    undominated = sorted(set(range(h.n)) - h.closed_neighborhood(ys | ss))
    detail = {"y": sorted(ys), "s": sorted(ss), "trace": rep.trace.to_json()}
    if undominated:
        return Verdict.violated("Y ∪ S does not dominate G(S)", undominated=undominated, **detail)
    return Verdict.holds(**detail)


def check_fact_T_dset(g: Graph, y: Iterable[int], s: Iterable[int],
                      budget: SolveBudget = UNLIMITED) -> Verdict:
    ys, ss = frozenset(y), frozenset(s)
    tset = compute_T(g, ys)
    if not ss <= tset.members:
        raise PreconditionError(f"{sorted(ss - tset.members)} not in T(Y)")
    reduced, relabel = induced_subgraph(g, set(range(g.n)) - ss)
    y_red = frozenset(relabel[v] for v in ys)
    if reduced.n == 0 or not reduced.dominates(y_red):
        raise PreconditionError("Y does not dominate G - S")
    gamma_red = gamma_exact(reduced, budget).size
    if gamma_red != len(y_red):
        raise PreconditionError(f"Y is not minimum on G - S (gamma {gamma_red} < {len(y_red)})")
    rep = apply_replacement(g, ys, ss)
    best = component_gamma(rep.graph, budget)
    detail = {"y": sorted(ys), "s": sorted(ss), "size": len(ys | ss),
              "gamma": best.size, "trace": rep.trace.to_json()}
    if best.size < len(ys | ss):
        return Verdict.violated("Y ∪ S is not minimum on G(S)", gap=len(ys | ss) - best.size,
                                smaller=list(best.vertices), **detail)
    return Verdict.holds(**detail)


def component_gamma(g: Graph, budget: SolveBudget = UNLIMITED) -> DominationCertificate:
    """γ summed over connected components (each solved separately)."""
    chosen: list[int] = []
    for comp in connected_components(g):
        sub, relabel = induced_subgraph(g, comp.vertices)
        back = {new: old for old, new in relabel.items()}
        chosen += [back[v] for v in gamma_exact(sub, budget).vertices]
    return DominationCertificate.certify(g, chosen)


# ------------------------------------------------------------------ decomposition


@dataclass(frozen=True)
class ComponentReport:
    vertices: tuple[int, ...]
    shape: str
    y_part: tuple[int, ...]
    dominated: bool


@dataclass(frozen=True)
class DecompositionResult:
    source: str
    x: tuple[int, ...]
    policy: str
    peel: PeelResult
    t1: tuple[int, ...]
    t2: tuple[int, ...]
    t_prime: tuple[int, ...]
    replacement: ReplacementResult
    y: tuple[int, ...]
    components: tuple[ComponentReport, ...]
    anomalies: tuple[str, ...]
    vertex_accounting_ok: bool
    edge_accounting_ok: bool
    y_dominates: bool
    gamma_g2: int

    @property
    def g_prime(self) -> Graph:
        return self.peel.graph

    @property
    def g_double_prime(self) -> Graph:
        return self.replacement.graph

    @property
    def max_degree_le_2(self) -> bool:
        return self.g_double_prime.max_degree() <= 2

    @property
    def claim_holds(self) -> bool:
        return all(c.shape in ("isolated", "path", "cycle") and c.dominated for c in self.components)

    @property
    def surplus(self) -> int:
        """|Y| - |X'| for the computed G''."""
        return len(self.y) - self.gamma_g2

    def steps(self) -> tuple[GraphEdit, ...]:
        return self.peel.trace.steps + self.replacement.trace.steps

    def trace(self) -> TransformTrace:
        return TransformTrace(self.source, self.steps())

    def to_json(self) -> dict:
        return {
            "graph6": self.source,
            "x": list(self.x),
            "policy": self.policy,
            "peel_rules": list(self.peel.rules),
            "t1": list(self.t1),
            "t2": list(self.t2),
            "t_prime": list(self.t_prime),
            "y": list(self.y),
            "components": [{"vertices": list(c.vertices), "shape": c.shape,
                            "y": list(c.y_part), "dominated": c.dominated}
                           for c in self.components],
            "anomalies": list(self.anomalies),
            "max_degree_le_2": self.max_degree_le_2,
            "vertex_accounting_ok": self.vertex_accounting_ok,
            "edge_accounting_ok": self.edge_accounting_ok,
            "y_dominates": self.y_dominates,
            "gamma_g2": self.gamma_g2,
            "surplus": self.surplus,
            "claim_holds": self.claim_holds,
            "trace": self.trace().to_json("Holds" if self.claim_holds else "Violated"),
            "result_graph6": to_graph6(self.g_double_prime),
        }


def claim_decompose(g: Graph, x: DominationCertificate | Iterable[int], policy: str = "deg3",
                    budget: SolveBudget = UNLIMITED, gamma: int | None = None) -> DecompositionResult:
    """Peel, pick T1 (degree-3 vertices outside X) and T2 (one neighbour per
    degree-3 vertex of X, preferring a degree-3 neighbour), replace, then
    split into components."""
    if not (g.is_cubic() and g.is_connected()):
        raise PreconditionError("claim_decompose needs a connected cubic graph")
    xs = _as_set(x)
    _require_min_dset(g, xs, budget, "X", gamma)
    peel = peel_U_iterative(g, xs, policy)
    g1 = peel.graph
    tset = compute_T(g1, xs)
    anomalies: list[str] = []

    t1 = []
    for v in range(g1.n):
        if v in xs or len(g1.adj[v]) != 3:
            continue
        hits = [u for u in g1.adj[v] if u in xs]
        if len(hits) >= 2:
            anomalies.append(f"vertex {v} has degree 3 and X-neighbours {hits} in G'")
        elif v in tset.members:
            t1.append(v)
        else:
            anomalies.append(f"vertex {v} has degree 3 in G' but is not in T(X)")

    t2 = []
    for v in sorted(xs):
        nb = g1.adj[v]
        if len(nb) != 3:
            continue
        outside = [w for w in nb if w not in tset.members]
        if outside:
            anomalies.append(f"neighbours {outside} of {v} are not in T(X)")
        inside = [w for w in nb if w in tset.members]
        if not inside:
            continue
        deg3 = [w for w in inside if len(g1.adj[w]) == 3]
        t2.append(deg3[0] if deg3 else inside[0])

    t_prime = tuple(sorted(set(t1) | set(t2)))
    rep = apply_replacement(g1, xs, t_prime)
    g2 = rep.graph
    ys = xs | set(t_prime)
    grow = sum(len(g1.adj[v]) - 1 for v in t_prime)
    comps = []
    for comp in connected_components(g2):
        members = set(comp.vertices)
        y_part = tuple(sorted(ys & members))
        dominated = g2.closed_neighborhood(y_part) >= members
        comps.append(ComponentReport(comp.vertices, comp.shape, y_part, dominated))
    return DecompositionResult(
        source=to_graph6(g), x=tuple(sorted(xs)), policy=policy, peel=peel,
        t1=tuple(t1), t2=tuple(sorted(set(t2))), t_prime=t_prime, replacement=rep,
        y=tuple(sorted(ys)), components=tuple(comps), anomalies=tuple(anomalies),
        vertex_accounting_ok=g2.n == g1.n + grow,
        edge_accounting_ok=g2.edge_count == g1.edge_count - len(t_prime) + grow,
        y_dominates=g2.dominates(ys),
        gamma_g2=component_gamma(g2, budget).size,
    )


# ------------------------------------------------------------------ reduction


@dataclass(frozen=True)
class YUpdate:
    x1: int
    x2: int
    added: int | None


@dataclass(frozen=True)
class ReductionStep:
    v: int
    s: tuple[int, ...]
    attachments: tuple[int, ...]
    e: tuple[int, int] | None  # in H_{i+1} ids
    y_updates: tuple[YUpdate, ...]  # in H_{i+1} ids
    relabel: dict[int, int]
    origin_s: tuple[int, ...]  # S in the input component's ids
    dominated: bool
    paths_and_cycles: bool
    y_before: int
    y_after: int


@dataclass(frozen=True)
class ReductionResult:
    graph: Graph
    y: frozenset[int]
    steps: tuple[ReductionStep, ...]
    trace: TransformTrace
    origin: tuple[int, ...]  # origin[v] = id of v in the input component

    def to_json(self) -> dict:
        return {
            "result_graph6": to_graph6(self.graph),
            "y": sorted(self.y),
            "steps": [{"v": s.v, "s": list(s.s), "attachments": list(s.attachments),
                       "e": list(s.e) if s.e else None,
                       "y_updates": [[u.x1, u.x2, u.added] for u in s.y_updates],
                       "origin_s": list(s.origin_s), "dominated": s.dominated}
                      for s in self.steps],
            "trace": self.trace.to_json(),
        }


def _distances(g: Graph, sources: Iterable[int]) -> dict[int, int]:
    dist = {s: 0 for s in sources}
    queue = deque(dist)
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def component_reduce(a: Graph, y_a: Iterable[int]) -> ReductionResult:
    """Repeatedly remove S(v) = N[v] for a degree-2 vertex v of Y whose
    neighbours avoid Y, joining the two attachment vertices with a new edge
    when both exist and are not already adjacent.

    A step is only taken when S has at least one attachment vertex, so a
    component is never deleted outright.  After each step every edge x1x2
    with both ends in Y (scanned once, in edge order) is repaired by dropping
    x2, the end farther from the attachments (ties: larger id), and adding
    x2's other neighbour.
    """
    ys = set(y_a)
    if a.max_degree() > 2:
        raise PreconditionError("component_reduce needs max degree <= 2")
    if not a.dominates(ys):
        raise PreconditionError(f"{sorted(ys)} does not dominate the component")
    h = a
    origin = list(range(a.n))
    start = to_graph6(a)
    edits: list[GraphEdit] = []
    steps = []
    while True:
        pick = None
        for v in sorted(ys):
            if len(h.adj[v]) != 2 or any(u in ys for u in h.adj[v]):
                continue
            s = h.closed_neighborhood((v,))
            att = sorted(h.open_neighborhood(s) - s)
            if att:
                pick = (v, s, att)
                break
        if pick is None:
            break
        v, s, att = pick
        y_before = len(ys)
        cut = DeleteVertices(frozenset(s), f"S({v})")
        h, relabel = apply_edit(h, cut)
        edits.append(cut)
        origin_s = tuple(origin[u] for u in sorted(s))
        origin = [origin[old] for old in sorted(relabel, key=relabel.get)]
        ys = {relabel[u] for u in ys if u in relabel}
        att_new = [relabel[u] for u in att]
        e = None
        if len(att_new) == 2 and not h.has_edge(*att_new):
            add = AddEdge(att_new[0], att_new[1], f"e after S({v})")
            h, _ = apply_edit(h, add)
            edits.append(add)
            e = (att_new[0], att_new[1])
        dist = _distances(h, att_new)
        updates = []
        for p, q in h.edges():
            if p in ys and q in ys:
                dp, dq = dist.get(p, h.n + 1), dist.get(q, h.n + 1)
                x1, x2 = (p, q) if (dq, q) > (dp, p) else (q, p)
                ys.discard(x2)
                others = [z for z in h.adj[x2] if z != x1]
                added = others[0] if others else None
                if added is not None:
                    ys.add(added)
                updates.append(YUpdate(x1, x2, added))
        steps.append(ReductionStep(
            v=v, s=tuple(sorted(s)), attachments=tuple(att), e=e, y_updates=tuple(updates),
            relabel=relabel, origin_s=origin_s, dominated=h.dominates(ys),
            paths_and_cycles=all(c.shape != "other" for c in connected_components(h)),
            y_before=y_before, y_after=len(ys)))
    return ReductionResult(h, frozenset(ys), tuple(steps), TransformTrace(start, tuple(edits)),
                           tuple(origin))


# ------------------------------------------------------------------ exchange


@dataclass(frozen=True)
class Move:
    kind: str  # drop | swap
    edge: tuple[int, int]
    removed: int
    added: int | None


@dataclass(frozen=True)
class IndependentizeResult:
    status: str  # independent | stuck
    vertices: tuple[int, ...]
    moves: tuple[Move, ...]
    certificate: DominationCertificate | None = None
    blocking_edge: tuple[int, int] | None = None
    blocking_degrees: tuple[int, int] | None = None
    witness: AdjacentPairWitness | None = None

    @property
    def succeeded(self) -> bool:
        return self.status == "independent"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "vertices": list(self.vertices),
            "moves": [{"kind": m.kind, "edge": list(m.edge), "removed": m.removed,
                       "added": m.added} for m in self.moves],
            "blocking_edge": list(self.blocking_edge) if self.blocking_edge else None,
            "blocking_degrees": list(self.blocking_degrees) if self.blocking_degrees else None,
            "witness": [self.witness.x, self.witness.y] if self.witness else None,
        }


def _try_moves(g: Graph, xs: set[int]) -> tuple[set[int], Move] | None:
    score = (len(xs), g.internal_edges(xs))
    for a, b in g.induced_edges(xs):
        for end in (a, b):
            cand = xs - {end}
            if g.dominates(cand):
                return cand, Move("drop", (a, b), end, None)
        for end, partner in ((a, b), (b, a)):
            if len(g.adj[end]) != 2:
                continue
            xp = next(u for u in g.adj[end] if u != partner)
            if xp in xs or any(z in xs for z in g.adj[xp] if z != end):
                continue
            cand = (xs - {end}) | {xp}
            if g.dominates(cand) and (len(cand), g.internal_edges(cand)) < score:
                return cand, Move("swap", (a, b), end, xp)
    return None


def independentize(g: Graph, x: DominationCertificate | Iterable[int]) -> IndependentizeResult:
    """Apply drop and degree-2 swap moves until X is independent or no move
    improves (|X|, internal edges) lexicographically."""
    xs = set(_as_set(x))
    if not g.dominates(xs):
        raise PreconditionError(f"{sorted(xs)} does not dominate")
    moves = []
    while g.internal_edges(xs):
        step = _try_moves(g, xs)
        if step is None:
            a, b = g.induced_edges(xs)[0]
            return IndependentizeResult("stuck", tuple(sorted(xs)), tuple(moves),
                                        blocking_edge=(a, b),
                                        blocking_degrees=(len(g.adj[a]), len(g.adj[b])),
                                        witness=has_adjacent_deg3_pair(g))
        xs, move = step
        moves.append(move)
    cert = DominationCertificate.certify(g, xs, "independent-dominating")
    return IndependentizeResult("independent", cert.vertices, tuple(moves), certificate=cert)


# ------------------------------------------------------------------ theorem


def theorem_check(g: Graph, budget: SolveBudget = UNLIMITED,
                  gamma: DominationCertificate | None = None,
                  indep: DominationCertificate | None = None) -> Verdict:
    """γ ≤ ⌈n/3⌉ or γ = i, for a connected cubic graph."""
    if not (g.is_cubic() and g.is_connected()):
        raise PreconditionError("theorem_check needs a connected cubic graph")
    gamma = gamma or gamma_exact(g, budget)
    indep = indep or i_exact(g, budget)
    bound = reed_bound(g.n)
    detail = {"gamma": gamma.to_json(), "i": indep.to_json(), "bound": bound}
    if gamma.size <= bound and gamma.size == indep.size:
        return Verdict.holds("both branches", **detail)
    if gamma.size <= bound:
        return Verdict.holds("bound branch", **detail)
    if gamma.size == indep.size:
        return Verdict.holds("equality branch", **detail)
    return Verdict.violated("gamma exceeds the bound and differs from i", **detail)
