"""Forbidden-subgraph predicates and the disjoint-neighbourhood lemma check."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph
from .solvers import DominationCertificate, SolveBudget, UNLIMITED, enumerate_min_dsets
from .verdict import PreconditionError, Verdict


@dataclass(frozen=True)
class ClawWitness:
    center: int
    leaves: tuple[int, int, int]

    def verify(self, g: Graph) -> bool:
        a, b, c = self.leaves
        return (all(g.has_edge(self.center, x) for x in self.leaves)
                and not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)))


@dataclass(frozen=True)
class DoubleStarWitness:
    x: int
    y: int
    leaves_x: tuple[int, int]
    leaves_y: tuple[int, int]

    def verify(self, g: Graph) -> bool:
        six = {self.x, self.y, *self.leaves_x, *self.leaves_y}
        return (len(six) == 6 and g.has_edge(self.x, self.y)
                and all(g.has_edge(self.x, v) for v in self.leaves_x)
                and all(g.has_edge(self.y, v) for v in self.leaves_y))


@dataclass(frozen=True)
class AdjacentPairWitness:
    x: int
    y: int

    def verify(self, g: Graph) -> bool:
        return g.has_edge(self.x, self.y) and g.degree(self.x) >= 3 and g.degree(self.y) >= 3


def find_claw(g: Graph) -> ClawWitness | None:
    """First induced K_{1,3}, scanning centres and leaf triples in id order."""
    for c in range(g.n):
        for a, b, d in combinations(g.adj[c], 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return ClawWitness(c, (a, b, d))
    return None


def find_double_star(g: Graph) -> DoubleStarWitness | None:
    """Subgraph (not necessarily induced) double star on six distinct vertices."""
    for x, y in g.edges():
        if g.degree(x) < 3 or g.degree(y) < 3:
            continue
        lx = [v for v in g.adj[x] if v != y]
        ly = [v for v in g.adj[y] if v != x]
        for px in combinations(lx, 2):
            for py in combinations(ly, 2):
                if not set(px) & set(py):
                    return DoubleStarWitness(x, y, px, py)
    return None


def has_adjacent_deg3_pair(g: Graph) -> AdjacentPairWitness | None:
    for x, y in g.edges():
        if g.degree(x) >= 3 and g.degree(y) >= 3:
            return AdjacentPairWitness(x, y)
    return None


def verify_lemma_disjoint(g: Graph, x: DominationCertificate,
                          budget: SolveBudget = UNLIMITED) -> Verdict:
    """For an optimal d-set X (minimum size, then minimum internal edges) on a
    graph with max degree <= 3, check N[{v1, v2}] ∩ N[w] = ∅ for every
    internal edge v1v2 and every other w in X."""
    xs = set(x.vertices)
    if not g.dominates(xs):
        raise PreconditionError(f"{sorted(xs)} does not dominate the graph")
    if g.max_degree() > 3:
        return Verdict.not_applicable("max degree exceeds 3")
    if len(xs) < 3:
        return Verdict.not_applicable("|X| < 3")
    internal = g.induced_edges(xs)
    if not internal:
        return Verdict.not_applicable("E(X) is empty")
    dsets = enumerate_min_dsets(g, budget)
    if len(xs) != dsets[0].size:
        return Verdict.not_applicable("X is not a minimum dominating set", gamma=dsets[0].size)
    best = min(c.internal_edges for c in dsets)
    if len(internal) != best:
        return Verdict.not_applicable("E(X) is not minimum among d-sets",
                                      internal_edges=len(internal), minimum=best)
    for v1, v2 in internal:
        pair = g.closed_neighborhood((v1, v2))
        for w in sorted(xs - {v1, v2}):
            common = pair & g.closed_neighborhood((w,))
            if common:
                return Verdict.violated("closed neighbourhoods intersect",
                                        v1=v1, v2=v2, w=w, common=sorted(common))
    return Verdict.holds(edges_checked=len(internal))
