"""Exact domination and independent domination by branch and bound.

Both searches branch on an undominated vertex ``u``: the k-th child puts the
k-th candidate of ``N[u]`` into the set and forbids candidates 1..k-1, so
every dominating set is reachable along exactly one path.  That makes the
same routine serve optimisation and exhaustive enumeration of minimum sets.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, bits, mask_of


class BudgetExceeded(RuntimeError):
    pass


class OracleSizeError(ValueError):
    pass


@dataclass(frozen=True)
class SolveBudget:
    node_limit: int | None = None
    time_limit: float | None = None


UNLIMITED = SolveBudget()
BRUTE_FORCE_MAX_N = 24


@dataclass(frozen=True)
class DominationCertificate:
    vertices: tuple[int, ...]
    size: int
    internal_edges: int
    kind: str = "dominating"
    nodes: int = field(default=0, compare=False)

    @classmethod
    def certify(cls, g: Graph, vertices: Iterable[int], kind: str = "dominating",
                nodes: int = 0) -> "DominationCertificate":
        vs = tuple(sorted(set(vertices)))
        if not g.dominates(vs):
            raise ValueError(f"{list(vs)} does not dominate the graph")
        ie = g.internal_edges(vs)
        if kind == "independent-dominating" and ie:
            raise ValueError(f"{list(vs)} is not independent")
        if kind not in ("dominating", "independent-dominating"):
            raise ValueError(f"unknown certificate kind {kind!r}")
        return cls(vs, len(vs), ie, kind, nodes)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def restrict(self, region: Iterable[int]) -> frozenset[int]:
        """X(R) = X ∩ R."""
        return frozenset(self.vertices) & frozenset(region)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "size": self.size,
                "internal_edges": self.internal_edges, "kind": self.kind}


class _BranchAndBound:
    def __init__(self, g: Graph, budget: SolveBudget, independent: bool):
        self.g = g
        self.closed = [g.rows[v] | 1 << v for v in range(g.n)]
        self.full = g.full_mask
        self.independent = independent
        self.budget = budget
        self.deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
        self.nodes = 0

    def _tick(self) -> None:
        self.nodes += 1
        lim = self.budget.node_limit
        if lim is not None and self.nodes > lim:
            raise BudgetExceeded(f"node limit {lim} exhausted")
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"time limit {self.budget.time_limit}s exhausted")

    def _branch(self, dominated: int, allowed: int) -> tuple[list[int], int] | None:
        """Pick the branching vertex; return its candidates and a lower bound.

        ``None`` means some undominated vertex has no allowed dominator left.
        """
        undominated = self.full & ~dominated
        best = None
        maxcover = 0
        for w in bits(allowed):
            c = (self.closed[w] & undominated).bit_count()
            if c > maxcover:
                maxcover = c
        if maxcover == 0:
            return None
        for u in bits(undominated):
            cand = self.closed[u] & allowed
            if not cand:
                return None
            key = (cand.bit_count(), len(self.g.adj[u]), u)
            if best is None or key < best[0]:
                best = (key, cand)
        lb = -(-undominated.bit_count() // maxcover)
        return list(bits(best[1])), lb

    def _children(self, chosen: int, dominated: int, forbidden: int):
        allowed = self.full & ~chosen & ~forbidden
        if self.independent:
            allowed &= ~dominated
        picked = self._branch(dominated, allowed)
        if picked is None:
            return None, 0
        cands, lb = picked
        out = []
        for k, c in enumerate(cands):
            banned = forbidden
            for prev in cands[:k]:
                banned |= 1 << prev
            out.append((chosen | 1 << c, dominated | self.closed[c], banned))
        return out, lb

    def minimize(self, upper: int) -> int | None:
        """Smallest dominating (independent) set with size < ``upper``."""
        self.best_mask = None
        self.best_size = upper

        def rec(chosen: int, dominated: int, forbidden: int, size: int) -> None:
            self._tick()
            if dominated == self.full:
                self.best_mask, self.best_size = chosen, size
                return
            kids, lb = self._children(chosen, dominated, forbidden)
            if kids is None or size + lb >= self.best_size:
                return
            for ch, dm, fb in kids:
                if size + 1 >= self.best_size:
                    return
                rec(ch, dm, fb, size + 1)

        rec(0, 0, 0, 0)
        return self.best_mask

    def enumerate(self, target: int) -> list[int]:
        found: list[int] = []

        def rec(chosen: int, dominated: int, forbidden: int, size: int) -> None:
            self._tick()
            if dominated == self.full:
                if size == target:
                    found.append(chosen)
                return
            kids, lb = self._children(chosen, dominated, forbidden)
            if kids is None or size + lb > target:
                return
            for ch, dm, fb in kids:
                rec(ch, dm, fb, size + 1)

        rec(0, 0, 0, 0)
        return found


def _require_nonempty(g: Graph) -> None:
    if g.n == 0:
        raise ValueError("graph has no vertices")


def _greedy_upper(g: Graph) -> int:
    dominated = 0
    size = 0
    closed = [g.rows[v] | 1 << v for v in range(g.n)]
    while dominated != g.full_mask:
        w = max(range(g.n), key=lambda v: ((closed[v] & ~dominated).bit_count(), -v))
        dominated |= closed[w]
        size += 1
    return size


def gamma_exact(g: Graph, budget: SolveBudget = UNLIMITED) -> DominationCertificate:
    _require_nonempty(g)
    bb = _BranchAndBound(g, budget, independent=False)
    mask = bb.minimize(_greedy_upper(g) + 1)
    return DominationCertificate.certify(g, bits(mask), nodes=bb.nodes)


def i_exact(g: Graph, budget: SolveBudget = UNLIMITED) -> DominationCertificate:
    _require_nonempty(g)
    bb = _BranchAndBound(g, budget, independent=True)
    mask = bb.minimize(g.n + 1)
    return DominationCertificate.certify(g, bits(mask), "independent-dominating", nodes=bb.nodes)


def enumerate_min_dsets(g: Graph, budget: SolveBudget = UNLIMITED,
                        gamma: int | None = None) -> list[DominationCertificate]:
    """All dominating sets of size γ(g), sorted by vertex tuple."""
    _require_nonempty(g)
    if gamma is None:
        gamma = gamma_exact(g, budget).size
    bb = _BranchAndBound(g, budget, independent=False)
    masks = bb.enumerate(gamma)
    certs = [DominationCertificate.certify(g, bits(m)) for m in masks]
    return sorted(certs, key=lambda c: c.vertices)


def min_internal_edges_dset(g: Graph, budget: SolveBudget = UNLIMITED) -> DominationCertificate:
    """Among minimum dominating sets, one with fewest internal edges."""
    return min(enumerate_min_dsets(g, budget), key=lambda c: (c.internal_edges, c.vertices))


def min_internal_edge_dsets(g: Graph, budget: SolveBudget = UNLIMITED) -> list[DominationCertificate]:
    """Every minimum dominating set attaining the minimum internal-edge count."""
    all_sets = enumerate_min_dsets(g, budget)
    low = min(c.internal_edges for c in all_sets)
    return [c for c in all_sets if c.internal_edges == low]


def is_inclusion_minimal_dominating(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return g.dominates(vs) and all(not g.dominates(vs - {v}) for v in vs)


def brute_force_gamma(g: Graph) -> DominationCertificate:
    _require_nonempty(g)
    if g.n > BRUTE_FORCE_MAX_N:
        raise OracleSizeError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}")
    for k in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            if g.dominates(combo):
                return DominationCertificate.certify(g, combo)
    raise AssertionError("V always dominates")


def brute_force_i(g: Graph) -> DominationCertificate:
    _require_nonempty(g)
    if g.n > BRUTE_FORCE_MAX_N:
        raise OracleSizeError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}")
    for k in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            m = mask_of(combo)
            if any(g.rows[v] & m for v in combo):
                continue
            if g.dominates(combo):
                return DominationCertificate.certify(g, combo, "independent-dominating")
    raise AssertionError("a maximal independent set always exists")


def reed_bound(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return -(-n // 3)
