"""Canonical labelling by colour refinement plus individualisation.

Sized for the corpus (n <= 16 in practice, 64 hard cap).  Every leaf of the
search tree is a discrete colouring, read as a relabelling; the canonical
form is the lexicographically smallest graph6 string over the leaves.
Automorphisms found along the way prune sibling branches by orbit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, relabel
from .graph6 import to_graph6

MAX_CANON_N = 64


@dataclass(frozen=True)
class CanonicalForm:
    graph6: str
    relabeling: tuple[int, ...]  # relabeling[v] = canonical id of v


def _refine(adj: tuple[tuple[int, ...], ...], colors: list[int]) -> list[int]:
    ncol = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(len(adj))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncol:
            return new
        colors, ncol = new, len(rank)


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adj
        self.first: tuple[tuple[int, ...], str] | None = None
        self.best: tuple[tuple[int, ...], str] | None = None
        self.autos: list[tuple[int, ...]] = []

    def run(self) -> CanonicalForm:
        colors = _refine(self.adj, [0] * self.g.n)
        self._visit(colors, [])
        perm, cert = self.best
        return CanonicalForm(cert, perm)

    def _leaf(self, colors: list[int]) -> None:
        perm = tuple(colors)
        cert = to_graph6(relabel(self.g, list(perm)))
        if self.first is None:
            self.first = self.best = (perm, cert)
            return
        for ref_perm, ref_cert in (self.first, self.best):
            if cert == ref_cert:
                inv = [0] * len(perm)
                for v, p in enumerate(ref_perm):
                    inv[p] = v
                self.autos.append(tuple(inv[perm[v]] for v in range(len(perm))))
                return
        if cert < self.best[1]:
            self.best = (perm, cert)

    def _visit(self, colors: list[int], path: list[int]) -> None:
        n = len(colors)
        if len(set(colors)) == n:
            self._leaf(colors)
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(n) if colors[v] == target]
        tried: list[int] = []
        for v in cell:
            if tried:
                gens = [a for a in self.autos if all(a[p] == p for p in path)]
                if gens:
                    roots = _orbit_roots(n, gens)
                    if any(roots[v] == roots[t] for t in tried):
                        continue
            child = [2 * c for c in colors]
            child[v] -= 1
            self._visit(_refine(self.adj, child), path + [v])
            tried.append(v)


def canonical_form(g: Graph) -> CanonicalForm:
    if g.n > MAX_CANON_N:
        raise GraphError(f"canonical_form supports n <= {MAX_CANON_N}, got {g.n}")
    if g.n == 0:
        return CanonicalForm(to_graph6(g), ())
    return _Search(g).run()


def canonical_key(g: Graph) -> str:
    return canonical_form(g).graph6
