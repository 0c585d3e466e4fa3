"""Immutable simple graphs on dense vertex ids, plus the edit primitives.

Adjacency is stored twice: sorted neighbour tuples for iteration order and
integer bitmask rows for the set arithmetic the solvers lean on.  Python ints
are unbounded, so the bitmask path serves every size; below 64 vertices a row
fits a machine word.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Union


class GraphError(ValueError):
    """Raised for malformed graphs or edits whose precondition fails."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    rows: tuple[int, ...] = field(repr=False)
    edge_count: int = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise GraphError(f"parallel edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls._build(n, nbrs)

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Graph":
        rows = tuple(rows)
        n = len(rows)
        nbrs = [set(bits(r)) for r in rows]
        for u in range(n):
            if u in nbrs[u]:
                raise GraphError(f"self-loop at {u}")
            for v in nbrs[u]:
                if v >= n or u not in nbrs[v]:
                    raise GraphError(f"asymmetric adjacency at ({u}, {v})")
        return cls._build(n, nbrs)

    @classmethod
    def _build(cls, n: int, nbrs: list[set[int]]) -> "Graph":
        adj = tuple(tuple(sorted(s)) for s in nbrs)
        rows = tuple(mask_of(s) for s in adj)
        m = sum(len(a) for a in adj) // 2
        return cls(n, adj, rows, m)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self.adj[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def is_cubic(self) -> bool:
        return self.n > 0 and all(len(a) == 3 for a in self.adj)

    def closed_mask(self, v: int) -> int:
        return self.rows[v] | 1 << v

    def open_neighborhood(self, w: Iterable[int]) -> frozenset[int]:
        m = 0
        for v in w:
            self._check(v)
            m |= self.rows[v]
        return frozenset(bits(m))

    def closed_neighborhood(self, w: Iterable[int]) -> frozenset[int]:
        """N[W] = N(W) ∪ W."""
        m = 0
        for v in w:
            self._check(v)
            m |= self.rows[v] | 1 << v
        return frozenset(bits(m))

    def dominated_mask(self, mask: int) -> int:
        d = mask
        for v in bits(mask):
            d |= self.rows[v]
        return d

    def dominates(self, vertices: Iterable[int]) -> bool:
        return self.dominated_mask(mask_of(vertices)) == self.full_mask

    def internal_edges(self, vertices: Iterable[int]) -> int:
        m = mask_of(vertices)
        return sum(bin(self.rows[v] & m).count("1") for v in bits(m)) // 2

    def induced_edges(self, vertices: Iterable[int]) -> list[tuple[int, int]]:
        m = mask_of(vertices)
        return [(u, v) for u in bits(m) for v in bits(self.rows[u] & m) if u < v]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(component_of(self, 0)) == self.n

    def to_graph6(self) -> str:
        from .graph6 import to_graph6

        return to_graph6(self)


def component_of(g: Graph, start: int) -> list[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return sorted(seen)


def closed_neighborhood(g: Graph, w: Iterable[int]) -> frozenset[int]:
    return g.closed_neighborhood(w)


# ---------------------------------------------------------------- edits


@dataclass(frozen=True)
class DeleteEdge:
    u: int
    v: int
    tag: str = ""
    op = "delete_edge"

    def args(self) -> list:
        return [self.u, self.v]


@dataclass(frozen=True)
class SubdivideEdge:
    u: int
    v: int
    new_id: int
    tag: str = ""
    op = "subdivide_edge"

    def args(self) -> list:
        return [self.u, self.v, self.new_id]


@dataclass(frozen=True)
class DeleteVertices:
    vertices: frozenset[int]
    tag: str = ""
    op = "delete_vertices"

    def args(self) -> list:
        return [sorted(self.vertices)]


@dataclass(frozen=True)
class AddEdge:
    u: int
    v: int
    tag: str = ""
    op = "add_edge"

    def args(self) -> list:
        return [self.u, self.v]


GraphEdit = Union[DeleteEdge, SubdivideEdge, DeleteVertices, AddEdge]


def edit_to_json(e: GraphEdit) -> dict:
    return {"op": e.op, "args": e.args(), "tag": e.tag}


def edit_from_json(d: Mapping) -> GraphEdit:
    op, args, tag = d["op"], d["args"], d.get("tag", "")
    if op == "delete_edge":
        return DeleteEdge(args[0], args[1], tag)
    if op == "subdivide_edge":
        return SubdivideEdge(args[0], args[1], args[2], tag)
    if op == "delete_vertices":
        return DeleteVertices(frozenset(args[0]), tag)
    if op == "add_edge":
        return AddEdge(args[0], args[1], tag)
    raise GraphError(f"unknown edit op {op!r}")


def apply_edit(g: Graph, e: GraphEdit) -> tuple[Graph, dict[int, int]]:
    """Apply one edit, returning the new graph and the old->new id map.

    The map is the identity except for ``DeleteVertices``, which compacts the
    surviving ids in ascending order and omits the deleted ones.
    """
    nbrs = [set(a) for a in g.adj]
    if isinstance(e, DeleteEdge):
        if not (0 <= e.u < g.n and 0 <= e.v < g.n) or e.v not in nbrs[e.u]:
            raise GraphError(f"{e}: edge absent")
        nbrs[e.u].discard(e.v)
        nbrs[e.v].discard(e.u)
        return Graph._build(g.n, nbrs), {v: v for v in range(g.n)}
    if isinstance(e, AddEdge):
        if not (0 <= e.u < g.n and 0 <= e.v < g.n) or e.u == e.v:
            raise GraphError(f"{e}: bad endpoints")
        if e.v in nbrs[e.u]:
            raise GraphError(f"{e}: edge already present")
        nbrs[e.u].add(e.v)
        nbrs[e.v].add(e.u)
        return Graph._build(g.n, nbrs), {v: v for v in range(g.n)}
    if isinstance(e, SubdivideEdge):
        if not (0 <= e.u < g.n and 0 <= e.v < g.n) or e.v not in nbrs[e.u]:
            raise GraphError(f"{e}: edge absent")
        if e.new_id != g.n:
            raise GraphError(f"{e}: new id must be {g.n}")
        w = g.n
        nbrs[e.u].discard(e.v)
        nbrs[e.v].discard(e.u)
        nbrs.append({e.u, e.v})
        nbrs[e.u].add(w)
        nbrs[e.v].add(w)
        return Graph._build(g.n + 1, nbrs), {v: v for v in range(g.n)}
    if isinstance(e, DeleteVertices):
        dead = set(e.vertices)
        if any(not 0 <= v < g.n for v in dead):
            raise GraphError(f"{e}: vertex out of range")
        keep = [v for v in range(g.n) if v not in dead]
        relabel = {old: new for new, old in enumerate(keep)}
        new_nbrs = [{relabel[u] for u in nbrs[v] if u in relabel} for v in keep]
        return Graph._build(len(keep), new_nbrs), relabel
    raise GraphError(f"unknown edit {e!r}")


def replay(g: Graph, edits: Iterable[GraphEdit]) -> Graph:
    for e in edits:
        g, _ = apply_edit(g, e)
    return g


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed ``perm[v]``."""
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


# ---------------------------------------------------------------- structure


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    shape: str  # isolated | path | cycle | other


def connected_components(g: Graph) -> list[Component]:
    seen: set[int] = set()
    out = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = component_of(g, s)
        seen.update(comp)
        out.append(Component(tuple(comp), _shape(g, comp)))
    return out


def _shape(g: Graph, comp: list[int]) -> str:
    if len(comp) == 1:
        return "isolated"
    degs = [len(g.adj[v]) for v in comp]
    if max(degs) > 2:
        return "other"
    m = sum(degs) // 2
    if m == len(comp) - 1:
        return "path"
    if m == len(comp):
        return "cycle"
    return "other"


def vertex_connectivity(g: Graph) -> int:
    # networkx's flow-based node connectivity; 0 for disconnected graphs
    import networkx as nx

    if g.n <= 1:
        return 0
    return nx.node_connectivity(to_networkx(g))


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    keep = set(vertices)
    return apply_edit(g, DeleteVertices(frozenset(v for v in range(g.n) if v not in keep)))
