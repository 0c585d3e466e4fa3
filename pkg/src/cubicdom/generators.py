"""Corpus generators: exhaustive connected cubic graphs, pairing-model random
cubic graphs, named fixtures and bridge-chained gadget graphs."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Iterator

from .canon import canonical_key
from .graph import Graph, bits, relabel
from .graph6 import parse_graph6

MAX_EXHAUSTIVE_N = 14


class GenerationError(RuntimeError):
    pass


# ------------------------------------------------------------ exhaustive


def _vertex_invariant(rows: list[int], v: int) -> tuple:
    nb = list(bits(rows[v]))
    tri = sum((rows[a] & rows[v]).bit_count() for a in nb) // 2
    sq = 0
    for i in range(len(nb)):
        for j in range(i + 1, len(nb)):
            sq += (rows[nb[i]] & rows[nb[j]]).bit_count() - 1
    seen = frontier = 1 << v
    shells = []
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= rows[u]
        nxt &= ~seen
        seen |= nxt
        shells.append(nxt.bit_count())
        frontier = nxt
    return tri, sq, tuple(shells)


def _root_is_maximal(rows: list[int]) -> bool:
    # the root and the order of its three children are free choices of the
    # construction, so keeping only labellings whose root has the largest
    # invariant (children sorted descending) loses no isomorphism class
    root = _vertex_invariant(rows, 0)
    kids = [_vertex_invariant(rows, v) for v in (1, 2, 3)]
    if not kids[0] >= kids[1] >= kids[2] or kids[0] > root:
        return False
    return all(_vertex_invariant(rows, v) <= root for v in range(4, len(rows)))


def _labelled_connected_cubic(n: int) -> Iterator[list[int]]:
    """Backtrack over adjacency rows, completing the lowest deficient vertex.

    Untouched vertices are interchangeable, so a new neighbour is either an
    already touched vertex or the next fresh id.  Fresh vertices are only ever
    attached to touched ones, which keeps every output connected.
    """
    rows = [0] * n
    deg = [0] * n

    def rec(fresh: int) -> Iterator[list[int]]:
        v = next((u for u in range(fresh) if deg[u] < 3), None)
        if v is None:
            if fresh == n:
                yield rows
            return
        for w in range(rows[v].bit_length(), min(fresh + 1, n)):
            if w == v or deg[w] >= 3:
                continue
            rows[v] |= 1 << w
            rows[w] |= 1 << v
            deg[v] += 1
            deg[w] += 1
            yield from rec(max(fresh, w + 1))
            rows[v] ^= 1 << w
            rows[w] ^= 1 << v
            deg[v] -= 1
            deg[w] -= 1

    yield from rec(1)


@lru_cache(maxsize=None)
def _cubic_keys(n: int) -> tuple[str, ...]:
    keys = set()
    for rows in _labelled_connected_cubic(n):
        if _root_is_maximal(rows):
            keys.add(canonical_key(Graph.from_rows(rows)))
    return tuple(sorted(keys))


def enumerate_cubic_connected(n: int) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class,
    in ascending canonical graph6 order."""
    if n % 2:
        raise GenerationError(f"cubic graphs need an even vertex count, got {n}")
    if not 4 <= n <= MAX_EXHAUSTIVE_N:
        raise GenerationError(f"exhaustive generation supports 4 <= n <= {MAX_EXHAUSTIVE_N}")
    for key in _cubic_keys(n):
        yield parse_graph6(key)


# ------------------------------------------------------------ random


def random_cubic(n: int, seed: int, connected: bool = False, max_tries: int = 100_000) -> Graph:
    """Pairing model with rejection of loops, multi-edges and (optionally)
    disconnected outcomes."""
    if n % 2 or n < 4:
        raise GenerationError(f"cubic graphs need even n >= 4, got {n}")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(3)]
    for _ in range(max_tries):
        rng.shuffle(stubs)
        edges = set()
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                break
            edges.add((min(u, v), max(u, v)))
        else:
            g = Graph.from_edges(n, sorted(edges))
            if not connected or g.is_connected():
                return g
    raise GenerationError(f"no simple cubic pairing after {max_tries} tries (n={n}, seed={seed})")


# ------------------------------------------------------------ named


def _cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _generalized_petersen(n: int, k: int) -> Graph:
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph.from_edges(2 * n, {(min(u, v), max(u, v)) for u, v in edges})


# name -> (description, builder); paths and cycles are also accepted as pN / cN
NAMED = {
    "k4": ("complete graph K4, graph6 'C~'", lambda: Graph.from_edges(
        4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])),
    "k33": ("complete bipartite K_{3,3}, sides {0,1,2} and {3,4,5}",
            lambda: Graph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])),
    "prism": ("triangular prism: triangles 0-1-2, 3-4-5, rungs i~i+3",
              lambda: Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                                           (0, 3), (1, 4), (2, 5)])),
    "petersen": ("outer pentagon 0-4, spokes i~i+5, inner pentagram i+5~(i+2 mod 5)+5",
                 lambda: _generalized_petersen(5, 2)),
    "mobius_kantor": ("generalized Petersen GP(8,3)", lambda: _generalized_petersen(8, 3)),
    "cube": ("3-cube Q3, i~j iff ids differ in one bit",
             lambda: Graph.from_edges(8, [(i, i ^ b) for i in range(8) for b in (1, 2, 4) if i < i ^ b])),
    "k13": ("claw K_{1,3}, centre 0", lambda: Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])),
}


def named_graph(name: str) -> Graph:
    key = name.lower()
    if key in NAMED:
        return NAMED[key][1]()
    if len(key) > 1 and key[0] in "cp" and key[1:].isdigit():
        k = int(key[1:])
        if key[0] == "c" and k >= 3:
            return _cycle(k)
        if key[0] == "p" and k >= 1:
            return _path(k)
    raise KeyError(f"unknown graph name {name!r}")


# ------------------------------------------------------------ gadget chains

# End gadget: K4 on {0,1,2,3} with edge 2-3 subdivided by stub 4 (degree 2).
END_GADGET = (5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)], (4,))
# Middle gadget: K_{3,3} (sides {0,1,2}, {3,4,5}) minus edge 0-3; stubs 0 and 3.
MID_GADGET = (6, [(a, b) for a in range(3) for b in range(3, 6) if (a, b) != (0, 3)], (0, 3))


def gadget_chain(k: int, seed: int | None = None) -> Graph:
    """End gadget, k-1 middle gadgets, end gadget, consecutive stubs joined
    by k bridges.  ``seed`` (if given) shuffles vertex ids."""
    if k < 1:
        raise GenerationError("gadget_chain needs k >= 1")
    edges: list[tuple[int, int]] = []
    pieces = [END_GADGET] + [MID_GADGET] * (k - 1) + [END_GADGET]
    offset = 0
    prev_stub = None
    for i, (size, gedges, stubs) in enumerate(pieces):
        edges += [(offset + a, offset + b) for a, b in gedges]
        if prev_stub is not None:
            edges.append((prev_stub, offset + stubs[0]))
        prev_stub = offset + stubs[-1]
        offset += size
    g = Graph.from_edges(offset, edges)
    if seed is not None:
        perm = list(range(g.n))
        random.Random(seed).shuffle(perm)
        g = relabel(g, perm)
    if not (g.is_cubic() and g.is_connected()):
        raise GenerationError("gadget chain construction broke cubicity")
    return g


# ------------------------------------------------------------ corpus specs


@dataclass(frozen=True)
class CorpusSpec:
    mode: str  # exhaustive | random | named | gadget_chain | file
    n: int | None = None
    n_min: int = 4
    n_max: int | None = None
    count: int = 0
    seed: int = 0
    names: tuple[str, ...] = ()
    k_values: tuple[int, ...] = ()
    connected: bool = True
    path: str | None = None

    def to_json(self) -> dict:
        d = asdict(self)
        d["names"] = list(self.names)
        d["k_values"] = list(self.k_values)
        return d

    @classmethod
    def from_json(cls, d: dict) -> "CorpusSpec":
        d = dict(d)
        d["names"] = tuple(d.get("names", ()))
        d["k_values"] = tuple(d.get("k_values", ()))
        return cls(**d)


@dataclass(frozen=True)
class CorpusItem:
    label: str
    graph: Graph
    extra: dict = field(default_factory=dict, compare=False)


def _n_range(spec: CorpusSpec) -> list[int]:
    if spec.n is not None:
        return [spec.n]
    hi = spec.n_max if spec.n_max is not None else spec.n_min
    return [n for n in range(spec.n_min, hi + 1) if n % 2 == 0]


def build_corpus(spec: CorpusSpec) -> list[CorpusItem]:
    if spec.mode == "exhaustive":
        return [CorpusItem(f"cubic{n}#{i}", g)
                for n in _n_range(spec) for i, g in enumerate(enumerate_cubic_connected(n))]
    if spec.mode == "random":
        ns = _n_range(spec)
        items = []
        for j in range(spec.count):
            n = ns[j % len(ns)]
            s = spec.seed * 1_000_003 + j
            items.append(CorpusItem(f"random{n}/seed{s}", random_cubic(n, s, connected=spec.connected)))
        return items
    if spec.mode == "named":
        return [CorpusItem(name, named_graph(name)) for name in spec.names]
    if spec.mode == "gadget_chain":
        return [CorpusItem(f"gadget_chain{k}", gadget_chain(k, spec.seed)) for k in spec.k_values]
    if spec.mode == "file":
        with open(spec.path, encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
        return [CorpusItem(f"line{i + 1}", parse_graph6(s)) for i, s in enumerate(lines)]
    raise ValueError(f"unknown corpus mode {spec.mode!r}")
