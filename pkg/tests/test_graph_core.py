import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubicdom.canon import canonical_form, canonical_key
from cubicdom.generators import named_graph, random_cubic
from cubicdom.graph import (AddEdge, DeleteEdge, DeleteVertices, Graph, GraphError, SubdivideEdge,
                            apply_edit, connected_components, edit_from_json, edit_to_json,
                            induced_subgraph, relabel, replay, to_networkx, vertex_connectivity)
from cubicdom.graph6 import (Graph6CharError, Graph6HeaderError, Graph6LengthError, parse_graph6,
                             read_graph6_lines, to_graph6)

from conftest import from_nx
from strategies import small_graphs


# ------------------------------------------------------------------ graph6

def test_graph6_known_strings():
    assert to_graph6(named_graph("k4")) == "C~"
    assert to_graph6(Graph.from_edges(1, [])) == "@"
    assert parse_graph6("C~") == named_graph("k4")


def test_graph6_matches_networkx_encoder():
    for name in ("petersen", "k33", "prism", "cube", "mobius_kantor", "c7", "p5"):
        g = named_graph(name)
        ref = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
        assert to_graph6(g) == ref


@given(small_graphs(max_n=12))
def test_graph6_round_trip(g):
    assert parse_graph6(to_graph6(g)) == g


def test_graph6_long_header_round_trip():
    g = random_cubic(70, seed=3)
    s = to_graph6(g)
    assert s[0] == "~"
    assert parse_graph6(s) == g


def test_graph6_header_prefix_and_newline():
    assert parse_graph6(">>graph6<<C~\n") == named_graph("k4")


@pytest.mark.parametrize("text,exc", [
    ("", Graph6HeaderError),
    ("C", Graph6LengthError),
    ("C~~", Graph6LengthError),
    ("C\x7f", Graph6CharError),
    ("C ", Graph6CharError),
])
def test_graph6_errors(text, exc):
    with pytest.raises(exc):
        parse_graph6(text)


def test_read_graph6_lines_skips_blank():
    gs = read_graph6_lines(["C~", "", "Bw"])
    assert [g.n for g in gs] == [4, 3]


# ------------------------------------------------------------------ graph

def test_from_edges_rejects_bad_input():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


def test_neighbourhoods_and_domination():
    g = named_graph("p4")
    assert g.neighbors(1) == (0, 2)
    assert g.closed_neighborhood([0]) == {0, 1}
    assert g.open_neighborhood([1, 2]) == {0, 1, 2, 3}
    assert g.dominates([1, 2]) and not g.dominates([0, 1])
    assert g.internal_edges([0, 1, 2]) == 2
    assert g.induced_edges([1, 2, 3]) == [(1, 2), (2, 3)]


def test_delete_edge_and_precondition():
    g = named_graph("c4")
    h, rel = apply_edit(g, DeleteEdge(0, 1))
    assert h.edge_count == 3 and not h.has_edge(0, 1)
    assert rel == {v: v for v in range(4)}
    with pytest.raises(GraphError):
        apply_edit(h, DeleteEdge(0, 1))


def test_subdivide_edge():
    g = named_graph("k4")
    h, _ = apply_edit(g, SubdivideEdge(2, 3, 4))
    assert h.n == 5 and h.edge_count == 7
    assert h.neighbors(4) == (2, 3) and not h.has_edge(2, 3)
    with pytest.raises(GraphError):
        apply_edit(g, SubdivideEdge(2, 3, 7))


def test_delete_vertices_compacts_ids():
    g = named_graph("p5")
    h, rel = apply_edit(g, DeleteVertices(frozenset({1})))
    assert h.n == 4 and rel == {0: 0, 2: 1, 3: 2, 4: 3}
    assert h.edges() == [(1, 2), (2, 3)]


def test_add_edge_precondition():
    g = named_graph("p3")
    h, _ = apply_edit(g, AddEdge(0, 2))
    assert h == named_graph("c3")
    with pytest.raises(GraphError):
        apply_edit(h, AddEdge(0, 2))


def test_edit_json_round_trip_and_replay():
    edits = [DeleteEdge(0, 1, "a"), SubdivideEdge(1, 2, 4, "b"), AddEdge(0, 4),
             DeleteVertices(frozenset({3}))]
    assert [edit_from_json(edit_to_json(e)) for e in edits] == edits
    h = replay(named_graph("k4"), edits)
    assert h.n == 4


def test_components_shapes():
    g = Graph.from_edges(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 3)])
    shapes = {c.vertices: c.shape for c in connected_components(g)}
    assert shapes[(0, 1, 2)] == "path"
    assert shapes[(3, 4, 5)] == "cycle"
    assert shapes[(6,)] == "isolated"
    k13 = named_graph("k13")
    assert connected_components(k13)[0].shape == "other"


def test_induced_subgraph():
    h, rel = induced_subgraph(named_graph("petersen"), [0, 1, 2, 3, 4])
    assert h == named_graph("c5")
    assert sorted(rel) == [0, 1, 2, 3, 4]


def test_vertex_connectivity():
    assert vertex_connectivity(named_graph("petersen")) == 3
    assert vertex_connectivity(named_graph("p4")) == 1


# ------------------------------------------------------------------ canon

def test_canonical_distinguishes_k33_and_prism():
    assert canonical_key(named_graph("k33")) != canonical_key(named_graph("prism"))


@given(small_graphs(max_n=9), st.randoms(use_true_random=False))
def test_canonical_invariant_under_relabelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_key(relabel(g, perm)) == canonical_key(g)


def test_canonical_relabeling_realises_form():
    g = named_graph("mobius_kantor")
    cf = canonical_form(g)
    assert to_graph6(relabel(g, list(cf.relabeling))) == cf.graph6


def test_canonical_agrees_with_networkx_isomorphism(atlas_graphs):
    sample = [g for g in atlas_graphs if g.n == 6]
    by_key: dict[str, list] = {}
    for g in sample:
        by_key.setdefault(canonical_key(g), []).append(g)
    # atlas lists each isomorphism class once
    assert all(len(v) == 1 for v in by_key.values())
    assert len(by_key) == len(sample) == 156
    nx_g = [to_networkx(g) for g in sample[:40]]
    for i in range(len(nx_g)):
        for j in range(i + 1, len(nx_g)):
            same = canonical_key(sample[i]) == canonical_key(sample[j])
            assert same == nx.is_isomorphic(nx_g[i], nx_g[j])


def test_canonical_random_cubic_relabels():
    g = random_cubic(20, seed=11)
    perm = list(reversed(range(20)))
    assert canonical_key(relabel(g, perm)) == canonical_key(g)
    assert canonical_key(from_nx(to_networkx(g))) == canonical_key(g)
