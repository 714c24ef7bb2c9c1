import random

import networkx as nx
import pytest

from domguard import graphs as G
from oracles import from_networkx, to_networkx


def test_from_edge_list_cycle():
    c5 = G.from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert c5.n == 5 and c5.m == 5
    assert all(c5.degree(v) == 2 for v in range(5))


def test_from_edge_list_empty_graph():
    g = G.from_edge_list(2, [])
    assert g.n == 2 and g.m == 0


def test_from_edge_list_rejects_duplicates_and_loops():
    with pytest.raises(ValueError, match="duplicate"):
        G.from_edge_list(3, [(0, 1), (0, 1)])
    with pytest.raises(ValueError, match="duplicate"):
        G.from_edge_list(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError, match="loop"):
        G.from_edge_list(3, [(1, 1)])
    with pytest.raises(ValueError, match="range"):
        G.from_edge_list(3, [(0, 3)])


def test_graph_is_immutable():
    g = G.path(3)
    with pytest.raises(AttributeError):
        g.n = 5


def test_graph6_fixed_strings():
    assert G.to_graph6(G.complete(2)) == "A_"
    assert G.to_graph6(G.Graph(1, [0])) == "@"


def test_graph6_roundtrip_all_small_graphs():
    for g in G.graphs_up_to(6):
        assert G.parse_graph6(G.to_graph6(g)) == g


def test_graph6_matches_networkx_both_ways():
    for g in G.graphs_up_to(5):
        mine = G.to_graph6(g)
        ref = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
        assert mine == ref
        back = from_networkx(nx.from_graph6_bytes(mine.encode()))
        assert back == g


def test_graph6_parse_errors():
    with pytest.raises(G.GraphFormatError, match="offset"):
        G.parse_graph6("A" + chr(30))
    with pytest.raises(G.GraphFormatError, match="length"):
        G.parse_graph6("D")
    with pytest.raises(G.GraphFormatError, match="padding"):
        G.parse_graph6("A" + chr(63 + 33))  # K2 with a junk bit in the padding
    with pytest.raises(G.GraphFormatError):
        G.parse_graph6("")


def test_graph6_optional_header_prefix():
    assert G.parse_graph6(">>graph6<<A_\n") == G.complete(2)


def test_edge_list_text_roundtrip():
    g = G.cycle(6)
    assert G.parse_edge_list(G.format_edge_list(g)) == g
    with pytest.raises(G.GraphFormatError, match="header"):
        G.parse_edge_list("abc\n")
    with pytest.raises(G.GraphFormatError, match="edge lines"):
        G.parse_edge_list("3 2\n0 1\n")


def test_cartesian_product_identities():
    assert G.isomorphic(G.cartesian_product(G.complete(2), G.complete(2)), G.cycle(4))
    p33 = G.cartesian_product(G.path(3), G.path(3))
    assert p33.n == 9 and p33.m == 12
    cube = G.cartesian_product(G.cycle(4), G.complete(2))
    assert cube.n == 8 and cube.m == 12


def test_cartesian_product_degree_law():
    rng = random.Random(11)
    pool = G.enumerate_nonisomorphic(4)
    for _ in range(10):
        g, h = rng.choice(pool), rng.choice(pool)
        prod = G.cartesian_product(g, h)
        for a in range(g.n):
            for x in range(h.n):
                assert prod.degree(a * h.n + x) == g.degree(a) + h.degree(x)


def test_corona():
    assert G.isomorphic(G.corona(G.Graph(1, [0])), G.complete(2))
    assert G.isomorphic(G.corona(G.complete(2)), G.path(4))
    g = G.corona(G.cycle(4))
    assert g.n == 8
    from oracles import brute_gamma

    assert brute_gamma(g) == 4


def test_named_families():
    assert G.isomorphic(G.kmn_minus_matching(3, 3, 3), G.cycle(6))
    assert G.isomorphic(G.blown_up_c6([1] * 6), G.cycle(6))
    t = G.stems_with_leaves_tree(3)
    assert t.n == 7 and G.is_tree(t)
    assert sorted(t.degree(v) for v in range(7)) == [1, 1, 1, 1, 2, 3, 3]
    with pytest.raises(ValueError):
        G.kmn_minus_matching(3, 4, 4)
    with pytest.raises(ValueError):
        G.blown_up_c6([1, 1, 1, 1, 1, 0])
    with pytest.raises(ValueError):
        G.stems_with_leaves_tree(2)
    with pytest.raises(ValueError):
        G.cycle(2)


def test_enumeration_counts_match_atlas():
    # graph_atlas_g lists one representative per isomorphism class up to n=7
    atlas = nx.graph_atlas_g()[1:]  # drop the order-zero placeholder
    by_n = {}
    for h in atlas:
        by_n.setdefault(h.number_of_nodes(), []).append(h)
    for n in range(1, 7):
        mine = G.enumerate_nonisomorphic(n)
        assert len(mine) == len(by_n[n])
        theirs = {G.canonical_form(from_networkx(h)) for h in by_n[n]}
        assert {G.canonical_form(g) for g in mine} == theirs


def test_enumeration_order_deterministic_and_canonical():
    graphs = G.enumerate_nonisomorphic(5)
    forms = [G.to_graph6(g) for g in graphs]
    assert forms == sorted(forms)
    assert forms == [G.canonical_form(g) for g in graphs]
    assert len(set(forms)) == 34


def test_enumeration_rejects_large_order():
    with pytest.raises(ValueError, match="graph6"):
        G.enumerate_nonisomorphic(9)


def test_canonical_form_permutation_invariant():
    rng = random.Random(7)
    for g in G.graphs_up_to(6):
        base = G.canonical_form(g)
        for _ in range(20):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert G.canonical_form(G.relabel(g, perm)) == base


def test_tree_enumeration_counts():
    known = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}
    for n, count in known.items():
        assert len(G.enumerate_trees(n)) == count
        if n >= 2:
            assert count == sum(1 for _ in nx.nonisomorphic_trees(n))


def test_tree_enumeration_outputs_valid_distinct_trees():
    for n in range(2, 11):
        ts = G.enumerate_trees(n)
        keys = {G.tree_key(t) for t in ts}
        assert len(keys) == len(ts)
        for t in ts:
            assert t.m == n - 1 and G.is_connected(t)


def test_structure_helpers_match_networkx():
    for g in G.graphs_up_to(5):
        h = to_networkx(g)
        assert G.is_connected(g) == nx.is_connected(h) if g.n > 1 else True
        assert (G.is_bipartite(g) is not None) == nx.is_bipartite(h)
        assert G.is_triangle_free(g) == (sum(nx.triangles(h).values()) == 0)
        comps = G.components(g)
        assert len(comps) == nx.number_connected_components(h)
    parts = G.is_bipartite(G.complete_bipartite(2, 3))
    assert parts is not None and parts[0].bit_count() + parts[1].bit_count() == 5


def test_complement_and_induced_subgraph():
    g = G.cycle(5)
    cg = G.complement(g)
    assert cg.m == 5 and G.isomorphic(cg, G.cycle(5))
    sub, old = G.induced_subgraph(G.path(5), 0b10111)
    assert old == (0, 1, 2, 4)
    assert sub.edges() == [(0, 1), (1, 2)]
