import pytest

from domguard import eternal as E
from domguard import graphs as G
from domguard import trees as T


def spider222():
    return G.from_edge_list(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def test_reduce_star_and_small():
    value, trace = T.reduce_tree(G.star(4))
    assert value == 2 and trace.steps == [] and trace.terminal == "K1,4"
    assert T.reduce_tree(G.Graph(1, [0]))[0] == 1
    assert T.reduce_tree(G.path(2))[0] == 1
    with pytest.raises(ValueError, match="tree"):
        T.reduce_tree(G.cycle(4))


def test_reduce_path6():
    value, trace = T.reduce_tree(G.path(6))
    assert value == 3
    assert [s.rule for s in trace.steps] == ["R2", "R2"]
    assert trace.terminal == "K2"


def test_reduce_spider():
    value, trace = T.reduce_tree(spider222())
    assert value == 4
    assert trace.terminal == "K1,2"
    assert E.m_eternal_domination_number(spider222())[0] == 4


def test_trace_replay_reaches_terminal():
    for n in range(1, 10):
        for t in G.enumerate_trees(n):
            value, trace = T.reduce_tree(t)
            alive = t.full_mask
            for step in trace.steps:
                assert step.removed & alive == step.removed
                alive &= ~step.removed
            assert alive == trace.terminal_vertices
            assert T._is_star_state(t, alive)
            base = 1 if alive.bit_count() <= 2 else 2
            assert value == len(trace.steps) + base


def test_any_site_application_drops_value_by_one():
    # reductions lower the value by exactly one wherever they legally apply
    for n in range(2, 11):
        for t in G.enumerate_trees(n):
            before = T.reduce_tree(t)[0]
            full = t.full_mask
            for rule, sites in (("R1", T.r1_sites(t, full)), ("R2", T.r2_sites(t, full))):
                for stem in sites:
                    alive, _ = T.apply_rule(t, full, rule, stem)
                    sub, _ = G.induced_subgraph(t, alive)
                    assert T.reduce_tree(sub)[0] == before - 1, (G.to_graph6(t), rule, stem)


def test_rule_preconditions_enforced():
    p6 = G.path(6)
    with pytest.raises(ValueError, match="R1"):
        T.apply_rule(p6, p6.full_mask, "R1", 1)
    with pytest.raises(ValueError, match="R2"):
        T.apply_rule(G.star(3), G.star(3).full_mask, "R2", 0)
    with pytest.raises(ValueError, match="unknown rule"):
        T.apply_rule(p6, p6.full_mask, "R3", 1)


def test_r2_reducibility_examples():
    ok, trace = T.r2_reduces_to_small_star(G.path(6))
    assert ok and trace.terminal == "K2"
    ok, trace = T.r2_reduces_to_small_star(G.star(3))
    assert not ok and trace is None
    ok, trace = T.r2_reduces_to_small_star(spider222())
    assert ok and trace.terminal == "K1,2"
    assert all(s.rule == "R2" for s in trace.steps)
    with pytest.raises(ValueError):
        T.r2_reduces_to_small_star(G.Graph(1, [0]))


def test_r2_trace_is_a_legal_run():
    for n in range(2, 11):
        for t in G.enumerate_trees(n):
            ok, trace = T.r2_reduces_to_small_star(t)
            if not ok:
                continue
            alive = t.full_mask
            for step in trace.steps:
                assert step.stem in T.r2_sites(t, alive)
                alive, removed = T.apply_rule(t, alive, "R2", step.stem)
                assert removed == step.removed
            assert alive.bit_count() in (2, 3)
            assert T._is_star_state(t, alive)


def test_reducibility_iff_theta_matches():
    for n in range(2, 12):
        for t in G.enumerate_trees(n):
            ok, _ = T.r2_reduces_to_small_star(t)
            assert ok == (T.reduce_tree(t)[0] == T.tree_clique_cover(t))


def test_tree_clique_cover():
    assert T.tree_clique_cover(G.path(6)) == 3
    for r in (2, 3, 5):
        assert T.tree_clique_cover(G.star(r)) == r
    assert T.tree_clique_cover(G.path(2)) == 1
    with pytest.raises(ValueError):
        T.tree_clique_cover(G.cycle(4))
    from domguard.params import clique_cover_number

    for n in range(1, 10):
        for t in G.enumerate_trees(n):
            assert T.tree_clique_cover(t) == clique_cover_number(t)[0]


def test_build_by_k2_attachment():
    assert T.build_by_k2_attachment("K2", []).n == 2
    g = T.build_by_k2_attachment("P3", [1])
    assert g.n == 5 and G.is_tree(g)
    assert T.reduce_tree(g)[0] == T.tree_clique_cover(g) == 3
    g = T.build_by_k2_attachment("K2", [0, 0])
    assert G.isomorphic(g, G.from_edge_list(6, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)]))
    with pytest.raises(ValueError, match="out of range"):
        T.build_by_k2_attachment("K2", [5])
    with pytest.raises(ValueError, match="seed"):
        T.build_by_k2_attachment("C4", [])


def _attachment_closure(n_max):
    """Canonical keys of every attachment-built tree with at most n_max vertices."""
    seen = {}
    frontier = [T.build_by_k2_attachment(seed, []) for seed in ("K2", "P3")]
    for t in frontier:
        seen.setdefault(G.tree_key(t), t)
    while frontier:
        nxt = []
        for t in frontier:
            if t.n + 2 > n_max:
                continue
            edges = t.edges()
            for idx in range(t.n):
                g = G.from_edge_list(t.n + 2, edges + [(idx, t.n), (t.n, t.n + 1)])
                key = G.tree_key(g)
                if key not in seen:
                    seen[key] = g
                    nxt.append(g)
        frontier = nxt
    return seen


def test_attachment_closure_is_exactly_theta_equality():
    built = _attachment_closure(10)
    for key, t in built.items():
        assert T.reduce_tree(t)[0] == T.tree_clique_cover(t)
    expected = {
        G.tree_key(t)
        for n in range(2, 11)
        for t in G.enumerate_trees(n)
        if T.reduce_tree(t)[0] == T.tree_clique_cover(t)
    }
    assert set(built) == expected
