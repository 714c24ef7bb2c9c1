"""Exact classical graph parameters used as oracles by the rest of the package.

Everything is exhaustive or branch-and-bound over bitmasks: the solvers are
meant for graphs up to roughly 16 vertices and return deterministic
witnesses (lexicographically smallest set among optima where the witness is
a single vertex set).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graphs import Graph, bits, components, induced_subgraph, is_bipartite, is_tree, mask_of, vertex_tuple


def _component_views(g: Graph):
    return [(comp, vertex_tuple(comp)) for comp in components(g)]


# ---------------------------------------------------------------------------
# domination


def _gamma_component(g: Graph, comp: int, verts) -> int:
    for k in range(1, len(verts) + 1):
        for combo in combinations(verts, k):
            cover = 0
            for v in combo:
                cover |= g.closed(v)
            if cover & comp == comp:
                return mask_of(combo)
    raise AssertionError("unreachable: the full component dominates itself")


def domination_number(g: Graph):
    """(gamma, witness mask); the witness is the lex-smallest minimum dominating set."""
    witness = 0
    for comp, verts in _component_views(g):
        witness |= _gamma_component(g, comp, verts)
    return witness.bit_count(), witness


def dominating_sets(g: Graph, k: int):
    """All dominating sets of size k as masks, ascending."""
    if not 0 <= k <= g.n:
        raise ValueError("size out of range")
    full = g.full_mask
    out = []
    for combo in combinations(range(g.n), k):
        cover = 0
        for v in combo:
            cover |= g.closed(v)
        if cover == full:
            out.append(mask_of(combo))
    out.sort()
    return out


def every_vertex_in_k_dominating_set(g: Graph, k: int):
    """Does every vertex lie in some dominating set of size k? Also the failing vertices."""
    if not 1 <= k <= g.n:
        raise ValueError("size out of range")
    covered = 0
    full = g.full_mask
    for combo in combinations(range(g.n), k):
        cover = 0
        m = 0
        for v in combo:
            cover |= g.closed(v)
            m |= 1 << v
        if cover == full:
            covered |= m
            if covered == full:
                return True, 0
    return covered == full, full & ~covered


# ---------------------------------------------------------------------------
# independence


def _alpha_component(g: Graph, comp: int, verts):
    for k in range(len(verts), 0, -1):
        for combo in combinations(verts, k):
            m = mask_of(combo)
            if all(g.adj[v] & m == 0 for v in combo):
                return m
    raise AssertionError("unreachable: a single vertex is independent")


def independence_number(g: Graph):
    """(alpha, witness mask); lex-smallest maximum independent set."""
    witness = 0
    for comp, verts in _component_views(g):
        witness |= _alpha_component(g, comp, verts)
    return witness.bit_count(), witness


# ---------------------------------------------------------------------------
# clique cover (exact chromatic number of the complement)


def _exact_coloring(adj, n):
    """Minimum proper coloring of the graph given by adjacency masks.

    DSATUR-style branch and bound; returns the color classes as masks.
    """
    if n == 0:
        return []
    order = sorted(range(n), key=lambda v: -adj[v].bit_count())
    # greedy upper bound
    greedy = {}
    for v in order:
        used = {greedy[u] for u in bits(adj[v]) if u in greedy}
        c = 0
        while c in used:
            c += 1
        greedy[v] = c
    best_count = max(greedy.values()) + 1
    best = [0] * best_count
    for v, c in greedy.items():
        best[c] |= 1 << v
    # greedy clique lower bound
    clique = []
    cand = set(range(n))
    while cand:
        v = min(cand, key=lambda u: (-(adj[u].bit_count()), u))
        clique.append(v)
        cand = {u for u in cand if adj[v] >> u & 1}
    lower = len(clique)
    if best_count == lower:
        return best

    color = {}

    def pick():
        chosen, key = None, None
        for v in range(n):
            if v in color:
                continue
            sat = len({color[u] for u in bits(adj[v]) if u in color})
            k = (sat, adj[v].bit_count(), -v)
            if key is None or k > key:
                chosen, key = v, k
        return chosen

    def rec(used):
        nonlocal best, best_count
        if used >= best_count:
            return
        if len(color) == n:
            best_count = used
            cls = [0] * used
            for v, c in color.items():
                cls[c] |= 1 << v
            best = cls
            return
        v = pick()
        seen = {color[u] for u in bits(adj[v]) if u in color}
        for c in range(used):
            if c not in seen:
                color[v] = c
                rec(used)
                del color[v]
                if best_count == lower:
                    return
        if used + 1 < best_count:
            color[v] = used
            rec(used + 1)
            del color[v]

    rec(0)
    return best


def clique_cover_number(g: Graph):
    """(theta, parts); parts is a partition of V into cliques, as masks."""
    parts = []
    for comp, verts in _component_views(g):
        sub, old = induced_subgraph(g, comp)
        full = sub.full_mask
        co_adj = [full & ~(sub.adj[v] | 1 << v) for v in range(sub.n)]
        for cls in _exact_coloring(co_adj, sub.n):
            parts.append(mask_of(old[v] for v in bits(cls)))
    parts.sort(key=vertex_tuple)
    return len(parts), parts


# ---------------------------------------------------------------------------
# connected domination


def connected_domination_number(g: Graph) -> int:
    """Minimum connected dominating set size; errors on disconnected input."""
    comps = components(g)
    if len(comps) != 1:
        raise ValueError("connected domination is undefined on disconnected graphs")
    if g.n <= 2:
        return 1
    if is_tree(g):
        # minimum connected dominating set of a tree is its internal vertices
        internal = sum(1 for v in range(g.n) if g.degree(v) >= 2)
        return max(1, internal)
    full = g.full_mask
    from .graphs import mask_connected

    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            m = mask_of(combo)
            if g.closed_union(m) == full and mask_connected(g, m):
                return k
    raise AssertionError("unreachable: V itself is connected and dominating")


# ---------------------------------------------------------------------------
# matching, vertex cover


def _matching_component(g: Graph, comp: int):
    memo = {}

    def size(mask):
        if mask in memo:
            return memo[mask]
        m = mask
        v = None
        while m:
            low = m & -m
            cand = low.bit_length() - 1
            if g.adj[cand] & mask:
                v = cand
                break
            m ^= low
        if v is None:
            memo[mask] = 0
            return 0
        best = size(mask ^ 1 << v)
        for u in bits(g.adj[v] & mask):
            best = max(best, 1 + size(mask ^ 1 << v ^ 1 << u))
        memo[mask] = best
        return best

    edges = []
    mask = comp
    while True:
        target = size(mask)
        v = None
        m = mask
        while m:
            low = m & -m
            cand = low.bit_length() - 1
            if g.adj[cand] & mask:
                v = cand
                break
            m ^= low
        if v is None:
            break
        matched = False
        for u in bits(g.adj[v] & mask):
            if 1 + size(mask ^ 1 << v ^ 1 << u) == target:
                edges.append((v, u))
                mask ^= 1 << v | 1 << u
                matched = True
                break
        if not matched:
            mask ^= 1 << v
    return edges


def maximum_matching(g: Graph):
    """Deterministic maximum matching as a list of edges."""
    edges = []
    for comp in components(g):
        edges.extend(_matching_component(g, comp))
    return sorted(edges)


def vertex_cover_and_matching(g: Graph):
    """(tau, nu, matching edges, cover mask).

    tau comes from Gallai (n - alpha); on bipartite graphs the cover is the
    Koenig cover built from the matching, so tau = nu there.
    """
    matching = maximum_matching(g)
    nu = len(matching)
    alpha, ind = independence_number(g)
    tau = g.n - alpha
    parts = is_bipartite(g)
    if parts is None:
        cover = g.full_mask & ~ind
    else:
        a, b = parts
        mate = {}
        for u, v in matching:
            mate[u] = v
            mate[v] = u
        z = 0
        queue = [v for v in bits(a) if v not in mate]
        for v in queue:
            z |= 1 << v
        while queue:
            v = queue.pop()
            if a >> v & 1:
                reach = g.adj[v] & ~z
                if v in mate:
                    reach &= ~(1 << mate[v])
            else:
                reach = (1 << mate[v]) & ~z if v in mate else 0
            for u in bits(reach):
                z |= 1 << u
                queue.append(u)
        cover = (a & ~z) | (b & z)
    return tau, nu, matching, cover


# ---------------------------------------------------------------------------
# private neighborhoods


def private_neighbors(g: Graph, d_mask: int, v: int):
    """(pn, epn) of v with respect to the set D; v must belong to D."""
    if not d_mask >> v & 1:
        raise ValueError("vertex is not a member of the set")
    others = g.closed_union(d_mask & ~(1 << v))
    pn = g.closed(v) & ~others
    return pn, pn & ~(1 << v)


# ---------------------------------------------------------------------------
# report record


PARAM_KEYS = ("gamma", "m_eternal", "alpha", "eternal", "theta", "theta_c", "gamma_c", "tau", "nu")


@dataclass
class ParamReport:
    """Per-graph parameter table with optional witnesses and per-solver notes."""

    graph6: str
    n: int
    m: int
    values: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    def chain_violations(self):
        """Violations of gamma <= m_eternal <= alpha <= eternal <= theta, if all present."""
        chain = ("gamma", "m_eternal", "alpha", "eternal", "theta")
        if any(self.values.get(k) is None for k in chain):
            return []
        out = []
        for lo, hi in zip(chain, chain[1:]):
            if self.values[lo] > self.values[hi]:
                out.append(f"{lo}={self.values[lo]} > {hi}={self.values[hi]}")
        return out

    def to_json_dict(self):
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "values": {k: self.values.get(k) for k in PARAM_KEYS},
            "witnesses": self.witnesses,
            "notes": self.notes,
        }
