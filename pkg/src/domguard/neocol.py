"""Neo-colonizations: partitions into connected parts with clique-aware weights.

A part costs 1 when it induces a clique and 1 + (connected domination number
of the part) otherwise; the minimum total over all such partitions is the
weight theta_c. The exact solver is a subset DP anchored at the lowest
uncovered vertex, with connected candidate parts enumerated once up front.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits, induced_subgraph, is_bipartite, mask_connected, vertex_tuple
from .params import connected_domination_number, independence_number, maximum_matching

THETA_C_MAX_N = 16


@dataclass
class NeoColonization:
    parts: list
    weights: list

    @property
    def total(self) -> int:
        return sum(self.weights)

    def to_json_dict(self):
        return {
            "parts": [list(vertex_tuple(p)) for p in self.parts],
            "weights": list(self.weights),
            "total": self.total,
        }


def _is_clique_mask(g: Graph, mask: int) -> bool:
    for v in bits(mask):
        if mask & ~(g.adj[v] | 1 << v):
            return False
    return True


def part_weight(g: Graph, part: int) -> int:
    """1 for cliques (singletons and edges included), else 1 + gamma_c of the part."""
    if not mask_connected(g, part):
        raise ValueError("part does not induce a connected subgraph")
    if _is_clique_mask(g, part):
        return 1
    sub, _ = induced_subgraph(g, part)
    return 1 + connected_domination_number(sub)


def _connected_subsets_min(g: Graph, v: int):
    """All connected subsets whose smallest vertex is v, each exactly once."""
    allowed = g.full_mask & ~((1 << v + 1) - 1)
    out = []

    def neighbors(mask):
        acc = 0
        for u in bits(mask):
            acc |= g.adj[u]
        return acc

    def grow(s, banned):
        out.append(s)
        ext = neighbors(s) & allowed & ~s & ~banned
        b = banned
        for u in bits(ext):
            grow(s | 1 << u, b)
            b |= 1 << u

    grow(1 << v, 0)
    return out


def theta_c(g: Graph):
    """(minimum neo-colonization weight, witness).

    dp[U] is the best weight partitioning the remaining vertex set U; every
    part is anchored at min(U), so each partition is counted once.
    """
    if g.n > THETA_C_MAX_N:
        raise ValueError(f"subset DP capped at n <= {THETA_C_MAX_N}")
    full = g.full_mask
    by_min = []
    for v in range(g.n):
        by_min.append([(s, part_weight(g, s)) for s in sorted(_connected_subsets_min(g, v))])
    inf = float("inf")
    dp = [inf] * (full + 1)
    choice = [0] * (full + 1)
    dp[0] = 0
    for u in range(1, full + 1):
        v = (u & -u).bit_length() - 1
        best = inf
        pick = 0
        for s, w in by_min[v]:
            if s & ~u:
                continue
            cand = w + dp[u ^ s]
            if cand < best:
                best = cand
                pick = s
        dp[u] = best
        choice[u] = pick
    parts = []
    weights = []
    u = full
    while u:
        s = choice[u]
        parts.append(s)
        weights.append(part_weight(g, s))
        u ^= s
    witness = NeoColonization(parts=parts, weights=weights)
    return int(dp[full]), witness


def bipartite_star_colonization(g: Graph) -> NeoColonization:
    """The constructive star partition for bipartite graphs.

    Grows a maximum matching, then adds each unmatched vertex to the part of
    its smallest matched neighbor; every part induces a K2 or a larger star,
    and the total weight is at most tau + number of unmatched vertices.
    """
    if is_bipartite(g) is None:
        raise ValueError("graph is not bipartite")
    if any(g.adj[v] == 0 for v in range(g.n)):
        raise ValueError("isolated vertices admit no star part")
    matching = maximum_matching(g)
    mate = {}
    for u, v in matching:
        mate[u] = v
        mate[v] = u
    edge_of = {}
    part_mask = {}
    for i, (u, v) in enumerate(matching):
        edge_of[u] = edge_of[v] = i
        part_mask[i] = 1 << u | 1 << v
    for w in range(g.n):
        if w in mate:
            continue
        anchor = min(bits(g.adj[w]))  # maximality of the matching keeps this matched
        part_mask[edge_of[anchor]] |= 1 << w
    parts = [part_mask[i] for i in range(len(matching))]
    weights = [part_weight(g, p) for p in parts]
    return NeoColonization(parts=parts, weights=weights)


def star_colonization_bound(g: Graph) -> int:
    """tau + |unmatched| for bipartite g, which equals alpha."""
    nu = len(maximum_matching(g))
    alpha, _ = independence_number(g)
    tau = g.n - alpha
    return tau + (g.n - 2 * nu)
