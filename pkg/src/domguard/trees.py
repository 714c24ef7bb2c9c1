"""Tree solvers built on the two leaf reductions.

R1 strips all leaves from a stem that also sees exactly one vertex of degree
two or more; R2 deletes a degree-two stem together with its single leaf.
Each application lowers the all-guards protection number by exactly one, so
reducing down to a star solves trees without touching the fixed-point
engine. Reduced states are tracked as alive-vertex masks over the original
tree so traces keep the caller's labels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits, from_edge_list, induced_subgraph, is_tree, path, tree_key, vertex_tuple
from .params import maximum_matching


@dataclass
class ReductionStep:
    rule: str  # "R1" or "R2"
    stem: int
    removed: int  # mask of deleted vertices

    def render(self) -> str:
        removed = "{" + ",".join(str(v) for v in bits(self.removed)) + "}"
        return f"{self.rule} at stem {self.stem}: removed {removed}"


@dataclass
class ReductionTrace:
    steps: list
    terminal: str  # "K1", "K2" or "K1,r"
    terminal_vertices: int
    value: int

    def render_lines(self):
        lines = [s.render() for s in self.steps]
        final = "{" + ",".join(str(v) for v in bits(self.terminal_vertices)) + "}"
        lines.append(f"terminal {self.terminal} on {final}")
        return lines

    def to_json_dict(self):
        return {
            "steps": [
                {"rule": s.rule, "stem": s.stem, "removed": list(vertex_tuple(s.removed))}
                for s in self.steps
            ],
            "terminal": self.terminal,
            "terminal_vertices": list(vertex_tuple(self.terminal_vertices)),
            "value": self.value,
        }


def _require_tree(t: Graph):
    if not is_tree(t):
        raise ValueError("input is not a tree")


def _alive_degree(t: Graph, alive: int, v: int) -> int:
    return (t.adj[v] & alive).bit_count()


def _alive_leaves(t: Graph, alive: int) -> int:
    out = 0
    for v in bits(alive):
        if _alive_degree(t, alive, v) == 1:
            out |= 1 << v
    return out


def _is_star_state(t: Graph, alive: int) -> bool:
    branchy = 0
    for v in bits(alive):
        if _alive_degree(t, alive, v) >= 2:
            branchy += 1
    return branchy <= 1


def r1_sites(t: Graph, alive: int | None = None):
    """Stems with >= 2 leaf neighbors and exactly one neighbor of degree >= 2."""
    if alive is None:
        alive = t.full_mask
    leaves = _alive_leaves(t, alive)
    sites = []
    for x in bits(alive & ~leaves):
        nb = t.adj[x] & alive
        leaf_nb = (nb & leaves).bit_count()
        big_nb = (nb & ~leaves).bit_count()
        if leaf_nb >= 2 and big_nb == 1:
            sites.append(x)
    return sites


def r2_sites(t: Graph, alive: int | None = None):
    """Degree-two stems adjacent to exactly one leaf."""
    if alive is None:
        alive = t.full_mask
    leaves = _alive_leaves(t, alive)
    sites = []
    for x in bits(alive & ~leaves):
        nb = t.adj[x] & alive
        if nb.bit_count() == 2 and (nb & leaves).bit_count() == 1:
            sites.append(x)
    return sites


def apply_rule(t: Graph, alive: int, rule: str, stem: int):
    """(new alive mask, removed mask); validates the rule's precondition."""
    leaves = _alive_leaves(t, alive)
    nb = t.adj[stem] & alive
    if rule == "R1":
        if stem not in r1_sites(t, alive):
            raise ValueError(f"R1 precondition fails at {stem}")
        removed = nb & leaves
    elif rule == "R2":
        if stem not in r2_sites(t, alive):
            raise ValueError(f"R2 precondition fails at {stem}")
        removed = (nb & leaves) | 1 << stem
    else:
        raise ValueError(f"unknown rule {rule!r}")
    return alive & ~removed, removed


def _bfs_dist(t: Graph, alive: int, src: int):
    dist = {src: 0}
    frontier = [src]
    while frontier:
        nxt = []
        for v in frontier:
            for u in bits(t.adj[v] & alive):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    nxt.append(u)
        frontier = nxt
    return dist


def _terminal(t: Graph, alive: int):
    count = alive.bit_count()
    if count == 1:
        return "K1", 1
    if count == 2:
        return "K2", 1
    return f"K1,{count - 1}", 2


def reduce_tree(t: Graph):
    """(all-guards protection number, trace).

    Policy: root at a vertex of maximum eccentricity, always reduce at the
    stem farthest from the root (smallest index on ties). A deepest stem has
    only leaf children, so R1 or R2 always applies; each step adds one.
    """
    _require_tree(t)
    alive = t.full_mask
    steps = []
    if t.n >= 2:
        ecc = {v: max(_bfs_dist(t, alive, v).values()) for v in range(t.n)}
        root = min(range(t.n), key=lambda v: (-ecc[v], v))
        while not _is_star_state(t, alive):
            dist = _bfs_dist(t, alive, root)
            leaves = _alive_leaves(t, alive)
            stems = [x for x in bits(alive & ~leaves) if t.adj[x] & alive & leaves]
            stem = min(stems, key=lambda x: (-dist[x], x))
            nb = t.adj[stem] & alive
            rule = "R1" if (nb & leaves).bit_count() >= 2 and (nb & ~leaves).bit_count() == 1 else "R2"
            alive, removed = apply_rule(t, alive, rule, stem)
            steps.append(ReductionStep(rule=rule, stem=stem, removed=removed))
    terminal, base = _terminal(t, alive)
    value = len(steps) + base
    return value, ReductionTrace(steps=steps, terminal=terminal, terminal_vertices=alive, value=value)


def r2_reduces_to_small_star(t: Graph):
    """Can R2 alone take the tree to K2 or K1,2? Searches all orders.

    Dead states are memoized by canonical tree key; the first successful
    order (stems tried in ascending index) supplies the trace.
    """
    _require_tree(t)
    if t.n < 2:
        raise ValueError("defined for trees with at least two vertices")
    dead = set()

    def state_key(alive):
        sub, _ = induced_subgraph(t, alive)
        return tree_key(sub)

    def rec(alive):
        count = alive.bit_count()
        if count == 2 or (count == 3 and _is_star_state(t, alive)):
            return []
        sites = r2_sites(t, alive)
        if not sites:
            return None
        key = state_key(alive)
        if key in dead:
            return None
        for stem in sites:
            nxt, removed = apply_rule(t, alive, "R2", stem)
            sub = rec(nxt)
            if sub is not None:
                return [ReductionStep(rule="R2", stem=stem, removed=removed)] + sub
        dead.add(key)
        return None

    steps = rec(t.full_mask)
    if steps is None:
        return False, None
    alive = t.full_mask
    for s in steps:
        alive &= ~s.removed
    terminal, base = _terminal(t, alive)
    trace = ReductionTrace(steps=steps, terminal=terminal, terminal_vertices=alive,
                           value=len(steps) + base)
    return True, trace


def build_by_k2_attachment(seed: str, attachments) -> Graph:
    """Grow a tree from K2 or P3 by repeatedly joining a fresh K2's leaf to a vertex."""
    seeds = {"K2": path(2), "P3": path(3)}
    if seed not in seeds:
        raise ValueError('seed must be "K2" or "P3"')
    g = seeds[seed]
    edges = g.edges()
    n = g.n
    for idx in attachments:
        if not 0 <= idx < n:
            raise ValueError(f"attachment index {idx} out of range (tree has {n} vertices)")
        edges.append((idx, n))
        edges.append((n, n + 1))
        n += 2
    return from_edge_list(n, edges)


def tree_clique_cover(t: Graph) -> int:
    """theta via n - maximum matching size; exact on trees (triangle-free)."""
    _require_tree(t)
    return t.n - len(maximum_matching(t))
