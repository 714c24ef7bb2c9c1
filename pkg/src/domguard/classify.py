"""Membership tests and sufficient conditions for the small protection numbers.

The two-sided predicates return (lhs, rhs) rather than a verdict so a
failing equivalence can be blamed on a specific side.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .eternal import eternal_domination_number, m_eternal_domination_number
from .graphs import Graph, bits, canonical_form, components, cycle, is_bipartite, is_connected, is_triangle_free, mask_of, vertex_tuple
from .params import domination_number, every_vertex_in_k_dominating_set, independence_number


@dataclass
class ClassCCertificate:
    """Witness that G is a complete bipartite graph minus a matching.

    part_a is the smaller side (m vertices); the deleted matching obeys
    size <= m when the sides are equal and size <= m-1 otherwise. Depleted
    vertices are the endpoints of the deleted matching.
    """

    part_a: int
    part_b: int
    deleted_matching: list
    depleted: int

    @property
    def full(self) -> int:
        return (self.part_a | self.part_b) & ~self.depleted

    def to_json_dict(self):
        return {
            "part_a": list(vertex_tuple(self.part_a)),
            "part_b": list(vertex_tuple(self.part_b)),
            "deleted_matching": [list(e) for e in self.deleted_matching],
            "depleted": list(vertex_tuple(self.depleted)),
            "full": list(vertex_tuple(self.full)),
        }


def class_c_membership(g: Graph):
    """Certificate if V splits into sides A, B with all A-B edges present except a matching."""
    n = g.n
    if n < 4:
        return None
    half = [m for m in range(1 << n) if m & 1]  # fix vertex 0 on side A
    for a in half:
        b = g.full_mask & ~a
        if b == 0:
            continue
        na, nb = a.bit_count(), b.bit_count()
        if na < 2 or nb < 2:
            continue
        if any(g.adj[v] & a for v in bits(a)) or any(g.adj[v] & b for v in bits(b)):
            continue
        missing = []
        ok = True
        matched = 0
        for v in bits(a):
            gap = b & ~g.adj[v]
            if gap.bit_count() > 1:
                ok = False
                break
            if gap:
                u = gap.bit_length() - 1
                if matched >> u & 1:
                    ok = False
                    break
                matched |= gap | 1 << v
                missing.append((v, u))
        if not ok:
            continue
        # every B vertex may miss at most one A vertex too
        if any((a & ~g.adj[u]).bit_count() > 1 for u in bits(b)):
            continue
        if na != nb and len(missing) > min(na, nb) - 1:
            continue
        if na <= nb:
            part_a, part_b = a, b
        else:
            part_a, part_b = b, a
            missing = [(u, v) for v, u in missing]
        return ClassCCertificate(part_a=part_a, part_b=part_b,
                                 deleted_matching=sorted(missing),
                                 depleted=mask_of(v for e in missing for v in e))
    return None


def bipartite_two_characterization(g: Graph):
    """lhs: gamma = m_eternal = 2; rhs: complete-bipartite-minus-matching membership."""
    if is_bipartite(g) is None:
        raise ValueError("graph is not bipartite")
    lhs = domination_number(g)[0] == 2 and m_eternal_domination_number(g)[0] == 2
    rhs = class_c_membership(g) is not None
    return lhs, rhs


def triangle_free_two_characterization(g: Graph):
    """Same lhs; rhs also admits the five-cycle."""
    if not is_triangle_free(g):
        raise ValueError("graph has a triangle")
    lhs = domination_number(g)[0] == 2 and m_eternal_domination_number(g)[0] == 2
    rhs = (g.n == 5 and canonical_form(g) == canonical_form(cycle(5))) or class_c_membership(g) is not None
    return lhs, rhs


def prop2_condition(g: Graph) -> bool:
    """Every vertex in some 2-element dominating set (forces m_eternal = 2)."""
    if g.m == g.n * (g.n - 1) // 2:
        raise ValueError("complete graphs are excluded by hypothesis")
    flag, _ = every_vertex_in_k_dominating_set(g, 2)
    return flag


def _maximum_independent_sets(g: Graph, alpha: int):
    out = []
    for combo in combinations(range(g.n), alpha):
        m = mask_of(combo)
        if all(g.adj[v] & m == 0 for v in combo):
            out.append(m)
    return out


def prop3_condition(g: Graph) -> bool:
    """Some vertex dominates every maximum independent set (alpha must be 3)."""
    alpha, _ = independence_number(g)
    if alpha != 3:
        raise ValueError("defined for independence number exactly 3")
    mis = _maximum_independent_sets(g, 3)
    return any(all(m & ~g.closed(v) == 0 for m in mis) for v in range(g.n))


def gamma_half(g: Graph) -> bool:
    """Is the domination number exactly half the order?"""
    if any(g.adj[v] == 0 for v in range(g.n)):
        raise ValueError("isolated vertices are excluded")
    return 2 * domination_number(g)[0] == g.n


def is_corona(g: Graph) -> bool:
    """Did attaching one pendant leaf per vertex of a connected graph produce g?"""
    if not is_connected(g):
        raise ValueError("corona detection expects a connected graph")
    if g.n == 2:
        return True  # the corona of a single vertex
    if g.n % 2:
        return False
    leaves = mask_of(v for v in range(g.n) if g.degree(v) == 1)
    core = g.full_mask & ~leaves
    if leaves.bit_count() != g.n // 2:
        return False
    from .graphs import mask_connected

    if not mask_connected(g, core):
        return False
    return all((g.adj[v] & leaves).bit_count() == 1 for v in bits(core))


def gamma_half_structure(g: Graph) -> bool:
    """Every component a 4-cycle or a corona (the structural side of gamma = n/2)."""
    if any(g.adj[v] == 0 for v in range(g.n)):
        raise ValueError("isolated vertices are excluded")
    from .graphs import induced_subgraph

    for comp in components(g):
        sub, _ = induced_subgraph(g, comp)
        if sub.n == 4 and sub.m == 4 and all(sub.degree(v) == 2 for v in range(4)):
            continue
        if is_corona(sub):
            continue
        return False
    return True


def bipartite_gamma_eq_eternal(g: Graph):
    """lhs: gamma = one-guard eternal number; rhs: gamma = n/2."""
    if is_bipartite(g) is None:
        raise ValueError("graph is not bipartite")
    if any(g.adj[v] == 0 for v in range(g.n)):
        raise ValueError("isolated vertices are excluded")
    gamma = domination_number(g)[0]
    lhs = gamma == eternal_domination_number(g)[0]
    rhs = 2 * gamma == g.n
    return lhs, rhs
