"""Exact eternal domination via greatest-fixed-point safe families.

Both guard games are solved the same way: start from every dominating set
of size k and repeatedly delete configurations that fail to answer some
attack within the surviving family. What remains is the greatest fixed
point of the defense operator; it is nonempty exactly when k guards win
the infinite game.

one-guard model: an attack at r is answered by moving a single guard from
a neighbor of r, and the new configuration must again be in the family.

all-guards model: every guard may simultaneously move within its closed
neighborhood (staying put is allowed), some guard must land on r, and the
move must be a perfect matching between old and new positions.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product as iter_product

from . import budget
from .graphs import Graph, bits, components, induced_subgraph, mask_of, vertex_tuple
from .params import (
    clique_cover_number,
    dominating_sets,
    domination_number,
    independence_number,
    private_neighbors,
)

ONE_GUARD = "one-guard"
ALL_GUARDS = "all-guards"
MODELS = (ONE_GUARD, ALL_GUARDS)


def transition_feasible(g: Graph, d_mask: int, d2_mask: int) -> bool:
    """Can the guards on d move simultaneously (closed neighborhoods) onto d2?

    True iff the bipartite graph d x d2 with edges u->w for w in N[u] has a
    perfect matching, found by augmenting paths.
    """
    if d_mask.bit_count() != d2_mask.bit_count():
        raise ValueError("configurations must have the same number of guards")
    if d_mask == d2_mask:
        return True
    # every guard needs a target and every target needs a guard
    if d2_mask & ~g.closed_union(d_mask) or d_mask & ~g.closed_union(d2_mask):
        return False
    mate = {}  # target vertex -> source vertex

    def augment(u, visited):
        for w in bits(g.closed(u) & d2_mask):
            if w in visited:
                continue
            visited.add(w)
            if w not in mate or augment(mate[w], visited):
                mate[w] = u
                return True
        return False

    for u in bits(d_mask):
        if not augment(u, set()):
            return False
    return True


@dataclass
class SafeFamily:
    """Fixed point of the defense operator at size k (members may be empty).

    removed maps every dominating set of size k that got eliminated to the
    sweep number and the attack it could not answer; it drives the losing
    certificate shown by the CLI. Families assembled additively over
    components carry removed={} (component scans prove the lower bound).
    """

    graph: Graph
    k: int
    model: str
    members: frozenset
    removed: dict = field(default_factory=dict)
    sweeps: int = 0

    def sorted_members(self):
        return sorted(self.members)

    def member_hex(self):
        return [f"{m:x}" for m in self.sorted_members()]


def safe_family(g: Graph, k: int, model: str) -> SafeFamily:
    """Greatest fixed point at size k: sweep and batch-remove until stable."""
    if not 1 <= k <= g.n:
        raise ValueError("guard count out of range")
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    members = dominating_sets(g, k)
    member_set = set(members)
    full = g.full_mask
    adj = g.adj
    nbhd = {d: g.closed_union(d) for d in members}
    removed = {}
    feasible = {}
    last_defense = {}
    all_guards = model == ALL_GUARDS

    def matchable(d, d2):
        key = (d, d2)
        hit = feasible.get(key)
        if hit is None:
            hit = feasible[key] = transition_feasible(g, d, d2)
        return hit

    sweep = 0
    while True:
        sweep += 1
        budget.checkpoint("safe-family sweep")
        if all_guards:
            containing = defaultdict(list)
            for d in members:
                for v in bits(d):
                    containing[v].append(d)
        doomed = []
        for d in members:
            killer = None
            for r in bits(full & ~d):
                ok = False
                cached = last_defense.get((d, r))
                if cached is not None and cached in member_set:
                    ok = True
                if not ok:
                    for v in bits(d & adj[r]):
                        succ = (d ^ 1 << v) | 1 << r
                        if succ in member_set:
                            last_defense[(d, r)] = succ
                            ok = True
                            break
                if not ok and all_guards:
                    nd = nbhd[d]
                    for d2 in containing[r]:
                        if d2 & ~nd or d & ~nbhd[d2]:
                            continue
                        if matchable(d, d2):
                            last_defense[(d, r)] = d2
                            ok = True
                            break
                if not ok:
                    killer = r
                    break
            if killer is not None:
                doomed.append((d, killer))
        if not doomed:
            break
        for d, killer in doomed:
            removed[d] = (sweep, killer)
            member_set.discard(d)
        members = [d for d in members if d in member_set]
    return SafeFamily(graph=g, k=k, model=model, members=frozenset(member_set),
                      removed=removed, sweeps=sweep)


def _protection_number(g: Graph, model: str):
    comps = components(g)
    if len(comps) > 1:
        # guards cannot cross components, so solve each and take unions
        total = 0
        member_lists = []
        for comp in comps:
            sub, old = induced_subgraph(g, comp)
            k, fam = _protection_number(sub, model)
            total += k
            member_lists.append([mask_of(old[v] for v in bits(m)) for m in fam.sorted_members()])
        members = frozenset(
            _union_all(choice) for choice in iter_product(*member_lists)
        )
        return total, SafeFamily(graph=g, k=total, model=model, members=members)
    if model == ONE_GUARD:
        lo = independence_number(g)[0]
        hi = clique_cover_number(g)[0]
    else:
        lo = domination_number(g)[0]
        hi = independence_number(g)[0]
    for k in range(lo, hi + 1):
        fam = safe_family(g, k, model)
        if fam.members:
            return k, fam
    raise AssertionError(f"empty fixed point up to the upper bound {hi}; solver bug")


def _union_all(masks):
    out = 0
    for m in masks:
        out |= m
    return out


def eternal_domination_number(g: Graph):
    """(gamma_infty, witnessing one-guard safe family)."""
    return _protection_number(g, ONE_GUARD)


def m_eternal_domination_number(g: Graph):
    """(gamma_m_infty, witnessing all-guards safe family)."""
    return _protection_number(g, ALL_GUARDS)


@dataclass
class DefenseStrategy:
    """Total defense map: (configuration, attacked vertex) -> next configuration."""

    graph: Graph
    k: int
    model: str
    table: dict

    def respond(self, d_mask: int, r: int) -> int:
        try:
            return self.table[(d_mask, r)]
        except KeyError:
            raise ValueError("no strategy entry: configuration unknown or vertex occupied") from None


def extract_strategy(family: SafeFamily) -> DefenseStrategy:
    """Lexicographically smallest in-family defense for every member/attack pair."""
    if not family.members:
        raise ValueError("cannot extract a strategy from an empty family")
    g = family.graph
    full = g.full_mask
    members = family.members
    table = {}
    by_vertex = defaultdict(list)
    if family.model == ALL_GUARDS:
        for d in family.sorted_members():
            for v in bits(d):
                by_vertex[v].append(d)
    for d in family.sorted_members():
        for r in bits(full & ~d):
            if family.model == ONE_GUARD:
                cands = [(d ^ 1 << v) | 1 << r for v in bits(d & g.adj[r])]
                cands = [s for s in cands if s in members]
            else:
                cands = [d2 for d2 in by_vertex[r] if transition_feasible(g, d, d2)]
            if not cands:
                raise AssertionError("closure violated inside a safe family; solver bug")
            table[(d, r)] = min(cands, key=vertex_tuple)
    return DefenseStrategy(graph=g, k=family.k, model=family.model, table=table)


def _is_clique(g: Graph, mask: int) -> bool:
    for v in bits(mask):
        if mask & ~(g.adj[v] | 1 << v):
            return False
    return True


def verify_fact_eds(g: Graph, family: SafeFamily):
    """Check the clique structure of private neighborhoods across an EDS family.

    For every member D and v in D, {v} + epn(v,D) must induce a clique, and
    whenever v can defend an outside vertex u (the one-guard move stays in
    the family), {u,v} + epn(v,D) must induce a clique. Returns violations.
    """
    out = []
    full = g.full_mask
    for d in family.sorted_members():
        epns = {}
        for v in bits(d):
            _, epn = private_neighbors(g, d, v)
            epns[v] = epn
            if not _is_clique(g, epn | 1 << v):
                out.append({"member": d, "vertex": v, "defended": None,
                            "set": epn | 1 << v})
        for u in bits(full & ~d):
            for v in bits(d & g.adj[u]):
                if (d ^ 1 << v) | 1 << u in family.members:
                    s = epns[v] | 1 << u | 1 << v
                    if not _is_clique(g, s):
                        out.append({"member": d, "vertex": v, "defended": u, "set": s})
    return out


def exists_epn_full_minimum_eds(g: Graph):
    """A minimum EDS whose members all keep an external private neighbor, if any."""
    if any(g.adj[v] == 0 for v in range(g.n)):
        raise ValueError("isolated vertices are excluded by hypothesis")
    _, fam = eternal_domination_number(g)
    for d in sorted(fam.members, key=vertex_tuple):
        if all(private_neighbors(g, d, v)[1] for v in bits(d)):
            return d
    return None


def losing_certificate(g: Graph, k: int, model: str) -> dict:
    """Why k guards lose: either k < gamma, or a concrete unanswerable attack run.

    The attack run follows each configuration's recorded killer attack while
    the defender answers with the longest-surviving reply, so it ends in a
    position with no legal defense.
    """
    fam = safe_family(g, k, model)
    if fam.members:
        raise ValueError("the family is nonempty; k guards win")
    gamma = domination_number(g)[0]
    if k < gamma:
        return {"k": k, "gamma": gamma, "start": None, "configs": [], "attacks": [],
                "reason": f"{k} guards cannot dominate the graph (gamma={gamma})"}
    rank = {d: fam.removed[d][0] for d in fam.removed}
    start = max(rank, key=lambda d: (rank[d], [-v for v in vertex_tuple(d)]))
    attacks = []
    configs = [start]
    d = start
    while True:
        _, killer = fam.removed[d]
        attacks.append(killer)
        if model == ONE_GUARD:
            cands = [(d ^ 1 << v) | 1 << killer for v in bits(d & g.adj[killer])]
            cands = [s for s in cands if s in rank]
        else:
            cands = [d2 for d2 in rank if d2 >> killer & 1 and transition_feasible(g, d, d2)]
        if not cands:
            break
        # the defender's longest-surviving reply; its rank strictly drops
        d = max(cands, key=lambda s: (rank[s], [-v for v in vertex_tuple(s)]))
        configs.append(d)
    return {"k": k, "gamma": gamma, "start": start, "configs": configs, "attacks": attacks,
            "reason": f"every family sweep empties; the shown {len(attacks)}-attack run defeats {k} guards"}
