"""Registry of machine-checkable statements plus counterexample searches.

Proven statements are regression tests for the solvers: a single violation
means a bug here, never new mathematics. The open questions are exploratory
sweeps where a hit would be a discovery; they are reported, not asserted.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from math import comb

from . import budget
from .classify import (
    bipartite_gamma_eq_eternal,
    bipartite_two_characterization,
    gamma_half,
    gamma_half_structure,
    triangle_free_two_characterization,
)
from .eternal import (
    ALL_GUARDS,
    ONE_GUARD,
    eternal_domination_number,
    exists_epn_full_minimum_eds,
    m_eternal_domination_number,
    verify_fact_eds,
)
from .graphs import (
    Graph,
    bits,
    canonical_form,
    cartesian_product,
    complete,
    cycle,
    graphs_up_to,
    is_bipartite,
    is_connected,
    is_triangle_free,
    path,
    to_graph6,
    trees_up_to,
)
from .neocol import bipartite_star_colonization, star_colonization_bound, theta_c
from .params import (
    ParamReport,
    clique_cover_number,
    connected_domination_number,
    domination_number,
    dominating_sets,
    every_vertex_in_k_dominating_set,
    independence_number,
    vertex_cover_and_matching,
)
from .trees import r2_reduces_to_small_star, reduce_tree, tree_clique_cover

PRODUCT_VERTEX_CAP = 12


@dataclass
class TheoremReport:
    theorem: str
    universe: str
    checked: int
    violations: list = field(default_factory=list)
    elapsed: float = 0.0
    status: str = "verified"

    def to_json_dict(self):
        return {
            "theorem": self.theorem,
            "universe": self.universe,
            "checked": self.checked,
            "violations": self.violations,
            "status": self.status,
            "elapsed": self.elapsed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def render_lines(self):
        lines = [
            f"{self.theorem}: {self.status}",
            f"  universe: {self.universe}",
            f"  checked:  {self.checked}",
            f"  elapsed:  {self.elapsed:.2f}s",
        ]
        for v in self.violations:
            lines.append(f"  violation {v['graph6']}: {v['details']}")
        return lines


def _no_isolated(g):
    return all(g.adj[v] for v in range(g.n))


# --- per-graph predicates; return None when the statement holds ---------------


def _chk_fact1_chain(g):
    gamma = domination_number(g)[0]
    alpha = independence_number(g)[0]
    eternal = eternal_domination_number(g)[0]
    theta = clique_cover_number(g)[0]
    if not gamma <= alpha <= eternal <= theta:
        return f"gamma={gamma} alpha={alpha} eternal={eternal} theta={theta}"
    return None


def _chk_ghh1(g):
    gamma = domination_number(g)[0]
    m_et = m_eternal_domination_number(g)[0]
    alpha = independence_number(g)[0]
    if not gamma <= m_et <= alpha:
        return f"gamma={gamma} m_eternal={m_et} alpha={alpha}"
    return None


def _chk_km_binomial(g):
    alpha = independence_number(g)[0]
    eternal = eternal_domination_number(g)[0]
    bound = comb(alpha + 1, 2)
    if eternal > bound:
        return f"eternal={eternal} exceeds C(alpha+1,2)={bound}"
    return None


def _chk_thetac_bounds(g):
    if not is_connected(g):
        return "skip"
    m_et = m_eternal_domination_number(g)[0]
    tc = theta_c(g)[0]
    gc = connected_domination_number(g)
    if not m_et <= tc <= gc + 1:
        return f"m_eternal={m_et} theta_c={tc} gamma_c={gc}"
    return None


def _chk_trees_thetac(t):
    v = reduce_tree(t)[0]
    tc = theta_c(t)[0]
    if v != tc:
        return f"m_eternal={v} theta_c={tc}"
    return None


def _chk_bipartite_eq(g):
    if is_bipartite(g) is None or not _no_isolated(g):
        return "skip"
    lhs, rhs = bipartite_gamma_eq_eternal(g)
    if lhs != rhs:
        return f"gamma=eternal is {lhs} but gamma=n/2 is {rhs}"
    return None


def _chk_bipartite_2(g):
    # isolated vertices break the equivalence (2K1 has gamma=m_eternal=2),
    # and the proof needs minimum degree >= 1; filter them out
    if is_bipartite(g) is None or not _no_isolated(g):
        return "skip"
    lhs, rhs = bipartite_two_characterization(g)
    if lhs != rhs:
        return f"gamma=m_eternal=2 is {lhs} but membership is {rhs}"
    return None


def _chk_tfree_2(g):
    if not is_triangle_free(g) or not _no_isolated(g):
        return "skip"
    lhs, rhs = triangle_free_two_characterization(g)
    if lhs != rhs:
        return f"gamma=m_eternal=2 is {lhs} but C5-or-membership is {rhs}"
    return None


def _chk_trees_theta(t):
    if t.n < 2:
        return "skip"
    reducible, _ = r2_reduces_to_small_star(t)
    v = reduce_tree(t)[0]
    theta = tree_clique_cover(t)
    if reducible != (v == theta):
        return f"R2-reducible={reducible} but m_eternal={v}, theta={theta}"
    return None


def _chk_delta3_theta(g):
    if not _no_isolated(g) or max(g.degree(v) for v in range(g.n)) > 3:
        return "skip"
    gamma = domination_number(g)[0]
    eternal = eternal_domination_number(g)[0]
    if gamma != eternal:
        return "skip"
    theta = clique_cover_number(g)[0]
    if eternal != theta:
        return f"gamma=eternal={eternal} but theta={theta}"
    return None


def _chk_cork3(g):
    if not is_triangle_free(g) or not _no_isolated(g):
        return "skip"
    if max(g.degree(v) for v in range(g.n)) > 3:
        return "skip"
    gamma = domination_number(g)[0]
    lhs = gamma == eternal_domination_number(g)[0]
    rhs = 2 * gamma == g.n
    if lhs != rhs:
        return f"gamma=eternal is {lhs} but gamma=n/2 is {rhs}"
    return None


def _chk_tfree_theta(g):
    if not is_triangle_free(g) or not _no_isolated(g):
        return "skip"
    gamma = domination_number(g)[0]
    eternal = eternal_domination_number(g)[0]
    if gamma != eternal:
        return "skip"
    theta = clique_cover_number(g)[0]
    if eternal != theta:
        return f"gamma=eternal={eternal} but theta={theta}"
    return None


def _chk_fact_eds(g):
    _, fam = eternal_domination_number(g)
    bad = verify_fact_eds(g, fam)
    if bad:
        b = bad[0]
        return f"member {b['member']:x} vertex {b['vertex']} defended={b['defended']} set {b['set']:x}"
    return None


def _chk_lemma_epn(g):
    if not _no_isolated(g):
        return "skip"
    delta3 = max(g.degree(v) for v in range(g.n)) <= 3
    tfree = is_triangle_free(g)
    if not (delta3 or tfree):
        return "skip"
    gamma = domination_number(g)[0]
    if gamma != eternal_domination_number(g)[0]:
        return "skip"
    if exists_epn_full_minimum_eds(g) is None:
        return "no minimum family member keeps every external private neighborhood nonempty"
    return None


def _chk_star_colonization(g):
    if is_bipartite(g) is None or not _no_isolated(g):
        return "skip"
    col = bipartite_star_colonization(g)
    bound = star_colonization_bound(g)
    tc = theta_c(g)[0]
    if not tc <= col.total <= bound:
        return f"star weight {col.total} outside [theta_c={tc}, tau+unmatched={bound}]"
    return None


@dataclass
class CheckSpec:
    theorem_id: str
    description: str
    predicate: object
    universe: str  # "graphs" or "trees"
    default_n_max: int


CHECKS = {
    c.theorem_id: c
    for c in [
        CheckSpec("FACT1_CHAIN", "gamma <= alpha <= eternal <= theta", _chk_fact1_chain, "graphs", 6),
        CheckSpec("GHH1", "gamma <= m_eternal <= alpha", _chk_ghh1, "graphs", 6),
        CheckSpec("KM_BINOMIAL", "eternal <= C(alpha+1, 2)", _chk_km_binomial, "graphs", 6),
        CheckSpec("THETAC_BOUNDS", "m_eternal <= theta_c <= gamma_c + 1 (connected)", _chk_thetac_bounds, "graphs", 6),
        CheckSpec("TREES_THETAC", "m_eternal = theta_c on trees", _chk_trees_thetac, "trees", 12),
        CheckSpec("BIPARTITE_EQ", "bipartite, no isolated: gamma=eternal iff gamma=n/2", _chk_bipartite_eq, "graphs", 7),
        CheckSpec("BIPARTITE_2", "bipartite: gamma=m_eternal=2 iff complete-bipartite-minus-matching", _chk_bipartite_2, "graphs", 7),
        CheckSpec("TFREE_2", "triangle-free: gamma=m_eternal=2 iff C5 or membership", _chk_tfree_2, "graphs", 7),
        CheckSpec("TREES_THETA", "trees: R2-reducible to K2/K1,2 iff m_eternal = theta", _chk_trees_theta, "trees", 12),
        CheckSpec("DELTA3_THETA", "max degree 3, gamma=eternal implies eternal=theta", _chk_delta3_theta, "graphs", 6),
        CheckSpec("CORK3", "triangle-free subcubic: gamma=eternal iff gamma=n/2", _chk_cork3, "graphs", 6),
        CheckSpec("TFREE_THETA", "triangle-free, gamma=eternal implies eternal=theta", _chk_tfree_theta, "graphs", 6),
        CheckSpec("FACT_EDS", "clique structure of private neighborhoods in EDS families", _chk_fact_eds, "graphs", 6),
        CheckSpec("LEMMA_EPN", "existence of a minimum EDS with nonempty epn everywhere", _chk_lemma_epn, "graphs", 6),
        CheckSpec("STAR_COLONIZATION", "bipartite star partition weight between theta_c and alpha", _chk_star_colonization, "graphs", 7),
    ]
}


def check(theorem_id: str, universe=None, n_max: int | None = None) -> TheoremReport:
    """Assert one registered statement over a graph stream; collect violations."""
    spec = CHECKS.get(theorem_id)
    if spec is None:
        raise KeyError(f"unknown theorem id {theorem_id!r}; known: {', '.join(sorted(CHECKS))}")
    if universe is None:
        n = n_max if n_max is not None else spec.default_n_max
        if spec.universe == "trees":
            universe = trees_up_to(n)
            desc = f"all trees n <= {n}"
        else:
            universe = graphs_up_to(n)
            desc = f"all graphs n <= {n}"
    else:
        universe = list(universe)
        desc = f"supplied universe of {len(universe)} graphs"
    start = time.perf_counter()
    checked = 0
    violations = []
    for g in universe:
        budget.checkpoint(f"{theorem_id} sweep")
        res = spec.predicate(g)
        if res == "skip":
            continue
        checked += 1
        if res is not None:
            violations.append({"graph6": to_graph6(g), "details": res})
    status = "counterexample" if violations else "verified"
    return TheoremReport(theorem=theorem_id, universe=desc, checked=checked,
                         violations=violations, elapsed=time.perf_counter() - start,
                         status=status)


# --- counterexample / witness searches ----------------------------------------


def _pairs_within_cap(n_max):
    """Unordered pairs of enumerated graphs whose product stays within the cap."""
    pool = list(graphs_up_to(n_max))
    for i, g in enumerate(pool):
        for h in pool[i:]:
            if g.n * h.n <= PRODUCT_VERTEX_CAP:
                yield g, h


def _search_q_main1(n_max):
    for g in graphs_up_to(n_max):
        budget.checkpoint("Q_MAIN1")
        gamma = domination_number(g)[0]
        if gamma != eternal_domination_number(g)[0]:
            continue
        theta = clique_cover_number(g)[0]
        if gamma < theta:
            return g, f"gamma=eternal={gamma} < theta={theta}"
    return None


def _search_q_main2(n_max):
    for g in graphs_up_to(n_max):
        budget.checkpoint("Q_MAIN2")
        if not is_triangle_free(g):
            continue
        alpha = independence_number(g)[0]
        if eternal_domination_number(g)[0] != alpha:
            continue
        theta = clique_cover_number(g)[0]
        if alpha < theta:
            return g, f"eternal=alpha={alpha} < theta={theta}"
    return None


def _search_conj_c1(n_max):
    k2 = complete(2)
    for g in graphs_up_to(min(n_max, PRODUCT_VERTEX_CAP // 2)):
        budget.checkpoint("CONJ_C1")
        theta = clique_cover_number(g)[0]
        if theta != eternal_domination_number(g)[0]:
            continue
        prod = cartesian_product(g, k2)
        pt = clique_cover_number(prod)[0]
        pe = eternal_domination_number(prod)[0]
        if pt != pe:
            return g, f"theta=eternal={theta} but product has theta={pt}, eternal={pe}"
    return None


def _search_vizing_ed(n_max):
    for g, h in _pairs_within_cap(n_max):
        budget.checkpoint("VIZING_ED")
        prod = cartesian_product(g, h)
        pe = eternal_domination_number(prod)[0]
        ge = eternal_domination_number(g)[0]
        he = eternal_domination_number(h)[0]
        if pe < ge * he:
            return prod, (f"eternal(product)={pe} < {ge}*{he} for factors "
                          f"{to_graph6(g)} and {to_graph6(h)}")
    return None


def _vizing_med_pool():
    return [("P2", path(2)), ("P3", path(3)), ("C3", cycle(3)), ("C4", cycle(4)), ("P4", path(4))]


def _search_vizing_med_max(n_max):
    pool = _vizing_med_pool()
    for i, (name_g, g) in enumerate(pool):
        for name_h, h in pool[i:]:
            if g.n * h.n > PRODUCT_VERTEX_CAP:
                continue
            budget.checkpoint("VIZING_MED_MAX")
            prod = cartesian_product(g, h)
            pm = m_eternal_domination_number(prod)[0]
            bound = max(
                m_eternal_domination_number(g)[0] * domination_number(h)[0],
                domination_number(g)[0] * m_eternal_domination_number(h)[0],
            )
            if pm < bound:
                return prod, f"m_eternal({name_g} x {name_h})={pm} < max-form bound {bound}"
    return None


def _search_fig1_witness(n_max):
    from itertools import combinations as _comb

    for g in graphs_up_to(n_max):
        budget.checkpoint("FIG1_WITNESS")
        alpha, _ = independence_number(g)
        if alpha != 3:
            continue
        common_ok = True
        for trio in _comb(range(g.n), 3):
            m = 1 << trio[0] | 1 << trio[1] | 1 << trio[2]
            if any(g.adj[v] & m for v in trio):
                continue  # not independent
            if not (g.adj[trio[0]] & g.adj[trio[1]] & g.adj[trio[2]]):
                common_ok = False
                break
        if not common_ok:
            continue
        flag, uncovered = every_vertex_in_k_dominating_set(g, 2)
        if not flag:
            u = next(bits(uncovered))
            return g, f"alpha=3, independent triples share neighbors, vertex {u} in no 2-dominating set"
    return None


@dataclass
class SearchSpec:
    question_id: str
    description: str
    run: object
    default_n_max: int
    witness_kind: str  # "counterexample" or "witness"


SEARCHES = {
    s.question_id: s
    for s in [
        SearchSpec("Q_MAIN1", "graph with gamma=eternal < theta", _search_q_main1, 6, "witness"),
        SearchSpec("Q_MAIN2", "triangle-free graph with eternal=alpha < theta", _search_q_main2, 7, "witness"),
        SearchSpec("CONJ_C1", "theta=eternal broken by the K2 product", _search_conj_c1, 5, "counterexample"),
        SearchSpec("VIZING_ED", "eternal(product) below the product of eternals", _search_vizing_ed, 6, "counterexample"),
        SearchSpec("VIZING_MED_MAX", "m_eternal(product) below the max-form bound", _search_vizing_med_max, 4, "counterexample"),
        SearchSpec("FIG1_WITNESS", "alpha=3, common neighbors for triples, vertex in no 2-dominating set", _search_fig1_witness, 7, "witness"),
    ]
}


def search_counterexample(question_id: str, n_max: int | None = None):
    """Exhaustive search; (graph, details) on a hit, None when the sweep is clean."""
    spec = SEARCHES.get(question_id)
    if spec is None:
        raise KeyError(f"unknown question id {question_id!r}; known: {', '.join(sorted(SEARCHES))}")
    return spec.run(n_max if n_max is not None else spec.default_n_max)


def search_report(question_id: str, n_max: int | None = None) -> TheoremReport:
    spec = SEARCHES.get(question_id)
    if spec is None:
        raise KeyError(f"unknown question id {question_id!r}; known: {', '.join(sorted(SEARCHES))}")
    n = n_max if n_max is not None else spec.default_n_max
    start = time.perf_counter()
    hit = spec.run(n)
    elapsed = time.perf_counter() - start
    if hit is None:
        return TheoremReport(theorem=question_id, universe=f"exhaustive to n_max={n}", checked=1,
                             violations=[], elapsed=elapsed, status="exploratory-none-found")
    g, details = hit
    return TheoremReport(theorem=question_id, universe=f"exhaustive to n_max={n}", checked=1,
                         violations=[{"graph6": to_graph6(g), "details": details}],
                         elapsed=elapsed, status="counterexample")


# --- parameter sweep -----------------------------------------------------------


def collect_params(g: Graph, with_witnesses: bool = False) -> ParamReport:
    """All eight parameters of one graph; solver errors become notes."""
    try:
        ident = canonical_form(g)
    except ValueError:
        ident = to_graph6(g)
    report = ParamReport(graph6=ident, n=g.n, m=g.m)
    gamma, gamma_w = domination_number(g)
    alpha, alpha_w = independence_number(g)
    theta, theta_parts = clique_cover_number(g)
    tau, nu, matching, cover = vertex_cover_and_matching(g)
    report.values.update(gamma=gamma, alpha=alpha, theta=theta, tau=tau, nu=nu)
    eternal, fam1 = eternal_domination_number(g)
    m_eternal, fam2 = m_eternal_domination_number(g)
    report.values.update(eternal=eternal, m_eternal=m_eternal)
    try:
        report.values["gamma_c"] = connected_domination_number(g)
    except ValueError as exc:
        report.values["gamma_c"] = None
        report.notes["gamma_c"] = str(exc)
    try:
        report.values["theta_c"], tc_witness = theta_c(g)
    except ValueError as exc:
        report.values["theta_c"] = None
        report.notes["theta_c"] = str(exc)
        tc_witness = None
    if with_witnesses:
        from .graphs import vertex_tuple as _vt

        report.witnesses = {
            "gamma": list(_vt(gamma_w)),
            "alpha": list(_vt(alpha_w)),
            "theta": [list(_vt(p)) for p in theta_parts],
            "matching": [list(e) for e in matching],
            "cover": list(_vt(cover)),
            "eternal_family": fam1.member_hex(),
            "m_eternal_family": fam2.member_hex(),
        }
        if tc_witness is not None:
            report.witnesses["theta_c"] = tc_witness.to_json_dict()
    return report


def parameter_sweep(universe, with_witnesses: bool = False):
    """ParamReport per graph, sorted by identity; per-graph failures recorded."""
    rows = []
    for g in universe:
        budget.checkpoint("parameter sweep")
        try:
            rows.append(collect_params(g, with_witnesses=with_witnesses))
        except Exception as exc:  # keep sweeping; the row carries the error
            rows.append(ParamReport(graph6=to_graph6(g), n=g.n, m=g.m,
                                    notes={"error": str(exc)}))
    rows.sort(key=lambda r: (r.n, r.graph6))
    return rows


def render_sweep_table(rows) -> str:
    cols = ("graph6", "n", "m", "gamma", "m_eternal", "alpha", "eternal", "theta", "theta_c", "gamma_c", "tau", "nu")
    table = [cols]
    for r in rows:
        table.append((
            r.graph6, str(r.n), str(r.m),
            *(str(r.values.get(k)) if r.values.get(k) is not None else "-" for k in cols[3:]),
        ))
    widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in table]
    return "\n".join(lines)
