"""Reduction identities and fast recurrences for total domination polynomials.

The vertex and edge reduction right-hand sides are deliberately assembled
from brute-force oracle calls on the smaller derived graphs: their whole
point is to be compared against the oracle value on the original graph, so
each side must be computed by an independent route. The path/cycle
recurrences and the pendant-peeling forest algorithm are the fast paths
that fall out of those identities.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph, cycle_graph, path_graph, to_edge_list
from .oracle import Condition, brute_force_tdp, brute_force_tdp_conditioned, tdp_by_components
from .polynomial import IntPoly, ensure_valid_tdp
from .reports import VerificationReport

_X = IntPoly.monomial(1)
_X2 = IntPoly.monomial(2)
_ONE_PLUS_X = IntPoly((1, 1))

# Small-order path polynomials: P_1 has none, P_2 = x^2,
# P_3 = x^3 + 2x^2, P_4 = x^4 + 2x^3 + x^2.
_PATH_BASE = {
    1: IntPoly.zero(),
    2: IntPoly((0, 0, 1)),
    3: IntPoly((0, 0, 2, 1)),
    4: IntPoly((0, 0, 1, 2, 1)),
}

# Small cycles: C_3 = x^3 + 3x^2, C_4 = x^4 + 4x^3 + 4x^2,
# C_5 = x^5 + 5x^4 + 5x^3, C_6 = x^6 + 6x^5 + 9x^4.
_CYCLE_BASE = {
    3: IntPoly((0, 0, 3, 1)),
    4: IntPoly((0, 0, 4, 4, 1)),
    5: IntPoly((0, 0, 0, 5, 5, 1)),
    6: IntPoly((0, 0, 0, 0, 9, 6, 1)),
}


def indicator_tdp(g: Graph) -> IntPoly:
    """Total domination polynomial with the empty graph mapped to 1.

    This is the convention of the x^2 terms in the reduction identities:
    the removed closed neighborhoods already account for the dominating
    pair, so an empty remainder contributes a unit factor. A remainder with
    an isolated vertex contributes 0, otherwise its polynomial (computed
    componentwise).
    """
    if g.order == 0:
        return IntPoly.one()
    return tdp_by_components(g)


def vertex_reduction_rhs(g: Graph, u: int) -> IntPoly:
    """Right-hand side of the vertex reduction identity at u.

    D_t(G-u) + x*D_t(G/u) - (1+x)*D_t(G/u){W avoids N(u)}
    + sum over v in N(u) of x^2 * indicator(G with N[u], N[v] removed).

    Plain terms use the componentwise oracle; the conditioned term is a
    single conditioned enumeration because its atoms may couple components.
    """
    if not g.is_connected():
        raise ValueError("vertex reduction is stated for connected graphs")
    nbrs = sorted(g.neighbors(u))
    contracted = g.contract_vertex(u)
    rhs = tdp_by_components(g.delete_vertex(u))
    rhs = rhs + _X * tdp_by_components(contracted)
    avoided = brute_force_tdp_conditioned(contracted, Condition.intersect_empty(nbrs))
    rhs = rhs - _ONE_PLUS_X * avoided
    for v in nbrs:
        rhs = rhs + _X2 * indicator_tdp(g.without_closed_neighborhoods([u, v]))
    return rhs


def simple_vertex_reduction_applies(g: Graph, u: int) -> bool:
    """True when the conditioned term of the vertex reduction provably vanishes.

    Either (i) some other vertex's closed neighborhood sits inside N[u] (it
    cannot be dominated once W avoids N(u)), or (ii) some neighbor of u
    supports a pendant other than u itself. The "other than u" part
    matters: a neighbor that is supporting only because u is its pendant
    stops being supporting in the contraction, and the conditioned term
    survives (u = end of a path of order 4 is the smallest example).
    """
    nu_closed = g.closed_neighborhood(u)
    for v in g.vertices:
        if v != u and g.closed_neighborhood(v) <= nu_closed:
            return True
    for w in g.neighbors(u):
        for q in g.neighbors(w):
            if q != u and g.degree(q) == 1:
                return True
    return False


def simple_vertex_reduction_rhs(g: Graph, u: int) -> IntPoly:
    """Three-term vertex reduction, valid when the conditioned term vanishes."""
    if not simple_vertex_reduction_applies(g, u):
        raise ValueError(f"short vertex reduction does not apply at vertex {u}")
    rhs = tdp_by_components(g.delete_vertex(u))
    rhs = rhs + _X * tdp_by_components(g.contract_vertex(u))
    for v in sorted(g.neighbors(u)):
        rhs = rhs + _X2 * indicator_tdp(g.without_closed_neighborhoods([u, v]))
    return rhs


def edge_reduction_rhs(g: Graph, u: int, v: int) -> IntPoly:
    """Right-hand side of the edge reduction identity at e = uv.

    Splitting the dominating sets of G on how they meet {u, v} gives

        D_t(G) = D_t(G-e) + x^2 * indicator(G minus N[u], N[v])
               + x * [ D_t(H_u){v in W} + D_t(H_v){u in W} ]
               + D_t(H_u){v in W, each removed neighbor of u keeps a
                          dominator among the survivors}
               + D_t(H_v){u in W, symmetric},

    where H_u is G-e minus the closed neighborhood of u taken in G-e. The
    x-multiplied terms re-insert the deleted endpoint into the counted set
    (it dominates everything that was cut away); the unit-multiplied terms
    keep the set as is, so the cut-away vertices other than the endpoint
    still need neighbors in W -- hence the extra intersection atoms. Without
    those atoms the two unit terms overcount: P_4 at its middle edge is the
    smallest counterexample. A term whose anchor vertex did not survive is
    0 (the set cannot contain a vertex that is not there); the differential
    suite is what validates these conventions.
    """
    if not g.is_connected():
        raise ValueError("edge reduction is stated for connected graphs")
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) is not present")
    minus_e = g.delete_edge(u, v)
    rhs = tdp_by_components(minus_e)
    rhs = rhs + _X2 * indicator_tdp(g.without_closed_neighborhoods([u, v]))
    for anchor, removed in ((v, u), (u, v)):
        remainder = minus_e.without_closed_neighborhoods([removed])
        if anchor not in remainder:
            continue
        member = Condition.member(anchor)
        rhs = rhs + _X * brute_force_tdp_conditioned(remainder, member)
        alive = frozenset(remainder.vertices)
        cond = member
        feasible = True
        for z in sorted(minus_e.neighbors(removed)):
            dominators = minus_e.neighbors(z) & alive
            if not dominators:
                feasible = False
                break
            cond = cond & Condition.intersect_at_least(dominators, 1)
        if feasible:
            rhs = rhs + brute_force_tdp_conditioned(remainder, cond)
    return rhs


def path_tdp(n: int) -> IntPoly:
    """D_t of the path P_n via the order-4 linear recurrence.

    D_t(P_n) = x*D_t(P_{n-1}) + x^2*D_t(P_{n-3}) + x^2*D_t(P_{n-4}).
    """
    if n < 1:
        raise ValueError("path order must be at least 1")
    if n <= 4:
        return _PATH_BASE[n]
    window = [_PATH_BASE[1], _PATH_BASE[2], _PATH_BASE[3], _PATH_BASE[4]]
    for _ in range(5, n + 1):
        nxt = _X * window[3] + _X2 * window[1] + _X2 * window[0]
        window = [window[1], window[2], window[3], nxt]
    return ensure_valid_tdp(window[3], n)


def cycle_tdp(n: int) -> IntPoly:
    """D_t of the cycle C_n; same recurrence as paths from the C_3..C_6 seeds."""
    if n < 3:
        raise ValueError("cycle order must be at least 3")
    if n <= 6:
        return _CYCLE_BASE[n]
    window = [_CYCLE_BASE[3], _CYCLE_BASE[4], _CYCLE_BASE[5], _CYCLE_BASE[6]]
    for _ in range(7, n + 1):
        nxt = _X * window[3] + _X2 * window[1] + _X2 * window[0]
        window = [window[1], window[2], window[3], nxt]
    return ensure_valid_tdp(window[3], n)


def tree_tdp(g: Graph, use_cache: bool = True) -> IntPoly:
    """Exact polynomial for a forest by repeated pendant removal.

    Peeling the smallest-label pendant p with support w of a component T
    uses the conditioned form of the vertex reduction (contraction equals
    deletion at a pendant):

        D_t(T) = (1+x) * D_t(T-p){w in W} + x^2 * indicator(T minus N[p], N[w]).

    The plain two-term shape without the {w in W} condition would overcount
    whenever w supports no second pendant (P_4 already breaks it). The
    recursion tracks two per-vertex marks instead of rebuilding conditioned
    enumerations: "required" vertices must be in W, "waived" vertices are
    already dominated by a peeled neighbor. Components multiply; an
    isolated vertex zeroes its component. The memo cache is an optimization
    only and never changes results.
    """
    if not g.is_forest():
        raise ValueError("input graph contains a cycle")
    memo: dict | None = {} if use_cache else None
    out = IntPoly.one() if g.order else IntPoly.zero()
    for comp in g.components():
        out = out * _tree_marked(comp, frozenset(), frozenset(), memo)
        if not out:
            break
    return ensure_valid_tdp(out, g.order)


def _tree_marked(t: Graph, required: frozenset, waived: frozenset, memo: dict | None) -> IntPoly:
    """Generating polynomial of sets W of the tree t with required ⊆ W and
    every vertex outside `waived` adjacent to W. Deleting a leaf keeps the
    tree connected, so the recursion never re-splits components."""
    if t.order == 1:
        (v,) = t.vertices
        if v not in waived:
            return IntPoly.zero()
        # W = {} (only when nothing is required) and W = {v}
        return IntPoly((0 if required else 1, 1))
    key = None
    if memo is not None:
        key = (t.vertices, t.edges, required, waived)
        hit = memo.get(key)
        if hit is not None:
            return hit
    p = min(v for v in t.vertices if t.degree(v) == 1)
    (w,) = t.neighbors(p)
    rest = t.delete_vertex(p)
    if p in required:
        # p is in W; it dominates w, and unless waived it needs w in W
        if p in waived:
            value = _X * _tree_marked(rest, required - {p}, (waived - {p}) | {w}, memo)
        else:
            value = _X * _tree_marked(rest, (required - {p}) | {w}, waived | {w}, memo)
    elif p in waived:
        value = _tree_marked(rest, required, waived - {p}, memo) + _X * _tree_marked(
            rest, required, (waived - {p}) | {w}, memo
        )
    else:
        # p out of W forces w in W to dominate p; p in W forces w in W too
        # (p's own neighbor requirement) and waives w's
        value = _tree_marked(rest, required | {w}, waived, memo) + _X * _tree_marked(
            rest, required | {w}, waived | {w}, memo
        )
    if memo is not None:
        memo[key] = value
    return value


# -- differential verification suites ----------------------------------------


def verify_vertex_reduction(graphs: Iterable[Graph], params: dict | None = None) -> VerificationReport:
    """Compare the oracle against the vertex reduction at every vertex."""
    report = VerificationReport("theorem1", dict(params or {}))
    for g in graphs:
        if not g.is_connected():
            continue
        text = to_edge_list(g)
        lhs = brute_force_tdp(g)
        for u in g.vertices:
            report.record(text, f"u={u}", lhs, vertex_reduction_rhs(g, u))
    return report


def verify_edge_reduction(graphs: Iterable[Graph], params: dict | None = None) -> VerificationReport:
    """Compare the oracle against the edge reduction at every edge."""
    report = VerificationReport("theorem3", dict(params or {}))
    for g in graphs:
        if not g.is_connected():
            continue
        text = to_edge_list(g)
        lhs = brute_force_tdp(g)
        for u, v in g.edges:
            report.record(text, f"e=({u},{v})", lhs, edge_reduction_rhs(g, u, v))
    return report


def verify_conditioned_path_recurrence(n_min: int = 5, n_max: int = 14) -> VerificationReport:
    """Check the end-anchored conditioned recurrence on paths.

    With D(k) = D_t(P_k){last vertex in W}, conditioned brute force on both
    sides: D(n) = x*D(n-1) + x^2*D(n-3) + x^2*D(n-4) for n >= 5.
    """
    if n_min < 5:
        raise ValueError("the conditioned path recurrence needs n >= 5")
    report = VerificationReport("claim1", {"n_min": n_min, "n_max": n_max})

    def end_conditioned(k: int) -> IntPoly:
        if k < 1:
            raise ValueError("path order must be positive")
        g = path_graph(k)
        return brute_force_tdp_conditioned(g, Condition.member(k - 1))

    for n in range(n_min, n_max + 1):
        lhs = end_conditioned(n)
        rhs = (
            _X * end_conditioned(n - 1)
            + _X2 * end_conditioned(n - 3)
            + _X2 * end_conditioned(n - 4)
        )
        report.record(to_edge_list(path_graph(n)), f"n={n}", lhs, rhs)
    return report


def verify_recurrences(n_max: int = 18) -> VerificationReport:
    """Path and cycle recurrence outputs against the brute-force oracle."""
    report = VerificationReport("recurrence", {"n_max": n_max})
    for n in range(1, n_max + 1):
        g = path_graph(n)
        report.record(to_edge_list(g), f"path n={n}", brute_force_tdp(g), path_tdp(n))
    for n in range(3, n_max + 1):
        g = cycle_graph(n)
        report.record(to_edge_list(g), f"cycle n={n}", brute_force_tdp(g), cycle_tdp(n))
    return report
