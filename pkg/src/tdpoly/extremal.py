"""Extremal scans: coefficient bounds over trees, structural coefficient
identities, and the bounds on the total domination number.

Scans are evidence collectors, not proofs. Each row carries the raw numbers
its own flags were derived from, every polynomial is recomputed with the
brute-force oracle, and summaries report what the data showed -- including
outcomes that cut against expectations.
"""

from __future__ import annotations

import random
from math import comb
from typing import Iterable

from .closedform import star_tdp
from .graph import (
    Graph,
    all_labeled_trees,
    classify_vertices,
    fixed_small_corpus,
    is_cycle_shaped,
    is_star_shaped,
    random_connected_corpus,
    random_connected_graph,
    to_edge_list,
    two_corona,
)
from .oracle import Condition, brute_force_tdp, brute_force_tdp_conditioned, gamma_t, tdp_by_components
from .polynomial import IntPoly, coeffwise_le
from .reports import ScanReport, VerificationReport


# -- coefficient bound over trees ---------------------------------------------


def tree_bound_row(t: Graph) -> dict:
    """Facts about one tree: oracle coefficients against C(n-1, i-1)."""
    n = t.order
    if n < 2 or not t.is_connected() or not t.is_forest():
        raise ValueError("expected a tree with at least 2 vertices")
    poly = brute_force_tdp(t)
    bound_holds = all(poly.coeff(i) <= comb(n - 1, i - 1) for i in range(2, n + 1))
    star_poly = star_tdp(n)
    return {
        "graph": to_edge_list(t),
        "n": n,
        "poly": poly,
        "bound_holds": bound_holds,
        "equals_star_poly": poly == star_poly,
        "is_star": is_star_shaped(t),
    }


def scan_tree_bound(n: int) -> ScanReport:
    """Check every labeled tree of order n against the binomial coefficient bound.

    Rows aggregate by polynomial (the bound is a function of the polynomial
    alone). The summary also settles whether equality and the largest total
    count of dominating sets are attained by stars and nothing else.
    """
    if n < 2:
        raise ValueError("tree scans start at order 2")
    star_poly = star_tdp(n)
    classes: dict[IntPoly, dict] = {}
    trees = 0
    for t in all_labeled_trees(n):
        trees += 1
        poly = brute_force_tdp(t)
        cls = classes.get(poly)
        if cls is None:
            cls = {"labeled_count": 0, "star_count": 0, "example": to_edge_list(t)}
            classes[poly] = cls
        cls["labeled_count"] += 1
        cls["star_count"] += is_star_shaped(t)

    report = ScanReport(
        "tree-bound",
        {"n": n},
        columns=("poly", "labeled_count", "star_count", "bound_holds", "equals_star_poly", "count_at_one"),
    )
    all_bound = True
    equality_exactly_stars = True
    best_count = 0
    best_polys: list[IntPoly] = []
    for poly in sorted(classes, key=lambda p: tuple(p.coeffs)):
        cls = classes[poly]
        bound_holds = all(poly.coeff(i) <= comb(n - 1, i - 1) for i in range(2, n + 1))
        equals_star = poly == star_poly
        count_at_one = poly.evaluate(1)
        all_bound &= bound_holds
        if equals_star:
            equality_exactly_stars &= cls["star_count"] == cls["labeled_count"]
        else:
            equality_exactly_stars &= cls["star_count"] == 0
        if count_at_one > best_count:
            best_count = count_at_one
            best_polys = [poly]
        elif count_at_one == best_count:
            best_polys.append(poly)
        report.add_row(
            poly=poly,
            labeled_count=cls["labeled_count"],
            star_count=cls["star_count"],
            bound_holds=bound_holds,
            equals_star_poly=equals_star,
            count_at_one=count_at_one,
        )
    report.summary = {
        "n": n,
        "labeled_trees": trees,
        "distinct_polys": len(classes),
        "all_bound_hold": all_bound,
        "equality_exactly_stars": equality_exactly_stars,
        "max_count_at_one": best_count,
        "max_attained_only_by_star_poly": best_polys == [star_poly],
    }
    return report


def minimal_tree_scan(n: int) -> ScanReport:
    """Order the distinct tree polynomials of order n coefficient-wise.

    A polynomial is flagged minimal when it is coefficient-wise <= every
    other distinct polynomial in the scan; at most one polynomial can carry
    the flag. The summary records whether one exists and which, leaving the
    interpretation to the reader.
    """
    if n < 2:
        raise ValueError("tree scans start at order 2")
    classes: dict[IntPoly, dict] = {}
    trees = 0
    for t in all_labeled_trees(n):
        trees += 1
        poly = brute_force_tdp(t)
        cls = classes.get(poly)
        if cls is None:
            cls = {"labeled_count": 0, "example": to_edge_list(t)}
            classes[poly] = cls
        cls["labeled_count"] += 1

    polys = sorted(classes, key=lambda p: tuple(p.coeffs))
    report = ScanReport(
        "minimal-tree",
        {"n": n},
        columns=("poly", "labeled_count", "example", "is_minimal"),
    )
    minimal_poly = None
    for poly in polys:
        is_min = all(coeffwise_le(poly, other) for other in polys)
        if is_min:
            minimal_poly = poly
        report.add_row(
            poly=poly,
            labeled_count=classes[poly]["labeled_count"],
            example=classes[poly]["example"],
            is_minimal=is_min,
        )
    report.summary = {
        "n": n,
        "labeled_trees": trees,
        "distinct_polys": len(polys),
        "minimal_exists": minimal_poly is not None,
        "minimal_poly": minimal_poly,
    }
    return report


# -- structural coefficient identities ----------------------------------------


def supporting_identity(g: Graph) -> bool:
    """d_t(G, n-1) = n - (number of supporting vertices), isolated-free G.

    Dropping one vertex a keeps total domination unless some vertex's whole
    neighborhood was {a}; that happens exactly when a supports a pendant.
    """
    cls = classify_vertices(g)
    if cls.isolated or g.order == 0:
        raise ValueError("identity requires a graph without isolated vertices")
    n = g.order
    return brute_force_tdp(g).coeff(n - 1) == n - len(cls.supporting)


def non_supporting_pair_set(g: Graph) -> tuple[tuple[int, int], ...]:
    """Pairs {a, b} that are exactly some vertex's neighborhood, neither supporting."""
    supporting = classify_vertices(g).supporting
    pairs = set()
    for v in g.vertices:
        nb = g.neighbors(v)
        if len(nb) == 2 and not (nb & supporting):
            pairs.add(tuple(sorted(nb)))
    return tuple(sorted(pairs))


def degree2_row(g: Graph) -> dict:
    """Facts about d_t(G, n-2) for one isolated-free graph.

    The count of degree-2 vertices is bounded below by
    C(n,2) - C(r,2) - r(n-r) - d_t(G, n-2) with r supporting vertices,
    and the slack is exactly the pair set reported alongside.
    """
    cls = classify_vertices(g)
    if cls.isolated or g.order < 2:
        raise ValueError("expected an isolated-free graph with at least 2 vertices")
    n = g.order
    r = len(cls.supporting)
    d = brute_force_tdp(g).coeff(n - 2)
    pairs = non_supporting_pair_set(g)
    bound = comb(n, 2) - comb(r, 2) - r * (n - r) - d
    deg2_count = len(cls.degree2)
    return {
        "graph": to_edge_list(g),
        "n": n,
        "supporting_count": r,
        "coeff_n_minus_2": d,
        "bound": bound,
        "degree2_count": deg2_count,
        "bound_holds": deg2_count >= bound,
        "pair_count": len(pairs),
        "identity_holds": d == comb(n, 2) - comb(r, 2) - r * (n - r) - len(pairs),
    }


def scan_degree2(trials: int, n_max: int, seed: int) -> ScanReport:
    """Degree-2 bound and the exact pair identity over a seeded random corpus."""
    columns = (
        "graph",
        "n",
        "supporting_count",
        "coeff_n_minus_2",
        "bound",
        "degree2_count",
        "bound_holds",
        "pair_count",
        "identity_holds",
    )
    report = ScanReport(
        "degree2", {"trials": trials, "n_max": n_max, "seed": seed}, columns=columns
    )
    all_bounds = True
    all_identities = True
    for g in random_connected_corpus(trials, n_max, seed, n_min=2):
        row = degree2_row(g)
        all_bounds &= row["bound_holds"]
        all_identities &= row["identity_holds"]
        report.add_row(**row)
    report.summary = {
        "instances": len(report.rows),
        "all_bounds_hold": all_bounds,
        "all_identities_hold": all_identities,
    }
    return report


# -- bounds on the total domination number ------------------------------------


def is_two_corona(g: Graph) -> bool:
    """True when g is some base graph with a 2-vertex tail grafted on each vertex.

    Looks for a partition into triples (base, mid, tip) where mid has
    neighborhood exactly {base, tip} and tip's sole neighbor is mid; any
    remaining edges then necessarily join base vertices. Backtracks over the
    (few) candidate triples per vertex.
    """
    n = g.order
    if n == 0 or n % 3:
        return False
    candidates: list[tuple[int, int, int]] = []
    for m in g.vertices:
        nb = g.neighbors(m)
        if len(nb) != 2:
            continue
        for p in nb:
            if g.degree(p) == 1:
                (b,) = nb - {p}
                candidates.append((b, m, p))
    by_vertex: dict[int, list[tuple[int, int, int]]] = {v: [] for v in g.vertices}
    for triple in candidates:
        for v in triple:
            by_vertex[v].append(triple)

    def cover(remaining: frozenset) -> bool:
        if not remaining:
            return True
        v = min(remaining)
        for triple in by_vertex[v]:
            if remaining.issuperset(triple):
                if cover(remaining - frozenset(triple)):
                    return True
        return False

    return cover(frozenset(g.vertices))


def gamma_bounds_row(g: Graph) -> dict:
    """Bounds 2 <= gamma_t <= 2n/3 for one connected graph of order >= 3.

    Equality on the right is compared (in integers, 3*gamma == 2n) against
    the known equality shapes: the 3-cycle, the 6-cycle, and 2-coronas.
    """
    if g.order < 3 or not g.is_connected():
        raise ValueError("bounds require a connected graph with at least 3 vertices")
    gamma = gamma_t(g)
    if gamma is None:
        raise ValueError("graph has no totally dominating set")
    n = g.order
    equality = 3 * gamma == 2 * n
    corona = is_two_corona(g)
    if is_cycle_shaped(g) and n in (3, 6):
        shape = f"C{n}"
    elif corona:
        shape = "two-corona"
    else:
        shape = None
    return {
        "graph": to_edge_list(g),
        "n": n,
        "gamma_t": gamma,
        "lower_ok": gamma >= 2,
        "upper_ok": 3 * gamma <= 2 * n,
        "equality": equality,
        "equality_shape": shape,
        "consistent": equality == (shape is not None),
    }


def gamma_scan_corpus(trials: int, n_max: int, seed: int, corona_trials: int = 10, corona_base_max: int = 6) -> list[Graph]:
    """Connected corpus for the bounds scan: fixed shapes, random graphs, 2-coronas."""
    graphs = [g for g in fixed_small_corpus() if g.order >= 3]
    graphs.extend(random_connected_corpus(trials, n_max, seed, n_min=3))
    master = random.Random(seed)
    for _ in range(corona_trials):
        k = master.randint(1, corona_base_max)
        base = random_connected_graph(k, master.uniform(0.0, 0.6), master.randrange(2**32))
        graphs.append(two_corona(base))
    return graphs


def scan_gamma_bounds(graphs: Iterable[Graph], params: dict | None = None) -> ScanReport:
    columns = ("graph", "n", "gamma_t", "lower_ok", "upper_ok", "equality", "equality_shape", "consistent")
    report = ScanReport("gamma-bounds", dict(params or {}), columns=columns)
    all_ok = True
    equality_count = 0
    for g in graphs:
        row = gamma_bounds_row(g)
        all_ok &= row["lower_ok"] and row["upper_ok"] and row["consistent"]
        equality_count += row["equality"]
        report.add_row(**row)
    report.summary = {
        "instances": len(report.rows),
        "all_ok": all_ok,
        "equality_instances": equality_count,
    }
    return report


# -- basic structural identities (differential) --------------------------------


def verify_basic_identities(graphs: Iterable[Graph], params: dict | None = None) -> VerificationReport:
    """Structural facts every D_t must satisfy, checked against the oracle.

    Per graph: the polynomial vanishes exactly when an isolated vertex (or
    emptiness) forbids total domination; degrees 0 and 1 never contribute;
    the full vertex set dominates iff nothing is isolated; the least degree
    with support is the total domination number; components multiply; the
    supporting-vertex identity pins d_t(G, n-1); and conditioning on any
    atom partitions the count.
    """
    report = VerificationReport("prop1", dict(params or {}))
    for g in graphs:
        text = to_edge_list(g)
        poly = brute_force_tdp(g)
        cls = classify_vertices(g)
        dominatable = g.order > 0 and not cls.isolated

        report.record_check(text, "zero-iff-undominatable", bool(poly) == dominatable, dominatable, bool(poly))
        low_ok = poly.coeff(0) == 0 and poly.coeff(1) == 0
        report.record_check(text, "no-support-below-2", low_ok, IntPoly.zero(), IntPoly((poly.coeff(0), poly.coeff(1))))
        top = poly.coeff(g.order) if g.order else 0
        report.record_check(text, "full-set-coefficient", top == int(dominatable), int(dominatable), top)
        report.record_check(text, "gamma-is-min-degree", gamma_t(g) == poly.min_degree(), gamma_t(g), poly.min_degree())
        report.record(text, "component-product", poly, tdp_by_components(g))
        if dominatable:
            report.record_check(
                text, "supporting-identity", supporting_identity(g),
                g.order - len(cls.supporting), poly.coeff(g.order - 1),
            )
        if g.order:
            v = min(g.vertices)
            with_v = brute_force_tdp_conditioned(g, Condition.member(v))
            without_v = brute_force_tdp_conditioned(g, Condition.intersect_empty([v]))
            report.record(text, f"membership-partition v={v}", poly, with_v + without_v)
            hit = brute_force_tdp_conditioned(g, Condition.intersect_at_least(g.neighbors(v), 1))
            missed = brute_force_tdp_conditioned(g, Condition.intersect_empty(g.neighbors(v)))
            report.record(text, f"neighborhood-partition v={v}", poly, hit + missed)
    return report
