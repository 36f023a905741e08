import pytest

from tdpoly.extremal import (
    degree2_row,
    gamma_bounds_row,
    gamma_scan_corpus,
    is_two_corona,
    minimal_tree_scan,
    non_supporting_pair_set,
    scan_degree2,
    scan_gamma_bounds,
    scan_tree_bound,
    supporting_identity,
    tree_bound_row,
    verify_basic_identities,
)
from tdpoly.graph import (
    Graph,
    cycle_graph,
    disjoint_union,
    fixed_small_corpus,
    path_graph,
    star_graph,
    two_corona,
)
from tdpoly.polynomial import IntPoly


# -- tree coefficient bound ----------------------------------------------------


def test_tree_bound_rows():
    row = tree_bound_row(star_graph(6))
    assert row["bound_holds"] and row["equals_star_poly"] and row["is_star"]
    row = tree_bound_row(path_graph(4))
    assert row["bound_holds"] and not row["equals_star_poly"]
    row = tree_bound_row(path_graph(2))
    assert row["bound_holds"] and row["equals_star_poly"]  # P_2 = S_2


def test_tree_bound_row_rejects_non_trees():
    with pytest.raises(ValueError):
        tree_bound_row(cycle_graph(4))
    with pytest.raises(ValueError):
        tree_bound_row(disjoint_union(path_graph(2), path_graph(2)))


def test_scan_tree_bound_order_four():
    report = scan_tree_bound(4)
    assert report.summary["labeled_trees"] == 16
    assert report.summary["distinct_polys"] == 2
    assert report.summary["all_bound_hold"]
    assert report.summary["equality_exactly_stars"]
    assert report.summary["max_count_at_one"] == 7  # 2^(4-1) - 1, the star
    assert report.summary["max_attained_only_by_star_poly"]
    polys = [row["poly"] for row in report.rows]
    assert polys == [IntPoly((0, 0, 1, 2, 1)), IntPoly((0, 0, 3, 3, 1))]


def test_scan_tree_bound_rejects_tiny():
    with pytest.raises(ValueError):
        scan_tree_bound(1)


def test_minimal_tree_scan_order_four():
    report = minimal_tree_scan(4)
    assert report.summary["labeled_trees"] == 16
    assert report.summary["distinct_polys"] == 2
    assert report.summary["minimal_exists"] is True
    assert report.summary["minimal_poly"] == IntPoly((0, 0, 1, 2, 1))
    flags = {str(row["poly"]): row["is_minimal"] for row in report.rows}
    assert flags == {"x^4 + 2x^3 + x^2": True, "x^4 + 3x^3 + 3x^2": False}


def test_minimal_tree_scan_order_five():
    report = minimal_tree_scan(5)
    assert report.summary["distinct_polys"] == 3
    assert report.summary["minimal_exists"] is True
    assert report.summary["minimal_poly"] == IntPoly((0, 0, 0, 1, 3, 1))


# -- coefficient identities ------------------------------------------------------


def test_supporting_identity_examples():
    assert supporting_identity(path_graph(4))  # 2 = 4 - 2
    assert supporting_identity(cycle_graph(6))  # 6 = 6 - 0
    assert supporting_identity(star_graph(5))  # 4 = 5 - 1


def test_supporting_identity_rejects_isolated():
    with pytest.raises(ValueError):
        supporting_identity(Graph([0]))
    with pytest.raises(ValueError):
        supporting_identity(disjoint_union(path_graph(2), Graph([0])))


def test_non_supporting_pairs():
    assert non_supporting_pair_set(cycle_graph(4)) == ((0, 2), (1, 3))
    assert non_supporting_pair_set(path_graph(3)) == ((0, 2),)
    assert non_supporting_pair_set(star_graph(5)) == ()


def test_degree2_row_cycle_four():
    row = degree2_row(cycle_graph(4))
    assert row["supporting_count"] == 0
    assert row["coeff_n_minus_2"] == 4
    assert row["bound"] == 2  # 6 - 0 - 0 - 4
    assert row["degree2_count"] == 4
    assert row["bound_holds"]
    assert row["pair_count"] == 2
    assert row["identity_holds"]


def test_degree2_row_path_three():
    row = degree2_row(path_graph(3))
    assert row["supporting_count"] == 1
    assert row["coeff_n_minus_2"] == 0
    assert row["bound"] == 1  # 3 - 0 - 2 - 0
    assert row["degree2_count"] == 1  # equality
    assert row["bound_holds"] and row["identity_holds"]
    assert row["pair_count"] == 1


def test_degree2_row_star_five():
    row = degree2_row(star_graph(5))
    assert row["supporting_count"] == 1
    assert row["coeff_n_minus_2"] == 6  # C(4, 2)
    assert row["bound"] == 0  # 10 - 0 - 4 - 6
    assert row["degree2_count"] == 0
    assert row["bound_holds"] and row["identity_holds"]


def test_degree2_row_rejects_isolated():
    with pytest.raises(ValueError):
        degree2_row(Graph([0, 1]))


def test_scan_degree2_small_corpus():
    report = scan_degree2(trials=30, n_max=9, seed=42)
    assert report.summary["instances"] == 30
    assert report.summary["all_bounds_hold"]
    assert report.summary["all_identities_hold"]


# -- gamma bounds -----------------------------------------------------------------


def test_is_two_corona_examples():
    assert is_two_corona(two_corona(cycle_graph(3)))
    assert is_two_corona(path_graph(3))  # 2-corona of a single vertex
    assert is_two_corona(path_graph(6))  # 2-corona of P_2
    assert not is_two_corona(cycle_graph(6))
    assert not is_two_corona(path_graph(4))
    assert not is_two_corona(star_graph(6))
    assert not is_two_corona(Graph([]))


def test_gamma_bounds_rows():
    row = gamma_bounds_row(cycle_graph(6))
    assert row["gamma_t"] == 4 and row["equality"] and row["equality_shape"] == "C6"
    assert row["consistent"]
    row = gamma_bounds_row(two_corona(cycle_graph(3)))
    assert row["gamma_t"] == 6 and row["equality"] and row["equality_shape"] == "two-corona"
    assert row["consistent"]
    row = gamma_bounds_row(path_graph(5))
    assert row["gamma_t"] == 3 and not row["equality"] and row["equality_shape"] is None
    assert row["lower_ok"] and row["upper_ok"] and row["consistent"]
    row = gamma_bounds_row(cycle_graph(3))
    assert row["equality"] and row["equality_shape"] == "C3" and row["consistent"]


def test_gamma_bounds_row_rejects_small_or_disconnected():
    with pytest.raises(ValueError):
        gamma_bounds_row(path_graph(2))
    with pytest.raises(ValueError):
        gamma_bounds_row(disjoint_union(cycle_graph(3), cycle_graph(3)))


def test_scan_gamma_bounds():
    graphs = gamma_scan_corpus(trials=10, n_max=8, seed=42, corona_trials=4, corona_base_max=4)
    report = scan_gamma_bounds(graphs, {"seed": 42})
    assert report.summary["instances"] == len(graphs)
    assert report.summary["all_ok"]
    # the generated coronas guarantee equality cases appear
    assert report.summary["equality_instances"] >= 4


def test_scan_report_csv_shape():
    report = scan_gamma_bounds([cycle_graph(3)])
    text = report.to_csv()
    lines = text.strip().split("\n")
    assert lines[0].startswith("graph,n,gamma_t")
    assert len(lines) == 2
    assert "true" in lines[1]


# -- structural identity suite -----------------------------------------------------


def test_verify_basic_identities_passes():
    corpus = fixed_small_corpus() + [
        Graph([0]),
        Graph([]),
        disjoint_union(path_graph(2), Graph([0])),
        disjoint_union(path_graph(3), cycle_graph(4)),
    ]
    report = verify_basic_identities(corpus)
    assert report.suite == "prop1"
    assert report.passed
    assert report.instances > len(corpus)
