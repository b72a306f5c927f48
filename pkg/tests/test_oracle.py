"""The brute-force oracle itself, plus the formula-vs-oracle grid runner."""

from fractions import Fraction

from layerscope.graphs import Family, GraphParams, build_explicit
from layerscope.oracle import (
    GridSummary,
    oracle_class_counts,
    oracle_intersection,
    oracle_layer_counts,
    oracle_mean_distance,
    oracle_p_in,
    oracle_p_t,
    oracle_transition_table,
    simulate_walk_hops,
    verify_graph,
    verify_grid,
)

B, K = Family.DEBRUIJN, Family.KAUTZ


def test_oracle_layer_counts_examples():
    g = build_explicit(GraphParams(B, 2, 7))
    counts = oracle_layer_counts(g, (0, 1, 1, 0, 1, 0, 1))
    assert counts[0] == 1
    assert counts[6] == 2**6 - 2**4 - 2  # 46
    g = build_explicit(GraphParams(K, 2, 4))
    assert oracle_layer_counts(g, (0, 1, 0, 1)) == [1, 2, 3, 6, 12]


def test_oracle_intersection_examples():
    g = build_explicit(GraphParams(B, 2, 4))
    assert oracle_intersection(g, (0, 1, 0, 0), (1, 0, 0, 1), 4, 4) == 0
    g = build_explicit(GraphParams(K, 2, 4))
    # j < i - 1 is impossible by the triangle inequality
    assert oracle_intersection(g, (0, 1, 0, 1), (1, 0, 1, 0), 3, 1) == 0
    assert oracle_intersection(g, (0, 1, 0, 1), (1, 0, 1, 0), 1, 2) == 1  # d - 1 at d = 2


def test_oracle_p_in_examples():
    g = build_explicit(GraphParams(K, 2, 4))
    assert oracle_p_in(g, 1) == Fraction(2, 23)
    assert sum(oracle_p_in(g, i) for i in range(1, 5)) == 1
    g = build_explicit(GraphParams(K, 3, 4))
    # Table row 4 evaluated at d = 3
    assert oracle_p_in(g, 4) == Fraction(3**5 - 3**3 - 3**2 + 1, 3**5 + 3**4 - 3)


def test_oracle_p_t_diameter_row():
    g = build_explicit(GraphParams(K, 2, 4))
    assert oracle_p_t(g, 4, 4) == 1
    table = oracle_transition_table(g)
    for i in range(1, 5):
        assert sum(table[(i, j)] for j in range(i, 5)) == 1


def test_oracle_mean_distance_small():
    g = build_explicit(GraphParams(B, 2, 2))
    # B(2,2): distances computed by hand over the 12 ordered pairs
    assert oracle_mean_distance(g) == Fraction(
        sum(oracle_layer_counts(g, v)[1] * 1 + oracle_layer_counts(g, v)[2] * 2 for v in g.vertices),
        12,
    )


def test_oracle_class_counts_grouping():
    g = build_explicit(GraphParams(K, 2, 4))
    counts = oracle_class_counts(g)
    assert counts[(0, 1, 0, 1)] == 6
    assert sum(counts.values()) == 24


def test_verify_graph_smallest_cases():
    summary = GridSummary()
    verify_graph(GraphParams(B, 2, 2), summary)
    verify_graph(GraphParams(K, 2, 2), summary)
    assert summary.ok
    assert summary.checks > 100


def test_verify_grid_small_grid_clean():
    summary = verify_grid(d_values=(2, 3), D_values=(2, 3))
    assert summary.ok
    assert summary.checks > 1000


def test_verify_beyond_default_grid():
    # deeper words (richer sublayer chains) and a wider alphabet
    summary = verify_grid(d_values=(2,), D_values=(6, 7))
    assert summary.ok
    summary = verify_grid(d_values=(5,), D_values=(3,))
    assert summary.ok


def test_verify_grid_detects_injected_fault(monkeypatch):
    # sanity of the detector: corrupt one layer polynomial and expect mismatches
    from layerscope.layers import layer_star_poly as real_layer

    def broken(params, v, i):
        poly = real_layer(params, v, i)
        if i == 2 and poly.coefficient(0) == 0:
            from layerscope.layers import LayerPolynomial

            return LayerPolynomial.build(i, {0: 1})  # off-by-one a_0
        return poly

    monkeypatch.setattr("layerscope.layers.layer_star_poly", broken)
    summary = verify_grid(families=(B,), d_values=(2,), D_values=(3,))
    assert not summary.ok
    assert any(m.quantity == "layer_count" for m in summary.mismatches)


def test_report_json_shape():
    summary = verify_grid(families=(K,), d_values=(2,), D_values=(2,))
    assert summary.ok
    # shape of a mismatch report
    from layerscope.oracle import OracleReport

    rep = OracleReport("p_t", {"family": "K"}, "1/2", "1/3", False)
    data = rep.to_json()
    assert data["quantity"] == "p_t" and data["match"] is False


def test_simulate_walk_deterministic_and_sane():
    g = build_explicit(GraphParams(K, 3, 3))
    a = simulate_walk_hops(g, 0.0, 2000, seed=42)
    b = simulate_walk_hops(g, 0.0, 2000, seed=42)
    assert a == b
    # with no deflections the walk follows shortest paths exactly
    assert a.std > 0
    exact = oracle_mean_distance(g)
    assert abs(a.mean - float(exact)) <= 4 * a.stderr
