"""Vertices, adjacency, closed-form distance, explicit construction, BFS."""

import pytest

from layerscope.errors import (
    KautzRepeat,
    LengthMismatch,
    SameVertex,
    SymbolOutOfRange,
    TooLarge,
    VertexNotInGraph,
)
from layerscope.graphs import (
    Family,
    GraphParams,
    bfs_distances,
    bfs_layers,
    build_explicit,
    distance,
    format_vertex,
    parse_vertex,
    shortest_path,
    successors,
    validate_vertex,
)

B, K = Family.DEBRUIJN, Family.KAUTZ


def test_params_invariants():
    p = GraphParams(K, 2, 4)
    assert p.alphabet_size == 3
    assert p.vertex_count == 24
    assert GraphParams(B, 2, 3).vertex_count == 8
    assert GraphParams(K, 3, 2).vertex_count == 12
    with pytest.raises(ValueError):
        GraphParams(B, 1, 3)
    with pytest.raises(ValueError):
        GraphParams(K, 2, 0)


def test_validate_vertex():
    k24 = GraphParams(K, 2, 4)
    assert validate_vertex(k24, [0, 1, 0, 1]) == (0, 1, 0, 1)
    with pytest.raises(KautzRepeat):
        validate_vertex(k24, [0, 0, 1, 0])
    assert validate_vertex(GraphParams(B, 2, 4), [0, 0, 1, 0]) == (0, 0, 1, 0)
    with pytest.raises(LengthMismatch):
        validate_vertex(k24, [0, 1, 0])
    with pytest.raises(SymbolOutOfRange):
        validate_vertex(k24, [0, 3, 0, 1])


def test_successors_shift_append():
    b23 = GraphParams(B, 2, 3)
    assert successors(b23, (0, 1, 0)) == [(1, 0, 0), (1, 0, 1)]
    k24 = GraphParams(K, 2, 4)
    assert successors(k24, (0, 1, 0, 1)) == [(1, 0, 1, 0), (1, 0, 1, 2)]


@pytest.mark.parametrize(
    "family,d,D",
    [(B, 2, 3), (B, 3, 2), (K, 2, 4), (K, 3, 3)],
)
def test_successors_regular_no_duplicates(family, d, D):
    params = GraphParams(family, d, D)
    g = build_explicit(params)
    for v in g.vertices:
        succ = successors(params, v)
        assert len(succ) == d
        assert len(set(succ)) == d
        if family is K:
            assert all(w[-1] != v[-1] for w in succ)


def test_distance_identity_and_example():
    b23 = GraphParams(B, 2, 3)
    assert distance(b23, (0, 0, 0), (0, 0, 0)) == 0
    assert distance(b23, (0, 0, 0), (0, 0, 1)) == 1


@pytest.mark.parametrize(
    "family,d,D",
    [(B, 2, 4), (B, 3, 3), (K, 2, 4), (K, 3, 3)],
)
def test_distance_matches_bfs_everywhere(family, d, D):
    params = GraphParams(family, d, D)
    g = build_explicit(params)
    for src, v in enumerate(g.vertices):
        dist = bfs_distances(g, src)
        for tgt, z in enumerate(g.vertices):
            assert distance(params, v, z) == dist[tgt]


@pytest.mark.parametrize("family,d,D", [(B, 2, 4), (K, 2, 4), (K, 3, 3)])
def test_shortest_path_well_formed(family, d, D):
    params = GraphParams(family, d, D)
    g = build_explicit(params)
    for v in g.vertices:
        for z in g.vertices:
            if v == z:
                continue
            path = shortest_path(params, v, z)
            assert path[0] == v and path[-1] == z
            assert len(path) - 1 == distance(params, v, z)
            for a, b in zip(path, path[1:]):
                assert b in successors(params, a)


def test_shortest_path_rejects_same_vertex():
    with pytest.raises(SameVertex):
        shortest_path(GraphParams(B, 2, 3), (0, 1, 0), (0, 1, 0))


def test_build_explicit_counts_and_order():
    g = build_explicit(GraphParams(B, 2, 3))
    assert len(g.vertices) == 8
    assert list(g.vertices) == sorted(g.vertices)
    g = build_explicit(GraphParams(K, 2, 4))
    assert len(g.vertices) == 24
    assert all(len(s) == 2 for s in g.succ)
    g = build_explicit(GraphParams(K, 3, 2))
    assert len(g.vertices) == 12


def test_build_explicit_cap():
    with pytest.raises(TooLarge):
        build_explicit(GraphParams(B, 2, 10), max_vertices=100)


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("LAYERSCOPE_CAP", "4")
    with pytest.raises(TooLarge):
        build_explicit(GraphParams(B, 2, 3))
    monkeypatch.setenv("LAYERSCOPE_CAP", "8")
    assert len(build_explicit(GraphParams(B, 2, 3)).vertices) == 8


def test_bfs_layers_partition():
    params = GraphParams(B, 2, 4)
    g = build_explicit(params)
    v = (0, 1, 1, 0)
    layers = bfs_layers(g, v)
    assert layers[0] == frozenset({v})
    assert sum(len(layer) for layer in layers) == len(g.vertices)
    seen = set()
    for layer in layers:
        assert not (layer & seen)
        seen |= layer
    with pytest.raises(VertexNotInGraph):
        bfs_layers(g, (9, 9, 9, 9))


def test_vertex_serialization():
    k24 = GraphParams(K, 2, 4)
    assert format_vertex(k24, (0, 1, 0, 1)) == "0101"
    assert parse_vertex(k24, "0101") == (0, 1, 0, 1)
    big = GraphParams(B, 11, 3)
    assert format_vertex(big, (0, 1, 10)) == "0.1.10"
    assert parse_vertex(big, "0.1.10") == (0, 1, 10)


def test_family_serialization():
    assert str(B) == "B" and str(K) == "K"
    assert Family.parse("b") is B
    assert Family.parse("Kautz") is K
    with pytest.raises(ValueError):
        Family.parse("X")
