import json

import pytest

from helpers import all_reduced_words, random_reduced_word, seeded
from swl.cover import TilingBall, embed_gallery, region_valences
from swl.errors import VertexCapError
from swl.words import cyclic_free_reduce, inverse, parse_word


def w(text, cx):
    return parse_word(text, cx.generators)


def test_free_ball_counts(torus):
    ball = TilingBall(torus).build_ball(2)
    assert ball.num_vertices == 17  # 1 + 4 + 12
    assert ball.edge_count == ball.num_vertices - 1  # a tree
    ball.build_ball(1)  # one more round
    assert ball.num_vertices == 17 + 36


def test_genus2_layer1(genus2):
    ball = TilingBall(genus2).build_ball(1)
    stats = ball.stats()
    assert stats["faces"] == 8  # one octagon per corner of the origin
    assert stats["layers"] == 1
    deg = sum(1 for d in genus2.darts if ball.slot(ball.origin, d) >= 0)
    assert deg == 8


def test_interior_vertices_have_full_degree(genus2):
    ball = TilingBall(genus2).build_ball(2)
    for v in range(ball.num_vertices):
        if ball._completed[v]:
            assert all(ball.slot(v, d) >= 0 for d in genus2.darts)


def test_trace_examples(genus2, torus, balls):
    ball = balls["genus2"]
    relator = w("a1 b1 a1' b1' a2 b2 a2' b2'", genus2)
    assert ball.trace_path(relator) == ball.origin
    tb = balls["torus"]
    ab = w("a b", torus)
    end = tb.trace_path(ab)
    assert end != tb.origin
    assert tb.trace_path(inverse(ab), start=end) == tb.origin


def test_word_length_examples(genus2, balls):
    ball = balls["genus2"]
    assert ball.oracle_word_length(w("a1 b1 a1' b1' a2 b2 a2' b2'", genus2)) == 0
    assert ball.oracle_word_length(w("a1 b1 a1' b1' a2 b2 a2'", genus2)) == 1
    assert ball.oracle_word_length(w("a1 b1", genus2)) == 2
    assert ball.oracle_word_length(()) == 0


def test_conjugacy_examples(torus, genus2, balls):
    assert balls["torus"].oracle_conjugacy_length(w("a b a'", torus), 3) == 1
    assert balls["genus2"].oracle_conjugacy_length(w("b2 a2 b2'", genus2), 4) == 1
    relator = w("a1 b1 a1' b1' a2 b2 a2' b2'", genus2)
    conj = w("a2 b1", genus2)
    assert balls["genus2"].oracle_conjugacy_length(conj + relator + inverse(conj), 4) == 0


def test_conjugacy_non_increasing_in_radius(torus, balls):
    ball = balls["torus"]
    word = w("a b a b a'", torus)
    vals = [ball.oracle_conjugacy_length(word, R) for R in (2, 4, 6, 8)]
    assert vals == sorted(vals, reverse=True)


def test_conjugacy_matches_cyclic_reduction_on_tree(torus, balls):
    rng = seeded(8)
    ball = balls["torus"]
    for _ in range(25):
        word = random_reduced_word(rng, 2, rng.randint(1, 5))
        assert ball.oracle_conjugacy_length(word) == len(cyclic_free_reduce(word))


def test_relator_closure(genus2, triangles):
    ball = TilingBall(genus2).build_ball(3)
    relator = genus2.faces[0].sides
    completed = [v for v in range(ball.num_vertices) if ball._completed[v]]
    assert len(completed) > 40
    for v in completed:
        for k in range(8):
            word = relator[k:] + relator[:k]
            assert ball.trace_path(word, start=v) == v
    tball = TilingBall(triangles).build_ball(6)
    tri = triangles.faces[0].sides
    for v in range(tball.num_vertices):
        if tball._completed[v]:
            assert tball.trace_path(tri, start=v) == v


def test_short_null_loops_reduce_to_identity(genus2, engines, balls):
    # any built cycle through the origin of length <= 8 spells a relation
    ball = balls["genus2"]
    eng = engines["genus2"]
    ball.ensure_radius(4)
    for word in all_reduced_words(4, 4, include_empty=False):
        if ball.trace_path(word) == ball.origin:
            assert eng.shortest_word(word)[0] == 0


def test_face_layers_and_bound(genus2):
    ball = TilingBall(genus2).build_ball(3)
    layers = ball.face_layers()
    assert set(layers.values()) == {1, 2, 3}
    dist = ball.bfs()
    for tid, layer in layers.items():
        verts = ball.tiles[tid][1]
        near = min(dist[v] for v in verts if dist[v] >= 0)
        assert near >= layer - 1  # each layer pushes one step out


def test_gallery_valence_bound(genus2, triangles, engines):
    # every vertex of an embedded strand region meets at most 4 of its edges
    ball = TilingBall(genus2)
    for gallery in engines["genus2"].galleries(38):
        if len(gallery.polygons) > 6:
            continue
        verts, edges, _ = embed_gallery(ball, gallery)
        assert max(region_valences(verts, edges).values()) <= 4
    tball = TilingBall(triangles)
    for gallery in engines["triangles"].galleries(20):
        verts, edges, _ = embed_gallery(tball, gallery)
        assert max(region_valences(verts, edges).values()) <= 4


def test_vertex_cap(genus2):
    ball = TilingBall(genus2, cap=40)
    with pytest.raises(VertexCapError):
        ball.build_ball(2)


def test_cap_env_override(torus, monkeypatch):
    monkeypatch.setenv("SWL_VERTEX_CAP", "23")
    ball = TilingBall(torus)
    assert ball.cap == 23


def test_stats_and_dot(torus):
    ball = TilingBall(torus).build_ball(1)
    stats = json.loads(ball.stats_json())
    assert stats == {"vertices": 5, "edges": 4, "faces": 0, "layers": 0}
    dot = ball.to_dot()
    assert dot.count(" -- ") == stats["edges"]
    assert dot.startswith("graph ball {")
