from fractions import Fraction

import pytest

from helpers import per_edge_crossings
from swl.arcsys import Anchor, build_arc_system, raw_crossing_count, trace_components
from swl.errors import WordSyntaxError
from swl.surface import DISK
from swl.svg import emit_svg
from swl.words import parse_word


def test_marked_point_counts(arc_systems):
    for name, arcs in arc_systems.items():
        cx = arcs.complex
        points = arcs.marked_points()
        assert len(points) == 4 * cx.n  # 2 per side, 2 sides per edge
        per_edge = {}
        for d, _ in points:
            per_edge[abs(d)] = per_edge.get(abs(d), 0) + 1
        assert all(v == 4 for v in per_edge.values())


def test_involutions_fixed_point_free(arc_systems):
    for arcs in arc_systems.values():
        for p, q in arcs.intra.items():
            assert arcs.intra[q] == p and q != p
        for p, q in arcs.glue.items():
            assert arcs.glue[q] == p and q != p
            assert p[0] == -q[0]  # glue joins the two sides of one edge


def test_intra_stays_inside_one_face(arc_systems):
    for arcs in arc_systems.values():
        cx = arcs.complex
        for p, q in arcs.intra.items():
            if isinstance(p, Anchor) or isinstance(q, Anchor):
                continue
            assert cx.side_of[p[0]][0] == cx.side_of[q[0]][0]


def test_even_face_pairs_opposite_sides(genus2, arc_systems):
    arcs = arc_systems["genus2"]
    sides = genus2.faces[0].sides
    for i, d in enumerate(sides):
        opp = sides[(i + 4) % 8]
        assert arcs.intra[(d, 1)] == (opp, 2)
        assert arcs.intra[(d, 2)] == (opp, 1)


def test_odd_face_pairs_near_opposite(triangles, arc_systems):
    arcs = arc_systems["triangles"]
    sides = triangles.faces[0].sides
    for i, d in enumerate(sides):
        assert arcs.intra[(d, 1)] == (sides[(i + 2) % 3], 2)


def test_holed_face_anchors(torus, arc_systems):
    arcs = arc_systems["torus"]
    anchors = arcs.hole_anchors[0]
    assert len(anchors) == 8
    for anchor in anchors:
        assert arcs.intra[anchor] == (anchor.dart, anchor.slot)


def test_glue_cases(arc_systems):
    # plain gluing swaps the slots; two odd disk faces on one edge keep them
    for name, arcs in arc_systems.items():
        cx = arcs.complex
        for k in range(1, cx.n + 1):
            f1, f2 = cx.face_of_dart(k), cx.face_of_dart(-k)
            crossing = (f1.kind == DISK and f2.kind == DISK
                        and len(f1) % 2 == 1 and len(f2) % 2 == 1)
            expected = (k, 1) if crossing else (k, 2)
            assert arcs.glue[(-k, 1)] == expected


def test_case2_complex_has_crossing_edge(case2, arc_systems):
    arcs = arc_systems["case2"]
    crossing_edges = [k for k in range(1, case2.n + 1)
                      if arcs.glue[(k, 1)] == (-k, 1)]
    assert crossing_edges  # the shared triangle edge


def test_census_examples(arc_systems):
    torus = trace_components(arc_systems["torus"])
    assert (torus.curves, torus.arcs) == (0, 4)
    assert all(len(seq) == 1 for _, seq in torus.components)

    genus2 = trace_components(arc_systems["genus2"])
    assert (genus2.curves, genus2.arcs) == (4, 0)

    tri = trace_components(arc_systems["triangles"])
    assert (tri.curves, tri.arcs) == (0, 3)
    assert sorted(seq for _, seq in tri.components) == [("a", "b"), ("a", "c"), ("b", "c")]


def test_total_crossings(arc_systems):
    for arcs in arc_systems.values():
        cx = arcs.complex
        census = trace_components(arcs)
        counts = per_edge_crossings(census, cx.generators)
        assert all(v == 2 for v in counts.values())
        if cx.boundary_count == 0:
            assert census.arcs == 0


def test_census_stable_under_restart(arc_systems):
    # orbits are start-independent: rebuild components from every marked
    # point by walking both ways and compare the canonical census
    from swl.arcsys import _canon_cyclic, _canon_linear

    for arcs in arc_systems.values():
        cx = arcs.complex
        census = trace_components(arcs)
        gen_name = lambda p: cx.generators[abs(p[0]) - 1]
        for start in arcs.marked_points():
            crossings = []
            p = start
            closed = True
            while True:
                crossings.append(gen_name(p))
                q = arcs.glue[p]
                nxt = arcs.intra[q]
                if isinstance(nxt, Anchor):
                    closed = False
                    break
                if nxt == start:
                    break
                p = nxt
            if closed:
                key = ("curve", _canon_cyclic(crossings))
            else:
                back = []
                p = start
                while True:
                    prev = arcs.intra[p]
                    if isinstance(prev, Anchor):
                        break
                    p = arcs.glue[prev]
                    back.append(gen_name(prev))
                key = ("arc", _canon_linear(tuple(reversed(back)) + tuple(crossings)))
            assert key in census.components


def test_raw_crossing_count(arc_systems):
    torus = arc_systems["torus"]
    assert raw_crossing_count(parse_word("a b", ("a", "b")), torus) == 2
    assert raw_crossing_count((), torus) == 0
    genus2 = arc_systems["genus2"]
    word = parse_word("a1^5", genus2.complex.generators)
    got = raw_crossing_count(word, genus2)
    assert got == 5 and isinstance(got, Fraction)
    with pytest.raises(WordSyntaxError):
        raw_crossing_count((9,), torus)


def test_weight_is_exact_half(arc_systems):
    for arcs in arc_systems.values():
        assert arcs.weight == Fraction(1, 2)


def test_mirror_flag_still_valid(triangles):
    mirrored = build_arc_system(triangles, odd_slot_mirror=True)
    for p, q in mirrored.intra.items():
        assert mirrored.intra[q] == p and q != p
    census = trace_components(mirrored)
    assert sum(len(seq) for _, seq in census.components) == 2 * triangles.n


def test_svg_counts(torus, genus2, arc_systems):
    text = emit_svg(torus, arc_systems["torus"])
    assert text.count("<polygon") == 1
    assert text.count("<circle") == 1  # the hole
    assert text.count("<path") == 8  # one arc per marked point
    text2 = emit_svg(genus2, arc_systems["genus2"])
    assert text2.count("<polygon") == 1
    assert text2.count("<circle") == 0
    assert text2.count("<path") == 8  # 16 points in 8 chords


def test_svg_deterministic(torus, arc_systems):
    assert emit_svg(torus, arc_systems["torus"]) == emit_svg(torus, arc_systems["torus"])
