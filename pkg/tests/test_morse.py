"""Matchings, acyclicity, collapses, and the multicone certificate."""

import random
from itertools import combinations

import pytest

from cutnerve import complexes as cx
from cutnerve import constructions as cons
from cutnerve import graphs as gr
from cutnerve import homology as hom
from cutnerve import morse
from cutnerve.errors import (
    InvalidCollapseError,
    InvalidMatchingError,
    InvalidParameterError,
)


def ladder_total_cut(n):
    return cons.total_cut_complex(gr.circular_ladder(n), n - 1)


def face_of(c, labels):
    return c.face_of_labels(labels)


def matching_corpus():
    rng = random.Random(41)
    out = [
        cx.full_simplex("abcd"),
        cx.simplex_boundary("abcd"),
        cons.total_cut_complex(gr.cycle(6), 2),
        cons.neighborhood_complex(gr.circular_ladder(4)),
    ]
    for _ in range(6):
        n = rng.randint(4, 6)
        gens = [
            tuple(sorted(rng.sample(range(n), rng.randint(1, 4))))
            for _ in range(rng.randint(2, 5))
        ]
        out.append(cx.from_facets([f"v{i}" for i in range(n)], gens))
    return out


# -- element matchings -----------------------------------------------------------

def test_element_matching_full_simplex_is_perfect():
    c = cx.full_simplex("abcd")
    m = morse.element_matching(c, "a")
    assert len(m.pairs) * 2 == c.face_count()
    assert m.partner(()) == (0,)
    assert morse.critical_cells(c, m) == []


def test_ladder5_sequential_matching_critical_cells():
    c = ladder_total_cut(5)
    m = morse.element_matching_sequence(c, ["1+", "1-"])
    assert m.partner(()) == face_of(c, ["1+"])
    cells = morse.critical_cells(c, m)
    expected = sorted(
        face_of(c, ["1-", f"{j}+", f"{j}-"]) for j in range(2, 6)
    )
    assert cells == expected
    assert all(len(f) == 3 for f in cells)


def test_ladder7_sequential_matching_critical_count():
    c = ladder_total_cut(7)
    m = morse.element_matching_sequence(c, ["1+", "1-"])
    cells = morse.critical_cells(c, m)
    assert len(cells) == 6
    assert all(len(f) == 3 for f in cells)


def test_element_matching_unknown_vertex():
    with pytest.raises(InvalidParameterError):
        morse.element_matching(cx.full_simplex("ab"), "z")


# -- acyclicity --------------------------------------------------------------------

def test_empty_matching_acyclic():
    ok, witness = morse.is_acyclic(cx.simplex_boundary("abc"), morse.Matching([]))
    assert ok and witness is None


def test_sequential_matchings_acyclic_on_corpus():
    rng = random.Random(53)
    for c in matching_corpus():
        if c.is_void() or c.face_count() > 200:
            continue
        verts = list(range(c.n_vertices))
        rng.shuffle(verts)
        m = morse.element_matching_sequence(c, verts[: rng.randint(1, len(verts))])
        ok, _ = morse.is_acyclic(c, m)
        assert ok


def test_hand_built_cycle_detected():
    # square: vertices 1..4, edges 12, 23, 34, 14; match each vertex upward
    # around the loop so the V-path walks forever
    c = cx.from_facets("1234", [(0, 1), (1, 2), (2, 3), (0, 3)])
    m = morse.Matching([
        ((0,), (0, 1)),
        ((1,), (1, 2)),
        ((2,), (2, 3)),
        ((3,), (0, 3)),
    ])
    ok, witness = morse.is_acyclic(c, m)
    assert not ok
    assert witness is not None and len(witness) >= 4
    # the witness alternates matched pairs: re-walk it by hand
    lowers = witness[0::2]
    uppers = witness[1::2]
    for i, s in enumerate(lowers):
        assert m.partner(s) == uppers[i]
        nxt = lowers[(i + 1) % len(lowers)]
        assert set(nxt) < set(uppers[i]) or nxt == lowers[i]
    with pytest.raises(InvalidMatchingError):
        morse.critical_cells(c, m)


def test_matching_rejects_reused_faces():
    with pytest.raises(InvalidMatchingError):
        morse.Matching([((0,), (0, 1)), ((0,), (0, 2))])
    with pytest.raises(InvalidMatchingError):
        morse.Matching([((0,), (0, 1, 2))])


def test_morse_inequality_on_corpus():
    for c in matching_corpus():
        if c.is_void() or c.face_count() > 200:
            continue
        m = morse.element_matching_sequence(c, range(c.n_vertices))
        cells = morse.critical_cells(c, m)
        profile = hom.reduced_homology(c)
        by_dim = {}
        for f in cells:
            by_dim[len(f) - 1] = by_dim.get(len(f) - 1, 0) + 1
        for d in range(len(profile.betti)):
            assert by_dim.get(d, 0) >= profile.betti_number(d)


# -- free faces and collapses --------------------------------------------------------

def test_free_faces_of_edge():
    c = cx.full_simplex("ab")
    assert morse.free_faces(c) == [((0,), (0, 1)), ((1,), (0, 1))]


def test_free_faces_of_boundary_empty():
    assert morse.free_faces(cx.simplex_boundary("abcd")) == []


def test_ladder_neighborhood_free_faces():
    n = 5
    nc = cons.neighborhood_complex(gr.circular_ladder(n))
    free = set(morse.free_faces(nc))
    for i in range(1, n + 1):
        sp = face_of(nc, [f"{i}+", f"{(i + 1) % n + 1}+"])
        sm = face_of(nc, [f"{i}-", f"{(i + 1) % n + 1}-"])
        assert any(s == sp for s, _ in free)
        assert any(s == sm for s, _ in free)


def test_elementary_collapse_edge_to_point():
    c = cx.full_simplex("ab")
    out = morse.elementary_collapse(c, (0,), (0, 1))
    assert out.facets == ((1,),)


def test_elementary_collapse_rejects_non_free():
    c = cx.simplex_boundary("abc")
    with pytest.raises(InvalidCollapseError):
        morse.elementary_collapse(c, (0,), (0, 1))


def test_collapse_preserves_homology():
    rng = random.Random(61)
    checked = 0
    for c in matching_corpus():
        if c.is_void():
            continue
        free = morse.free_faces(c)
        if not free:
            continue
        sigma, tau = free[rng.randrange(len(free))]
        out = morse.elementary_collapse(c, sigma, tau)
        assert out.face_count() == c.face_count() - 2
        assert hom.reduced_homology(out) == hom.reduced_homology(c)
        checked += 1
    assert checked >= 4


def test_squared_cycle_band_collapse():
    # collapsing the stated free pair of every facet leaves the cyclic band
    k = 3
    m = 3 * k + 1
    h = gr.induced_k_independent(gr.squared_cycle(m), k)
    nc = cons.neighborhood_complex(h)
    steps = []
    for i in range(1, m + 1):
        sigma = tuple(sorted(((i + k - 1) % m, (i + 2 * k) % m)))
        tau = tuple(sorted((i + d - 1) % m for d in range(k, 2 * k + 2)))
        steps.append((sigma, tau))
    out = morse.collapse_complex(nc, steps)
    expected = {
        tuple(sorted((i + d) % m for d in range(k + 1))) for i in range(m)
    }
    assert set(out.facets) == expected
    assert hom.reduced_homology(out) == hom.reduced_homology(nc)


# -- greedy collapse -------------------------------------------------------------------

def test_greedy_collapse_cones():
    rng = random.Random(67)
    for c in matching_corpus()[:6]:
        if c.is_void():
            continue
        coned = cx.cone(c, "apex")
        witness = morse.greedy_collapse(coned)
        assert witness.is_collapsible()
        assert morse.replay_collapse(coned, witness)


def test_greedy_collapse_star_total_cut():
    tc = cons.total_cut_complex(gr.star(5), 2)
    witness = morse.greedy_collapse(tc)
    assert witness.is_collapsible()
    assert morse.replay_collapse(tc, witness)


def test_greedy_collapse_cycle_cover_intersections():
    for n, k in [(6, 2), (7, 2), (6, 3)]:
        cover = cons.independent_cover(gr.cycle(n), k)
        nerve = cons.nerve(cover)
        for face in nerve.all_faces():
            if not face:
                continue
            inter = cons.cover_intersection(cover, face)
            if not inter.has_vertices():
                continue
            witness = morse.greedy_collapse(inter)
            assert witness.is_collapsible()


def test_greedy_collapse_sphere_unknown():
    witness = morse.greedy_collapse(cx.simplex_boundary("abcd"))
    assert witness.verdict == "unknown"
    assert witness.steps == ()


def test_greedy_collapse_budget_verdict():
    tc = cons.total_cut_complex(gr.star(6), 2)
    witness = morse.greedy_collapse(tc, budget=3)
    assert witness.verdict == "unknown"
    assert witness.steps_tried <= 4


def test_witness_json_roundtrip():
    tc = cons.total_cut_complex(gr.star(4), 2)
    witness = morse.greedy_collapse(tc)
    text = witness.to_json(tc)
    back = morse.CollapseWitness.from_json(tc, text)
    assert back == witness
    assert morse.replay_collapse(tc, back)


def test_cone_collapse_witness():
    base = cons.total_cut_complex(gr.cycle(6), 2)
    coned = cx.cone(base, "w")
    witness = morse.cone_collapse_witness(coned, "w")
    assert witness.is_collapsible()
    assert morse.replay_collapse(coned, witness)
    with pytest.raises(InvalidParameterError):
        morse.cone_collapse_witness(base, base.labels[0])


# -- multicone ---------------------------------------------------------------------------

def test_multicone_single_cone():
    c = cx.cone(cx.simplex_boundary("abc"), "w")
    faces = set(c.all_faces())
    apex = c.labels.index("w")
    assert morse.verify_multicone(c, [faces], [apex])


def test_multicone_wrong_apex():
    c = cx.cone(cx.simplex_boundary("abc"), "w")
    faces = set(c.all_faces())
    assert not morse.verify_multicone(c, [faces], [c.labels.index("a")])


def test_multicone_rejects_non_nested():
    c = cx.full_simplex("ab")
    with pytest.raises(InvalidParameterError):
        morse.verify_multicone(c, [{(0,)}, {(1,)}], [0, 1])


def test_multicone_on_cycle_cover_intersections():
    g = gr.cycle(7)
    k = 2
    cover = cons.independent_cover(g, k)
    nerve = cons.nerve(cover)
    checked = 0
    for face in nerve.all_faces():
        if not face:
            continue
        inter = cons.cover_intersection(cover, face)
        if not inter.has_vertices():
            continue
        filtration, apexes = cons.cycle_cover_multicone(g, k, cover, face)
        assert morse.verify_multicone(inter, filtration, apexes)
        # the certificate promises collapsibility; the search must agree
        assert morse.greedy_collapse(inter).is_collapsible()
        checked += 1
    assert checked > 20
