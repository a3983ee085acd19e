"""Complex construction, closure, and the join/cone/link/skeleton operations."""

import random
from itertools import combinations

import pytest

from cutnerve import complexes as cx
from cutnerve import constructions as cons
from cutnerve import graphs as gr
from cutnerve.errors import (
    InvalidFaceError,
    InvalidParameterError,
    ResourceLimitError,
    VoidComplexError,
)
from cutnerve.homology import reduced_homology

from oracles import closure_of


def random_complex(rng, n_vertices=6, n_gens=5):
    labels = [f"v{i}" for i in range(n_vertices)]
    gens = []
    for _ in range(n_gens):
        size = rng.randint(1, min(4, n_vertices))
        gens.append(tuple(sorted(rng.sample(range(n_vertices), size))))
    return cx.from_facets(labels, gens)


def complex_corpus():
    rng = random.Random(11)
    out = [
        cx.full_simplex("abc"),
        cx.simplex_boundary("abcd"),
        cx.discrete_points("abcde"),
        cx.empty_complex("ab"),
        cons.total_cut_complex(gr.cycle(6), 2),
        cons.neighborhood_complex(gr.kneser(4, 2)),
    ]
    out.extend(random_complex(rng) for _ in range(8))
    return out


# -- construction -------------------------------------------------------------

def test_from_facets_absorption():
    c = cx.from_facets("abc", [(0, 1), (1,)])
    assert c.facets == ((0, 1),)


def test_from_facets_void_and_empty():
    v = cx.from_facets("ab", [])
    assert v.is_void() and not v.is_empty_complex()
    e = cx.from_facets("ab", [()])
    assert e.is_empty_complex() and not e.is_void()
    assert e.dimension() == -1


def test_from_facets_unknown_vertex():
    with pytest.raises(InvalidFaceError):
        cx.from_facets("ab", [(0, 5)])


def test_from_facets_idempotent():
    for c in complex_corpus():
        again = cx.from_facets(c.labels, c.facets) if not c.is_void() else c
        assert again.facets == c.facets


# -- closure ------------------------------------------------------------------

def test_all_faces_simplex():
    c = cx.full_simplex("abc")
    assert len(c.all_faces()) == 8
    assert () in c.all_faces()


def test_faces_of_dim_boundary():
    c = cx.simplex_boundary("abc")
    assert len(c.faces_of_dim(1)) == 3


def test_closure_matches_subset_oracle():
    for c in complex_corpus():
        if c.is_void():
            continue
        assert set(c.all_faces()) == closure_of(c.facets)


def test_closure_downward_closed():
    for c in complex_corpus():
        faces = set(c.all_faces())
        for f in faces:
            for r in range(len(f)):
                for sub in combinations(f, r):
                    assert sub in faces


def test_total_cut_c6_face_count_frozen():
    c = cons.total_cut_complex(gr.cycle(6), 2)
    assert c.face_count() == 51  # frozen from the subset-closure oracle


def test_budget_exceeded_names_budget():
    c = cx.full_simplex("abcdefgh")
    with pytest.raises(ResourceLimitError) as err:
        c.all_faces(budget=10)
    assert err.value.budget == 10


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("CUTNERVE_FACE_BUDGET", "5")
    c = cx.full_simplex("abcdef")
    with pytest.raises(ResourceLimitError):
        c.all_faces()


# -- scalars ------------------------------------------------------------------

def test_dimension_and_purity():
    assert cx.full_simplex("abcd").dimension() == 3
    assert cx.simplex_boundary("abcd").is_pure()
    mixed = cx.from_facets("abcd", [(0, 1, 2), (0, 3)])
    assert not mixed.is_pure()
    with pytest.raises(VoidComplexError):
        cx.void_complex("ab").dimension()


def test_euler_characteristic_spheres():
    # frozen convention: reduced euler characteristic of S^d is (-1)^d
    for d in range(4):
        sphere = cx.simplex_boundary([str(i) for i in range(d + 2)])
        assert sphere.euler_characteristic_reduced() == (-1) ** d


def test_euler_characteristic_simplex_and_void():
    assert cx.full_simplex("abcd").euler_characteristic_reduced() == 0
    assert cx.void_complex("ab").euler_characteristic_reduced() == 0
    assert cx.empty_complex("ab").euler_characteristic_reduced() == -1


def test_f_vector_boundary_of_3_simplex():
    assert cx.simplex_boundary("abcd").f_vector() == (1, 4, 6, 4)


# -- join / cone / suspension -------------------------------------------------

def test_join_points_is_edge():
    e = cx.join(cx.full_simplex("a"), cx.full_simplex("b"))
    assert e.facets == ((0, 1),)


def test_join_s0_s0_is_circle():
    s0a = cx.discrete_points("ab")
    s0b = cx.discrete_points("cd")
    c = cx.join(s0a, s0b)
    assert len(c.facets) == 4
    assert reduced_homology(c).is_sphere(1)


def test_join_with_void_is_void():
    v = cx.void_complex("xy")
    assert cx.join(cx.full_simplex("ab"), v).is_void()


def test_join_label_collision():
    with pytest.raises(InvalidParameterError):
        cx.join(cx.full_simplex("ab"), cx.full_simplex("bc"))


def test_join_with_empty_complex_is_identity():
    c = cx.simplex_boundary("abc")
    j = cx.join(c, cx.empty_complex("z"))
    assert j.facet_label_family() == c.facet_label_family()


def test_join_commutative_associative_labeled():
    rng = random.Random(3)
    for _ in range(5):
        a = random_complex(rng, 3, 2)
        b = cx.from_facets(
            ["w0", "w1", "w2"], [tuple(sorted(rng.sample(range(3), rng.randint(1, 2))))]
        )
        assert cx.equals_labeled(cx.join(a, b), cx.join(b, a))
    a = cx.full_simplex("ab")
    b = cx.discrete_points("cd")
    c = cx.discrete_points("ef")
    assert cx.equals_labeled(cx.join(cx.join(a, b), c), cx.join(a, cx.join(b, c)))


def test_join_euler_identity():
    rng = random.Random(5)
    for _ in range(10):
        a = random_complex(rng, 4, 3)
        b = cx.from_facets(
            ["z0", "z1", "z2", "z3"],
            [tuple(sorted(rng.sample(range(4), rng.randint(1, 3)))) for _ in range(2)],
        )
        lhs = cx.join(a, b).euler_characteristic_reduced()
        rhs = -a.euler_characteristic_reduced() * b.euler_characteristic_reduced()
        assert lhs == rhs


def test_cone_contractible():
    rng = random.Random(9)
    for _ in range(5):
        c = random_complex(rng)
        coned = cx.cone(c, "apex")
        assert reduced_homology(coned).is_trivial()


def test_cone_apex_collision():
    with pytest.raises(InvalidParameterError):
        cx.cone(cx.full_simplex("ab"), "a")


def test_suspension_of_circle_is_sphere():
    s = cx.suspension(cx.simplex_boundary("abc"))
    assert reduced_homology(s).is_sphere(2)


# -- link ----------------------------------------------------------------------

def test_link_in_full_simplex():
    c = cx.full_simplex("abcd")
    lk = cx.link(c, (0,))
    assert lk.facet_label_family() == frozenset({frozenset("bcd")})


def test_link_of_empty_face_is_identity():
    c = cx.simplex_boundary("abcd")
    assert cx.equals_labeled(cx.link(c, ()), c)


def test_link_of_edge_in_sphere():
    c = cx.simplex_boundary("abcd")
    lk = cx.link(c, (0, 1))
    assert reduced_homology(lk).is_sphere(0)


def test_link_invalid_face():
    with pytest.raises(InvalidFaceError):
        cx.link(cx.discrete_points("ab"), (0, 1))


def test_link_of_cone_apex():
    rng = random.Random(13)
    for _ in range(5):
        c = random_complex(rng, 5, 3)
        if c.is_void():
            continue
        coned = cx.cone(c, "apex")
        apex = coned.labels.index("apex")
        assert cx.equals_labeled(cx.link(coned, (apex,)), c)


# -- skeleton --------------------------------------------------------------------

def test_skeleton_of_simplex_is_complete_graph():
    c = cx.skeleton(cx.full_simplex("abcde"), 1)
    assert c.facet_label_family() == frozenset(
        frozenset(p) for p in combinations("abcde", 2)
    )


def test_skeleton_at_dimension_is_identity():
    for c in complex_corpus():
        if c.is_void():
            continue
        assert cx.equals_labeled(cx.skeleton(c, c.dimension()), c)


def test_skeleton_dimension_property():
    for c in complex_corpus():
        if c.is_void() or c.is_empty_complex():
            continue
        for d in range(-1, c.dimension() + 2):
            sk = cx.skeleton(c, d)
            assert sk.dimension() == min(d, c.dimension())


def test_bipartite_skeleton_betti():
    # 1-skeleton of K_{4,4}: nine independent loops
    labels = [f"a{i}" for i in range(4)] + [f"b{i}" for i in range(4)]
    c = cx.from_facets(labels, [(i, 4 + j) for i in range(4) for j in range(4)])
    profile = reduced_homology(c)
    assert profile.betti_number(0) == 0 and profile.betti_number(1) == 9


# -- union / intersection ----------------------------------------------------------

def test_intersection_self():
    for c in complex_corpus():
        if c.is_void():
            continue
        assert cx.equals_labeled(cx.intersection(c, c), c)


def test_union_intersection_ladder_decomposition():
    n = 4
    tc = cons.total_cut_complex(gr.circular_ladder(n), n - 1)
    a_labels = [f"{i}+" if i % 2 else f"{i}-" for i in range(1, n + 1)]
    b_labels = [f"{i}-" if i % 2 else f"{i}+" for i in range(1, n + 1)]
    x = cx.join(cx.full_simplex(a_labels), cx.discrete_points(b_labels))
    y = cx.join(cx.full_simplex(b_labels), cx.discrete_points(a_labels))
    assert cx.equals_labeled(cx.union(x, y), tc)
    inter = cx.intersection(x, y)
    expected = cx.from_facets(
        tuple(a_labels) + tuple(b_labels),
        [(i, n + j) for i in range(n) for j in range(n)],
    )
    assert cx.equals_labeled(inter, expected)


# -- serialization ------------------------------------------------------------------

def test_complex_json_roundtrip():
    for c in complex_corpus():
        back = cx.SimplicialComplex.from_json(c.to_json())
        assert cx.equals_labeled(back, c)
        assert back.to_json() == c.to_json()


def test_void_json_roundtrip():
    v = cx.void_complex("ab")
    back = cx.SimplicialComplex.from_json(v.to_json())
    assert back.is_void()
