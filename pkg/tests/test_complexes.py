import pytest
from hypothesis import given, strategies as st

from conftest import random_complex, rng_for

from gctk.complexes import (
    HomotopyType,
    SimplicialComplex,
    all_faces,
    complex_from_obj,
    complex_to_obj,
    cone,
    delete,
    face_set,
    induced_subcomplex,
    intersect,
    is_shelling,
    link,
    reduced_euler,
    star,
    susp,
    wedge,
)
from gctk.errors import (
    EmptyComplex,
    NotAPermutation,
    SizeLimit,
    UnknownVertex,
    WedgeWithEmpty,
)
from gctk.homology import greedy_collapse


def cx(*faces):
    return SimplicialComplex.from_faces(faces)


def test_all_faces_single_edge():
    grouped = all_faces(cx("ab"))
    assert grouped == [[frozenset("a"), frozenset("b")], [frozenset("ab")]]


def test_all_faces_empty():
    assert all_faces(SimplicialComplex.empty()) == []
    assert all_faces(SimplicialComplex.empty_face_only()) == []


def test_all_faces_two_edges():
    assert sum(len(b) for b in all_faces(cx("ab", "bc"))) == 5


def test_face_cap():
    simplex = cx(frozenset(range(12)))
    with pytest.raises(SizeLimit):
        face_set(simplex, cap=100)


def test_reduced_euler_degenerate():
    assert reduced_euler(SimplicialComplex.empty()) == -1
    assert reduced_euler(SimplicialComplex.empty_face_only()) == -1
    assert reduced_euler(cx("a")) == 0
    assert reduced_euler(cx("a", "b")) == 1


def test_dimension_conventions():
    with pytest.raises(EmptyComplex):
        SimplicialComplex.empty().dimension
    assert SimplicialComplex.empty_face_only().dimension == -1
    assert cx("abc").dimension == 2


def test_star_is_cone():
    rng = rng_for("complexes-star")
    for _ in range(100):
        c = random_complex(rng)
        for v in c.vertices:
            st_ = star(c, v)
            assert reduced_euler(st_) == 0
            assert greedy_collapse(st_).is_point


def test_link_of_isolated_vertex_is_empty_face_marker():
    c = cx("a", "bc")
    lk = link(c, "a")
    assert lk.has_empty_face_marker and lk.is_empty


def test_link_unknown_vertex():
    with pytest.raises(UnknownVertex):
        link(cx("ab"), "z")


def test_delete_identity_and_subset():
    c = cx("ab", "bc")
    assert delete(c, set()) == c
    assert delete(c, {"b"}) == SimplicialComplex.from_faces(["a", "c"], vertices="ac")


def test_induced_subcomplex_on_nothing_keeps_empty_face():
    c = cx("ab")
    assert induced_subcomplex(c, set()).has_empty_face_marker


def test_intersect():
    left = cx("ab", "bc")
    right = cx("ab", "cd")
    meet = intersect(left, right)
    assert set(meet.maximal_faces) == {frozenset("ab"), frozenset("c")}


def test_cone_over_marker_is_point():
    got = cone("v", SimplicialComplex.empty_face_only())
    assert got.maximal_faces == (frozenset("v"),)


# --- shelling ---------------------------------------------------------------


def test_shelling_single_face():
    c = cx("abc")
    assert is_shelling(c, [frozenset("abc")]).ok


def test_shelling_two_disjoint_edges():
    c = cx("ab", "cd")
    verdict = is_shelling(c, [frozenset("ab"), frozenset("cd")])
    assert not verdict.ok and verdict.witness == (1, 2)
    verdict = is_shelling(c, [frozenset("cd"), frozenset("ab")])
    assert not verdict.ok and verdict.witness == (1, 2)


def test_shelling_hollow_triangle():
    # hand enumeration: every (i, k) pair meets a codimension-one slot
    c = cx("ab", "bc", "ac")
    order = [frozenset("ab"), frozenset("bc"), frozenset("ac")]
    assert is_shelling(c, order).ok


def test_shelling_order_sensitive():
    c = cx("ab", "bc", "cd")
    good = [frozenset("ab"), frozenset("bc"), frozenset("cd")]
    bad = [frozenset("ab"), frozenset("cd"), frozenset("bc")]
    assert is_shelling(c, good).ok
    assert not is_shelling(c, bad).ok
    # deterministic across runs
    assert is_shelling(c, bad) == is_shelling(c, bad)


def test_shelling_requires_permutation():
    c = cx("ab", "bc")
    with pytest.raises(NotAPermutation):
        is_shelling(c, [frozenset("ab")])


# --- homotopy-type algebra ---------------------------------------------------


def test_susp_of_empty_is_zero_sphere():
    assert susp(HomotopyType.EMPTY) == HomotopyType.wedge_of((0,))


def test_wedge_of_nothing_is_point():
    assert wedge([]) == HomotopyType.point()


def test_susp_shifts_dimensions():
    assert susp(HomotopyType.wedge_of((0, 0))) == HomotopyType.wedge_of((1, 1))


def test_susp_of_point_is_point():
    assert susp(HomotopyType.point()) == HomotopyType.point()


def test_wedge_rejects_empty_in_company():
    with pytest.raises(WedgeWithEmpty):
        wedge([HomotopyType.EMPTY, HomotopyType.point()])
    assert wedge([HomotopyType.EMPTY]) == HomotopyType.EMPTY


@given(st.lists(st.lists(st.integers(0, 4), max_size=4), max_size=5))
def test_wedge_is_multiset_union(dim_lists):
    parts = [HomotopyType.wedge_of(dims) for dims in dim_lists]
    combined = wedge(parts)
    assert sorted(combined.spheres) == sorted(d for dims in dim_lists for d in dims)


@given(st.lists(st.integers(0, 5), max_size=6))
def test_betti_profile_counts(dims):
    h = HomotopyType.wedge_of(dims)
    profile = h.betti_profile()
    for d, count in enumerate(profile):
        assert count == dims.count(d)


def test_json_roundtrip():
    c = cx("ab", "bc")
    again = complex_from_obj(complex_to_obj(c))
    assert again == c
    tupled = SimplicialComplex.from_faces([frozenset({("a", "b"), ("b", "c")})])
    assert complex_from_obj(complex_to_obj(tupled)) == tupled
