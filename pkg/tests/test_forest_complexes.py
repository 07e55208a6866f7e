import pytest

from conftest import all_dags, random_dag, random_digraph, random_valid_roots, rng_for

from gctk.complexes import is_shelling, reduced_euler
from gctk.errors import (
    CyclicGraph,
    EmptyRootSet,
    NoEdges,
    NoSuchForest,
    RootMismatch,
    UnknownEdge,
)
from gctk.forests import (
    dag_contractibility_report,
    dag_euler_characteristic,
    dag_homotopy_type,
    find_nice_edge,
    forest_complex,
    forest_roots,
    is_directed_forest,
    is_nice_edge,
    maximal_forests,
    root_path_partition,
    rooted_forest_complex,
    rooted_forests,
    shelling_order,
)
from gctk.graphs import DirectedGraph, sources
from gctk.homology import betti, matches


def dg(vertices, edges):
    return DirectedGraph(vertices, edges)


def test_is_directed_forest():
    g = dg("abc", [("a", "b"), ("b", "c"), ("a", "c"), ("b", "a")])
    assert is_directed_forest(g, [("a", "b"), ("b", "c")])
    assert not is_directed_forest(g, [("a", "c"), ("b", "c")])
    assert not is_directed_forest(g, [("a", "b"), ("b", "a")])
    with pytest.raises(UnknownEdge):
        is_directed_forest(g, [("c", "b")])


def test_forest_complex_examples():
    single = forest_complex(dg("ab", [("a", "b")]))
    assert single.maximal_faces == (frozenset({("a", "b")}),)

    conflict = forest_complex(dg("abc", [("a", "c"), ("b", "c")]))
    assert len(conflict.maximal_faces) == 2
    assert all(len(f) == 1 for f in conflict.maximal_faces)

    square = forest_complex(dg("abcd", [("a", "c"), ("b", "c"), ("a", "d"), ("b", "d")]))
    assert len(square.maximal_faces) == 4
    assert betti(square).normalized() == (0, 1)


def test_forest_complex_edgeless_is_empty_space():
    c = forest_complex(dg("ab", []))
    assert c.is_empty and c.has_empty_face_marker


def test_rooted_forest_complex_examples():
    two = rooted_forest_complex(dg("abc", [("a", "b"), ("c", "b")]), {"a", "c"})
    assert set(two.maximal_faces) == {frozenset({("a", "b")}), frozenset({("c", "b")})}

    simplex = rooted_forest_complex(dg("abc", [("a", "b"), ("a", "c")]), {"a"})
    assert simplex.maximal_faces == (frozenset({("a", "b"), ("a", "c")}),)

    kept = rooted_forest_complex(dg("ab", [("a", "b"), ("b", "a")]), {"a"})
    assert kept.maximal_faces == (frozenset({("a", "b")}),)


def test_rooted_forests_errors():
    g = dg("abc", [("a", "b")])
    with pytest.raises(EmptyRootSet):
        rooted_forests(g, set())
    with pytest.raises(NoSuchForest):
        rooted_forests(g, {"a"})  # c keeps no in-edge, so it is always a root


def test_roots_follow_spanning_convention():
    g = dg("abc", [("a", "c"), ("b", "c")])
    assert forest_roots(g, [("a", "c")]) == {"a", "b"}


# --- partition and nice edges -------------------------------------------------


def _forward_paths(g, face):
    """Oracle: root-to-vertex paths walked forward from the roots."""
    children = {}
    for x, y in face:
        children.setdefault(x, []).append(y)
    paths = {}
    stack = [(r, (r,)) for r in forest_roots(g, face)]
    while stack:
        v, path = stack.pop()
        paths[v] = path
        for w in children.get(v, ()):
            stack.append((w, path + (w,)))
    return paths


def _partition_oracle(g, faces):
    per_vertex = {v: set() for v in g.vertices}
    for face in faces:
        for v, path in _forward_paths(g, face).items():
            per_vertex[v].add(path)
    left = {v for v, paths in per_vertex.items() if len(paths) == 1}
    return left, set(g.vertices) - left


def test_partition_single_face_all_left():
    g = dg("abc", [("a", "b"), ("b", "c")])
    faces = rooted_forests(g, {"a"})
    part = root_path_partition(g, {"a"}, faces)
    assert set(part.left) == {"a", "b", "c"} and part.right == ()


def test_partition_two_parents():
    g = dg("abc", [("a", "b"), ("c", "b")])
    faces = rooted_forests(g, {"a", "c"})
    part = root_path_partition(g, {"a", "c"}, faces)
    assert set(part.left) == {"a", "c"} and set(part.right) == {"b"}
    assert _partition_oracle(g, faces) == (set(part.left), set(part.right))


def test_partition_branching_example():
    g = dg("abcd", [("a", "b"), ("b", "c"), ("b", "d"), ("d", "c")])
    faces = rooted_forests(g, {"a"})
    assert len(faces) == 2
    part = root_path_partition(g, {"a"}, faces)
    assert set(part.left) == {"a", "b", "d"} and set(part.right) == {"c"}
    assert _partition_oracle(g, faces) == ({"a", "b", "d"}, {"c"})


def test_partition_rejects_wrong_roots():
    g = dg("abc", [("a", "b"), ("c", "b")])
    with pytest.raises(RootMismatch):
        root_path_partition(g, {"a"}, [frozenset({("c", "b")})])


def test_partition_oracle_agrees_on_random_instances():
    rng = rng_for("forests-partition")
    done = 0
    while done < 60:
        g = random_digraph(rng, rng.randint(2, 6), rng.randint(1, 9))
        roots = random_valid_roots(rng, g)
        if not roots:
            continue
        faces = rooted_forests(g, roots)
        part = root_path_partition(g, roots, faces)
        assert _partition_oracle(g, faces) == (set(part.left), set(part.right))
        done += 1


def test_find_nice_edge_examples():
    both_cross = dg("abc", [("a", "b"), ("c", "b")])
    assert find_nice_edge(both_cross, {"a", "c"}) == ("a", "b")

    assert find_nice_edge(dg("ab", [("a", "b")]), {"a"}) is None

    branching = dg("abcd", [("a", "b"), ("b", "c"), ("b", "d"), ("d", "c")])
    assert find_nice_edge(branching, {"a"}) in {("b", "c"), ("d", "c")}


def test_is_nice_edge_definition():
    g = dg("ab", [("a", "b")])
    assert not is_nice_edge(g, forest_complex(g), ("a", "b"))

    g2 = dg("abc", [("a", "c"), ("b", "c"), ("c", "a")])
    sub = rooted_forest_complex(g2, {"a", "b"})
    assert is_nice_edge(g2, sub, ("a", "c"))
    with pytest.raises(UnknownEdge):
        is_nice_edge(g2, sub, ("b", "a"))


def test_edges_returned_by_find_nice_edge_are_nice():
    rng = rng_for("forests-nice")
    done = 0
    while done < 40:
        g = random_digraph(rng, rng.randint(2, 5), rng.randint(1, 8))
        roots = random_valid_roots(rng, g)
        if not roots:
            continue
        edge = find_nice_edge(g, roots)
        if edge is None:
            continue
        assert is_nice_edge(g, rooted_forest_complex(g, roots), edge)
        done += 1


def test_crossing_edges_point_left_to_right():
    rng = rng_for("forests-crossing")
    done = 0
    while done < 40:
        g = random_digraph(rng, rng.randint(2, 6), rng.randint(1, 9))
        roots = random_valid_roots(rng, g)
        if not roots:
            continue
        faces = rooted_forests(g, roots)
        part = root_path_partition(g, roots, faces)
        left, right = set(part.left), set(part.right)
        for face in faces:
            for x, y in face:
                assert not (x in right and y in left)
        done += 1


# --- shelling orders -----------------------------------------------------------


def test_shelling_order_base_cases():
    g = dg("abc", [("a", "b"), ("a", "c")])
    assert shelling_order(g, {"a"}) == [frozenset({("a", "b"), ("a", "c")})]

    forked = dg("abc", [("a", "c"), ("b", "c")])
    order = shelling_order(forked, {"a", "b"})
    assert order == [frozenset({("a", "c")}), frozenset({("b", "c")})]
    assert is_shelling(rooted_forest_complex(forked, {"a", "b"}), order).ok
    assert is_shelling(rooted_forest_complex(forked, {"a", "b"}), order[::-1]).ok


def test_shelling_order_random_instances():
    rng = rng_for("forests-shelling")
    done = 0
    while done < 60:
        g = random_digraph(rng, rng.randint(2, 6), rng.randint(1, 9))
        roots = random_valid_roots(rng, g)
        if not roots:
            continue
        order = shelling_order(g, roots)
        complex_ = rooted_forest_complex(g, roots)
        assert is_shelling(complex_, order).ok
        done += 1


# --- closed forms for acyclic digraphs ------------------------------------------


def test_euler_formula_examples():
    assert dag_euler_characteristic(dg("abc", [("a", "c"), ("b", "c")])) == 1
    assert dag_euler_characteristic(
        dg("abcd", [("a", "c"), ("b", "c"), ("a", "d"), ("b", "d")])) == -1
    assert dag_euler_characteristic(dg("ab", [("a", "b")])) == 0
    with pytest.raises(CyclicGraph):
        dag_euler_characteristic(dg("ab", [("a", "b"), ("b", "a")]))
    with pytest.raises(NoEdges):
        dag_euler_characteristic(dg("ab", []))


def test_homotopy_formula_examples():
    assert dag_homotopy_type(dg("abc", [("a", "c"), ("b", "c")])).spheres == (0,)
    square = dg("abcd", [("a", "c"), ("b", "c"), ("a", "d"), ("b", "d")])
    assert dag_homotopy_type(square).spheres == (1,)
    assert dag_homotopy_type(dg("abc", [("a", "b"), ("a", "c")])).is_contractible


def test_homotopy_formula_edgeless_warns_empty():
    with pytest.warns(UserWarning):
        h = dag_homotopy_type(dg("ab", []))
    assert h.empty


def test_euler_formula_exhaustive_small():
    for n in (2, 3, 4):
        for g in all_dags(n):
            if not g.edges:
                continue
            assert reduced_euler(forest_complex(g)) == dag_euler_characteristic(g)


def test_maximal_forest_size_is_vertex_count_minus_sources():
    rng = rng_for("forests-pure")
    for _ in range(60):
        g = random_dag(rng, rng.randint(1, 6))
        expected = len(g.vertices) - len(sources(g))
        for f in maximal_forests(g):
            assert len(f) == expected


def test_homotopy_matches_oracle_sampled():
    rng = rng_for("forests-oracle")
    for _ in range(60):
        g = random_dag(rng, rng.randint(1, 6))
        c = forest_complex(g)
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            h = dag_homotopy_type(g)
        assert matches(c, h).ok


def test_contractibility_report_examples():
    contractible = dag_contractibility_report(dg("ab", [("a", "b")]))
    assert contractible.all_agree() and contractible.contractible

    sphere = dag_contractibility_report(dg("abc", [("a", "c"), ("b", "c")]))
    assert sphere.all_agree() and not sphere.contractible

    with pytest.raises(NoEdges):
        dag_contractibility_report(dg("ab", []))


def test_contractibility_report_random():
    rng = rng_for("forests-contractibility")
    done = 0
    while done < 60:
        g = random_dag(rng, rng.randint(2, 6))
        if not g.edges:
            continue
        assert dag_contractibility_report(g).all_agree()
        done += 1
