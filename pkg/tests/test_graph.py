import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from domatch import (
    INFINITE_GIRTH,
    DomainError,
    Edge,
    EdgeListFormatError,
    Graph,
    connected_components,
    degree_two_vertices,
    girth,
    induced_subgraph,
    is_connected,
    is_cycle_of_length,
    min_degree,
    parse_edge_list,
    serialize_edge_list,
    support_classification,
    triangle_book_parameter,
)
from domatch.generators import cycle, path, spider, subdivided_grid, triangle_book

import helpers


@st.composite
def small_graphs(draw, max_vertices=8):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pool), unique=True)) if pool else []
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# Edge


def test_edge_canonical_orientation():
    assert Edge.of(3, 1) == Edge(1, 3)
    assert Edge.of(1, 3) == Edge(1, 3)
    assert Edge.of(1, 3).other(1) == 3
    assert Edge.of(1, 3).other(3) == 1


def test_edge_rejects_self_loop():
    with pytest.raises(DomainError):
        Edge.of(2, 2)


def test_edge_other_rejects_foreign_vertex():
    with pytest.raises(DomainError):
        Edge.of(1, 3).other(2)


# ---------------------------------------------------------------------------
# Graph construction


def test_graph_adjacency_and_degrees():
    g = Graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.vertex_count == 3
    assert g.edge_count == 3
    assert g.neighbors(0) == {1, 2}
    assert g.degree(1) == 2
    assert g.has_edge(2, 0) and g.has_edge(0, 2)
    assert g.edges() == (Edge(0, 1), Edge(0, 2), Edge(1, 2))


def test_graph_collapses_duplicate_edges():
    g = Graph(2, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count == 1


def test_graph_rejects_bad_input():
    with pytest.raises(DomainError):
        Graph(-1)
    with pytest.raises(DomainError):
        Graph(2, [(0, 2)])
    with pytest.raises(DomainError):
        Graph(2, [(0, 0)])
    with pytest.raises(DomainError):
        Graph(2, [], labels=["a"])
    with pytest.raises(DomainError):
        Graph(2, [], labels=["a", "a"])
    with pytest.raises(DomainError):
        Graph(1, [], labels=["two words"])
    with pytest.raises(DomainError):
        Graph(1, [], labels=["#a"])
    with pytest.raises(DomainError):
        Graph(1, [], labels=["vertices:"])


def test_graph_equality_includes_labels():
    a = Graph(2, [(0, 1)])
    b = Graph(2, [(0, 1)], labels=["x", "y"])
    assert a != b
    assert a == Graph(2, [(1, 0)])
    assert hash(a) == hash(Graph(2, [(0, 1)]))


def test_vertex_with_label():
    g = Graph(2, [(0, 1)], labels=["x", "y"])
    assert g.vertex_with_label("y") == 1
    with pytest.raises(DomainError):
        g.vertex_with_label("z")


# ---------------------------------------------------------------------------
# edge-list text format


def test_parse_smallest_path():
    g = parse_edge_list("a b\nb c")
    assert g.vertex_count == 3
    assert g.edge_count == 2
    assert g.labels == ("a", "b", "c")


def test_parse_triangle():
    g = parse_edge_list("u v\nu w1\nv w1")
    assert g.vertex_count == 3
    assert triangle_book_parameter(g) == 1


def test_parse_duplicate_edge_collapses():
    g = parse_edge_list("a b\na b")
    assert g.edge_count == 1


def test_parse_comments_blanks_and_header():
    text = "# a comment\n\nvertices: lonely a\na b\n"
    g = parse_edge_list(text)
    assert g.vertex_count == 3
    assert g.labels == ("lonely", "a", "b")
    assert g.degree(0) == 0


def test_parse_errors():
    with pytest.raises(EdgeListFormatError):
        parse_edge_list("a\n")
    with pytest.raises(EdgeListFormatError):
        parse_edge_list("a b c\n")
    with pytest.raises(EdgeListFormatError):
        parse_edge_list("a a\n")
    with pytest.raises(EdgeListFormatError):
        parse_edge_list("a #b\n")
    assert issubclass(EdgeListFormatError, ValueError)


def test_parse_error_names_line():
    with pytest.raises(EdgeListFormatError, match="line 2"):
        parse_edge_list("a b\nbroken\n")


def test_round_trip_fixed_graphs():
    for g in [spider(2), subdivided_grid(2), triangle_book(3), path(4)]:
        assert parse_edge_list(serialize_edge_list(g)) == g


def test_round_trip_preserves_isolated_vertices():
    g = parse_edge_list("vertices: a b c\nb c\n")
    again = parse_edge_list(serialize_edge_list(g))
    assert again == g
    assert again.degree(0) == 0


@given(small_graphs())
def test_round_trip_random(g):
    assert parse_edge_list(serialize_edge_list(g)) == g


@given(small_graphs())
def test_degree_sum_is_twice_edge_count(g):
    assert sum(g.degree(v) for v in g.vertices()) == 2 * g.edge_count


# ---------------------------------------------------------------------------
# degree queries


def test_min_degree():
    assert min_degree(cycle(5)) == 2
    assert min_degree(spider(2)) == 1
    assert min_degree(triangle_book(3)) == 2
    with pytest.raises(DomainError):
        min_degree(Graph(0))


def test_degree_two_vertices():
    assert degree_two_vertices(cycle(6)) == frozenset(range(6))
    assert degree_two_vertices(Graph(2, [(0, 1)])) == frozenset()
    g = subdivided_grid(2)
    expected = {
        g.vertex_with_label(name)
        for name in ["u0", "u2", "v0", "v2", "a0", "a1", "b0", "b1"]
    }
    assert degree_two_vertices(g) == expected
    assert len(expected) == 8


# ---------------------------------------------------------------------------
# support classification


def test_support_classification_path():
    g = parse_edge_list("a b\nb c\nc d")
    got = support_classification(g)
    b, c = g.vertex_with_label("b"), g.vertex_with_label("c")
    assert got.sup == {b, c}
    assert got.s_plus == {b, c}
    assert got.s_minus == frozenset()


def test_support_classification_spider():
    g = spider(3)
    got = support_classification(g)
    expected = {g.vertex_with_label(f"y{i}") for i in (1, 2, 3)}
    assert got.sup == expected
    assert got.s_plus == frozenset()
    assert got.s_minus == expected


def test_support_classification_leafless():
    got = support_classification(cycle(6))
    assert got.sup == got.s_plus == got.s_minus == frozenset()


@given(small_graphs())
def test_support_classification_invariants(g):
    got = support_classification(g)
    assert got.s_plus | got.s_minus == got.sup
    assert got.s_plus & got.s_minus == frozenset()
    leaves = {v for v in g.vertices() if g.degree(v) == 1}
    for v in got.sup:
        assert g.neighbors(v) & leaves
    # within sup, s_plus members have company and s_minus members are alone
    for v in got.s_plus:
        assert g.neighbors(v) & got.sup
    for v in got.s_minus:
        assert not (g.neighbors(v) & got.sup)


# ---------------------------------------------------------------------------
# connectivity


def test_connected_components_disjoint_cycles():
    g = helpers.disjoint_union(cycle(3), cycle(4))
    comps = connected_components(g)
    assert [len(c) for c in comps] == [3, 4]
    assert comps[0] == frozenset(range(3))


def test_connected_components_isolated_vertices():
    comps = connected_components(Graph(2))
    assert comps == [frozenset({0}), frozenset({1})]


def test_connected_components_ordering():
    # ordered by the smallest vertex id each component contains
    g = Graph(4, [(1, 3)])
    assert connected_components(g) == [
        frozenset({0}),
        frozenset({1, 3}),
        frozenset({2}),
    ]


def test_is_connected():
    assert is_connected(subdivided_grid(2))
    assert not is_connected(Graph(2))


@given(small_graphs())
def test_components_partition(g):
    comps = connected_components(g)
    union = set()
    for c in comps:
        assert not (union & c)
        union |= c
    assert union == set(g.vertices())


# ---------------------------------------------------------------------------
# girth


def test_girth_fixed_values():
    assert girth(spider(3)) == INFINITE_GIRTH
    assert girth(triangle_book(2)) == 3
    assert girth(subdivided_grid(2)) == 6
    for n in range(3, 10):
        assert girth(cycle(n)) == n
    assert girth(helpers.petersen_graph()) == 5


def test_girth_infinite_compares_with_ints():
    assert girth(path(5)) > 6
    assert math.isinf(girth(path(5)))


@given(small_graphs())
def test_girth_matches_brute_force(g):
    assert girth(g) == helpers.brute_girth(g)


@given(small_graphs())
def test_girth_forest_test(g):
    forest = g.edge_count == g.vertex_count - len(connected_components(g))
    assert (girth(g) == INFINITE_GIRTH) == forest


# ---------------------------------------------------------------------------
# induced subgraphs


def test_induced_subgraph_of_cycle_is_path():
    sub, ids = induced_subgraph(cycle(6), range(5))
    assert ids == (0, 1, 2, 3, 4)
    assert sub.edge_count == 4
    assert sorted(sub.degree(v) for v in sub.vertices()) == [1, 1, 2, 2, 2]


def test_induced_subgraph_triangle_of_book():
    g = triangle_book(2)
    keep = [g.vertex_with_label(x) for x in ("u", "v", "w1")]
    sub, _ = induced_subgraph(g, keep)
    assert is_cycle_of_length(sub, 3)


def test_induced_subgraph_grid_hexagon():
    # the closed neighborhood of an opposite subdivision pair is a 6-cycle
    g = subdivided_grid(2)
    a1, b1 = g.vertex_with_label("a1"), g.vertex_with_label("b1")
    keep = set(g.neighbors(a1)) | set(g.neighbors(b1)) | {a1, b1}
    sub, ids = induced_subgraph(g, keep)
    assert is_cycle_of_length(sub, 6)
    assert ids == tuple(sorted(keep))


def test_induced_subgraph_keeps_labels():
    g = spider(2)
    sub, ids = induced_subgraph(g, [0, 1, 2])
    assert sub.labels == tuple(g.label(v) for v in ids)


def test_induced_subgraph_rejects_unknown_vertex():
    with pytest.raises(DomainError):
        induced_subgraph(cycle(3), [0, 5])


# ---------------------------------------------------------------------------
# small-family detection


def test_is_cycle_of_length():
    assert is_cycle_of_length(cycle(6), 6)
    assert not is_cycle_of_length(cycle(6), 3)
    assert is_cycle_of_length(triangle_book(1), 3)
    assert not is_cycle_of_length(path(4), 4)
    assert not is_cycle_of_length(Graph(2, [(0, 1)]), 2)
    assert not is_cycle_of_length(helpers.disjoint_union(cycle(3), cycle(3)), 6)


def test_triangle_book_parameter():
    for n in range(1, 5):
        assert triangle_book_parameter(triangle_book(n)) == n
    assert triangle_book_parameter(cycle(3)) == 1
    assert triangle_book_parameter(cycle(4)) is None
    assert triangle_book_parameter(cycle(6)) is None
    k4 = Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert triangle_book_parameter(k4) is None


def test_triangle_book_parameter_rejects_near_misses():
    # a pendant vertex breaks the exact-neighborhood requirement
    g = parse_edge_list("u v\nu w1\nv w1\nw1 t")
    assert triangle_book_parameter(g) is None
    assert triangle_book_parameter(helpers.disjoint_union(cycle(3), cycle(3))) is None


def test_triangle_book_structural_invariants():
    for n in range(1, 5):
        g = triangle_book(n)
        assert min_degree(g) == 2
        assert girth(g) == 3
        assert g.edge_count == 2 * n + 1
