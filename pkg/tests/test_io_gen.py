import pytest

from lexid import (
    Graph,
    ParseError,
    cycle_graph,
    find_twins,
    gen,
    gnp_graph,
    grid_graph,
    hypercube_graph,
    nonminimal_grid_fixture,
    parse_dimacs,
    parse_edge_list,
    parse_graph,
    path_graph,
    to_dimacs,
    to_edge_list,
)

from corpus import small_corpus

FIXTURE_EDGES = {
    (1, 2), (2, 9), (3, 4), (3, 8), (6, 7), (5, 7),
    (1, 4), (4, 6), (2, 3), (3, 7), (8, 9), (5, 8),
}


class TestParseEdgeList:
    def test_p3(self):
        assert parse_edge_list("3 2\n1 2\n2 3") == path_graph(3)

    def test_single_vertex(self):
        assert parse_edge_list("1 0") == Graph(1)

    def test_self_loop_reports_line(self):
        with pytest.raises(ParseError, match="self-loop") as info:
            parse_edge_list("2 1\n1 1")
        assert info.value.line == 2

    def test_reversed_endpoints_rejected(self):
        with pytest.raises(ParseError, match="u < v"):
            parse_edge_list("3 1\n2 1")

    def test_duplicate_edge(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse_edge_list("3 2\n1 2\n1 2")

    def test_count_mismatch(self):
        with pytest.raises(ParseError, match="declares 2"):
            parse_edge_list("3 2\n1 2")

    def test_extra_line(self):
        with pytest.raises(ParseError, match="extra"):
            parse_edge_list("3 1\n1 2\n2 3")

    def test_missing_header(self):
        with pytest.raises(ParseError, match="header"):
            parse_edge_list("")

    def test_non_integer_token(self):
        with pytest.raises(ParseError, match="integer"):
            parse_edge_list("3 x")

    def test_comments_blanks_and_crlf(self):
        text = "# a comment\r\n\r\n3 2\r\n1 2\r\n\r\n# eof\r\n2 3\r\n"
        assert parse_edge_list(text) == path_graph(3)


class TestParseDimacs:
    def test_p3(self):
        assert parse_dimacs("p edge 3 2\ne 1 2\ne 2 3") == path_graph(3)

    def test_comment_then_single_vertex(self):
        assert parse_dimacs("c comment\np edge 1 0") == Graph(1)

    def test_edge_before_problem_line(self):
        with pytest.raises(ParseError, match="before problem"):
            parse_dimacs("e 1 2")

    def test_duplicate_problem_line(self):
        with pytest.raises(ParseError, match="duplicate problem"):
            parse_dimacs("p edge 2 0\np edge 2 0")

    def test_unknown_line_type(self):
        with pytest.raises(ParseError, match="unknown"):
            parse_dimacs("p edge 2 0\nq 1 2")

    def test_either_endpoint_order_accepted(self):
        assert parse_dimacs("p edge 3 2\ne 2 1\ne 2 3") == path_graph(3)

    def test_duplicate_across_orientations(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse_dimacs("p edge 3 2\ne 1 2\ne 2 1")


class TestRoundTrip:
    def test_both_formats_on_corpus_sample(self):
        for g in small_corpus()[:40]:
            assert parse_edge_list(to_edge_list(g)) == g
            assert parse_dimacs(to_dimacs(g)) == g

    def test_auto_detection(self):
        g = path_graph(4)
        assert parse_graph(to_edge_list(g)) == g
        assert parse_graph(to_dimacs(g)) == g

    def test_unknown_format_rejected(self):
        with pytest.raises(ValueError, match="format"):
            parse_graph("1 0", fmt="graphml")


class TestGenerators:
    def test_path(self):
        assert gen("path", [3]) == path_graph(3) == parse_edge_list("3 2\n1 2\n2 3")

    def test_grid_3x3_shape(self):
        g = gen("grid", [3, 3])
        assert g.n == 9 and len(g.edges) == 12

    def test_grid_row_major_labels(self):
        assert grid_graph(2, 3).edges == frozenset(
            {(1, 2), (2, 3), (4, 5), (5, 6), (1, 4), (2, 5), (3, 6)}
        )

    def test_cycle(self):
        g = cycle_graph(5)
        assert g.n == 5 and (1, 5) in g.edges and len(g.edges) == 5
        with pytest.raises(ValueError):
            cycle_graph(2)

    def test_hypercube(self):
        g = hypercube_graph(3)
        assert g.n == 8 and len(g.edges) == 12
        assert hypercube_graph(0) == Graph(1)

    def test_gnp_deterministic(self):
        assert gnp_graph(8, 0.5, seed=7) == gnp_graph(8, 0.5, seed=7)
        assert gen("gnp", [8, 0.5], seed=7) == gnp_graph(8, 0.5, seed=7)

    def test_gnp_seed_matters(self):
        runs = {gnp_graph(12, 0.5, seed=s).edges for s in range(6)}
        assert len(runs) > 1

    def test_gnp_extremes(self):
        assert not gnp_graph(6, 0.0, seed=1).edges
        assert len(gnp_graph(6, 1.0, seed=1).edges) == 15

    def test_gnp_requires_seed(self):
        with pytest.raises(ValueError, match="seed"):
            gen("gnp", [8, 0.5])

    def test_invalid_params(self):
        with pytest.raises(ValueError):
            gen("path", [])
        with pytest.raises(ValueError):
            gen("grid", [0, 3])
        with pytest.raises(ValueError):
            gen("gnp", [8, 1.5], seed=1)
        with pytest.raises(ValueError):
            gen("nonsense", [3])


class TestFixture:
    def test_shape(self):
        g = nonminimal_grid_fixture()
        assert g.n == 9 and len(g.edges) == 12
        assert g.edges == frozenset(FIXTURE_EDGES)

    def test_vertex_three_neighborhood(self):
        g = nonminimal_grid_fixture()
        assert g.neighborhood_matrix.support(3) == (2, 3, 4, 7, 8)

    def test_twin_free(self):
        assert find_twins(nonminimal_grid_fixture()) is None

    def test_is_relabeled_3x3_grid(self):
        g = nonminimal_grid_fixture()
        assert sorted(g.degrees[1:]) == sorted(grid_graph(3, 3).degrees[1:])
