from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given

from strategies import graphs
from triedge.family import Triple, construct, profile
from triedge.formats import (
    FormatError,
    detect_format,
    from_edge_list,
    from_graph6,
    from_weighted_text,
    to_edge_list,
    to_graph6,
    to_weighted_text,
)
from triedge.graph import Graph, counts
from triedge.weighted import WeightedGraph


class TestGraph6:
    # strings encoded by hand from the column-wise upper triangle
    @pytest.mark.parametrize("g, text", [
        (Graph.empty(0), "?"),
        (Graph.empty(1), "@"),
        (Graph.complete(2), "A_"),
        (Graph.complete(3), "Bw"),
        (Graph.complete(4), "C~"),
        (Graph.cycle(5), "Dhc"),
    ])
    def test_known_strings(self, g, text):
        assert to_graph6(g) == text
        assert from_graph6(text) == g

    def test_header_is_optional(self):
        assert from_graph6(">>graph6<<Bw") == Graph.complete(3)
        assert to_graph6(Graph.complete(3), header=True) == ">>graph6<<Bw"

    def test_long_order_prefix(self):
        g = Graph.cycle(100)
        text = to_graph6(g)
        assert text.startswith("~?@c")
        assert from_graph6(text) == g

    @given(graphs(max_n=14))
    def test_round_trip(self, g):
        assert from_graph6(to_graph6(g)) == g

    @pytest.mark.parametrize("bad", ["", "Bww", "B", "C\x7f~"])
    def test_rejects_malformed(self, bad):
        with pytest.raises(FormatError):
            from_graph6(bad)

    def test_family_round_trip_keeps_profile(self):
        t = Triple(4, 6, 5)
        g = from_graph6(to_graph6(construct(t)))
        p = profile(t)
        assert counts(g) == (p.edges, p.non_triangular)


class TestEdgeList:
    @given(graphs(max_n=12))
    def test_round_trip(self, g):
        assert from_edge_list(to_edge_list(g)) == g

    def test_comments_and_blank_lines(self):
        text = "# a triangle\n3 3\n\n0 1  # first\n1 2\n2 0\n"
        assert from_edge_list(text) == Graph.complete(3)

    @pytest.mark.parametrize("bad", ["", "3 2\n0 1\n", "3 1\n0 x\n", "3 2\n0 1\n1 0\n", "2 1\n0 2\n"])
    def test_rejects_malformed(self, bad):
        with pytest.raises(FormatError):
            from_edge_list(bad)


class TestWeightedText:
    def test_round_trip(self):
        wg = WeightedGraph(Graph.from_edges(3, [(0, 1), (1, 2)]), (Fraction(3, 2), 2, Fraction(5, 2)), (4, 7, 9))
        text = to_weighted_text(wg)
        assert "4 3/2" in text and "7 2" in text
        assert from_weighted_text(text) == wg

    def test_unknown_vertex(self):
        with pytest.raises(FormatError):
            from_weighted_text("2 1\n0 1\n1 1\n0 5\n")

    def test_negative_weight(self):
        with pytest.raises(FormatError):
            from_weighted_text("2 0\n0 -1\n1 3\n")


class TestDetect:
    @pytest.mark.parametrize("path, text, fmt", [
        ("x.g6", "", "g6"),
        ("x.graph6", "", "g6"),
        ("x.el", "", "el"),
        ("x.wg", "", "wg"),
        ("-", "Bw\n", "g6"),
        ("-", "3 1\n0 1\n", "el"),
        ("-", ">>graph6<<Bw", "g6"),
    ])
    def test_detect(self, path, text, fmt):
        assert detect_format(path, text) == fmt
