from __future__ import annotations

from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings

from oracles import brute_canonical_codes, brute_class_counts, brute_frontier, brute_min_triangular as oracle_min
from strategies import relabelled
from triedge.family import Triple, construct, t_formula
from triedge.formats import from_graph6, to_graph6
from triedge.graph import Graph, counts
from triedge.search import (
    MINIMIZER_CAP,
    REPORT_HEADER,
    brute_min_triangular,
    canonical_form,
    canonical_graph6,
    check_local_optimality,
    count_classes,
    enumerate_graphs,
    iter_graphs,
    max_n,
    pareto_frontier,
    verify_range,
)


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


class TestCanonicalForm:
    @settings(max_examples=200)
    @given(relabelled(max_n=9))
    def test_relabelling_invariant(self, case):
        g, perm = case
        assert canonical_form(g) == canonical_form(g.relabel(perm))
        assert canonical_graph6(g) == canonical_graph6(g.relabel(perm))

    @given(relabelled(max_n=9))
    def test_form_is_isomorphic(self, case):
        g, _ = case
        h = canonical_form(g)
        assert sorted(h.degrees()) == sorted(g.degrees()) and counts(h) == counts(g)
        assert to_graph6(h) == canonical_graph6(g)


class TestEnumeration:
    @pytest.mark.parametrize("n, e, expected", [(4, 3, 3), (3, 3, 1), (5, 10, 1), (0, 0, 1), (1, 0, 1)])
    def test_small_counts(self, n, e, expected):
        seen = []
        assert enumerate_graphs(n, e, seen.append) == expected
        assert all(g.e == e and g.n == n for g in seen)

    def test_four_three_classes(self):
        seen = []
        enumerate_graphs(4, 3, seen.append)
        degree_sequences = sorted(tuple(sorted(g.degrees())) for g in seen)
        # P_4, K_{1,3}, K_3 plus an isolated vertex
        assert degree_sequences == [(0, 2, 2, 2), (1, 1, 1, 3), (1, 1, 2, 2)]

    @pytest.mark.parametrize("n", range(0, 7))
    def test_per_edge_counts_match_brute_force(self, n):
        assert count_classes(n) == brute_class_counts(n)

    def test_totals(self):
        totals = [sum(count_classes(n).values()) for n in range(4, 9)]
        assert totals == [11, 34, 156, 1044, 12346]

    @pytest.mark.parametrize("n", [5, 6])
    def test_each_class_exactly_once(self, n):
        pairs = list(combinations(range(n), 2))
        index = {p: k for k, p in enumerate(pairs)}
        minima = brute_canonical_codes(n)
        seen = []
        for g in iter_graphs(n):
            code = sum(1 << index[p] for p in g.edges())
            seen.append(int(minima[code]))
        assert len(seen) == len(set(seen)) == len(set(minima.tolist()))

    def test_edge_window(self):
        assert sum(1 for _ in iter_graphs(6, 7, 9)) == sum(brute_class_counts(6)[e] for e in (7, 8, 9))

    def test_limit(self, monkeypatch):
        monkeypatch.delenv("TRIEDGE_MAX_N", raising=False)
        assert max_n() == 9
        with pytest.raises(ValueError):
            enumerate_graphs(10, 3, lambda g: None)
        monkeypatch.setenv("TRIEDGE_MAX_N", "4")
        with pytest.raises(ValueError):
            enumerate_graphs(5, 3, lambda g: None)

    def test_bad_edge_count(self):
        with pytest.raises(ValueError):
            enumerate_graphs(4, 7, lambda g: None)


class TestVerification:
    def test_examples(self):
        r = brute_min_triangular(5, 7)
        assert (r.brute_min, r.match) == (5, True)
        assert brute_min_triangular(5, 8).brute_min == 8
        r = brute_min_triangular(5, 10)
        assert r.brute_min == 10 and r.minimizers == (to_graph6(Graph.complete(5)),)

    def test_ranges(self):
        assert [r.e for r in verify_range(5)] == [7, 8, 9, 10]
        assert all(r.match for r in verify_range(5))
        assert [r.e for r in verify_range(4)] == [5, 6]
        (only,) = verify_range(3)
        assert (only.e, only.brute_min) == (3, 3)

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_minimum_matches_labelled_brute_force(self, n):
        oracle = oracle_min(n)
        for r in verify_range(n):
            assert r.brute_min == oracle[r.e]
            assert r.brute_min <= r.formula_value

    def test_minimizers_are_canonical_and_optimal(self):
        for r in verify_range(6):
            assert list(r.minimizers) == sorted(r.minimizers)
            assert r.num_minimizers == len(r.minimizers) and not r.overflow
            for text in r.minimizers:
                g = from_graph6(text)
                assert canonical_graph6(g) == text
                e, t = counts(g)
                assert e == r.e and e - t == r.brute_min

    def test_csv(self):
        assert REPORT_HEADER == "n,e,brute_min,formula_g,match,num_minimizers,all_in_family"
        assert verify_range(5)[0].csv_row() == "5,7,5,5,true,1,true"

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            brute_min_triangular(5, 6)

    def test_parallel_matches_sequential(self):
        assert verify_range(7, jobs=1) == verify_range(7, jobs=3)

    def test_cap(self):
        assert MINIMIZER_CAP == 1000


class TestFrontier:
    def test_small(self):
        assert [(p.e, p.t) for p in pareto_frontier(2)] == [(1, 1)]
        pts = {(p.e, p.t) for p in pareto_frontier(3)}
        assert {(3, 0), (2, 2)} <= pts

    def test_contains_family_point(self):
        pts = {(p.e, p.t): p.witness for p in pareto_frontier(5)}
        assert (7, 2) in pts
        assert counts(from_graph6(pts[(7, 2)])) == (7, 2)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_matches_labelled_brute_force(self, n):
        assert [(p.e, p.t) for p in pareto_frontier(n)] == brute_frontier(n)

    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_witnesses(self, n):
        for p in pareto_frontier(n):
            g = from_graph6(p.witness)
            assert counts(g) == (p.e, p.t)
            assert check_local_optimality(g)
            assert p.witness == canonical_graph6(g)

    @pytest.mark.parametrize("n", [5, 6, 7, 8])
    def test_family_attains_frontier_above_half(self, n):
        for p in pareto_frontier(n):
            if p.e > n * n // 4:
                assert p.t == t_formula(n, p.e).value


class TestLocalOptimality:
    def test_family_member(self):
        assert check_local_optimality(construct(Triple(2, 2, 1)))

    def test_star(self):
        assert not check_local_optimality(star(4))

    def test_complete(self):
        assert check_local_optimality(Graph.complete(6))

    def test_empty(self):
        assert check_local_optimality(Graph.empty(0))


def test_formula_range_sizes():
    assert len(verify_range(8)) == comb(8, 2) - 16
