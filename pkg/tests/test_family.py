from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import family_edges, naive_counts
from triedge.family import (
    FamilyProfile,
    FormulaResult,
    Triple,
    construct,
    g_formula,
    profile,
    t_formula,
    triples,
    witness_construction,
)
from triedge.graph import Graph, counts


class TestConstruct:
    def test_sizes(self):
        g = construct(Triple(4, 6, 5))
        assert (g.n, g.e) == (15, 60)

    def test_clique_only(self):
        assert construct(Triple(6, 0, 0)) == Graph.complete(6)

    def test_bipartite_only(self):
        g = construct(Triple(0, 2, 3))
        assert sorted(g.edges()) == sorted((i, j) for i in range(2) for j in range(2, 5))

    @given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
    def test_matches_definition(self, a, b, c):
        assert set(construct(Triple(a, b, c)).edges()) == family_edges(a, b, c)

    def test_negative_part(self):
        with pytest.raises(ValueError):
            construct(Triple(-1, 2, 2))


class TestProfile:
    def test_examples(self):
        assert profile(Triple(4, 6, 5)) == FamilyProfile(60, 30)
        assert profile(Triple(1, 3, 2)) == FamilyProfile(9, 9)
        assert profile(Triple(2, 2, 1)) == FamilyProfile(7, 2)

    def test_all_small_triples_against_naive_count(self):
        for n in range(13):
            for t in triples(n):
                p = profile(t)
                assert (p.edges, p.non_triangular) == naive_counts(n, family_edges(*t)), t

    def test_triple_count_at_twelve(self):
        assert len(list(triples(12))) == 91
        assert sum(1 for n in range(13) for _ in triples(n)) == 455


class TestFormulas:
    def test_g_examples(self):
        r = g_formula(5, 7)
        assert r.value == 5 and Triple(2, 2, 1) in r.argmins
        assert g_formula(5, 8).value == 8
        for n in range(3, 9):
            top = g_formula(n, comb(n, 2))
            assert top.value == comb(n, 2)
            assert Triple(n, 0, 0) in top.argmins

    def test_t_examples(self):
        assert t_formula(6, 9).value == 9
        r = t_formula(5, 7)
        assert r.value == 2 and r.argmins == (Triple(2, 2, 1),)
        assert t_formula(7, 21).value == 0

    @pytest.mark.parametrize("n, e", [(5, 6), (5, 11), (-1, 0)])
    def test_g_range(self, n, e):
        with pytest.raises(ValueError):
            g_formula(n, e)

    def test_t_range(self):
        with pytest.raises(ValueError):
            t_formula(5, 11)

    def test_argmins_are_all_optimal_triples(self):
        for n in range(4, 12):
            for e in range(n * n // 4 + 1, comb(n, 2) + 1):
                r = g_formula(n, e)
                optimal = [t for t in triples(n) if profile(t).edges >= e
                           and e - profile(t).non_triangular == r.value]
                assert list(r.argmins) == optimal

    def test_duality_and_monotonicity(self):
        for n in range(3, 25):
            lo, hi = n * n // 4 + 1, comb(n, 2)
            gs = [g_formula(n, e).value for e in range(lo, hi + 1)]
            ts = [t_formula(n, e).value for e in range(0, hi + 1)]
            for e, g in zip(range(lo, hi + 1), gs):
                assert g + ts[e] == e
            assert gs == sorted(gs)
            assert ts == sorted(ts, reverse=True)

    def test_lower_edge_bound(self):
        for n in range(5, 61):
            assert g_formula(n, n * n // 4 + 1).value == 2 * (n // 2) + 1

    def test_csv_row(self):
        assert g_formula(5, 7).csv_row(5, 7) == "5,7,g,5,2,2,1"
        assert FormulaResult(3, (Triple(1, 1, 1), Triple(2, 1, 0)), "t").csv_row(3, 2) == "3,2,t,3,1,1,1 2,1,0"

    def test_argmin_realises_value(self):
        for n in range(5, 10):
            for e in range(n * n // 4 + 1, comb(n, 2) + 1):
                r = g_formula(n, e)
                for t in r.argmins:
                    g = construct(t)
                    ee, tt = counts(g)
                    assert ee >= e and e - tt == r.value


class TestWitness:
    def test_examples(self):
        assert witness_construction(100, Fraction(1, 16)) == Triple(72, 25, 3)
        assert witness_construction(400, Fraction(1, 25)) == Triple(312, 80, 8)

    def test_accepts_strings(self):
        assert witness_construction(100, "1/16") == Triple(72, 25, 3)

    @pytest.mark.parametrize("n, delta", [(10, Fraction(1, 16)), (5, Fraction(1, 20))])
    def test_too_small(self, n, delta):
        with pytest.raises(ValueError):
            witness_construction(n, delta)

    @pytest.mark.parametrize("delta", [0, Fraction(1, 10), Fraction(1, 2)])
    def test_delta_range(self, delta):
        with pytest.raises(ValueError):
            witness_construction(100, delta)

    @given(st.integers(60, 3000), st.fractions(Fraction(1, 50), Fraction(99, 1000)))
    def test_bounds_hold(self, n, delta):
        try:
            t = witness_construction(n, delta)
        except ValueError:
            return
        p = profile(t)
        assert t.n == n
        assert p.edges >= (Fraction(1, 2) - delta) * n * n - n
        assert 4 * (p.non_triangular + n) ** 2 >= delta ** 3 * n ** 4
