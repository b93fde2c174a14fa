"""The standard order, ladders, the index map, and the Gorenstein tests."""

from __future__ import annotations

import itertools
from math import comb

import pytest

from qschubert.minors import IndexPair, index_pair
from qschubert.poset import (
    BlockGapDecomposition,
    MinorPoset,
    block_gap_decomposition,
    delta_map,
    delta_map_is_order_iso,
    delta_map_top,
    gkdim_grassmannian,
    gkdim_matrix,
    gorenstein,
    gorenstein_hvector_oracle,
    h_vector,
    is_palindromic,
    ladder,
    ladder_label,
    ladder_label_characterization,
    ladder_positions,
    leq_st,
    lt_st,
    rank_and_gkdim,
)


class TestStandardOrder:
    def test_index_sets_componentwise(self):
        assert leq_st((1, 3), (2, 3))
        assert leq_st((1, 3), (1, 3))
        assert not leq_st((1, 4), (2, 3))
        assert not leq_st((2, 3), (1, 4))

    def test_index_pairs_bigger_minors_sit_lower(self):
        big = index_pair([1, 2], [1, 2])
        small = index_pair([2], [2])
        assert leq_st(big, small)
        assert not leq_st(small, big)

    def test_index_pair_prefix_comparison(self):
        # only the first u entries of the larger minor are compared
        a = index_pair([1, 2], [1, 3])
        b = index_pair([2], [3])
        assert leq_st(a, b)
        assert leq_st(a, index_pair([2], [2]))
        c = index_pair([2, 3], [1, 2])
        assert not leq_st(c, index_pair([1], [3]))  # row 2 > 1 fails

    def test_mixed_kinds_rejected(self):
        with pytest.raises(TypeError):
            leq_st((1, 2), index_pair([1], [1]))


class TestMinorPoset:
    def test_grassmannian_size(self):
        assert len(MinorPoset.grassmannian(2, 4).elements()) == 6
        assert len(MinorPoset.grassmannian(3, 7).elements()) == 35

    def test_matrix_size(self):
        # t x t choices summed over t
        assert len(MinorPoset.matrix(2, 2).elements()) == 5
        assert len(MinorPoset.matrix(2, 3).elements()) == 9

    def test_minimal_and_maximum(self):
        pi = MinorPoset.grassmannian(2, 4)
        assert pi.minimal() == (1, 2)
        assert pi.maximum() == (3, 4)
        delta = MinorPoset.matrix(2, 2)
        assert delta.minimal() == index_pair([1, 2], [1, 2])
        # prefix comparison puts the bottom-right 1x1 minor on top
        assert delta.maximum() == index_pair([2], [2])

    def test_residual_and_complement_partition(self):
        pi = MinorPoset.grassmannian(2, 4)
        gamma = (1, 3)
        res = pi.residual(gamma)
        cmpl = pi.ideal_complement(gamma)
        assert sorted(res + cmpl) == sorted(pi.elements())
        assert set(res) == {(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)}

    def test_upper_neighbours(self):
        pi = MinorPoset.grassmannian(2, 4)
        assert sorted(pi.upper_neighbours((1, 3))) == [(1, 4), (2, 3)]
        assert pi.upper_neighbours((3, 4)) == []

    def test_chain_counts_on_a_total_order(self):
        pi = MinorPoset.grassmannian(1, 3)
        # a 3-chain: c = (1, 3, 3, 1)
        assert pi.chain_counts() == [1, 3, 3, 1]

    def test_multichain_count_matches_enumeration(self):
        pi = MinorPoset.grassmannian(2, 4)
        for d in range(4):
            chains = list(pi.multichains(d))
            assert len(chains) == pi.multichain_count(d)
            assert len(set(chains)) == len(chains)


class TestDimensionFormulas:
    def test_rank_agrees_with_formula_grassmannian(self):
        for m, n in [(2, 4), (2, 5), (1, 3)]:
            pi = MinorPoset.grassmannian(m, n)
            for gamma in pi.elements():
                rk, dim = rank_and_gkdim(pi, gamma)
                assert rk == dim == gkdim_grassmannian(gamma, m, n)

    def test_rank_agrees_with_formula_matrix(self):
        for m, n in [(2, 2), (2, 3)]:
            delta = MinorPoset.matrix(m, n)
            for d in delta.elements():
                rk, dim = rank_and_gkdim(delta, d)
                assert rk == dim == gkdim_matrix(d, m, n)

    def test_full_poset_rank_is_algebra_dimension(self):
        # rank of the whole label poset = m(n-m) + 1 for the grassmannian
        assert MinorPoset.grassmannian(2, 4).rank() == 5
        assert MinorPoset.grassmannian(2, 5).rank() == 7


class TestLadder:
    def test_worked_example_positions(self):
        got = ladder_positions((1, 3, 6), 3, 7)
        assert got == [
            (1, 7),
            (2, 4),
            (2, 5),
            (2, 7),
            (3, 2),
            (3, 4),
            (3, 5),
            (3, 7),
        ]

    def test_worked_example_labels(self):
        assert ladder_label((2, 4), (1, 3, 6), 3) == (1, 4, 6)
        assert ladder_label((3, 2), (1, 3, 6), 3) == (2, 3, 6)
        assert ladder_label((1, 7), (1, 3, 6), 3) == (1, 3, 7)

    def test_ladder_size_plus_one_is_dimension(self):
        gamma = (1, 3, 6)
        assert len(ladder_positions(gamma, 3, 7)) + 1 == gkdim_grassmannian(
            gamma, 3, 7
        )

    def test_labels_are_one_slot_mutations_above_gamma(self):
        assert ladder_label_characterization((1, 3, 6), 3, 7)
        for gamma in MinorPoset.grassmannian(2, 4).elements():
            assert ladder_label_characterization(gamma, 2, 4)

    def test_ladder_of_maximum_is_empty(self):
        assert ladder((3, 4), 2, 4) == []


class TestDeltaMap:
    def test_worked_value(self):
        # the 1x1 minor at (1,1) of a 2x2 grid maps to {1,3} in 1..4
        assert delta_map(index_pair([1], [1]), 2, 2) == (1, 3)
        assert delta_map_top(2, 2) == (3, 4)

    def test_biggest_minor_maps_to_minimum(self):
        assert delta_map(index_pair([1, 2], [1, 2]), 2, 2) == (1, 2)

    @pytest.mark.parametrize("shape", [(1, 2), (2, 2), (2, 3)])
    def test_order_isomorphism(self, shape):
        assert delta_map_is_order_iso(*shape)

    def test_top_label_dominates_every_image(self):
        m, n = 2, 3
        top = delta_map_top(m, n)
        for p in MinorPoset.matrix(m, n).elements():
            assert leq_st(delta_map(p, m, n), top)


class TestGorenstein:
    def test_blocks_and_gaps(self):
        d = block_gap_decomposition((1, 2, 5, 6), 7)
        assert d.blocks == ((1, 2), (5, 6))
        assert d.gaps == ((3, 4), (7,))
        # leading integers below gamma_1 belong to no gap
        d2 = block_gap_decomposition((3, 4), 4)
        assert d2.blocks == ((3, 4),)
        assert d2.gaps == ((),)

    def test_worked_classifications(self):
        ok, _ = gorenstein((1, 3), 4)
        assert ok is True
        ok, _ = gorenstein((1, 4), 5)
        assert ok is False
        ok, _ = gorenstein((2, 3), 4)
        assert ok is True

    def test_oracle_agreement_small(self):
        for m, n in [(2, 4), (2, 5)]:
            pi = MinorPoset.grassmannian(m, n)
            for gamma in pi.elements():
                ok, _ = gorenstein(gamma, n)
                assert ok == gorenstein_hvector_oracle(pi, gamma), gamma


class TestHVector:
    def test_hand_checked_values(self):
        pi = MinorPoset.grassmannian(2, 4)
        assert h_vector(pi, (1, 3)) == (1, 1)
        assert h_vector(pi, (2, 3)) == (1,)
        assert h_vector(pi, (3, 4)) == (1,)

    def test_full_grassmannian_palindromic(self):
        pi = MinorPoset.grassmannian(2, 4)
        assert is_palindromic(h_vector(pi))

    def test_series_identity(self):
        # sum_d (#multichains of size d) t^d == h(t) / (1-t)^r
        pi = MinorPoset.grassmannian(2, 4)
        for gamma in [None, (1, 3), (2, 4)]:
            h = h_vector(pi, gamma)
            r = len(pi.chain_counts(gamma)) - 1
            for d in range(5):
                series = sum(
                    h[k] * comb(d - k + r - 1, r - 1)
                    for k in range(min(d, len(h) - 1) + 1)
                )
                assert series == pi.multichain_count(d, gamma), (gamma, d)
