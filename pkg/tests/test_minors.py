"""Quantum minors, relation discovery, and the extension principle."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qschubert.coeffield import ONE, LaurentQ, q_power, vectors_proportional
from qschubert.errors import (
    InhomogeneousInput,
    PreconditionViolated,
    ShapeMismatch,
)
from qschubert.minors import (
    IndexPair,
    MinorRelation,
    find_relations,
    format_index_pair,
    format_index_set,
    index_pair,
    index_set,
    maximal_minor,
    muir_extend,
    parse_index_pair,
    parse_index_set,
    quantum_minor,
    scale_by_q,
)
from qschubert.ncpoly import NcPoly, generators

Q = q_power(1)
QINV = q_power(-1)
QDIFF = Q - QINV


def X(i, j, shape):
    return NcPoly.generator(i, j, shape)


class TestIndexSets:
    def test_validation(self):
        assert index_set([1, 3, 6]) == (1, 3, 6)
        for bad in [[], [0, 1], [2, 2], [3, 1]]:
            with pytest.raises(ValueError):
                index_set(bad)
        with pytest.raises(ValueError):
            index_pair([1, 2], [1])

    def test_text_round_trip(self):
        assert parse_index_set("[1,3,6]") == (1, 3, 6)
        assert format_index_set((1, 3, 6)) == "[1,3,6]"
        assert parse_index_pair("[1,2|1,3]") == IndexPair((1, 2), (1, 3))
        assert format_index_pair(IndexPair((1, 2), (1, 3))) == "[1,2|1,3]"
        for bad in ["", "[1,2", "[a]", "[1|2|3]", "1,2"]:
            with pytest.raises(ValueError):
                parse_index_pair(bad)


class TestQuantumMinor:
    def test_one_by_one_is_generator(self):
        assert quantum_minor(index_pair([2], [3]), (2, 3)) == X(2, 3, (2, 3))

    def test_two_by_two_frozen(self):
        mnr = quantum_minor(index_pair([1, 2], [1, 2]), (2, 2))
        assert str(mnr) == "X11*X22 - q*X12*X21"

    def test_off_column_frozen(self):
        mnr = quantum_minor(index_pair([1, 2], [1, 3]), (2, 3))
        expected = X(1, 1, (2, 3)) * X(2, 3, (2, 3)) - Q * (
            X(1, 3, (2, 3)) * X(2, 1, (2, 3))
        )
        assert mnr == expected

    def test_three_by_three_has_six_terms(self):
        mnr = quantum_minor(index_pair([1, 2, 3], [1, 2, 3]), (3, 3))
        assert len(mnr.terms) == 6
        # the antidiagonal word carries (-q)^3
        word = ((1, 3), (2, 2), (3, 1))
        assert mnr.coefficient(word) == -q_power(3)

    def test_shape_guard(self):
        with pytest.raises(ShapeMismatch):
            quantum_minor(index_pair([1, 3], [1, 2]), (2, 3))

    def test_maximal_minor(self):
        assert maximal_minor([1, 3], (2, 4)) == quantum_minor(
            index_pair([1, 2], [1, 3]), (2, 4)
        )
        with pytest.raises(ValueError):
            maximal_minor([1, 2, 3], (2, 4))


class TestFindRelations:
    def test_duplicate_products_give_sign_relation(self):
        p = (index_pair([1, 2], [1, 2]), None)
        rels = find_relations([p, p], (2, 2))
        assert len(rels) == 1
        coeffs = [c for c, _, _ in rels[0].terms]
        assert coeffs == [ONE, -ONE]
        assert rels[0].verified

    def test_plucker_span_has_one_relation(self):
        shape = (2, 4)
        prods = [
            (index_pair([1, 2], [1, 2]), index_pair([1, 2], [3, 4])),
            (index_pair([1, 2], [1, 3]), index_pair([1, 2], [2, 4])),
            (index_pair([1, 2], [1, 4]), index_pair([1, 2], [2, 3])),
        ]
        rels = find_relations(prods, shape)
        assert len(rels) == 1
        vec = [c for c, _, _ in rels[0].terms]
        # the quantum Pluecker relation [12][34] - q [13][24] + q^2 [14][23]
        assert vectors_proportional(vec, (ONE, -Q, q_power(2)))

    def test_inhomogeneous_rejected(self):
        prods = [
            (index_pair([1], [1]), None),
            (index_pair([1], [2]), None),
        ]
        with pytest.raises(InhomogeneousInput):
            find_relations(prods, (2, 2))

    def test_no_relation_among_independent_minors(self):
        prods = [
            (index_pair([1], [1]), index_pair([2], [2])),
            (index_pair([1], [2]), index_pair([2], [1])),
        ]
        assert find_relations(prods, (2, 2)) == []

    def test_commutator_relation_matches_defining_identity(self):
        # X11 X22, X22 X11 and X12 X21 satisfy exactly one dependency,
        # the diagonal commutation relation
        prods = [
            (index_pair([1], [1]), index_pair([2], [2])),
            (index_pair([2], [2]), index_pair([1], [1])),
            (index_pair([1], [2]), index_pair([2], [1])),
        ]
        rels = find_relations(prods, (2, 2))
        assert len(rels) == 1
        vec = [c for c, _, _ in rels[0].terms]
        assert vectors_proportional(vec, (ONE, -ONE, -QDIFF))


class TestMinorRelationType:
    def relation(self):
        return MinorRelation(
            (2, 2),
            (
                (ONE, index_pair([1], [1]), index_pair([2], [2])),
                (-ONE, index_pair([2], [2]), index_pair([1], [1])),
                (-QDIFF, index_pair([1], [2]), index_pair([2], [1])),
            ),
        )

    def test_verify_and_str(self):
        rel = self.relation().verify()
        assert rel.verified
        assert "[1|1]*[2|2]" in str(rel)
        assert str(rel).endswith("= 0")

    def test_json_round_trip(self):
        rel = self.relation().verify()
        back = MinorRelation.from_json(rel.to_json())
        assert back == rel

    def test_bare_minor_terms_allowed(self):
        # q-commutation of a 1x1 with nothing else: trivial single-term
        # relations cannot verify, so expansion must be nonzero
        rel = MinorRelation((2, 2), ((ONE, index_pair([1], [1]), None),))
        assert not rel.expand().is_zero()


class TestMuirExtension:
    def base_relation(self):
        return MinorRelation(
            (2, 2),
            (
                (ONE, index_pair([1], [1]), index_pair([2], [2])),
                (-ONE, index_pair([2], [2]), index_pair([1], [1])),
                (-QDIFF, index_pair([1], [2]), index_pair([2], [1])),
            ),
        ).verify()

    def test_extension_to_three(self):
        ext = muir_extend(self.base_relation(), [1, 2], [1, 2], 3)
        assert ext.verified
        # every term gained row 3 and column 3
        for _, left, right in ext.terms:
            assert 3 in left.rows and 3 in left.cols
            assert 3 in right.rows and 3 in right.cols

    def test_trivial_extension_is_identity(self):
        ext = muir_extend(self.base_relation(), [1, 2], [1, 2], 2)
        assert ext.terms == self.base_relation().terms

    def test_preconditions(self):
        with pytest.raises(PreconditionViolated):
            muir_extend(self.base_relation(), [1], [1, 2], 3)
        with pytest.raises(PreconditionViolated):
            muir_extend(self.base_relation(), [1, 3], [1, 2], 3)
        bogus = MinorRelation(
            (2, 2), ((ONE, index_pair([1], [1]), index_pair([2], [2])),)
        )
        with pytest.raises(PreconditionViolated):
            muir_extend(bogus, [1, 2], [1, 2], 3)


class TestScaleByQ:
    @given(st.integers(0, 3), st.integers(0, 3))
    @settings(max_examples=20, deadline=None)
    def test_multiplicative_on_products(self, a, b):
        gens = generators((2, 3))
        u = NcPoly.from_word(tuple(gens[: a + 1]), (2, 3))
        v = NcPoly.from_word(tuple(gens[-(b + 1) :]), (2, 3))
        assert scale_by_q(u * v) == scale_by_q(u) * scale_by_q(v)

    def test_minor_scales_by_size(self):
        mnr = quantum_minor(index_pair([1, 2], [1, 3]), (2, 3))
        assert scale_by_q(mnr) == mnr * q_power(2)
