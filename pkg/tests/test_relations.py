from fractions import Fraction
from math import comb

import pytest

from dressian.errors import MembershipError, ParameterError
from dressian.relations import (ConeSignature, ThreeTermRelation,
                                cone_signature, enumerate_relations,
                                is_in_dressian, relation_values)
from dressian.subsets import WeightVector


def test_relation_counts():
    assert len(enumerate_relations(2, 4)) == 1
    assert len(enumerate_relations(2, 5)) == 5
    assert len(enumerate_relations(3, 6)) == comb(6, 1) * comb(5, 4)
    assert len(enumerate_relations(4, 8)) == comb(8, 2) * comb(6, 4) == 420
    assert enumerate_relations(2, 3) == []


def test_relation_ordering_lex_on_A_then_quad():
    rels = enumerate_relations(3, 6)
    keys = [(r.A, r.quad) for r in rels]
    assert keys == sorted(keys)
    assert keys[0] == ((1,), (2, 3, 4, 5))


def test_term_subsets_pairing():
    r = ThreeTermRelation((5,), (1, 2, 3, 4), 3, 6)
    pairs = [(s.elements, t.elements) for s, t in r.term_subsets()]
    assert pairs == [((1, 2, 5), (3, 4, 5)),
                     ((1, 3, 5), (2, 4, 5)),
                     ((1, 4, 5), (2, 3, 5))]


def test_relation_validation():
    with pytest.raises(ParameterError):
        ThreeTermRelation((), (1, 2, 3), 2, 5)
    with pytest.raises(ParameterError):
        ThreeTermRelation((1,), (1, 2, 3, 4), 3, 6)


def test_membership_min_twice():
    # terms: w12+w34, w13+w24, w14+w23
    member = WeightVector(2, 4, [1, 0, 0, 0, 0, 1])       # terms 2, 0, 0
    non = WeightVector(2, 4, [0, 0, 1, 1, 0, 1])          # terms 1, 0, 2
    assert is_in_dressian(member)[0]
    vals = relation_values(non, enumerate_relations(2, 4)[0])
    assert sorted(vals).count(min(vals)) == 1
    ok, bad = is_in_dressian(non)
    assert not ok and bad is not None


def test_cone_signature_codes():
    w = WeightVector(2, 4, [1, 0, 0, 0, 0, 1])
    assert cone_signature(w).codes == "c"
    assert cone_signature(WeightVector.zero(2, 4)).codes == "E"
    with pytest.raises(MembershipError):
        cone_signature(WeightVector(2, 4, [0, 0, 1, 1, 0, 1]))


def test_signature_validation():
    ConeSignature(2, 5, "abcEa")
    with pytest.raises(ParameterError):
        ConeSignature(2, 5, "abc")
    with pytest.raises(ParameterError):
        ConeSignature(2, 5, "abcxz")


def test_tied_pair():
    s = ConeSignature(2, 4, "b")
    assert s.tied_pair(0) == (0, 2)
    assert ConeSignature(2, 4, "E").tied_pair(0) is None
