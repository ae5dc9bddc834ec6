from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from dressian.errors import ParameterError
from dressian.subsets import (KSubset, WeightVector, enumerate_ksubsets,
                              lineality_shift, normalize)


def test_ksubset_validation():
    KSubset((1, 3, 5), 6)
    with pytest.raises(ParameterError):
        KSubset((3, 1), 6)
    with pytest.raises(ParameterError):
        KSubset((1, 1), 6)
    with pytest.raises(ParameterError):
        KSubset((0, 2), 6)
    with pytest.raises(ParameterError):
        KSubset((2, 7), 6)


def test_enumerate_ksubsets_is_lex():
    subs = enumerate_ksubsets(2, 4)
    assert [s.elements for s in subs] == \
        [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert len(enumerate_ksubsets(3, 7)) == comb(7, 3)


def test_incidence():
    assert KSubset((1, 3), 4).incidence() == (1, 0, 1, 0)


def test_weight_vector_list_and_dict_agree():
    vals = [Fraction(i, 3) for i in range(6)]
    w1 = WeightVector(2, 4, vals)
    w2 = WeightVector(2, 4, {s.elements: v for s, v in
                             zip(enumerate_ksubsets(2, 4), vals)})
    assert w1 == w2
    assert w1.values() == vals
    assert w1((3, 4)) == Fraction(5, 3)


def test_weight_vector_rejects_bad_lengths():
    with pytest.raises(ParameterError):
        WeightVector(2, 4, [0] * 5)
    with pytest.raises(ParameterError):
        WeightVector(2, 4, {(1, 2): 0})


def test_lineality_shift_adds_subset_sums():
    w = WeightVector.zero(2, 4)
    a = [Fraction(1), Fraction(2), Fraction(4), Fraction(8)]
    shifted = lineality_shift(w, a)
    for i, j in combinations(range(1, 5), 2):
        assert shifted((i, j)) == a[i - 1] + a[j - 1]


def test_normalize_constant_on_lineality_orbits_and_idempotent():
    w = WeightVector(2, 5, [Fraction(v) for v in [3, 1, 4, 1, 5, 9, 2, 6, 5, 3]])
    shifted = lineality_shift(w, [1, -2, 3, -4, 5])
    assert normalize(w) == normalize(shifted)
    assert normalize(normalize(w)) == normalize(w)
