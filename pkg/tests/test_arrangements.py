from fractions import Fraction

import pytest

from dressian.arrangements import (AbstractArrangement, TreeArrangement,
                                   arrangement_cherries,
                                   arrangement_from_weight,
                                   check_compatibility,
                                   generalized_whitehead_diff,
                                   is_abstract_arrangement,
                                   metrize_abstract_arrangement,
                                   recursive_contraction_arrangement,
                                   weight_from_arrangement)
from dressian.errors import CompatibilityError, MembershipError, ParameterError
from dressian.fixtures import CONE_CLASS_CHERRIES, cone_class_arrangement
from dressian.relations import is_in_dressian
from dressian.subsets import WeightVector
from dressian.trees import MetricTree, caterpillar, labelled_isomorphic

F = Fraction


def metrized(idx):
    return metrize_abstract_arrangement(cone_class_arrangement(idx))


def test_arrangement_requires_complete_index_set():
    with pytest.raises(ParameterError):
        AbstractArrangement(3, 6, {(1,): caterpillar((2, 3), 4, (5, 6))})
    with pytest.raises(ParameterError):
        AbstractArrangement(3, 6, {
            (i,): caterpillar((1, 2), 3, (4, 5)) for i in range(1, 7)})


def test_compatibility_detects_overlap_mismatch():
    good = metrized(5)
    ok, violation = check_compatibility(good)
    assert ok and violation is None
    # stretch one leaf edge of one tree: overlapping distances now disagree
    J = good.indices()[0]
    edges = [(u, v, ln + (1 if u > 0 or v > 0 else 0))
             for u, v, ln in good.trees[J].edges()]
    trees = dict(good.trees)
    trees[J] = MetricTree(edges)
    bad = TreeArrangement(3, 6, trees)
    ok, violation = check_compatibility(bad)
    assert not ok and violation is not None
    with pytest.raises(CompatibilityError):
        weight_from_arrangement(bad)


def test_metrize_produces_compatible_member_weight():
    TA = metrized(0)
    assert check_compatibility(TA)[0]
    w = weight_from_arrangement(TA)
    assert is_in_dressian(w)[0]


def test_arrangement_from_weight_rejects_non_member():
    with pytest.raises(MembershipError):
        arrangement_from_weight(WeightVector(2, 4, [0, 0, 1, 1, 0, 1]))


def test_round_trip_topologies():
    TA = metrized(3)
    back = arrangement_from_weight(weight_from_arrangement(TA))
    for J in TA.indices():
        assert labelled_isomorphic(TA.tree(J), back.tree(J))


def test_cherry_table_row():
    arr = cone_class_arrangement(0)
    got = {tuple(sorted(K.elements)) for K in arrangement_cherries(arr)}
    assert got == CONE_CLASS_CHERRIES[0]


def test_is_abstract_arrangement_accepts_fixtures():
    for idx in (0, 5, 6):
        assert is_abstract_arrangement(cone_class_arrangement(idx))


def test_is_abstract_arrangement_rejects_scrambled_family():
    def quartet(a, b, c, d):
        return MetricTree([(a, -1, F(1)), (b, -1, F(1)), (-1, -2, F(1)),
                           (c, -2, F(1)), (d, -2, F(1))])
    # no single 5-leaf topology has these five quartets as its leaf deletions
    trees = {(1,): quartet(2, 3, 4, 5), (2,): quartet(3, 4, 1, 5),
             (3,): quartet(1, 4, 2, 5), (4,): quartet(1, 2, 3, 5),
             (5,): quartet(1, 3, 2, 4)}
    assert not is_abstract_arrangement(AbstractArrangement(3, 5, trees))


def test_k2_arrangement_single_tree():
    T = caterpillar((1, 2), 3, (4, 5), F(1))
    TA = TreeArrangement(2, 5, {(): T})
    w = weight_from_arrangement(TA)
    assert is_in_dressian(w)[0]
    back = arrangement_from_weight(w)
    assert labelled_isomorphic(back.tree(()), T)


def test_recursive_contraction_matches_set_indexed_for_k3():
    w = weight_from_arrangement(metrized(2))
    ordered = recursive_contraction_arrangement(w)
    arr = arrangement_from_weight(w)
    assert sorted(ordered) == [(i,) for i in range(1, 7)]
    for order, tree in ordered.items():
        assert labelled_isomorphic(tree, arr.tree(order), with_lengths=True)


def test_generalized_whitehead_diff_identical_and_farther():
    a = metrized(5)
    assert generalized_whitehead_diff(a, a).kind == "identical"
    b = metrized(6)
    cmp_ = generalized_whitehead_diff(a, b)
    assert cmp_.kind in ("generalized-whitehead", "farther")
    assert cmp_.differing
