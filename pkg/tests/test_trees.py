from fractions import Fraction
from itertools import combinations

import pytest

from dressian.errors import ParameterError, ReconstructionError
from dressian.relations import is_in_dressian
from dressian.subsets import WeightVector
from dressian.trees import (MetricTree, Split, caterpillar, cherries_of_tree,
                            delete_leaf, enumerate_all_topologies,
                            enumerate_trivalent_topologies,
                            four_point_violation, is_refinement_of,
                            is_tree_metric, is_whitehead_related,
                            labelled_isomorphic, parse_newick,
                            reconstruct_tree, splits_are_compatible,
                            splits_of_tree, star_tree, to_newick,
                            tree_from_splits, tree_metric, whitehead_move)

F = Fraction


def quartet():
    """((1,2),(3,4)) with unit lengths."""
    return MetricTree([(1, -1, F(1)), (2, -1, F(1)), (-1, -2, F(1)),
                       (3, -2, F(1)), (4, -2, F(1))])


def test_tree_metric_path_lengths():
    T = quartet()
    d = tree_metric(T)
    assert d[(1, 2)] == 2 and d[(1, 3)] == 3 and d[(3, 4)] == 2


def test_four_point_condition():
    d = tree_metric(quartet())
    assert four_point_violation(d) is None
    assert is_tree_metric(d)
    bad = dict(d)
    bad[(1, 2)] = F(10)
    bad[(2, 1)] = F(10) if (2, 1) in bad else bad.get((2, 1), F(10))
    assert not is_tree_metric(bad)


def test_tree_metric_bridge_to_dressian():
    d = tree_metric(caterpillar((1, 2), 3, (4, 5), F(2)))
    w = WeightVector(2, 5, {(i, j): -d[(i, j)]
                            for i, j in combinations(range(1, 6), 2)})
    assert is_in_dressian(w)[0]


def test_splits_of_tree_and_compatibility():
    T = caterpillar((1, 2), 3, (4, 5), F(1))
    tops = {(frozenset(s.A), frozenset(s.B)) for s in splits_of_tree(T)}
    assert tops == {(frozenset({1, 2}), frozenset({3, 4, 5})),
                    (frozenset({1, 2, 3}), frozenset({4, 5}))}
    s1, s2 = splits_of_tree(T)
    assert splits_are_compatible(s1, s2)
    assert not splits_are_compatible(
        Split({1, 2}, {3, 4, 5}), Split({2, 3}, {1, 4, 5}))


def test_tree_from_splits_inverts_splits_of_tree():
    T = caterpillar((1, 2), 3, (4, 5), F(1))
    back = tree_from_splits(T.leaves, splits_of_tree(T))
    assert labelled_isomorphic(T, back)


def test_reconstruct_tree_roundtrip_with_lengths():
    T = MetricTree([(1, -1, F(1, 2)), (2, -1, F(3)), (-1, -2, F(5, 7)),
                    (3, -2, F(2)), (-2, -3, F(1)), (4, -3, F(1)),
                    (5, -3, F(4, 3))])
    back = reconstruct_tree(tree_metric(T))
    assert labelled_isomorphic(T, back, with_lengths=True)


def test_reconstruct_tree_rejects_non_tree_metric():
    d = {(i, j): F(1) for i, j in combinations(range(1, 5), 2)}
    d[(1, 2)] = F(5)
    with pytest.raises(ReconstructionError):
        reconstruct_tree(d, leaves=range(1, 5))


def test_cherries():
    T = caterpillar((1, 2), 3, (4, 5), F(1))
    assert cherries_of_tree(T) == [(1, 2), (4, 5)]
    assert cherries_of_tree(star_tree(range(1, 5))) == []


def test_delete_leaf():
    T = caterpillar((1, 2), 3, (4, 5), F(1))
    S = delete_leaf(T, 3)
    assert S.leaves == {1, 2, 4, 5}
    assert {tuple(sorted(c)) for c in cherries_of_tree(S)} == {(1, 2), (4, 5)}


def test_whitehead_move_produces_the_two_alternatives():
    T = quartet()
    edge = T.internal_edges()[0][:2]
    alts = {frozenset(frozenset(s.A) for s in splits_of_tree(
        whitehead_move(T, edge, c))) for c in (0, 1)}
    assert len(alts) == 2
    for c in (0, 1):
        assert is_whitehead_related(T, whitehead_move(T, edge, c))
    assert not is_whitehead_related(T, T)


def test_is_refinement_of():
    T = quartet()
    S = star_tree(range(1, 5))
    assert is_refinement_of(T, S)
    assert not is_refinement_of(S, T)


def test_enumerate_topologies_counts():
    assert len(enumerate_trivalent_topologies(range(1, 5))) == 3
    assert len(enumerate_trivalent_topologies(range(1, 6))) == 15
    assert len(enumerate_trivalent_topologies(range(1, 7))) == 105
    all5 = enumerate_all_topologies(range(1, 6))
    assert len({frozenset(frozenset(s.A) for s in splits_of_tree(t))
                for t in all5}) == len(all5)
    trivalent = [t for t in all5 if t.trivalent]
    assert len(trivalent) == 15


def test_newick_round_trip_exact():
    T = MetricTree([(1, -1, F(1, 3)), (2, -1, F(2)), (-1, -2, F(7, 5)),
                    (3, -2, F(1)), (4, -2, F(6))])
    text = to_newick(T)
    back = parse_newick(text)
    assert labelled_isomorphic(T, back, with_lengths=True)
    assert to_newick(back) == text


def test_newick_parse_errors():
    with pytest.raises(ParameterError):
        parse_newick("(1:1,2:1")
    with pytest.raises(ParameterError):
        parse_newick("(1:1,2:1);x")


def test_negative_lengths_rejected():
    with pytest.raises(ParameterError):
        MetricTree([(1, -1, F(-1)), (2, -1, F(1)), (3, -1, F(1))])
