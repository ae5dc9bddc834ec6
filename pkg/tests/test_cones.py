from fractions import Fraction

import pytest

from dressian.cones import (adjacent_cones, cone_polyhedron,
                            is_maximal_signature)
from dressian.errors import EmptyConeError, NonMaximalConeError
from dressian.fixtures import cone_class_arrangement
from dressian.arrangements import (arrangement_from_weight,
                                   metrize_abstract_arrangement,
                                   weight_from_arrangement)
from dressian.relations import ConeSignature, cone_signature, is_in_dressian
from dressian.subsets import WeightVector, lineality_shift

F = Fraction


def w24(code):
    values = {"a": [0, 0, 1, 1, 0, 0], "b": [0, 1, 0, 0, 1, 0],
              "c": [1, 0, 0, 0, 0, 1], "E": [0, 0, 0, 0, 0, 0]}[code]
    w = WeightVector(2, 4, [F(v) for v in values])
    assert cone_signature(w).codes == code
    return w


def test_cone_polyhedron_dimensions_dr24():
    for code in "abc":
        assert cone_polyhedron(ConeSignature(2, 4, code)).dimension == 5
    assert cone_polyhedron(ConeSignature(2, 4, "E")).dimension == 4


def test_cone_interior_point_realizes_signature():
    for code in ("a", "b", "c", "E"):
        cone = cone_polyhedron(ConeSignature(2, 4, code))
        assert cone_signature(cone.interior_point).codes == code


def test_empty_cone_raises():
    # Dr(2,5): a signature pattern violating split compatibility is empty
    found = False
    for codes in ("aabca", "abcab", "aabbc"):
        try:
            cone_polyhedron(ConeSignature(2, 5, codes))
        except EmptyConeError:
            found = True
            break
    assert found, "expected at least one unrealizable Dr(2,5) signature"


def test_maximality():
    for code in "abc":
        assert is_maximal_signature(ConeSignature(2, 4, code))
    assert not is_maximal_signature(ConeSignature(2, 4, "E"))


def test_adjacent_cones_dr24():
    adj = adjacent_cones(w24("a"))
    assert sorted(fc.signature.codes for fc in adj) == ["b", "c"]
    for fc in adj:
        assert not fc.boundary
        assert is_in_dressian(fc.representative)[0]
        assert cone_signature(fc.wall_point).codes == "E"


def test_adjacent_cones_rejects_non_maximal():
    with pytest.raises(NonMaximalConeError):
        adjacent_cones(w24("E"))


def test_adjacency_invariant_under_lineality():
    w = w24("b")
    shifted = lineality_shift(w, [F(1), F(-2), F(3), F(5)])
    a1 = sorted(fc.signature.codes for fc in adjacent_cones(w))
    a2 = sorted(fc.signature.codes for fc in adjacent_cones(shifted))
    assert a1 == a2


def test_tree_cone_adjacency_dr25():
    from itertools import combinations
    from dressian.trees import caterpillar, tree_metric
    d = tree_metric(caterpillar((1, 2), 3, (4, 5), F(1)))
    w = WeightVector(2, 5, {(i, j): -d[(i, j)]
                            for i, j in combinations(range(1, 6), 2)})
    adj = adjacent_cones(w)
    # two internal edges, each wall resolving to the two other quartets
    assert len(adj) == 4
    assert len({fc.wall_relations for fc in adj}) == 2
    sig = cone_signature(w)
    for fc in adj:
        assert fc.signature != sig
        assert cone_polyhedron(fc.signature).dimension == \
            cone_polyhedron(sig).dimension


def test_dr36_representative_cone_is_maximal_dim_10():
    w = weight_from_arrangement(
        metrize_abstract_arrangement(cone_class_arrangement(1)))
    sig = cone_signature(w)
    assert "E" not in sig.codes
    assert is_maximal_signature(sig)
    assert cone_polyhedron(sig).dimension == 10
