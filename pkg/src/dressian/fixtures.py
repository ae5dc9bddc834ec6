"""Bundled reference data: Dr(3,6) cone-class arrangements, their cherry
sets, the adjacency cherry table for the Cone-5 class, the Dr(2,5) split
example, and the Delta(4,8) weight with its contraction restriction.
"""

from fractions import Fraction

from .arrangements import AbstractArrangement
from .subsets import WeightVector, enumerate_ksubsets
from .trees import caterpillar

#: the seven Dr(3,6) cone classes: index -> {leaf i -> caterpillar layout}
CONE_CLASS_CATERPILLARS = {
    0: {1: ((2, 5), 4, (3, 6)), 2: ((1, 5), 3, (4, 6)), 3: ((1, 6), 2, (4, 5)),
        4: ((2, 6), 1, (3, 5)), 5: ((1, 2), 6, (3, 4)), 6: ((1, 3), 5, (2, 4))},
    1: {1: ((2, 5), 6, (3, 4)), 2: ((1, 5), 3, (4, 6)), 3: ((2, 6), 1, (4, 5)),
        4: ((2, 6), 1, (3, 5)), 5: ((1, 2), 6, (3, 4)), 6: ((1, 5), 3, (2, 4))},
    2: {1: ((2, 5), 6, (3, 4)), 2: ((1, 5), 3, (4, 6)), 3: ((1, 5), 4, (2, 6)),
        4: ((1, 5), 3, (2, 6)), 5: ((1, 2), 6, (3, 4)), 6: ((1, 5), 3, (2, 4))},
    3: {1: ((2, 5), 3, (4, 6)), 2: ((1, 5), 3, (4, 6)), 3: ((1, 5), 2, (4, 6)),
        4: ((1, 5), 3, (2, 6)), 5: ((1, 2), 3, (4, 6)), 6: ((1, 5), 3, (2, 4))},
    4: {1: ((3, 5), 2, (4, 6)), 2: ((1, 5), 3, (4, 6)), 3: ((1, 5), 2, (4, 6)),
        4: ((1, 5), 3, (2, 6)), 5: ((1, 3), 2, (4, 6)), 6: ((1, 5), 3, (2, 4))},
    5: {1: ((2, 3), 5, (4, 6)), 2: ((1, 5), 3, (4, 6)), 3: ((1, 5), 2, (4, 6)),
        4: ((1, 5), 3, (2, 6)), 5: ((2, 3), 1, (4, 6)), 6: ((1, 5), 3, (2, 4))},
    6: {1: ((2, 3), 5, (4, 6)), 2: ((1, 5), 3, (4, 6)), 3: ((1, 5), 2, (4, 6)),
        4: ((1, 5), 6, (2, 3)), 5: ((2, 3), 1, (4, 6)), 6: ((1, 5), 4, (2, 3))},
}

#: cherry table for the seven classes
CONE_CLASS_CHERRIES = {
    0: {(1, 2, 5), (1, 3, 6), (2, 4, 6), (3, 4, 5)},
    1: {(2, 4, 6), (3, 4, 5), (1, 2, 5)},
    2: {(1, 2, 5), (2, 4, 6)},
    3: {(1, 2, 5), (2, 4, 6)},
    4: {(1, 3, 5), (2, 4, 6)},
    5: {(2, 4, 6)},
    6: set(),
}

#: cherry sets of the eight cones adjacent to the Cone-5-class representative,
#: as a multiset (tuple-sorted), up to one global relabelling of [6]
ADJACENT_CONE_CHERRY_SETS = [
    frozenset({(1, 2, 3), (2, 5, 6)}),
    frozenset({(1, 2, 3), (1, 5, 6)}),
    frozenset({(1, 2, 3), (3, 4, 6)}),
    frozenset({(1, 2, 3), (3, 4, 5)}),
    frozenset({(1, 2, 3), (4, 5, 6)}),
    frozenset({(1, 2, 3), (3, 5, 6)}),
    frozenset(),
    frozenset({(1, 2, 4)}),
]


def cone_class_arrangement(index: int) -> AbstractArrangement:
    """The bundled arrangement for one of the seven Dr(3,6) cone classes."""
    layout = CONE_CLASS_CATERPILLARS[index]
    trees = {(i,): caterpillar(a, c, b, Fraction(1))
             for i, (a, c, b) in layout.items()}
    return AbstractArrangement(3, 6, trees)


#: Dr(2,5) example: splits of the 5-leaf tree and the resulting cells
DR25_SPLITS = [({1, 2}, {3, 4, 5}), ({1, 2, 3}, {4, 5})]
DR25_CELLS = [
    {(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)},
    {(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)},
    {(1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)},
]

#: Delta(4,8) example weight (lexicographic subset order) and the weight
#: induced on the contraction facet x_1 = 1
DELTA48_WEIGHT_VALUES = [
    0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 2, 0, 0, 0, 0, 1, 1, 1, 2, 2,
    2, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 0, 0, 0, 0, 1, 1, 1, 2, 2, 2, 2, 2, 2,
    3, 3, 3, 4, 4, 4, 5, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 5, 5, 6, 7,
]
DELTA48_CONTRACTED_VALUES = DELTA48_WEIGHT_VALUES[:35]


def delta48_weight() -> WeightVector:
    return WeightVector(4, 8, [Fraction(v) for v in DELTA48_WEIGHT_VALUES])


def delta48_contracted_weight() -> WeightVector:
    return WeightVector(3, 7, [Fraction(v) for v in DELTA48_CONTRACTED_VALUES])


#: maximal-cell index sets of the regular subdivision of the Delta(4,8)
#: weight, 0-based into the lexicographic subset list (recomputed exactly;
#: sizes 17, 25, 30, 30, 62)
DELTA48_CELL_INDEX_SETS = None  # populated lazily by delta48_cells()


def delta48_cells():
    """The five maximal cells, as sorted tuples of lex subset indices."""
    global DELTA48_CELL_INDEX_SETS
    if DELTA48_CELL_INDEX_SETS is None:
        from .subdivision import regular_subdivision

        subsets = enumerate_ksubsets(4, 8)
        pos = {s.elements: i for i, s in enumerate(subsets)}
        sd = regular_subdivision(delta48_weight())
        DELTA48_CELL_INDEX_SETS = sorted(
            tuple(sorted(pos[b.elements] for b in c.bases)) for c in sd)
    return DELTA48_CELL_INDEX_SETS
