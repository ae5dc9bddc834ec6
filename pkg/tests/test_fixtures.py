from math import comb

from dressian.fixtures import (ADJACENT_CONE_CHERRY_SETS,
                               CONE_CLASS_CATERPILLARS, CONE_CLASS_CHERRIES,
                               DELTA48_WEIGHT_VALUES, DR25_CELLS, DR25_SPLITS,
                               cone_class_arrangement, delta48_cells,
                               delta48_contracted_weight, delta48_weight)


def test_cone_class_tables_are_complete():
    assert sorted(CONE_CLASS_CATERPILLARS) == list(range(7))
    for layout in CONE_CLASS_CATERPILLARS.values():
        assert sorted(layout) == list(range(1, 7))
        for i, (a, c, b) in layout.items():
            assert sorted(set(a) | {c} | set(b) | {i}) == list(range(1, 7))
    assert sorted(CONE_CLASS_CHERRIES) == list(range(7))
    assert len(ADJACENT_CONE_CHERRY_SETS) == 8


def test_cone_class_arrangement_shapes():
    for idx in range(7):
        arr = cone_class_arrangement(idx)
        assert (arr.k, arr.n) == (3, 6)
        assert len(arr) == 6
        for (i,), tree in arr.items():
            assert tree.leaves == set(range(1, 7)) - {i}
            assert tree.trivalent


def test_dr25_fixture_shapes():
    assert len(DR25_SPLITS) == 2
    assert [len(c) for c in DR25_CELLS] == [7, 8, 7]
    union = set().union(*DR25_CELLS)
    assert len(union) == comb(5, 2)


def test_delta48_fixture_shapes():
    assert len(DELTA48_WEIGHT_VALUES) == comb(8, 4)
    w = delta48_weight()
    assert (w.k, w.n) == (4, 8)
    win = delta48_contracted_weight()
    assert (win.k, win.n) == (3, 7)
    cells = delta48_cells()
    assert sorted(len(c) for c in cells) == [17, 25, 30, 30, 62]
