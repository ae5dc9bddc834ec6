from fractions import Fraction

from dressian.dd import dual_description
from dressian.linalg import (dot, nullspace, primitive_direction, rank, rref,
                             scale_to_integers, solve_underdetermined)
from dressian.lp import (INFEASIBLE, OPTIMAL, UNBOUNDED, feasible_point,
                         lex_min, linprog_exact)

F = Fraction


def test_rref_rank_nullspace():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert rank(rows) == 2
    ns = nullspace(rows)
    assert len(ns) == 1
    assert all(dot(r, ns[0]) == 0 for r in rows)
    m, piv = rref([[2, 0], [0, 3]])
    assert m == [[1, 0], [0, 1]] and piv == [0, 1]


def test_solve_underdetermined():
    x = solve_underdetermined([[1, 1, 0], [0, 1, 1]], [3, 5])
    assert [a + b for a, b in zip(x[:2], x[1:])] == [3, 5]


def test_primitive_direction_preserves_sign():
    assert primitive_direction([F(-2, 3), F(4, 3)]) == [-1, 2]
    assert scale_to_integers([F(-2, 3), F(4, 3)]) == [1, -2]


def test_linprog_basic():
    # min -x - y s.t. x + y <= 1, x, y >= 0 -> value -1
    res = linprog_exact([-1, -1], A_ub=[[1, 1]], b_ub=[1], bounds=[0, 0])
    assert res.status == OPTIMAL and res.value == -1
    assert sum(res.x) == 1


def test_linprog_exact_rationals():
    res = linprog_exact([F(1, 3)], A_eq=[[F(2)]], b_eq=[F(1, 7)])
    assert res.status == OPTIMAL
    assert res.x == [F(1, 14)] and res.value == F(1, 42)


def test_linprog_infeasible_and_unbounded():
    assert linprog_exact([1], A_ub=[[1], [-1]], b_ub=[0, -1]).status == INFEASIBLE
    assert linprog_exact([1]).status == UNBOUNDED  # free var, min x


def test_linprog_free_variables():
    # min x s.t. x >= -5 via ub -x <= 5, x free
    res = linprog_exact([1], A_ub=[[-1]], b_ub=[5])
    assert res.status == OPTIMAL and res.x == [-5]


def test_feasible_point():
    assert feasible_point(A_ub=[[1], [-1]], b_ub=[2, 2], nvar=1) is not None
    assert feasible_point(A_ub=[[1], [-1]], b_ub=[0, -1], nvar=1) is None


def test_lex_min_sequential():
    # square [0,1]^2 with x + y >= 1: lex-min of (x, then y) is (0, 1)... no:
    # minimizing x first gives x = 0, then y is pinned to 1.
    x = lex_min([[1, 0], [0, 1]],
                A_ub=[[-1, -1], [1, 0], [0, 1]], b_ub=[-1, 1, 1],
                bounds=[0, 0])
    assert x == [0, 1]


def test_lex_min_unique_shortcut_consistent():
    # objective already unique at the first stage
    x = lex_min([[1, 1], [1, 0]],
                A_eq=[[1, -1]], b_eq=[0], bounds=[0, 0])
    assert x == [0, 0]


def test_dual_description_orthant():
    # x >= 0, y >= 0 in R^2: rays e1, e2, no lineality
    lin, rays, tight = dual_description([[1, 0], [0, 1]], dim=2)
    assert lin == []
    assert sorted(rays) == [[0, 1], [1, 0]]


def test_dual_description_halfplane_has_lineality():
    # x >= 0 in R^2: lineality e2, one ray e1
    lin, rays, tight = dual_description([[1, 0]], dim=2)
    assert len(lin) == 1 and lin[0][0] == 0
    assert len(rays) == 1 and rays[0][1] == 0 and rays[0][0] > 0


def test_dual_description_with_equalities():
    # x + y + z = 0, x >= 0, y >= 0: rays (1,0,-1),(0,1,-1)
    lin, rays, tight = dual_description(
        [[1, 0, 0], [0, 1, 0]], eqs=[[1, 1, 1]], dim=3)
    assert lin == []
    assert sorted(rays) == [[0, 1, -1], [1, 0, -1]]


def test_dual_description_tight_sets():
    lin, rays, tight = dual_description([[1, 0], [0, 1], [1, 1]], dim=2)
    by_ray = dict(zip(map(tuple, rays), tight))
    assert by_ray[(1, 0)] == {1}
    assert by_ray[(0, 1)] == {0}
