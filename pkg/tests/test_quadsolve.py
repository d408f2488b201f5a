"""Symbolic quadratic-system solver used for idempotent and square hunting."""

from fractions import Fraction

from jordanlab.fields import Field
from jordanlab.quadsolve import (
    AffineComponent,
    SolveResult,
    make_eq,
    solve_quadratic_system,
)

Q = Field(None)
F3 = Field(3)


def fr(x):
    return Fraction(x)


def _eval(F, eq, x):
    acc = eq.c
    for i, xi in enumerate(x):
        acc = F.add(acc, F.mul(eq.L[i], xi))
        for j, xj in enumerate(x):
            acc = F.add(acc, F.mul(F.mul(eq.Q[i][j], xi), xj))
    return acc


def test_make_eq_symmetrizes():
    eq = make_eq(Q, ((0, 2), (0, 0)), (0, 0), 0)
    assert eq.Q == ((fr(0), fr(1)), (fr(1), fr(0)))


def test_single_univariate_quadratic():
    # t^2 - 1 = 0 over Q -> {-1, 1}, complete
    eq = make_eq(Q, ((1,),), (0,), -1)
    res = solve_quadratic_system(Q, 1, [eq])
    assert res.complete and not res.has_positive_dim()
    assert sorted(res.points()) == [(fr(-1),), (fr(1),)]


def test_irreducible_quadratic_has_no_points_but_is_complete():
    # t^2 - 2 = 0 has no rational root; completeness still certified
    eq = make_eq(Q, ((1,),), (0,), -2)
    res = solve_quadratic_system(Q, 1, [eq])
    assert res.complete and res.points() == []


def test_idempotent_system_of_unital_rank_one_algebra():
    # x = (a, b) in span{1, n}, n^2 = 0: x^2 = x reads a^2 = a, 2ab = b.
    eqs = [make_eq(Q, ((1, 0), (0, 0)), (-1, 0), 0),
           make_eq(Q, ((0, 1), (1, 0)), (0, -1), 0)]
    res = solve_quadratic_system(Q, 2, eqs)
    assert res.complete
    assert sorted(res.points()) == [(fr(0), fr(0)), (fr(1), fr(0))]
    assert not res.has_positive_dim()


def test_positive_dimensional_component():
    # a^2 = 0 over Q forces a = 0, b free: one 1-dimensional component
    eq = make_eq(Q, ((1, 0), (0, 0)), (0, 0), 0)
    res = solve_quadratic_system(Q, 2, [eq])
    assert res.complete and res.has_positive_dim()
    (comp,) = res.components
    assert comp.base == (fr(0), fr(0))
    assert comp.dirs == ((fr(0), fr(1)),)
    assert comp.dim == 1


def test_linear_equations_eliminate_parameters():
    # x + y = 3, x - y = 1 -> unique point (2, 1)
    eqs = [make_eq(Q, ((0, 0), (0, 0)), (1, 1), -3),
           make_eq(Q, ((0, 0), (0, 0)), (1, -1), -1)]
    res = solve_quadratic_system(Q, 2, eqs)
    assert res.complete and res.points() == [(fr(2), fr(1))]


def test_inconsistent_system_is_empty_and_complete():
    eqs = [make_eq(Q, ((0,),), (1,), 0),      # t = 0
           make_eq(Q, ((0,),), (1,), -1)]     # t = 1
    res = solve_quadratic_system(Q, 1, eqs)
    assert res.complete and res.components == ()


def test_all_points_returned_satisfy_the_system():
    # intersection of two conics with rational solutions:
    # t^2 = 1 and s^2 = 4 -> four points
    eqs = [make_eq(Q, ((1, 0), (0, 0)), (0, 0), -1),
           make_eq(Q, ((0, 0), (0, 1)), (0, 0), -4)]
    res = solve_quadratic_system(Q, 2, eqs)
    assert res.complete and len(res.points()) == 4
    for pt in res.points():
        for eq in eqs:
            assert Q.is_zero(_eval(Q, eq, pt))


def test_coupled_system_reports_partial_not_a_guess():
    # x*y = 1 has full-rank-two quadratic form; solver must admit it is stuck
    eq = make_eq(Q, ((0, Fraction(1, 2)), (Fraction(1, 2), 0)), (0, 0), -1)
    res = solve_quadratic_system(Q, 2, [eq])
    assert not res.complete


def test_branch_budget_forces_partial():
    eq = make_eq(Q, ((1,),), (0,), -1)
    res = solve_quadratic_system(Q, 1, [eq], branch_budget=1)
    assert not res.complete


def test_works_over_prime_field():
    # t^2 = 1 over F_3 -> {1, 2}
    eq = make_eq(F3, ((1,),), (0,), F3.coerce(-1))
    res = solve_quadratic_system(F3, 1, [eq])
    assert res.complete and sorted(res.points()) == [(1,), (2,)]


def test_result_shape_types():
    res = SolveResult("COMPLETE", (AffineComponent((fr(0),), ()),))
    assert res.complete and res.points() == [(fr(0),)]
