"""Exact linear algebra: RREF, solving, subspaces, linear operators."""

from fractions import Fraction

import pytest

from jordanlab.fields import Field
from jordanlab.linalg import (
    AmbientMismatch,
    LinOp,
    Subspace,
    identity_matrix,
    kernel_of_matrix,
    mat_mul,
    mat_vec,
    rref,
    solve,
)

Q = Field(None)
F3 = Field(3)


def _fr(rows):
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


def test_rref_rationals():
    R, pivots = rref(Q, _fr([[1, 2, 3], [2, 4, 7], [1, 2, 4]]))
    assert pivots == (0, 2)
    assert R == _fr([[1, 2, 0], [0, 0, 1]])


def test_rref_fp():
    R, pivots = rref(F3, ((1, 2), (2, 1)))
    assert pivots == (0,)          # second row = 2 * first mod 3
    assert R == ((1, 2),)


def test_solve_unique_and_inconsistent():
    A = _fr([[2, 1], [1, 3]])
    x = solve(Q, A, (Fraction(5), Fraction(10)))
    assert x == (Fraction(1), Fraction(3))
    assert mat_vec(Q, A, x) == (Fraction(5), Fraction(10))
    assert solve(Q, _fr([[1, 1], [1, 1]]), (Fraction(0), Fraction(1))) is None


def test_solve_underdetermined_returns_a_solution():
    A = _fr([[1, 1, 0]])
    x = solve(Q, A, (Fraction(4),))
    assert x is not None and mat_vec(Q, A, x) == (Fraction(4),)


def test_mat_mul_identity():
    A = ((1, 2), (0, 1))
    assert mat_mul(F3, A, identity_matrix(F3, 2)) == A
    assert mat_mul(F3, identity_matrix(F3, 2), A) == A


def test_subspace_basics():
    S = Subspace.from_rows(F3, 3, ((1, 0, 1), (0, 1, 0), (1, 1, 1)))
    assert S.dim == 2
    assert S.contains((2, 1, 2))
    assert not S.contains((0, 0, 1))
    Z = Subspace.zero(F3, 3)
    F = Subspace.full(F3, 3)
    assert Z.dim == 0 and F.dim == 3
    assert Z.is_subspace_of(S) and S.is_subspace_of(F)
    assert not F.is_subspace_of(S)


def test_subspace_reduce_is_canonical_coset_representative():
    S = Subspace.from_rows(Q, 2, (_fr([[1, 1]])[0],))
    r1 = S.reduce((Fraction(3), Fraction(5)))
    r2 = S.reduce((Fraction(10), Fraction(12)))
    assert r1 == r2                     # same coset mod span{(1,1)}
    assert S.reduce((Fraction(4), Fraction(4))) == (Fraction(0), Fraction(0))


def test_subspace_add_intersect_dimension_formula():
    U = Subspace.from_rows(F3, 3, ((1, 0, 0), (0, 1, 0)))
    V = Subspace.from_rows(F3, 3, ((0, 1, 0), (0, 0, 1)))
    s = U.add(V)
    i = U.intersect(V)
    assert s.dim == 3 and i.dim == 1
    assert i.contains((0, 1, 0))
    assert U.dim + V.dim == s.dim + i.dim


def test_subspace_enumerate_vectors_fp():
    S = Subspace.from_rows(F3, 3, ((1, 0, 2),))
    vecs = list(S.enumerate_vectors())
    assert len(vecs) == 3
    assert (0, 0, 0) in vecs and (1, 0, 2) in vecs and (2, 0, 1) in vecs


def test_subspace_enumerate_vectors_rejected_over_q():
    S = Subspace.from_rows(Q, 2, (_fr([[1, 0]])[0],))
    with pytest.raises(ValueError):
        list(S.enumerate_vectors())


def test_subspace_to_strings():
    S = Subspace.from_rows(F3, 2, ((2, 0),))
    assert S.to_strings() == [["1", "0"]]   # echelon basis, normalized pivot


def test_ambient_mismatch():
    U = Subspace.from_rows(F3, 2, ((1, 0),))
    V = Subspace.from_rows(F3, 3, ((1, 0, 0),))
    with pytest.raises(AmbientMismatch):
        U.add(V)
    with pytest.raises(AmbientMismatch):
        U.intersect(V)


def test_linop_kernel_image_rank_nullity():
    op = LinOp(F3, ((1, 2, 0), (2, 1, 0), (0, 0, 0)))
    k = op.kernel()
    im = op.image()
    assert k.dim + im.dim == 3
    for v in k.enumerate_vectors():
        assert op.apply(v) == (0, 0, 0)
    assert not op.is_zero()
    assert LinOp(F3, ((0, 0), (0, 0))).is_zero()


def test_linop_compose_add_scale():
    a = LinOp(F3, ((1, 1), (0, 1)))
    b = LinOp(F3, ((1, 0), (1, 1)))
    v = (1, 2)
    assert a.compose(b).apply(v) == a.apply(b.apply(v))
    assert a.add(b).apply(v) == tuple(
        F3.add(x, y) for x, y in zip(a.apply(v), b.apply(v)))
    assert a.scale(2).apply(v) == tuple(F3.mul(2, x) for x in a.apply(v))


def test_linop_invertibility():
    assert LinOp(F3, ((1, 1), (0, 1))).is_invertible()
    assert not LinOp(F3, ((1, 1), (2, 2))).is_invertible()


def test_kernel_of_matrix_agrees_with_linop():
    M = ((1, 0, 2), (0, 1, 1))
    k = kernel_of_matrix(F3, M)
    assert k.dim == 1
    for v in k.enumerate_vectors():
        assert mat_vec(F3, M, v) == (0, 0)
