"""Cayley-Dickson scalars: field, complex, quaternion, octonion arithmetic."""

import itertools
import random
from fractions import Fraction

import pytest

from jordanlab.composition import CompositionAlgebra, DegreeMismatch
from jordanlab.fields import Field

Q = Field(None)
F3 = Field(3)


def _rand_el(C, rng):
    return tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3))
                 for _ in range(C.degree))


@pytest.mark.parametrize("degree", [1, 2, 4, 8])
def test_unit_laws_and_conjugation(degree):
    C = CompositionAlgebra(Q, degree)
    rng = random.Random(degree)
    for _ in range(12):
        x = _rand_el(C, rng)
        assert C.mul(C.one, x) == x
        assert C.mul(x, C.one) == x
        assert C.conj(C.conj(x)) == x
        # x + conj(x) is scalar (twice the real part)
        s = C.add(x, C.conj(x))
        assert all(Q.is_zero(c) for c in s[1:])
        assert s[0] == Q.add(x[0], x[0])
        # x * conj(x) = norm(x) * 1
        assert C.mul(x, C.conj(x)) == C.scalar(C.norm(x))


@pytest.mark.parametrize("degree", [1, 2, 4, 8])
def test_norm_is_multiplicative(degree):
    C = CompositionAlgebra(Q, degree)
    rng = random.Random(100 + degree)
    for _ in range(15):
        x, y = _rand_el(C, rng), _rand_el(C, rng)
        assert C.norm(C.mul(x, y)) == Q.mul(C.norm(x), C.norm(y))


@pytest.mark.parametrize("degree", [1, 2, 4])
def test_associative_through_quaternions(degree):
    C = CompositionAlgebra(Q, degree)
    rng = random.Random(200 + degree)
    for _ in range(10):
        x, y, z = (_rand_el(C, rng) for _ in range(3))
        assert C.mul(C.mul(x, y), z) == C.mul(x, C.mul(y, z))


def test_octonions_not_associative_but_alternative():
    C = CompositionAlgebra(Q, 8)
    e = C.basis_unit
    # e1(e2 e4) != (e1 e2)e4 — a standard non-associative triple
    assert C.mul(e(1), C.mul(e(2), e(4))) != C.mul(C.mul(e(1), e(2)), e(4))
    rng = random.Random(7)
    for _ in range(10):
        x, y = _rand_el(C, rng), _rand_el(C, rng)
        assert C.mul(C.mul(x, x), y) == C.mul(x, C.mul(x, y))
        assert C.mul(C.mul(x, y), y) == C.mul(x, C.mul(y, y))


def test_quaternion_table():
    C = CompositionAlgebra(Q, 4)
    one, i, j, k = (C.basis_unit(t) for t in range(4))
    assert C.mul(i, i) == C.neg(one)
    assert C.mul(j, j) == C.neg(one)
    assert C.mul(i, j) == k
    assert C.mul(j, i) == C.neg(k)
    assert C.mul(i, k) == C.neg(j)


def test_octonion_basis_units_anticommute_and_square_to_minus_one():
    C = CompositionAlgebra(Q, 8)
    units = [C.basis_unit(t) for t in range(8)]
    for a, b in itertools.combinations(range(1, 8), 2):
        assert C.mul(units[a], units[b]) == C.neg(C.mul(units[b], units[a]))
    for a in range(1, 8):
        assert C.mul(units[a], units[a]) == C.neg(C.one)


def test_works_over_prime_field():
    C = CompositionAlgebra(F3, 4)
    x = (1, 2, 0, 1)
    assert C.norm(x) == (1 + 4 + 0 + 1) % 3
    assert C.mul(x, C.conj(x)) == C.scalar(C.norm(x))


def test_degree_guards():
    with pytest.raises(DegreeMismatch):
        CompositionAlgebra(Q, 3)
    C = CompositionAlgebra(Q, 2)
    with pytest.raises(DegreeMismatch):
        C.mul((Q.one,), (Q.one,))
    with pytest.raises(DegreeMismatch):
        C.basis_unit(2)


def test_scalar_and_real_part():
    C = CompositionAlgebra(Q, 8)
    s = C.scalar("3/2")
    assert C.real_part(s) == Fraction(3, 2)
    assert C.is_zero(C.zero) and not C.is_zero(s)
