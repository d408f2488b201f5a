"""Cayley-Dickson composition algebras of degree 1, 2, 4, 8 over an exact field.

Degree 1 is the field itself, 2 doubles it ("complex"), 4 doubles again
("quaternion"), 8 once more ("octonion").  Elements are plain coordinate
tuples; the algebra object carries the operations.  Multiplication uses the
doubling rule (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)), conjugation
fixes coordinate 0 and negates the rest, and the norm is the sum of squared
coordinates.  Associativity holds through degree 4; degree 8 is only
alternative.
"""

from __future__ import annotations

from .fields import Field, Scalar

VALID_DEGREES = (1, 2, 4, 8)


class DegreeMismatch(ValueError):
    """Operands of different composition degree, or an unsupported degree."""


class CompositionAlgebra:
    """Composition scalars of a fixed degree over a fixed field."""

    def __init__(self, field: Field, degree: int):
        if degree not in VALID_DEGREES:
            raise DegreeMismatch(f"degree must be one of {VALID_DEGREES}, got {degree}")
        self.field = field
        self.degree = degree

    def __repr__(self):
        return f"CompositionAlgebra({self.field!r}, degree={self.degree})"

    def _check(self, x):
        if len(x) != self.degree:
            raise DegreeMismatch(
                f"element has {len(x)} coordinates, expected {self.degree}")
        return x

    # -- construction -------------------------------------------------------

    @property
    def zero(self):
        return (self.field.zero,) * self.degree

    @property
    def one(self):
        return (self.field.one,) + (self.field.zero,) * (self.degree - 1)

    def basis_unit(self, t: int):
        if not 0 <= t < self.degree:
            raise DegreeMismatch(f"basis index {t} out of range for degree {self.degree}")
        return tuple(self.field.one if i == t else self.field.zero
                     for i in range(self.degree))

    def scalar(self, c: Scalar):
        return (self.field.coerce(c),) + (self.field.zero,) * (self.degree - 1)

    # -- arithmetic ----------------------------------------------------------

    def add(self, x, y):
        self._check(x), self._check(y)
        return tuple(self.field.add(a, b) for a, b in zip(x, y))

    def sub(self, x, y):
        self._check(x), self._check(y)
        return tuple(self.field.sub(a, b) for a, b in zip(x, y))

    def neg(self, x):
        return tuple(self.field.neg(a) for a in self._check(x))

    def scale(self, c: Scalar, x):
        return tuple(self.field.mul(c, a) for a in self._check(x))

    def conj(self, x):
        self._check(x)
        return (x[0],) + tuple(self.field.neg(a) for a in x[1:])

    def mul(self, x, y):
        self._check(x), self._check(y)
        return _cd_mul(self.field, x, y)

    def norm(self, x) -> Scalar:
        """Multiplicative quadratic norm: sum of squared coordinates."""
        F = self.field
        acc = F.zero
        for a in self._check(x):
            acc = F.add(acc, F.mul(a, a))
        return acc

    def is_zero(self, x) -> bool:
        return all(self.field.is_zero(a) for a in self._check(x))

    def real_part(self, x) -> Scalar:
        return self._check(x)[0]


def _cd_mul(F: Field, x, y):
    n = len(x)
    if n == 1:
        return (F.mul(x[0], y[0]),)
    h = n // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    # (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))
    dbar = _cd_conj(F, d)
    cbar = _cd_conj(F, c)
    left = _sub(F, _cd_mul(F, a, c), _cd_mul(F, dbar, b))
    right = _add(F, _cd_mul(F, d, a), _cd_mul(F, b, cbar))
    return left + right


def _cd_conj(F: Field, x):
    return (x[0],) + tuple(F.neg(a) for a in x[1:])


def _add(F: Field, u, v):
    return tuple(F.add(a, b) for a, b in zip(u, v))


def _sub(F: Field, u, v):
    return tuple(F.sub(a, b) for a, b in zip(u, v))
