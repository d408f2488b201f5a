"""Exact linear algebra over a Field: RREF, kernels, images, subspaces.

Vectors are tuples of scalars, matrices are tuples of row tuples.  Every
subspace is canonicalized eagerly to its reduced row echelon basis, so
subspace equality is representation equality and results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product as iter_product

from .fields import Field, Scalar

Vector = tuple  # tuple[Scalar, ...]
Matrix = tuple  # tuple[Vector, ...]


class AmbientMismatch(ValueError):
    """Subspace/vector operands live in different ambient spaces or fields."""


def zero_vector(F: Field, n: int) -> Vector:
    return (F.zero,) * n


def vec_add(F: Field, u: Vector, v: Vector) -> Vector:
    return tuple(F.add(a, b) for a, b in zip(u, v))


def vec_sub(F: Field, u: Vector, v: Vector) -> Vector:
    return tuple(F.sub(a, b) for a, b in zip(u, v))


def vec_scale(F: Field, c: Scalar, u: Vector) -> Vector:
    return tuple(F.mul(c, a) for a in u)


def vec_is_zero(F: Field, u: Vector) -> bool:
    return all(F.is_zero(a) for a in u)


def identity_matrix(F: Field, n: int) -> Matrix:
    return tuple(tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n))


def zero_matrix(F: Field, rows: int, cols: int) -> Matrix:
    return ((F.zero,) * cols,) * rows


def mat_vec(F: Field, A: Matrix, v: Vector) -> Vector:
    out = []
    for row in A:
        acc = F.zero
        for a, x in zip(row, v):
            if not F.is_zero(a) and not F.is_zero(x):
                acc = F.add(acc, F.mul(a, x))
        out.append(acc)
    return tuple(out)


def mat_mul(F: Field, A: Matrix, B: Matrix) -> Matrix:
    cols = list(zip(*B))
    out = []
    for row in A:
        out.append(
            tuple(
                _dot(F, row, col)
                for col in cols
            )
        )
    return tuple(out)


def _dot(F: Field, u, v) -> Scalar:
    acc = F.zero
    for a, b in zip(u, v):
        if not F.is_zero(a) and not F.is_zero(b):
            acc = F.add(acc, F.mul(a, b))
    return acc


def mat_add(F: Field, A: Matrix, B: Matrix) -> Matrix:
    return tuple(vec_add(F, r, s) for r, s in zip(A, B))


def mat_sub(F: Field, A: Matrix, B: Matrix) -> Matrix:
    return tuple(vec_sub(F, r, s) for r, s in zip(A, B))


def mat_scale(F: Field, c: Scalar, A: Matrix) -> Matrix:
    return tuple(vec_scale(F, c, r) for r in A)


def mat_is_zero(F: Field, A: Matrix) -> bool:
    return all(vec_is_zero(F, r) for r in A)


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A)) if A else ()


def rref(F: Field, rows) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns).

    Pivots are 1, pivot columns are cleared above and below; zero rows are
    dropped.  The result is the canonical basis of the row space.
    """
    work = [list(r) for r in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(work)):
            if not F.is_zero(work[i][c]):
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = F.inv(work[r][c])
        work[r] = [F.mul(inv, x) for x in work[r]]
        for i in range(len(work)):
            if i != r and not F.is_zero(work[i][c]):
                f = work[i][c]
                work[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def solve(F: Field, A: Matrix, b: Vector):
    """One solution x of A x = b, or None if inconsistent."""
    n_rows = len(A)
    if n_rows == 0:
        return None
    n_cols = len(A[0])
    aug = [list(A[i]) + [b[i]] for i in range(n_rows)]
    red, pivots = rref(F, aug)
    x = [F.zero] * n_cols
    for row, pc in zip(red, pivots):
        if pc == n_cols:
            return None
        x[pc] = row[-1]
    return tuple(x)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace in canonical RREF basis form."""

    field: Field
    ambient: int
    rows: Matrix = dc_field(default=())
    pivots: tuple = dc_field(default=())

    @staticmethod
    def from_rows(F: Field, ambient: int, rows) -> "Subspace":
        for r in rows:
            if len(r) != ambient:
                raise AmbientMismatch(f"row length {len(r)} != ambient {ambient}")
        red, piv = rref(F, rows)
        return Subspace(F, ambient, red, piv)

    @staticmethod
    def zero(F: Field, ambient: int) -> "Subspace":
        return Subspace(F, ambient, (), ())

    @staticmethod
    def full(F: Field, ambient: int) -> "Subspace":
        return Subspace(F, ambient, identity_matrix(F, ambient),
                        tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _check(self, other: "Subspace"):
        if self.field != other.field or self.ambient != other.ambient:
            raise AmbientMismatch("subspaces live in different ambient spaces")

    def reduce(self, v: Vector) -> Vector:
        """Residual of v after eliminating pivot coordinates; zero iff v in self."""
        F = self.field
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if not F.is_zero(c):
                v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, v: Vector) -> bool:
        return vec_is_zero(self.field, self.reduce(v))

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(r) for r in self.rows)

    def add(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.from_rows(self.field, self.ambient, self.rows + other.rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: RREF of [V V; W 0]; intersection rows have zero left block."""
        self._check(other)
        F, n = self.field, self.ambient
        z = zero_vector(F, n)
        block = [r + r for r in self.rows] + [r + z for r in other.rows]
        red, piv = rref(F, block)
        inter = [row[n:] for row, pc in zip(red, piv) if pc >= n]
        return Subspace.from_rows(F, n, inter)

    def basis_elements(self):
        return list(self.rows)

    def enumerate_vectors(self):
        """All vectors of the subspace (finite fields only), deterministic order."""
        F = self.field
        if F.p is None:
            raise ValueError("cannot enumerate a subspace over Q")
        if not self.rows:
            yield zero_vector(F, self.ambient)
            return
        for coeffs in iter_product(range(F.p), repeat=self.dim):
            v = zero_vector(F, self.ambient)
            for c, row in zip(coeffs, self.rows):
                if c:
                    v = vec_add(F, v, vec_scale(F, c, row))
            yield v

    def to_strings(self) -> list[list[str]]:
        F = self.field
        return [[F.fmt(x) for x in row] for row in self.rows]


@dataclass(frozen=True)
class LinOp:
    """A linear operator on F^n given by its matrix (rows act on column vectors)."""

    field: Field
    rows: Matrix

    @property
    def dim(self) -> int:
        return len(self.rows)

    def apply(self, v: Vector) -> Vector:
        return mat_vec(self.field, self.rows, v)

    def compose(self, other: "LinOp") -> "LinOp":
        return LinOp(self.field, mat_mul(self.field, self.rows, other.rows))

    def add(self, other: "LinOp") -> "LinOp":
        return LinOp(self.field, mat_add(self.field, self.rows, other.rows))

    def sub(self, other: "LinOp") -> "LinOp":
        return LinOp(self.field, mat_sub(self.field, self.rows, other.rows))

    def scale(self, c: Scalar) -> "LinOp":
        return LinOp(self.field, mat_scale(self.field, c, self.rows))

    def is_zero(self) -> bool:
        return mat_is_zero(self.field, self.rows)

    def kernel(self) -> Subspace:
        return kernel_of_matrix(self.field, self.rows)

    def image(self) -> Subspace:
        return Subspace.from_rows(self.field, self.dim, transpose(self.rows))

    def is_invertible(self) -> bool:
        red, piv = rref(self.field, self.rows)
        return len(piv) == self.dim


def kernel_of_matrix(F: Field, A: Matrix) -> Subspace:
    """Null space {x : A x = 0} as a canonical Subspace."""
    if not A:
        return Subspace.zero(F, 0)
    n = len(A[0])
    red, pivots = rref(F, A)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    basis = []
    for fc in free:
        v = [F.zero] * n
        v[fc] = F.one
        for row, pc in zip(red, pivots):
            v[pc] = F.neg(row[fc])
        basis.append(tuple(v))
    return Subspace.from_rows(F, n, basis)
