"""Jordan algebras presented by structure constants, with exact operations.

A :class:`JordanAlgebra` stores the commutative product table c_{ij}^k for
basis pairs i <= j over an exact field (Q or F_p, p odd).  Elements are
coordinate vectors.  The quadratic operator is u_op(a) = 2 L_a^2 - L_{a^2},
so u_op(a) applied to b is 2(ab)a - a^2 b, and the triple product is
{a b c} = (ab)c + (cb)a - (ac)b.

Validation of the Jordan identity (a^2 b) a = a^2 (b a) runs exhaustively
over F_p when p^dim fits the budget (the identity for all b collapses to the
commutator [L_a, L_{a^2}] = 0, checked for every a), and otherwise through
the full linearization on basis quadruples, which is sound for
characteristic 0 or p >= 5.  Over F_3 beyond the budget there is no sound
shortcut and validation raises CharThreeNeedsExhaustive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import numpy as np

from .budget import DEFAULT_BUDGET, CharThreeNeedsExhaustive
from .fields import Field, Scalar
from .linalg import (
    LinOp,
    Subspace,
    identity_matrix,
    mat_mul,
    mat_sub,
    mat_vec,
    rref,
    solve,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    zero_vector,
)


class AlgebraMismatch(ValueError):
    """Elements of different algebras were combined."""


class NotUnital(ValueError):
    """Operation requires a unit the algebra does not have."""


class NotInvertible(ValueError):
    """Element has a singular quadratic operator."""


class NotAssociative(ValueError):
    """Input product table fails associativity on a basis triple."""

    def __init__(self, triple):
        self.triple = triple
        super().__init__(f"associativity fails on basis triple {triple}")


class NotAnIdeal(ValueError):
    """Subspace is not closed under multiplication by the algebra."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"not an ideal: {witness}")


@dataclass(frozen=True)
class Element:
    """An algebra element: coordinates in the algebra's basis."""

    algebra: "JordanAlgebra"
    coords: tuple

    def _join(self, other: "Element"):
        if self.algebra is not other.algebra:
            raise AlgebraMismatch("elements belong to different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._join(other)
        return Element(self.algebra, vec_add(self.algebra.field, self.coords, other.coords))

    def __sub__(self, other: "Element") -> "Element":
        self._join(other)
        return Element(self.algebra, vec_sub(self.algebra.field, self.coords, other.coords))

    def __neg__(self) -> "Element":
        return self.scale(self.algebra.field.neg(self.algebra.field.one))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._join(other)
            return self.algebra.mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Element":
        F = self.algebra.field
        return Element(self.algebra, vec_scale(F, F.coerce(c), self.coords))

    def square(self) -> "Element":
        return self.algebra.mul(self, self)

    def power(self, n: int) -> "Element":
        return self.algebra.power(self, n)

    def is_zero(self) -> bool:
        return vec_is_zero(self.algebra.field, self.coords)

    def sort_key(self):
        F = self.algebra.field
        return tuple(F.sort_key(c) for c in self.coords)

    def coords_str(self) -> list[str]:
        F = self.algebra.field
        return [F.fmt(c) for c in self.coords]

    def __eq__(self, other):
        return (isinstance(other, Element) and other.algebra is self.algebra
                and other.coords == self.coords)

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __repr__(self):
        A = self.algebra
        terms = [
            f"{A.field.fmt(c)}*{A.labels[i]}"
            for i, c in enumerate(self.coords)
            if not A.field.is_zero(c)
        ]
        return " + ".join(terms) if terms else "0"


class JordanAlgebra:
    """Finite-dimensional commutative algebra given by structure constants.

    ``products`` maps basis pairs (i, j) with i <= j to coordinate vectors of
    b_i * b_j; omitted pairs multiply to zero.  Commutativity is built into
    the storage.  The Jordan identity is NOT assumed here; run
    :func:`validate_jordan` to check it.
    """

    def __init__(self, field: Field, dim: int, products, unit=None, labels=None):
        if dim < 1:
            raise ValueError("dim must be >= 1")
        self.field = field
        self.dim = dim
        self.labels = tuple(labels) if labels else tuple(f"b{i}" for i in range(dim))
        if len(self.labels) != dim:
            raise ValueError("labels length differs from dim")
        table = [[zero_vector(field, dim)] * dim for _ in range(dim)]
        for (i, j), vec in products.items():
            if not (0 <= i <= j < dim):
                raise ValueError(f"bad product index pair ({i}, {j})")
            v = self._coerce_vector(vec)
            table[i][j] = v
            table[j][i] = v
        self._prod = tuple(tuple(row) for row in table)
        if unit is not None:
            u = self._coerce_vector(unit)
            for i in range(dim):
                if self._basis_mul(u, i) != self._basis_vec(i):
                    raise NotUnital(f"claimed unit does not fix basis vector {i}")
            self.unit_coords = u
        else:
            self.unit_coords = None
        self.provenance: dict = {}
        self._l_basis_cache = None
        self._np_cache: dict = {}

    # -- small helpers -------------------------------------------------------

    def _coerce_vector(self, vec) -> tuple:
        vec = tuple(self.field.coerce(c) for c in vec)
        if len(vec) != self.dim:
            raise ValueError(f"vector length {len(vec)} != dim {self.dim}")
        return vec

    def _basis_vec(self, i: int) -> tuple:
        return tuple(self.field.one if k == i else self.field.zero for k in range(self.dim))

    def _basis_mul(self, v: tuple, j: int) -> tuple:
        F = self.field
        out = zero_vector(F, self.dim)
        for i, c in enumerate(v):
            if not F.is_zero(c):
                out = vec_add(F, out, vec_scale(F, c, self._prod[i][j]))
        return out

    @property
    def is_unital(self) -> bool:
        return self.unit_coords is not None

    # -- element construction --------------------------------------------------

    def element(self, coords) -> Element:
        return Element(self, self._coerce_vector(coords))

    def zero(self) -> Element:
        return Element(self, zero_vector(self.field, self.dim))

    def basis_element(self, i: int) -> Element:
        return Element(self, self._basis_vec(i))

    @property
    def unit(self) -> Element | None:
        if self.unit_coords is None:
            return None
        return Element(self, self.unit_coords)

    # -- products and operators -------------------------------------------------

    def mul_coords(self, a: tuple, b: tuple) -> tuple:
        F = self.field
        out = zero_vector(F, self.dim)
        for i, ca in enumerate(a):
            if F.is_zero(ca):
                continue
            row = self._prod[i]
            for j, cb in enumerate(b):
                if not F.is_zero(cb):
                    out = vec_add(F, out, vec_scale(F, F.mul(ca, cb), row[j]))
        return out

    def mul(self, a: Element, b: Element) -> Element:
        return Element(self, self.mul_coords(a.coords, b.coords))

    def power(self, a: Element, n: int) -> Element:
        """Left-normed power a^n, n >= 1; well defined by power associativity."""
        if n < 1:
            raise ValueError("power requires n >= 1")
        acc = a
        for _ in range(n - 1):
            acc = self.mul(acc, a)
        return acc

    def _l_basis(self) -> tuple:
        """Matrices of left multiplication by each basis vector."""
        if self._l_basis_cache is None:
            mats = []
            for i in range(self.dim):
                rows = tuple(
                    tuple(self._prod[i][j][k] for j in range(self.dim))
                    for k in range(self.dim)
                )
                mats.append(rows)
            self._l_basis_cache = tuple(mats)
        return self._l_basis_cache

    def l_matrix(self, coords: tuple) -> tuple:
        F = self.field
        mats = self._l_basis()
        rows = [[F.zero] * self.dim for _ in range(self.dim)]
        for i, c in enumerate(coords):
            if F.is_zero(c):
                continue
            m = mats[i]
            for k in range(self.dim):
                rows[k] = [F.add(x, F.mul(c, y)) for x, y in zip(rows[k], m[k])]
        return tuple(tuple(r) for r in rows)

    def l_op(self, a: Element) -> LinOp:
        """Left multiplication operator L_a: x -> a*x."""
        return LinOp(self.field, self.l_matrix(a.coords))

    def u_matrix(self, coords: tuple) -> tuple:
        F = self.field
        La = self.l_matrix(coords)
        sq = self.mul_coords(coords, coords)
        Lsq = self.l_matrix(sq)
        two = F.add(F.one, F.one)
        LaLa = mat_mul(F, La, La)
        return mat_sub(F, tuple(vec_scale(F, two, r) for r in LaLa), Lsq)

    def u_op(self, a: Element) -> LinOp:
        """Quadratic operator U_a: b -> 2(ab)a - a^2 b."""
        return LinOp(self.field, self.u_matrix(a.coords))

    def u_bilinear_op(self, a: Element, b: Element) -> LinOp:
        """Operator x -> {a x b} = (ax)b + (bx)a - (ab)x."""
        F = self.field
        La, Lb = self.l_matrix(a.coords), self.l_matrix(b.coords)
        Lab = self.l_matrix(self.mul_coords(a.coords, b.coords))
        m = mat_sub(F, mat_mul(F, La, Lb), Lab)
        m = tuple(vec_add(F, r, s) for r, s in zip(m, mat_mul(F, Lb, La)))
        return LinOp(F, m)

    def triple(self, a: Element, b: Element, c: Element) -> Element:
        """Jordan triple product {a b c} = (ab)c + (cb)a - (ac)b."""
        ab = self.mul(a, b)
        cb = self.mul(c, b)
        ac = self.mul(a, c)
        return self.mul(ab, c) + self.mul(cb, a) - self.mul(ac, b)

    # -- derived structure ---------------------------------------------------

    def squares_span(self) -> Subspace:
        """Smallest subspace containing every square (char != 2)."""
        rows = []
        for i in range(self.dim):
            rows.append(self._prod[i][i])
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                bi, bj = self._basis_vec(i), self._basis_vec(j)
                s = vec_add(self.field, bi, bj)
                rows.append(self.mul_coords(s, s))
        return Subspace.from_rows(self.field, self.dim, rows)

    def sparse_products(self) -> list:
        """Canonical sparse table [(i, j, [(k, coeff), ...])] for i <= j."""
        F = self.field
        out = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                entries = [(k, c) for k, c in enumerate(self._prod[i][j]) if not F.is_zero(c)]
                if entries:
                    out.append((i, j, entries))
        return out

    # -- exact integer views for vectorized paths ------------------------------

    def np_structure_fp(self) -> np.ndarray:
        """Structure constants as an int64 array sc[i, j, k], F_p only."""
        if "fp" not in self._np_cache:
            if self.field.p is None:
                raise ValueError("np_structure_fp requires a prime field")
            d = self.dim
            arr = np.zeros((d, d, d), dtype=np.int64)
            for i in range(d):
                for j in range(d):
                    for k in range(d):
                        arr[i, j, k] = self._prod[i][j][k]
            self._np_cache["fp"] = arr
        return self._np_cache["fp"]

    def int_structure(self):
        """(array of scaled integer structure constants, denominator).

        Over F_p the entries are residues and the denominator is 1.  Over Q
        the entries are numerators after clearing the common denominator.
        The dtype is object (exact Python ints); callers may downcast after
        checking their own overflow bounds.
        """
        if "int" not in self._np_cache:
            d = self.dim
            if self.field.p is not None:
                arr = np.empty((d, d, d), dtype=object)
                for i in range(d):
                    for j in range(d):
                        for k in range(d):
                            arr[i, j, k] = int(self._prod[i][j][k])
                self._np_cache["int"] = (arr, 1)
            else:
                den = 1
                for i in range(d):
                    for j in range(i, d):
                        for c in self._prod[i][j]:
                            den = den * c.denominator // math.gcd(den, c.denominator)
                arr = np.empty((d, d, d), dtype=object)
                for i in range(d):
                    for j in range(d):
                        for k in range(d):
                            c = self._prod[i][j][k]
                            arr[i, j, k] = c.numerator * (den // c.denominator)
                self._np_cache["int"] = (arr, den)
        return self._np_cache["int"]

    def __repr__(self):
        u = "unital" if self.is_unital else "non-unital"
        return f"JordanAlgebra(dim={self.dim}, {self.field!r}, {u})"


# -- validation ----------------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    method: str
    failures: tuple = ()

    def to_dict(self) -> dict:
        return {"ok": self.ok, "method": self.method, "failures": list(self.failures)}


def validate_jordan(A: JordanAlgebra, budget: int = DEFAULT_BUDGET) -> ValidationReport:
    """Check the Jordan identity (a^2 b) a = a^2 (b a) for the whole algebra."""
    p = A.field.p
    if p is not None and p ** A.dim <= budget:
        return _validate_exhaustive_fp(A)
    if p is None or p >= 5:
        return _validate_linearized(A)
    raise CharThreeNeedsExhaustive(
        f"F_3 validation needs exhaustive enumeration but 3^{A.dim} exceeds budget {budget}")


def _validate_exhaustive_fp(A: JordanAlgebra) -> ValidationReport:
    """All pairs over F_p: for fixed a the identity over all b says exactly
    that L_a and L_{a^2} commute, so every a is checked by one commutator."""
    p, d = A.field.p, A.dim
    n = p ** d
    sc = A.np_structure_fp()
    lb = np.transpose(sc, (0, 2, 1))  # lb[i] = matrix of L_{b_i}
    powers = p ** np.arange(d - 1, -1, -1, dtype=np.int64)
    chunk = 4096
    for start in range(0, n, chunk):
        idx = np.arange(start, min(start + chunk, n), dtype=np.int64)
        X = (idx[:, None] // powers[None, :]) % p
        LX = np.tensordot(X, lb, axes=(1, 0)) % p
        sq = np.einsum("cij,cj->ci", LX, X) % p
        Lsq = np.tensordot(sq, lb, axes=(1, 0)) % p
        C = (np.matmul(LX, Lsq) - np.matmul(Lsq, LX)) % p
        bad = np.nonzero(C.any(axis=(1, 2)))[0]
        if bad.size:
            c0 = int(bad[0])
            a = tuple(int(v) for v in X[c0])
            col = int(np.nonzero(C[c0].any(axis=0))[0][0])
            b = tuple(int(v) for v in np.eye(d, dtype=np.int64)[col])
            return ValidationReport(False, "exhaustive", (
                {"kind": "jordan_identity", "a": list(a), "b": list(b)},))
    return ValidationReport(True, "exhaustive")


def _validate_linearized(A: JordanAlgebra) -> ValidationReport:
    """Full linearization on all basis quadruples (char 0 or p >= 5).

    With M[i,j,:] the coordinates of b_i b_j, the trilinear form
    T(a1,a2,a3; b) = sum over the three pair choices of ((a a') b) a'' minus
    (a a')(b a'') vanishes identically iff the Jordan identity holds.
    """
    p, d = A.field.p, A.dim
    M_obj, _den = A.int_structure()
    maxabs = max(1, max(abs(int(v)) for v in M_obj.reshape(-1)))
    if p is not None:
        M = M_obj.astype(np.int64)
        bound = d * d * (p - 1) ** 3
        use_int64 = bound < 2 ** 62
    else:
        bound = (d ** 2) * (maxabs ** 3) * 3 * 2
        use_int64 = bound < 2 ** 62
    M = M_obj.astype(np.int64) if use_int64 else M_obj

    def red(x):
        return x % p if p is not None else x

    G = red(np.einsum("ijm,mln->ijln", M, M))
    H = red(np.einsum("ijln,nkq->ijlkq", G, M))
    S = red(np.einsum("lkn,ijnq->ijlkq", M, G))
    for i0 in range(d):
        t1 = np.einsum("jlkq->jklq", H[i0])
        t2 = H[:, :, :, i0, :]
        t3 = np.einsum("kljq->jklq", H[i0])
        s1 = np.einsum("jlkq->jklq", S[i0])
        s2 = S[:, :, :, i0, :]
        s3 = np.einsum("kljq->jklq", S[i0])
        T = red(t1 + t2 + t3 - s1 - s2 - s3)
        nz = np.nonzero(T.any(axis=3))
        if nz[0].size:
            j, k, l = (int(nz[0][0]), int(nz[1][0]), int(nz[2][0]))
            return ValidationReport(False, "linearized", (
                {"kind": "linearized_jordan_identity",
                 "quadruple": [i0, j, k, l]},))
    return ValidationReport(True, "linearized")


def validate_structure(A: JordanAlgebra) -> list:
    """Structural checks that need no identity: unit axiom, label sanity."""
    problems = []
    if A.unit_coords is not None:
        for i in range(A.dim):
            got = A._basis_mul(A.unit_coords, i)
            if got != A._basis_vec(i):
                problems.append({"kind": "unit_axiom", "basis": i})
    return problems


# -- constructions ----------------------------------------------------------


def unital_hull(A: JordanAlgebra) -> JordanAlgebra:
    """Adjoin a unit: index 0 is the new unit, A sits at coordinates 1..dim."""
    F, d = A.field, A.dim
    products = {}
    products[(0, 0)] = (F.one,) + (F.zero,) * d
    for j in range(d):
        products[(0, j + 1)] = tuple(
            F.one if k == j + 1 else F.zero for k in range(d + 1))
    for i in range(d):
        for j in range(i, d):
            products[(i + 1, j + 1)] = (F.zero,) + A._prod[i][j]
    labels = ("one",) + tuple(A.labels)
    unit = (F.one,) + (F.zero,) * d
    H = JordanAlgebra(F, d + 1, products, unit=unit, labels=labels)
    H.provenance = {"kind": "unital_hull", "base_dim": d}
    return H


def hull_embed(H: JordanAlgebra, a: Element) -> Element:
    """Image of a base-algebra element inside the hull built by unital_hull."""
    return H.element((H.field.zero,) + a.coords)


def hull_restrict(A: JordanAlgebra, h: Element) -> Element:
    """Pull a hull element with zero unit coordinate back into A."""
    if not A.field.is_zero(h.coords[0]):
        raise ValueError("hull element has a unit component, not in the base algebra")
    return A.element(h.coords[1:])


def direct_sum(A: JordanAlgebra, B: JordanAlgebra, labels=None) -> JordanAlgebra:
    if A.field != B.field:
        raise AlgebraMismatch("direct sum needs a common field")
    F = A.field
    d = A.dim + B.dim
    products = {}
    for i in range(A.dim):
        for j in range(i, A.dim):
            products[(i, j)] = A._prod[i][j] + zero_vector(F, B.dim)
    off = A.dim
    for i in range(B.dim):
        for j in range(i, B.dim):
            products[(off + i, off + j)] = zero_vector(F, A.dim) + B._prod[i][j]
    unit = None
    if A.is_unital and B.is_unital:
        unit = A.unit_coords + B.unit_coords
    if labels is None:
        labels = tuple(f"l.{s}" for s in A.labels) + tuple(f"r.{s}" for s in B.labels)
    return JordanAlgebra(F, d, products, unit=unit, labels=labels)


@dataclass(frozen=True)
class QuotientMap:
    """Projection A -> A/I together with the coordinate section."""

    source: JordanAlgebra
    target: JordanAlgebra
    ideal: Subspace
    complement_coords: tuple

    def apply(self, a: Element) -> Element:
        red = self.ideal.reduce(a.coords)
        return self.target.element(tuple(red[c] for c in self.complement_coords))

    def lift(self, q: Element) -> Element:
        v = [self.source.field.zero] * self.source.dim
        for qi, c in zip(q.coords, self.complement_coords):
            v[c] = qi
        return self.source.element(v)


def is_ideal(A: JordanAlgebra, V: Subspace):
    """None if V is an ideal of A, else a witness dict."""
    for i in range(A.dim):
        for row in V.rows:
            prod = A.mul_coords(A._basis_vec(i), row)
            if not V.contains(prod):
                return {"basis": i, "ideal_row": list(row), "product": list(prod)}
    return None


def quotient(A: JordanAlgebra, I: Subspace) -> tuple[JordanAlgebra, QuotientMap]:
    """Quotient algebra A/I for an ideal I, with the canonical projection."""
    witness = is_ideal(A, I)
    if witness is not None:
        raise NotAnIdeal(witness)
    F = A.field
    pivset = set(I.pivots)
    comp = tuple(c for c in range(A.dim) if c not in pivset)
    qdim = len(comp)
    if qdim == 0:
        raise ValueError("quotient by the full algebra is zero-dimensional, "
                         "below the minimum dimension this representation "
                         "supports")

    def project(vec):
        red = I.reduce(vec)
        return tuple(red[c] for c in comp)

    products = {}
    for a in range(qdim):
        for b in range(a, qdim):
            prod = A.mul_coords(A._basis_vec(comp[a]), A._basis_vec(comp[b]))
            products[(a, b)] = project(prod)
    unit = None
    if A.is_unital:
        unit = project(A.unit_coords)
        if vec_is_zero(F, unit):
            unit = None
    labels = tuple(A.labels[c] for c in comp)
    Q = JordanAlgebra(F, qdim, products, unit=unit, labels=labels)
    Q.provenance = {"kind": "quotient", "source_dim": A.dim}
    return Q, QuotientMap(A, Q, I, comp)


def special_from_associative(field: Field, dim: int, assoc_products, labels=None,
                             check: bool = True) -> JordanAlgebra:
    """Symmetrize an associative product table into a special Jordan algebra.

    ``assoc_products`` maps every pair (i, j) (both orders) to the coordinates
    of the associative product b_i b_j; omitted pairs are zero.  Associativity
    is verified on all basis triples.  The associative unit, if one exists, is
    found by solving the linear system u b_j = b_j u = b_j.
    """
    table = [[zero_vector(field, dim)] * dim for _ in range(dim)]
    for (i, j), vec in assoc_products.items():
        v = tuple(field.coerce(c) for c in vec)
        if len(v) != dim:
            raise ValueError("associative product vector has wrong length")
        table[i][j] = v

    def amul(u, v):
        out = zero_vector(field, dim)
        for i, cu in enumerate(u):
            if field.is_zero(cu):
                continue
            for j, cv in enumerate(v):
                if not field.is_zero(cv):
                    out = vec_add(field, out, vec_scale(field, field.mul(cu, cv), table[i][j]))
        return out

    if check:
        basis = [tuple(field.one if k == i else field.zero for k in range(dim))
                 for i in range(dim)]
        for i in range(dim):
            for j in range(dim):
                ij = table[i][j]
                for k in range(dim):
                    left = amul(ij, basis[k])
                    right = amul(basis[i], table[j][k])
                    if left != right:
                        raise NotAssociative((i, j, k))

    half = field.inv(field.add(field.one, field.one))
    products = {}
    for i in range(dim):
        for j in range(i, dim):
            sym = vec_add(field, table[i][j], table[j][i])
            products[(i, j)] = vec_scale(field, half, sym)

    # Two-sided associative unit, if any: stack u b_j = b_j and b_j u = b_j.
    rows = []
    rhs = []
    for j in range(dim):
        for k in range(dim):
            rows.append(tuple(table[i][j][k] for i in range(dim)))
            rhs.append(field.one if k == j else field.zero)
            rows.append(tuple(table[j][i][k] for i in range(dim)))
            rhs.append(field.one if k == j else field.zero)
    unit = solve(field, tuple(rows), tuple(rhs))

    A = JordanAlgebra(field, dim, products, unit=unit, labels=labels)
    A.provenance = {"kind": "special", "assoc": tuple(tuple(row) for row in table)}
    return A


def assoc_mul(A: JordanAlgebra, u: Element, v: Element) -> Element:
    """Associative product in the presentation recorded by special_from_associative."""
    table = A.provenance.get("assoc")
    if table is None:
        raise ValueError("algebra has no recorded associative presentation")
    F = A.field
    out = zero_vector(F, A.dim)
    for i, cu in enumerate(u.coords):
        if F.is_zero(cu):
            continue
        for j, cv in enumerate(v.coords):
            if not F.is_zero(cv):
                out = vec_add(F, out, vec_scale(F, F.mul(cu, cv), table[i][j]))
    return Element(A, out)
