"""Radicals, invertibility, Peirce decomposition, and the idempotent lattice.

The degeneracy radical is computed as a fixpoint: close the trivial
elements into an ideal, pass to the quotient, lift the quotient's trivial
elements back, repeat until the quotient is clean.  Nil and Jacobson
radicals have an exact path (complete ideal enumeration, tiny finite-field
algebras only) and a labeled fallback through the degeneracy radical.
"""

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .annihilators import (FAILS, HOLDS, UNKNOWN, Verdict, _el_dict,
                           element_table, idempotents, trivial_elements)
from .budget import DEFAULT_BUDGET, TooLarge
from .core import (Element, JordanAlgebra, NotInvertible, NotUnital,
                   hull_embed, hull_restrict, is_ideal, quotient, unital_hull)
from .linalg import LinOp, Subspace, identity_matrix, solve

DEG = "Deg"
NIL = "Nil"
RAD = "Rad"

IDEAL_ENUM_MAX_DIM = 5


class NotIdempotent(ValueError):
    pass


@dataclass(frozen=True)
class RadicalReport:
    kind: str
    subspace: Subspace
    chain: tuple
    verification: Verdict
    method: str

    def to_dict(self, A: JordanAlgebra) -> dict:
        return {"kind": self.kind, "method": self.method,
                "dim": self.subspace.dim,
                "basis": self.subspace.to_strings(),
                "chain": list(self.chain),
                "verification": self.verification.to_dict()}


@dataclass(frozen=True)
class IdemLattice:
    elements: tuple                 # idempotents, canonical order
    leq: tuple                      # leq[i][j] iff e_i <= e_j
    sup_table: tuple                # index or None per pair
    inf_table: tuple
    top: int | None
    bottom: int | None
    complete: bool | None           # None when undecidable (partial list)
    incompleteness_witness: dict | None = None

    def index_of(self, e: Element) -> int:
        for i, f in enumerate(self.elements):
            if f.coords == e.coords:
                return i
        raise ValueError("element is not in the lattice")

    def sup_of(self, indices) -> int | None:
        """Fold of pairwise joins; the join of the subset when all steps exist."""
        idx = list(indices)
        if not idx:
            return self.bottom
        cur = idx[0]
        for j in idx[1:]:
            cur = self.sup_table[cur][j]
            if cur is None:
                return None
        return cur

    def inf_of(self, indices) -> int | None:
        idx = list(indices)
        if not idx:
            return self.top
        cur = idx[0]
        for j in idx[1:]:
            cur = self.inf_table[cur][j]
            if cur is None:
                return None
        return cur


# -- ideals ------------------------------------------------------------------

def ideal_closure(A: JordanAlgebra, S: list) -> Subspace:
    """Smallest multiplication-invariant subspace containing span(S)."""
    V = Subspace.from_rows(A.field, A.dim, [list(s.coords) for s in S])
    while True:
        rows = [list(r) for r in V.rows]
        for r in V.rows:
            for i in range(A.dim):
                rows.append(list(A.mul_coords(tuple(r), A._basis_vec(i))))
        W = Subspace.from_rows(A.field, A.dim, rows)
        if W.dim == V.dim:
            return W
        V = W


def _all_subspaces(F, dim: int):
    """Every subspace of F^dim as canonical RREF rows, rank-ascending."""
    if F.p is None:
        raise TooLarge(0, dim, 0)
    p = F.p
    out = [Subspace.zero(F, dim)]
    for r in range(1, dim + 1):
        for pivots in combinations(range(dim), r):
            # free entries: row i, column j > pivots[i], j not a pivot
            free = [(i, j) for i in range(r) for j in range(pivots[i] + 1, dim)
                    if j not in pivots]
            for fill in product(range(p), repeat=len(free)):
                rows = [[0] * dim for _ in range(r)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, j), v in zip(free, fill):
                    rows[i][j] = v
                out.append(Subspace.from_rows(F, dim, rows))
    return out


def enumerate_ideals(A: JordanAlgebra) -> list:
    """All multiplication-invariant subspaces; complete, so exponential in dim."""
    if A.field.p is None or A.dim > IDEAL_ENUM_MAX_DIM:
        raise TooLarge(A.field.p or 0, A.dim, IDEAL_ENUM_MAX_DIM)
    return [V for V in _all_subspaces(A.field, A.dim)
            if is_ideal(A, V) is None]


# -- degeneracy radical ------------------------------------------------------

def deg_radical(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
                threads: int = 1) -> RadicalReport:
    """Fixpoint of: close trivial elements into an ideal, quotient, lift."""
    F = A.field
    I = Subspace.zero(F, A.dim)
    chain = []
    complete_all = True
    while I.dim < A.dim:
        Q, qmap = quotient(A, I)
        pts, comps, complete = trivial_elements(Q, budget, threads)
        complete_all = complete_all and complete
        gens = [z for z in pts if not z.is_zero()]
        for c in comps:
            # lift a whole affine family through its base and directions
            if any(not F.is_zero(v) for v in c.base):
                gens.append(Q.element(c.base))
            for d in c.dirs:
                gens.append(Q.element(d))
        chain.append({"quotient_dim": Q.dim,
                      "new_trivial_generators": len(gens),
                      "search_complete": bool(complete)})
        if not gens:
            break
        lifted = [qmap.lift(z) for z in gens]
        rows = [list(r) for r in I.rows] + [list(z.coords) for z in lifted]
        I2 = ideal_closure(A, [A.element(r) for r in rows])
        if I2.dim == I.dim:
            break
        I = I2
    # verify: the final quotient has no nonzero trivial elements (the zero
    # quotient is vacuously clean)
    if I.dim == A.dim:
        clean = True
    else:
        Q, _ = quotient(A, I)
        pts, comps, complete = trivial_elements(Q, budget, threads)
        complete_all = complete_all and complete
        clean = complete and not comps and all(z.is_zero() for z in pts)
    bad_ideal = is_ideal(A, I)
    if bad_ideal is not None:
        verification = Verdict(FAILS, witness=bad_ideal,
                               reason="result is not an ideal")
    elif clean:
        verification = Verdict(HOLDS)
    elif not complete_all:
        verification = Verdict(UNKNOWN,
                               reason="trivial-element search incomplete; "
                                      "subspace is a lower bound")
    else:
        verification = Verdict(FAILS, reason="quotient still degenerate")
    method = "exhaustive" if F.p is not None else "symbolic"
    return RadicalReport(DEG, I, tuple(chain), verification, method)


# -- invertibility -----------------------------------------------------------

def is_invertible(A: JordanAlgebra, x: Element) -> bool:
    if not A.is_unital:
        raise NotUnital("invertibility needs a unit; lift to the hull")
    return A.u_op(x).is_invertible()


def inverse(A: JordanAlgebra, x: Element) -> Element:
    """U_x^{-1} x; verified by U_x(inverse) = x and x . inverse = 1."""
    if not A.is_unital:
        raise NotUnital("invertibility needs a unit; lift to the hull")
    op = A.u_op(x)
    if not op.is_invertible():
        raise NotInvertible(f"U-operator of {x!r} is singular")
    y = A.element(solve(A.field, op.rows, list(x.coords)))
    assert A.mul(x, y).coords == A.unit.coords
    assert tuple(op.apply(y.coords)) == tuple(x.coords)
    return y


def quasi_inverse(A: JordanAlgebra, z: Element) -> Element:
    """w with (1-z)^{-1} = 1-w; non-unital algebras compute in the hull."""
    if A.is_unital:
        return A.unit - inverse(A, A.unit - z)
    H = unital_hull(A)
    zh = hull_embed(H, z)
    w = H.unit - inverse(H, H.unit - zh)
    return hull_restrict(A, w)


def is_quasi_invertible(A: JordanAlgebra, z: Element) -> bool:
    if A.is_unital:
        return is_invertible(A, A.unit - z)
    H = unital_hull(A)
    return is_invertible(H, H.unit - hull_embed(H, z))


# -- nil and Jacobson radicals -----------------------------------------------

def _is_nilpotent(A: JordanAlgebra, x: Element) -> bool:
    # index bound dim+1 in a finite-dimensional power-associative algebra
    cur = x
    for _ in range(max(1, (A.dim + 1).bit_length())):
        cur = cur.square()
        if cur.is_zero():
            return True
    return cur.is_zero()


def _ideal_elements(A: JordanAlgebra, V: Subspace):
    for vec in V.enumerate_vectors():
        yield A.element(vec)


def nil_radical(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
                threads: int = 1) -> RadicalReport:
    return _max_ideal_radical(A, NIL, _is_nilpotent, budget, threads)


def jacobson_radical(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
                     threads: int = 1) -> RadicalReport:
    return _max_ideal_radical(A, RAD, is_quasi_invertible, budget, threads)


def _max_ideal_radical(A: JordanAlgebra, kind: str, elem_ok,
                       budget: int, threads: int) -> RadicalReport:
    try:
        ideals = enumerate_ideals(A)
    except TooLarge:
        return _radical_fallback(A, kind, elem_ok, budget, threads)
    good = [V for V in ideals
            if all(elem_ok(A, z) for z in _ideal_elements(A, V))]
    best = max(good, key=lambda V: V.dim)
    for V in good:
        if not V.is_subspace_of(best):
            v = Verdict(FAILS, reason="qualifying ideals have no maximum")
            return RadicalReport(kind, best, (), v, "ideal-enumeration")
    return RadicalReport(kind, best, (), Verdict(HOLDS), "ideal-enumeration")


def _radical_fallback(A: JordanAlgebra, kind: str, elem_ok,
                      budget: int, threads: int) -> RadicalReport:
    """Degeneracy radical as a stand-in, with elementwise spot verification."""
    deg = deg_radical(A, budget, threads)
    V = deg.subspace
    sample = [A.element(list(r)) for r in V.rows]
    if A.field.p is not None and V.dim and A.field.p ** V.dim <= budget:
        sample = list(_ideal_elements(A, V))
    ok = all(elem_ok(A, z) for z in sample)
    if not ok:
        v = Verdict(FAILS, reason="degeneracy radical contains a "
                                  "non-qualifying element")
    elif deg.verification.outcome == HOLDS:
        v = Verdict(UNKNOWN,
                    reason="qualifying sample inside the degeneracy radical; "
                           "maximality not checked exactly")
    else:
        v = Verdict(UNKNOWN, reason="degeneracy radical itself unverified")
    return RadicalReport(kind, V, deg.chain, v, "deg-fallback")


# -- Peirce decomposition ----------------------------------------------------

def _check_idempotent(A: JordanAlgebra, e: Element):
    if e.square().coords != e.coords:
        raise NotIdempotent(f"{e!r} is not idempotent")


def peirce(A: JordanAlgebra, e: Element):
    """The three eigenprojections of L_e, as (P1, P0, Phalf) subspaces.

    All three projections are polynomials in L_e, so they restrict to a
    non-unital algebra without lifting to the hull:
    P1 = 2L² - L, P0 = id - 3L + 2L², Phalf = 4L - 4L².
    """
    _check_idempotent(A, e)
    F = A.field
    n = A.dim
    L = A.l_matrix(e.coords)

    def matmul(X, Y):
        return tuple(tuple(
            sum((F.mul(X[i][k], Y[k][j]) for k in range(n)), F.zero)
            for j in range(n)) for i in range(n))

    def combine(c2, c1, c0):
        L2 = matmul(L, L)
        return tuple(tuple(
            F.coerce(F.add(F.add(F.mul(F.coerce(c2), L2[i][j]),
                                 F.mul(F.coerce(c1), L[i][j])),
                           F.coerce(c0) if i == j else F.zero))
            for j in range(n)) for i in range(n))

    P1 = combine(2, -1, 0)
    P0 = combine(2, -3, 1)
    Ph = combine(-4, 4, 0)
    ops = [LinOp(F, P1), LinOp(F, P0), LinOp(F, Ph)]
    ident = identity_matrix(F, n)
    total = ops[0].add(ops[1]).add(ops[2])
    if total.rows != ident:
        raise AssertionError("Peirce projections do not sum to the identity")
    for i in range(3):
        if ops[i].compose(ops[i]).rows != ops[i].rows:
            raise AssertionError("Peirce component is not a projection")
        for j in range(i + 1, 3):
            if not ops[i].compose(ops[j]).is_zero():
                raise AssertionError("Peirce projections do not annihilate "
                                     "each other")
    spaces = tuple(op.image() for op in ops)
    if sum(S.dim for S in spaces) != n:
        raise AssertionError("Peirce dimensions do not add up")
    return spaces


# -- idempotent lattice ------------------------------------------------------

def idempotent_lattice(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
                       threads: int = 1) -> IdemLattice:
    lst = idempotents(A, budget, threads)
    els = list(lst.elements)
    n = len(els)
    leq = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            leq[i][j] = A.mul(els[i], els[j]).coords == els[i].coords
    # antisymmetry comes from idempotent uniqueness; verify anyway
    for i in range(n):
        for j in range(n):
            if i != j and leq[i][j] and leq[j][i]:
                raise AssertionError("idempotent order is not antisymmetric")

    def least_of(cands):
        for c in cands:
            if all(leq[c][d] for d in cands):
                return c
        return None

    def greatest_of(cands):
        for c in cands:
            if all(leq[d][c] for d in cands):
                return c
        return None

    sup_t = [[None] * n for _ in range(n)]
    inf_t = [[None] * n for _ in range(n)]
    witness = None
    for i in range(n):
        for j in range(n):
            ub = [k for k in range(n) if leq[i][k] and leq[j][k]]
            lb = [k for k in range(n) if leq[k][i] and leq[k][j]]
            sup_t[i][j] = least_of(ub)
            inf_t[i][j] = greatest_of(lb)
            if witness is None and (sup_t[i][j] is None or inf_t[i][j] is None):
                kind = "sup" if sup_t[i][j] is None else "inf"
                witness = {"pair": [_el_dict(A, els[i].coords),
                                    _el_dict(A, els[j].coords)],
                           "missing": kind}
    bottom = least_of(list(range(n))) if n else None
    top = greatest_of(list(range(n))) if n else None
    pairwise_ok = witness is None
    if top is None and witness is None and n:
        witness = {"missing": "top"}
    if bottom is None and witness is None and n:
        witness = {"missing": "bottom"}

    if not (lst.complete and lst.finite):
        complete = None
        witness = None
    else:
        complete = pairwise_ok and top is not None and bottom is not None
        if complete and n <= 20:
            complete = _all_subsets_complete(leq, sup_t, inf_t, n)
    return IdemLattice(tuple(els), tuple(tuple(r) for r in leq),
                       tuple(tuple(r) for r in sup_t),
                       tuple(tuple(r) for r in inf_t),
                       top, bottom, complete,
                       witness if complete is False else None)


def _all_subsets_complete(leq, sup_t, inf_t, n: int) -> bool:
    """Directly confirm every subset has a least upper and greatest lower
    bound; pairwise folds supply the candidates."""
    for mask in range(1, 1 << n):
        members = [i for i in range(n) if mask >> i & 1]
        cur = members[0]
        for j in members[1:]:
            cur = sup_t[cur][j]
            if cur is None:
                return False
        if not all(leq[m][cur] for m in members):
            return False
        cur = members[0]
        for j in members[1:]:
            cur = inf_t[cur][j]
            if cur is None:
                return False
        if not all(leq[cur][m] for m in members):
            return False
    return True


def lattice_sup_recipe(A: JordanAlgebra, lattice: IdemLattice, indices,
                       budget: int = DEFAULT_BUDGET,
                       threads: int = 1):
    """The annihilator construction of the supremum: the idempotent e with
    ⋂ ker U_{e_i} ∩ A² = U_{1-e}(A) ∩ A², compared against the poset fold.

    Returns (recipe index or None, fold index or None, agree flag).
    """
    t = element_table(A, budget, threads)
    els = lattice.elements
    K = np.ones(t.n_squares, dtype=bool)
    for i in indices:
        idx = t.index_of(els[i].coords)
        K &= t.killed_square_masks(t.coords_block_of(np.array([idx])))[0]
    F = A.field
    n = A.dim
    p = F.p
    SQ = t.square_coords()
    matches = []
    for j, e in enumerate(els):
        # complement image as fixed points of id - 3L + 2L² over the squares
        L = np.array([[int(v) for v in row]
                      for row in A.l_matrix(e.coords)], dtype=np.int64)
        M0 = (np.eye(n, dtype=np.int64) - 3 * L + 2 * (L @ L)) % p
        img = (SQ @ M0.T) % p
        mask = ~((img - SQ) % p).any(axis=1)
        if bool((mask == K).all()):
            matches.append(j)
    recipe = matches[0] if len(matches) == 1 else None
    fold = lattice.sup_of(indices)
    return recipe, fold, (recipe is not None and recipe == fold)
